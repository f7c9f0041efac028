"""User-level settings kept in the platform config directory."""
import configparser
import os
from pathlib import Path

from appdirs import AppDirs

from .. import __app_author__, __app_name__, __app_version__

CONFIG_FILE_NAME = 'config.ini'
OUTPUT_DIR_ENV = 'OPA_TOMOGRAPHY_OUT'
DEFAULT_OUTPUT_DIR = Path('opa-tomography-out')
DEFAULTS_SECTION = 'defaults'


class UserSettings(configparser.ConfigParser):
    def __init__(self, *args, app_name, app_author, app_version, config_file_name, **kwargs):
        app_dirs = AppDirs(app_name, app_author, version=app_version)
        self._config_path = os.path.join(app_dirs.user_config_dir, config_file_name)

        super().__init__(*args, **kwargs)

        self.load()

    @property
    def path(self) -> str:
        return self._config_path

    def load(self):
        if os.path.exists(self._config_path):
            with open(self._config_path, 'r') as f:
                self.read_file(f)

    def save(self):
        os.makedirs(os.path.dirname(self._config_path), exist_ok=True)

        with open(self._config_path, 'w') as f:
            self.write(f)


def user_settings() -> UserSettings:
    return UserSettings(
        app_name=__app_name__,
        app_author=__app_author__,
        app_version=__app_version__,
        config_file_name=CONFIG_FILE_NAME,
    )


def resolve_output_dir(flag=None, settings: configparser.ConfigParser = None) -> Path:
    """`--out`, then the environment, then the user settings file, then the default."""
    if flag is not None:
        return Path(flag)

    if os.getenv(OUTPUT_DIR_ENV):
        return Path(os.environ[OUTPUT_DIR_ENV])

    settings = user_settings() if settings is None else settings

    if settings.has_option(DEFAULTS_SECTION, 'output_dir'):
        return Path(settings.get(DEFAULTS_SECTION, 'output_dir'))

    return DEFAULT_OUTPUT_DIR
