from argparse import ArgumentParser
import logging
import os
import pathlib
import sys

import numpy as np

from ..errors import ConfigError, TomographyError
from .actions import __actions__

LOG = logging.getLogger(__name__)

DEBUG           = (os.getenv('DEBUG_PYTHON', 'False') == 'True')
DEBUG_LOG_LEVEL = (getattr(logging, os.getenv('DEBUG_PYTHON_LOG_LEVEL', 'DEBUG')))

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

CONFIG_ARGUMENT_HELP = "Experiment configuration file (INI)."
OUT_ARGUMENT_HELP    = "Output directory; created if absent. Defaults to $OPA_TOMOGRAPHY_OUT, the user settings, then ./opa-tomography-out."
SEED_ARGUMENT_HELP   = "Override the master RNG seed of the configuration."
SHOTS_ARGUMENT_HELP  = "Override the number of shots per phase."
QUIET_ARGUMENT_HELP  = "Only log warnings and errors; no progress bars."


def get_parser():
    common = ArgumentParser(add_help=False)
    common.add_argument('--config', type=pathlib.Path, help=CONFIG_ARGUMENT_HELP, metavar='PATH')
    common.add_argument('--out', type=pathlib.Path, help=OUT_ARGUMENT_HELP, metavar='DIR')
    common.add_argument('--seed', type=int, help=SEED_ARGUMENT_HELP, metavar='N')
    common.add_argument('--shots', type=int, help=SHOTS_ARGUMENT_HELP, metavar='N')
    common.add_argument('--quiet', action='store_true', help=QUIET_ARGUMENT_HELP)

    parser = ArgumentParser(prog='opa-tomography')
    subparsers = parser.add_subparsers(dest='action', required=True, metavar='ACTION')

    # Add action arguments

    for action_name, action_class in __actions__.items():
        action_parser = subparsers.add_parser(action_name, parents=[common], help=action_class.NAME)

        if action_class.REQUIRES_CONFIG:
            action_parser.set_defaults(requires_config=True)

        for option in action_class.CONFIG:
            kwargs = {'help': option.nice_name, 'type': option.type, 'dest': f'action.{option.name}'}

            if option.nargs is not None:
                kwargs['nargs'] = option.nargs

            action_parser.add_argument(f'--{option.name.replace("_", "-")}', **kwargs)

    return parser


def parsed_args_to_action_config(args):
    config = {
        'main': {
            'config': args.config,
            'out': args.out,
            'seed': args.seed,
            'shots': args.shots,
            'quiet': args.quiet,
        },
        'action': {}
    }

    for key, value in args._get_kwargs():
        if key.startswith('action.'):
            config['action'][key.split('.', 1)[1]] = value

    return config


def configure_logging(quiet: bool):
    logging.basicConfig(level=logging.WARNING if quiet else logging.INFO, format='%(levelname)s %(name)s: %(message)s')

    if DEBUG:
        logging.getLogger().setLevel(DEBUG_LOG_LEVEL)


def execute_action(name, config):
    Action = __actions__[name]
    action_instance = Action(config=config)
    action_instance.run()


def main(argv=None) -> int:
    parser = get_parser()
    args = parser.parse_args(argv)

    if getattr(args, 'requires_config', False) and args.config is None:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog} {args.action}: error: the --config argument is required", file=sys.stderr)
        return EXIT_USAGE

    configure_logging(args.quiet)

    try:
        execute_action(args.action, parsed_args_to_action_config(args))
    except ConfigError as e:
        LOG.error(e.message)
        return EXIT_USAGE
    except TomographyError as e:
        LOG.error(e.message)
        return EXIT_FAILURE
    except (OSError, ValueError, ArithmeticError, np.linalg.LinAlgError) as e:
        LOG.error(f"{type(e).__name__}: {e}")
        return EXIT_FAILURE

    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
