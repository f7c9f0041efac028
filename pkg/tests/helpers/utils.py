from copy import deepcopy
from typing import Any, Dict, List, Literal, NamedTuple


###############################################################################
# Utilities for modifying configuration sections
###############################################################################


DICT_MOD_SET = "set"
DICT_MOD_DELETE = "delete"

DictModActionValue = Literal[DICT_MOD_SET, DICT_MOD_DELETE]

Sections = Dict[str, Dict[str, str]]


class DictMod(NamedTuple):
    """Change to one `section.key` of a config sections mapping."""
    name: str
    action: DictModActionValue
    value: Any = None


# Functions for creating mods


def set_mod(key: str, value: Any) -> DictMod:
    """Return a `DictMod` that sets `section.key` to a value.
    """
    return DictMod(key, DICT_MOD_SET, value)


def set_mods(*keys: str, value: Any) -> List[DictMod]:
    return [set_mod(x, value) for x in keys]


def delete_mod(key: str) -> DictMod:
    """Return a `DictMod` that deletes `section.key`, or a whole section when no key is given.
    """
    return DictMod(key, DICT_MOD_DELETE)


def delete_mods(*keys: str) -> List[DictMod]:
    return [delete_mod(x) for x in keys]


# Functions for applying mods


def modify_sections(sections: Sections, mods: List[DictMod]) -> None:
    """Apply mods to a sections mapping in place.
    """
    for name, action, value in mods:
        section, _, key = name.partition('.')

        if action == DICT_MOD_DELETE:
            if key:
                del sections[section][key]
            else:
                del sections[section]
        elif action == DICT_MOD_SET:
            sections.setdefault(section, {})[key] = value
        else:
            raise ValueError(f'Invalid action {action} for mod')


def modified_sections(sections: Sections, mods: List[DictMod]) -> Sections:
    """Copy a sections mapping, apply mods to and return it.
    """
    sections = deepcopy(sections)
    modify_sections(sections, mods)
    return sections


def write_ini(sections: Sections, path) -> None:
    with open(path, 'w', encoding='utf-8') as f:
        for section, values in sections.items():
            f.write(f'[{section}]\n')

            for key, value in values.items():
                f.write(f'{key} = {value}\n')

            f.write('\n')
