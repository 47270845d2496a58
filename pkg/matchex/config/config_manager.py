from os import environ
from pathlib import Path
from yaml import safe_load as load, dump

from ..config.primary_configuration import primary_config_file
from ..structures.Exceptions import InvalidArgument

# MATCHEX_CONFIG points at an alternative settings file, e.g. one per ensemble campaign
path = Path(environ.get("MATCHEX_CONFIG", Path(".", "config.yml")))


def create_default() -> dict:
    """
    The default value of every parameter listed in the master configuration.
    """
    return {parameter["parameter"]: parameter["default_value"]
            for section in primary_config_file for parameter in section["parameters"]}


def validate(settings: dict) -> dict:
    """
    Check every known key against the options of its parameter; unknown keys are left alone.
    @param settings: A dictionary of loaded settings
    @return: the same dictionary
    @raise InvalidArgument: a value that its parameter does not admit
    """
    for section in primary_config_file:
        for parameter in section["parameters"]:
            key, options, value = parameter["parameter"], parameter["options"], settings[parameter["parameter"]]

            if isinstance(options, list):
                ok = value in options
            elif options == "any positive integer":
                ok = isinstance(value, int) and not isinstance(value, bool) and value > 0
            elif options == "any non-negative integer":
                ok = isinstance(value, int) and not isinstance(value, bool) and value >= 0
            else:
                ok = isinstance(value, str) and len(value) > 0

            if not ok:
                raise InvalidArgument(f"{path}: {key} = {value!r} is not {options}")

    return settings


# No configuration file found - create one
if not path.is_file():

    with path.open("w") as f:
        dump(create_default(), f, indent=4, sort_keys=True)

# Keys missing from an older settings file fall back to the defaults
with path.open("r") as config:
    settings_yml = validate({**create_default(), **(load(config) or {})})
