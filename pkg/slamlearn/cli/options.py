"""
Turn flags and `--config` files into validated configuration objects.
"""

from ..imports import *
from ..readers import read_config
import dataclasses

__all__ = ["coerce_value", "settings_for", "build_config"]

_TRUE = ["1", "true", "yes", "on"]
_FALSE = ["0", "false", "no", "off"]


def coerce_value(value, kind, name="setting"):
    """
    Convert a config-file string to the type of a dataclass field.
    """
    if not isinstance(value, str):
        return value
    text = value.strip()
    if text.lower() in ["none", ""]:
        return None
    try:
        if kind is bool:
            if text.lower() in _TRUE:
                return True
            if text.lower() in _FALSE:
                return False
            raise ValueError(text)
        if kind is int:
            return int(text)
        if kind is float:
            return float(text)
    except ValueError:
        raise ValueError(f"🧩 Can't read {name}='{value}' as {kind.__name__}.")
    return text


def settings_for(cls, args, file_settings, renames={}):
    """
    The fields of `cls` set by a config file or by flags (flags win).

    `renames` maps a field to the flag (and config key) that sets it,
    for fields whose names clash between configuration classes.

    Flags left at None count as unset, so argparse defaults
    must be None for every field handled here.
    """
    settings = {}
    for f in dataclasses.fields(cls):
        key = renames.get(f.name, f.name)
        if key in file_settings:
            settings[f.name] = coerce_value(file_settings[key], f.type, key)
        value = getattr(args, key, None)
        if value is not None:
            settings[f.name] = value
    return settings


def build_config(cls, args, renames={}, **fixed):
    """
    Build a `cls` (FitConfig, ScreenConfig, SimDesign) from
    flags > `--config` file > defaults.
    """
    file_settings = read_config(args.config) if getattr(args, "config", None) else {}
    settings = settings_for(cls, args, file_settings, renames)
    settings.update(fixed)
    return cls(**settings)
