from ..imports import *

__all__ = ["read_config"]


def read_config(filepath):
    """
    Read "key = value" lines into a dictionary of strings.

    Dashes in keys become underscores, so the keys can match
    either command-line flags or dataclass fields.
    """
    settings = {}
    with open(filepath) as f:
        for number, line in enumerate(f, start=1):
            text = line.split("#")[0].strip()
            if text == "":
                continue
            if "=" not in text:
                raise ValueError(f"🧩 {filepath}, line {number}: expected 'key = value', got '{text}'.")
            key, value = [s.strip() for s in text.split("=", 1)]
            if key == "":
                raise ValueError(f"🧩 {filepath}, line {number}: the key is empty.")
            settings[key.replace("-", "_")] = value
    return settings
