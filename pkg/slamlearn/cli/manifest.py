"""
Provenance records written next to every command's outputs.
"""

from ..imports import *
from ..version import version
from ..writers import write_json
import dataclasses
from dataclasses import dataclass, field

__all__ = ["RunManifest", "file_digest"]


def file_digest(filepath, chunk_size=2**20):
    """
    The SHA-256 hex digest of a file's contents.
    """
    h = hashlib.sha256()
    with open(filepath, "rb") as f:
        for chunk in iter(lambda: f.read(chunk_size), b""):
            h.update(chunk)
    return h.hexdigest()


@dataclass
class RunManifest:
    """
    What a command was asked to do, and with what.

    Attributes
    ----------
    command : str
        The subcommand name.
    config : dict
        Every setting the command used, defaults included.
    inputs : dict
        Input file paths mapped to their SHA-256 digests.
    seed : int, None
    version : str
    wall_time : float
        Seconds from start to the moment the manifest was finished.
    outputs : list of str
        The files the command wrote.
    extra : dict
        Anything else the command wants to record.
    """

    command: str
    config: dict = field(default_factory=dict)
    inputs: dict = field(default_factory=dict)
    seed: int = None
    version: str = field(default_factory=version)
    wall_time: float = 0.0
    outputs: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    def add_input(self, filepath):
        if filepath is not None:
            self.inputs[str(filepath)] = file_digest(filepath)

    def add_output(self, filepath):
        self.outputs.append(os.path.basename(filepath))

    def to_dict(self):
        return dataclasses.asdict(self)

    def write(self, directory, started):
        """
        Fill in the wall time and write `manifest.json` into `directory`.
        """
        self.wall_time = round(get_current_seconds() - started, 3)
        filepath = os.path.join(directory, "manifest.json")
        write_json(filepath, self)
        return filepath
