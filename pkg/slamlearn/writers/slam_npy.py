"""
Define a writer for slamlearn .slam.npy files.
"""

from ..imports import *
from ..version import version

__all__ = ["to_slam_npy"]


def to_slam_npy(self, filepath, **kw):
    """
    Write a `SLAMData` to a file in the .slam.npy format.

    Parameters
    ----------
    self : SLAMData
        The object to be saved.
    filepath : str
        The path to the file to write.
    """
    if not filepath.endswith(".slam.npy"):
        raise ValueError(f"🧩 .slam.npy files need that extension (got {filepath}).")

    # the core dictionaries carry everything
    dictionary_to_save = self._get_core_dictionaries()
    np.save(filepath, np.array([dictionary_to_save, version()], dtype=object), allow_pickle=True)
