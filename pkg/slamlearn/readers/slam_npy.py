"""
Define a reader for slamlearn .slam.npy files.
"""

from ..imports import *

__all__ = ["from_slam_npy"]


def from_slam_npy(data, filepath):
    """
    Populate a `SLAMData` from a file in the .slam.npy format.

    Parameters
    ----------
    data : SLAMData
        The object to be populated.
    filepath : str
        The path to the file, which should have an extension of `.slam.npy`.
    """
    loaded_core_dictionaries, version_used = np.load(filepath, allow_pickle=True)
    data._initialize_from_dictionaries(**loaded_core_dictionaries)
