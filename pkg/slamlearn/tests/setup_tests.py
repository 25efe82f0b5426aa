import os, pytest
import numpy as np

test_directory = "test_outputs/"

try:
    os.mkdir(test_directory)
except FileExistsError:
    pass


def gamma_52():
    """
    Two identity blocks and an all-ones item, over the patterns 10 and 01.
    """
    from ..patterns import QMatrix, PatternSet, build_gamma

    Q = QMatrix([[1, 0], [0, 1], [1, 0], [0, 1], [1, 1]])
    A = PatternSet(["10", "01"])
    return Q, A, build_gamma(Q, A)
