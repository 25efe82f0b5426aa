from ..imports import *
from ..analysis.hierarchy import hierarchy_to_dot

__all__ = ["write_dot"]


def write_dot(filepath, graph):
    """
    Write an attribute hierarchy as a Graphviz DOT file.
    """
    with open(filepath, "w") as f:
        f.write(hierarchy_to_dot(graph))
