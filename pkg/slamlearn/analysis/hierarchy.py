"""
Attribute hierarchies implied by a set of selected patterns.
"""

from ..imports import *
from ..patterns import *
from dataclasses import dataclass, field

__all__ = ["HierarchyGraph", "extract_hierarchy", "hierarchy_to_dot"]


@dataclass
class HierarchyGraph:
    """
    Prerequisite relations among groups of attributes.

    Attributes
    ----------
    K : int
        The number of attributes.
    groups : list of tuple
        A partition of the 0-based attributes; attributes in one
        group have identical columns in the selected patterns.
    edges : list of tuple
        (g1, g2) pairs of group indices, meaning group g1 is a
        prerequisite of group g2, after transitive reduction.
    relation : list of tuple
        Every prerequisite pair before the reduction.
    """

    K: int
    groups: list
    edges: list = field(default_factory=list)
    relation: list = field(default_factory=list)

    def to_networkx(self, reduced=True):
        """
        The hierarchy as a `networkx.DiGraph` of group indices.
        """
        graph = nx.DiGraph()
        for g, members in enumerate(self.groups):
            graph.add_node(g, attributes=list(members))
        graph.add_edges_from(self.edges if reduced else self.relation)
        return graph

    def group_of(self, k):
        for g, members in enumerate(self.groups):
            if k in members:
                return g
        raise IndexError(f"🧩 Attribute {k} is out of range for K={self.K}.")

    def is_prerequisite(self, k1, k2):
        """
        Is attribute k1 a prerequisite of attribute k2?
        """
        return (self.group_of(k1), self.group_of(k2)) in set(self.relation)

    def to_dict(self):
        return dict(
            K=self.K,
            groups=[list(g) for g in self.groups],
            edges=[list(e) for e in self.edges],
        )


def extract_hierarchy(A_hat):
    """
    Read prerequisite relations off the selected patterns.

    Stack the patterns into a |Â|×K matrix. Attributes with identical
    columns play the same role and form one group. Group g1 is a
    prerequisite of g2 when g1's column is entrywise at least g2's
    (everyone with g2 also has g1).

    Parameters
    ----------
    A_hat : PatternSet
        At least one selected pattern.

    Returns
    -------
    graph : HierarchyGraph
    """
    A_hat = A_hat if isinstance(A_hat, PatternSet) else PatternSet(A_hat)
    if len(A_hat) == 0:
        raise ValueError("🧩 Can't extract a hierarchy from an empty set of patterns.")
    columns = A_hat.sorted().bits.T

    groups, keys = [], {}
    for k, column in enumerate(columns):
        key = column.tobytes()
        if key not in keys:
            keys[key] = len(groups)
            groups.append([])
        groups[keys[key]].append(k)
    representatives = np.array([columns[g[0]] for g in groups])

    relation = []
    for g1, c1 in enumerate(representatives):
        for g2, c2 in enumerate(representatives):
            if g1 != g2 and np.all(c1 >= c2):
                relation.append((g1, g2))

    full = nx.DiGraph()
    full.add_nodes_from(range(len(groups)))
    full.add_edges_from(relation)
    reduced = nx.transitive_reduction(full)
    return HierarchyGraph(
        K=A_hat.K,
        groups=[tuple(g) for g in groups],
        edges=sorted(reduced.edges()),
        relation=sorted(relation),
    )


def hierarchy_to_dot(graph, name="hierarchy"):
    """
    The reduced hierarchy as Graphviz DOT text.
    """
    lines = [f"digraph {name} {{"]
    for g, members in enumerate(graph.groups):
        label = ", ".join(str(k) for k in members)
        lines.append(f'  g{g} [label="{label}"];')
    for g1, g2 in graph.edges:
        lines.append(f"  g{g1} -> g{g2};")
    lines.append("}")
    return "\n".join(lines) + "\n"
