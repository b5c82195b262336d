"""Power graphs and enhanced power graphs of finite groups.

Vertex i of every graph built here is element i of the source group, so
labels and golden files stay stable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import SimpleGraph, to_dot
from .groups import FiniteGroup, all_cyclic_subgroups_prime_power, cyclic_subgroups


@dataclass(frozen=True)
class LabeledGroupGraph:
    graph: SimpleGraph
    group: FiniteGroup
    kind: str  # "power" | "enhanced"


def enhanced_power_graph(g: FiniteGroup) -> LabeledGroupGraph:
    """x ~ y iff some cyclic subgroup contains both.

    Built by unioning a clique over each maximal cyclic subgroup: every
    cyclic subgroup sits inside a maximal one, so the edge set is the same
    as unioning over all of them.
    """
    graph = SimpleGraph(g.order)
    for entry in cyclic_subgroups(g).maximal_entries:
        mask = 0
        for x in entry.members:
            mask |= 1 << x
        for x in entry.members:
            graph.adj[x] |= mask & ~(1 << x)
    return LabeledGroupGraph(graph=graph, group=g, kind="enhanced")


def power_graph(g: FiniteGroup) -> LabeledGroupGraph:
    """x ~ y iff one of them is a power of the other."""
    graph = SimpleGraph(g.order)
    for x in range(g.order):
        bit = 1 << x
        for y in g.cyclic_members(x):
            if y != x:
                graph.adj[x] |= 1 << y
                graph.adj[y] |= bit
    return LabeledGroupGraph(graph=graph, group=g, kind="power")


def graphs_coincide(g: FiniteGroup) -> bool:
    """True iff the power graph and enhanced power graph have equal edges."""
    return power_graph(g).graph == enhanced_power_graph(g).graph


def coincidence_consistent(g: FiniteGroup) -> bool:
    """Edge-set equality agrees with the element-order census; both paths run."""
    return graphs_coincide(g) == all_cyclic_subgroups_prime_power(g)


def group_graph_dot(lg: LabeledGroupGraph, name: str | None = None) -> str:
    return to_dot(lg.graph, labels=lg.group.elem_names, name=name or lg.kind)
