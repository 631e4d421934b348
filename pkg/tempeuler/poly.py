#!/usr/bin/env python
# vim: set expandtab tabstop=4 shiftwidth=4:

import collections
import concurrent.futures

import networkx as nx

from tempeuler.models import App, TemporalWalk, Step
from tempeuler import static

class ComponentChain(object):
    """
    A certificate for an Eulerian walk: one connected component per
    non-empty snapshot (``times`` holds the original timestamps), with
    consecutive components sharing the handoff vertex between them.
    """

    def __init__(self, handoffs, components, times):
        self.handoffs = tuple(handoffs)
        self.components = tuple(components)
        self.times = tuple(times)

    def __len__(self):
        return len(self.components)

    def __eq__(self, other):
        return (isinstance(other, ComponentChain) and
            self.handoffs == other.handoffs and
            self.components == other.components and
            self.times == other.times)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return '<ComponentChain times=%r handoffs=%r>' % (self.times, self.handoffs)


OrlinResult = collections.namedtuple('OrlinResult', ['feasible', 'failed_condition', 'reason'])

def _mask(eids):
    mask = 0
    for eid in eids:
        mask |= 1 << eid
    return mask

class _ChainTables(object):
    """
    Per-snapshot component lookups used by the handoff enumeration.
    Empty snapshots are left out, so position ``k`` refers to
    ``times[k]``.
    """

    def __init__(self, graph):
        self.graph = graph
        self.times = graph.nonempty_times()
        self.full = (1 << graph.edge_count) - 1
        self.components = []
        self.component_of = []
        self.masks = []
        for time in self.times:
            comps = static.connected_components(graph.snapshot(time))
            lookup = {}
            for (idx, comp) in enumerate(comps):
                for vertex in comp.vertices:
                    lookup[vertex] = idx
            self.components.append(comps)
            self.component_of.append(lookup)
            self.masks.append([_mask(comp.edges) for comp in comps])

    def component(self, position, vertex):
        return self.components[position][self.component_of[position][vertex]]

    def mask(self, position, vertex):
        return self.masks[position][self.component_of[position][vertex]]

    def search(self, prefix):
        """
        Depth-first, lexicographic search for the remaining handoffs
        after ``prefix``.  Returns the full handoff tuple or ``None``.
        """
        last = len(self.times) - 1
        k = len(prefix)
        if k == last:
            covered = self.mask(0, prefix[0])
            for position in range(1, last+1):
                covered |= self.mask(position, prefix[position-1])
            if covered == self.full:
                return tuple(prefix)
            return None
        candidates = sorted(self.component(k, prefix[-1]).vertices)
        for vertex in candidates:
            found = self.search(prefix + [vertex])
            if found is not None:
                return found
        return None

    def chain(self, handoffs):
        last = len(self.times) - 1
        comps = [self.component(0, handoffs[0])]
        for position in range(1, last+1):
            comps.append(self.component(position, handoffs[position-1]))
        return ComponentChain(handoffs, comps, self.times)

def solve_walk_fixed_tau(graph, threads=1, retlines=None):
    """
    Component-chain decision procedure for Eulerian walks in
    non-decreasing mode.  Empty snapshots are suppressed, then handoff
    vertices are enumerated in lexicographic order; the first choice
    whose components cover every edge wins.  Returns a ComponentChain,
    or ``None`` when the graph has no Eulerian walk.

    With ``threads`` > 1 the first handoff is split across workers and
    the lexicographically least chain is still the one returned.
    """
    tables = _ChainTables(graph)
    count = len(tables.times)
    App.log(retlines, App.STATUS_DEBUG, 'Component chain over %d non-empty snapshot(s)' % (count))

    if count == 0:
        return ComponentChain((), (), ())

    if count == 1:
        nontrivial = [c for c in tables.components[0] if c.edges]
        if len(nontrivial) > 1:
            App.log(retlines, App.STATUS_INFO, 'Single snapshot has %d non-trivial components' % (
                len(nontrivial)))
            return None
        return ComponentChain((), nontrivial, tables.times)

    firsts = list(range(graph.vertex_count))
    if threads > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda v: tables.search([v]), firsts))
    else:
        results = (tables.search([v]) for v in firsts)
    for handoffs in results:
        if handoffs is not None:
            App.log(retlines, App.STATUS_DEBUG, 'Handoffs: %s' % (
                ', '.join(str(v) for v in handoffs)))
            return tables.chain(handoffs)
    return None

def check_chain(graph, chain):
    """
    Raises ``App.UsageError`` unless ``chain`` is a valid component chain
    for ``graph``.
    """
    times = graph.nonempty_times()
    if tuple(chain.times) != tuple(times):
        raise App.UsageError('Chain timestamps %r do not match the non-empty snapshots %r' % (
            chain.times, tuple(times)))
    if len(chain.components) != len(times):
        raise App.UsageError('Chain has %d components for %d snapshots' % (
            len(chain.components), len(times)))
    if len(times) > 0 and len(chain.handoffs) != len(times) - 1:
        raise App.UsageError('Chain has %d handoffs for %d snapshots' % (
            len(chain.handoffs), len(times)))
    covered = set()
    for (position, (time, comp)) in enumerate(zip(times, chain.components)):
        if comp not in static.connected_components(graph.snapshot(time)):
            raise App.UsageError('Chain entry %d is not a component of snapshot %d' % (
                position, time))
        if position > 0 and chain.handoffs[position-1] not in comp.vertices:
            raise App.UsageError('Handoff %d is missing from component %d' % (
                chain.handoffs[position-1], position))
        if position < len(chain.handoffs) and chain.handoffs[position] not in comp.vertices:
            raise App.UsageError('Handoff %d is missing from component %d' % (
                chain.handoffs[position], position))
        covered.update(comp.edges)
    if len(covered) != graph.edge_count:
        raise App.UsageError('Chain leaves %d edge(s) uncovered' % (graph.edge_count - len(covered)))

def chain_to_walk(graph, chain):
    """
    Turns a component chain into an Eulerian walk: inside each
    component a doubled DFS from the entry vertex, then a shortest path
    to the next handoff, all at that component's timestamp.
    """
    check_chain(graph, chain)
    if len(chain.components) == 0:
        return TemporalWalk(0 if graph.vertex_count > 0 else None)

    if chain.handoffs:
        start = chain.handoffs[0]
    else:
        start = min(chain.components[0].vertices)

    steps = []
    entry = start
    for (position, (time, comp)) in enumerate(zip(chain.times, chain.components)):
        if comp.edges:
            for (u, v, eid) in static.doubled_dfs(graph, comp.edges, entry):
                steps.append(Step(u, v, time))
        if position < len(chain.handoffs):
            target = chain.handoffs[position]
            for (u, v, eid) in static.path_steps(graph, comp.edges, entry, target):
                steps.append(Step(u, v, time))
            entry = target
    return TemporalWalk(start, steps)

def _require_dynamic(graph):
    if not graph.is_dynamic_based():
        raise App.UsageError('Graph is not dynamic-based (some edge misses a timestamp)')

def solve_dynamic_walk(graph, retlines=None):
    """
    Eulerian walk on a dynamic-based graph: feasible exactly when at
    most one component has edges.  The witness is a closed doubled DFS
    taken entirely at time 1, so it serves the closed variant as well.
    """
    _require_dynamic(graph)
    components = static.nontrivial_components(graph.base_graph())
    if len(components) > 1:
        App.log(retlines, App.STATUS_INFO, 'Graph has %d non-trivial components' % (len(components)))
        return None
    if not components:
        return TemporalWalk(0 if graph.vertex_count > 0 else None)
    start = min(components[0].vertices)
    steps = [Step(u, v, 1) for (u, v, eid) in static.doubled_dfs(graph, components[0].edges, start)]
    return TemporalWalk(start, steps)

def solve_dynamic_trail(graph, closed=False, retlines=None):
    """
    Eulerian trail (tour, if ``closed``) on a dynamic-based graph, which
    exists exactly when the static graph has one.  Built with
    Hierholzer's algorithm, all steps at time 1.
    """
    _require_dynamic(graph)
    if graph.edge_count == 0:
        return TemporalWalk(0 if graph.vertex_count > 0 else None)
    trail = static.eulerian_trail(graph, range(graph.edge_count), closed=closed)
    if trail is None:
        App.log(retlines, App.STATUS_INFO, 'Static graph has no Eulerian %s' % (
            'tour' if closed else 'trail'))
        return None
    return TemporalWalk(trail[0][0], [Step(u, v, 1) for (u, v, eid) in trail])

def orlin_check(digraph):
    """
    Eulerian test for a dynamic digraph: (1) in-degree equals out-degree
    everywhere, (2) at most one weakly connected component carries arcs,
    (3) the transit times sum to -1 or 1.  Returns an OrlinResult naming
    the first condition which fails.
    """
    graph = digraph.to_networkx()
    for vertex in sorted(graph.nodes()):
        if graph.in_degree(vertex) != graph.out_degree(vertex):
            return OrlinResult(False, 1, 'vertex %d has in-degree %d and out-degree %d' % (
                vertex, graph.in_degree(vertex), graph.out_degree(vertex)))

    with_arcs = [c for c in nx.weakly_connected_components(graph)
        if graph.subgraph(c).number_of_edges() > 0]
    if len(with_arcs) > 1:
        return OrlinResult(False, 2, '%d weakly connected components carry arcs' % (len(with_arcs)))

    total = sum(transit for (tail, head, transit) in digraph.arcs)
    if total not in (-1, 1):
        return OrlinResult(False, 3, 'transit times sum to %d' % (total))

    return OrlinResult(True, None, 'balanced, connected, transit sum %d' % (total))
