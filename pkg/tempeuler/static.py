#!/usr/bin/env python
# vim: set expandtab tabstop=4 shiftwidth=4:

import collections

import networkx as nx

from tempeuler.models import App

# Static-graph machinery.  Graphs in here are ``networkx.Graph`` objects
# whose edges carry an ``eid`` attribute (as built by
# ``TemporalGraph.subgraph``), or edge-id subsets of a TemporalGraph.

Component = collections.namedtuple('Component', ['vertices', 'edges'])

def _eid(u, v, data):
    if 'eid' in data:
        return data['eid']
    return (min(u, v), max(u, v))

def connected_components(graph):
    """
    Partitions the vertices of ``graph`` into connected components,
    returned as ``Component(vertices, edges)`` tuples sorted by their
    lowest vertex.  Isolated vertices come back as trivial components
    with no edges.
    """
    components = []
    for nodes in nx.connected_components(graph):
        sub = graph.subgraph(nodes)
        edges = frozenset(_eid(u, v, data) for (u, v, data) in sub.edges(data=True))
        components.append(Component(frozenset(nodes), edges))
    components.sort(key=lambda c: min(c.vertices))
    return components

def nontrivial_components(graph):
    return [c for c in connected_components(graph) if c.edges]

def odd_degree_vertices(graph):
    return frozenset(v for (v, degree) in graph.degree() if degree % 2 == 1)

def _adjacency(tgraph, eids):
    adj = collections.defaultdict(list)
    for eid in sorted(eids):
        (u, v) = tgraph.edges[eid]
        adj[u].append((eid, v))
        adj[v].append((eid, u))
    return adj

def doubled_dfs(tgraph, eids, start):
    """
    Closed traversal from ``start`` which crosses every edge (from
    ``eids``) of start's component exactly twice, once in each
    direction.  Returns ``(u, v, eid)`` triples.  Edges are taken in
    increasing id order.
    """
    adj = _adjacency(tgraph, eids)
    steps = []
    used = set()
    visited = set([start])
    stack = [(start, iter(adj[start]))]
    while stack:
        (vertex, edges) = stack[-1]
        advanced = False
        for (eid, other) in edges:
            if eid in used:
                continue
            used.add(eid)
            steps.append((vertex, other, eid))
            if other in visited:
                steps.append((other, vertex, eid))
                continue
            visited.add(other)
            stack.append((other, iter(adj[other])))
            advanced = True
            break
        if not advanced:
            stack.pop()
            if stack:
                parent = stack[-1][0]
                steps.append((vertex, parent, tgraph.edge_id(vertex, parent)))
    return steps

def path_steps(tgraph, eids, source, target):
    """
    A shortest path from ``source`` to ``target`` using only ``eids``,
    as ``(u, v, eid)`` triples.  Raises ``App.UsageError`` if there is
    none.
    """
    if source == target:
        return []
    graph = tgraph.subgraph(eids)
    try:
        vertices = nx.shortest_path(graph, source, target)
    except nx.NetworkXNoPath:
        raise App.UsageError('No path from %d to %d' % (source, target))
    return [(u, v, tgraph.edge_id(u, v)) for (u, v) in zip(vertices, vertices[1:])]

def eulerian_trail(tgraph, eids, start=None, closed=False):
    """
    Hierholzer's algorithm over the edge subset ``eids`` of ``tgraph``.

    Without a pinned ``start`` we begin at the lowest odd-degree vertex
    (or the lowest vertex with an edge, if every degree is even).  The
    lowest-id unused edge is always taken next.  Returns ``(u, v, eid)``
    triples, or ``None`` when no Eulerian trail (tour, if ``closed``)
    of the subset exists from that start.  An empty subset yields an
    empty trail.
    """
    eids = frozenset(eids)
    if not eids:
        return []
    graph = tgraph.subgraph(eids)
    if len(nontrivial_components(graph)) > 1:
        return None
    odd = odd_degree_vertices(graph)
    if len(odd) > 2 or (closed and odd):
        return None
    if start is None:
        if odd:
            start = min(odd)
        else:
            start = min(v for v in graph.nodes() if graph.degree(v) > 0)
    elif odd and start not in odd:
        return None
    elif not odd and graph.degree(start) == 0:
        return None

    adj = _adjacency(tgraph, eids)
    pointer = collections.defaultdict(int)
    used = set()
    stack = [(start, None)]
    popped = []
    while stack:
        (vertex, via) = stack[-1]
        edges = adj[vertex]
        while pointer[vertex] < len(edges) and edges[pointer[vertex]][0] in used:
            pointer[vertex] += 1
        if pointer[vertex] < len(edges):
            (eid, other) = edges[pointer[vertex]]
            used.add(eid)
            stack.append((other, eid))
        else:
            popped.append(stack.pop())

    popped.reverse()
    steps = []
    for ((prev, _), (vertex, eid)) in zip(popped, popped[1:]):
        steps.append((prev, vertex, eid))
    return steps
