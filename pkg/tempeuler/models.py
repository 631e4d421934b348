import collections

import networkx as nx

from dynamic_preferences.registries import global_preferences_registry

# There are no database tables in here; this module holds the core data
# model for temporal graphs and walks, plus the App class which owns our
# status constants, exit codes, exceptions and preference access.

class App(object):
    """
    Mostly just a collection of constants, exceptions and helpers shared
    by every part of tempeuler.
    """

    STATUS_DEBUG = 'debug'
    STATUS_INFO = 'info'
    STATUS_ERROR = 'error'
    STATUS_SUCCESS = 'success'

    EXIT_OK = 0
    EXIT_INFEASIBLE = 1
    EXIT_BUDGET = 2
    EXIT_USAGE = 64
    EXIT_DATA = 65
    EXIT_SOFTWARE = 70

    prefs = None

    class TempEulerError(Exception):
        """
        Base class for everything we raise on purpose.
        """

    class RangeError(TempEulerError):
        """
        A timestamp or vertex id outside of the graph it was used with.
        """

    class ValidationError(TempEulerError):
        """
        Malformed graph, walk, formula or chain.  ``location`` points at
        the offending clause index, edge or step where one is known.
        """

        def __init__(self, message, location=None, *args, **kwargs):
            super(App.ValidationError, self).__init__(message, *args, **kwargs)
            self.location = location

    class ParseError(TempEulerError):
        """
        Problem reading one of our text formats.  ``line`` is 1-based.
        """

        def __init__(self, line, message, *args, **kwargs):
            super(App.ParseError, self).__init__('line %d: %s' % (line, message), *args, **kwargs)
            self.line = line

    class UsageError(TempEulerError):
        """
        An operation was called while its preconditions don't hold.
        """

    class ReductionError(TempEulerError):
        """
        A witness handed to one of the reduction extractors did not have
        the structure the construction guarantees.
        """

    @staticmethod
    def ensure_prefs():
        """
        Loads our preferences manager, if it hasn't been loaded already.
        """
        if App.prefs is None:
            App.prefs = global_preferences_registry.manager()

    @staticmethod
    def pref(name):
        """
        Returns the value of one of our ``tempeuler`` preferences.
        """
        App.ensure_prefs()
        return App.prefs['tempeuler__%s' % (name)]

    @staticmethod
    def log(retlines, status, message):
        """
        Appends a status line to ``retlines``, if we were given a list.
        """
        if retlines is not None:
            retlines.append((status, message))


class Step(collections.namedtuple('Step', ['u', 'v', 'time'])):
    """
    A single timed traversal of edge {u,v}, from ``u`` to ``v``.
    """
    __slots__ = ()

    def __str__(self):
        return '%d->%d@%d' % (self.u, self.v, self.time)


class Violation(collections.namedtuple('Violation', ['code', 'location'])):
    """
    One reason a walk failed verification.  ``location`` is a step index
    for per-step problems and an edge id for ``not-eulerian``.
    """
    __slots__ = ()

    BROKEN_CHAIN = 'broken-chain'
    INACTIVE_TIME = 'inactive-time'
    TIME_REGRESSION = 'time-regression'
    EDGE_REPEAT_IN_SNAPSHOT = 'edge-repeat-in-snapshot'
    EDGE_REPEAT_GLOBAL = 'edge-repeat-global'
    NOT_EULERIAN = 'not-eulerian'
    NOT_CLOSED = 'not-closed'

    def __str__(self):
        return '%s at %d' % (self.code, self.location)


class ProblemVariant(object):
    """
    Which of the six Eulerian problems we're talking about, and whether
    chosen times have to be strictly increasing.
    """

    WALK = 'walk'
    CLOSED_WALK = 'closed-walk'
    LOCAL_TRAIL = 'local-trail'
    LOCAL_TOUR = 'local-tour'
    TRAIL = 'trail'
    TOUR = 'tour'

    KINDS = [WALK, CLOSED_WALK, LOCAL_TRAIL, LOCAL_TOUR, TRAIL, TOUR]

    NONDECREASING = 'non-decreasing'
    STRICT = 'strict'

    FAMILY_WALK = 'walk'
    FAMILY_LOCAL = 'local'
    FAMILY_TRAIL = 'trail'

    family_map = {
        WALK: (FAMILY_WALK, False),
        CLOSED_WALK: (FAMILY_WALK, True),
        LOCAL_TRAIL: (FAMILY_LOCAL, False),
        LOCAL_TOUR: (FAMILY_LOCAL, True),
        TRAIL: (FAMILY_TRAIL, False),
        TOUR: (FAMILY_TRAIL, True),
    }

    def __init__(self, kind, ordering=NONDECREASING):
        if kind not in self.family_map:
            raise App.ValidationError('Unknown problem variant "%s"' % (kind))
        if ordering not in (self.NONDECREASING, self.STRICT):
            raise App.ValidationError('Unknown ordering mode "%s"' % (ordering))
        self.kind = kind
        self.ordering = ordering
        (self.family, self.closed) = self.family_map[kind]

    @staticmethod
    def for_family(family, closed=False, strict=False):
        for (kind, (fam, cl)) in ProblemVariant.family_map.items():
            if fam == family and cl == closed:
                return ProblemVariant(kind,
                    ProblemVariant.STRICT if strict else ProblemVariant.NONDECREASING)
        raise App.ValidationError('Unknown problem family "%s"' % (family))

    @property
    def strict(self):
        return self.ordering == self.STRICT

    def __eq__(self, other):
        return (isinstance(other, ProblemVariant) and
            self.kind == other.kind and self.ordering == other.ordering)

    def __hash__(self):
        return hash((self.kind, self.ordering))

    def __str__(self):
        if self.strict:
            return '%s/strict' % (self.kind)
        return self.kind

    def __repr__(self):
        return 'ProblemVariant(%r, %r)' % (self.kind, self.ordering)


class TemporalGraph(object):
    """
    An undirected simple graph on vertices ``0..n-1`` whose edges each
    carry a non-empty set of activation times in ``1..lifetime``.

    Edges are stored canonically as ``(min, max)`` pairs sorted by
    ``(min, max)``, and an edge's id is its index in that order.  Graphs
    are never modified after construction.

    ``names`` is an optional side table of vertex names (reductions use
    it); it does not take part in equality.
    """

    def __init__(self, vertex_count, edges, lifetime=None, names=None):
        if vertex_count < 0:
            raise App.ValidationError('Vertex count must be non-negative')
        self.vertex_count = vertex_count

        found = {}
        max_label = 0
        for (idx, (u, v, labels)) in enumerate(edges):
            if u == v:
                raise App.ValidationError('Self-loop on vertex %d' % (u), idx)
            for vertex in (u, v):
                if vertex < 0 or vertex >= vertex_count:
                    raise App.ValidationError('Vertex %d out of range' % (vertex), idx)
            pair = (min(u, v), max(u, v))
            if pair in found:
                raise App.ValidationError('Duplicate edge %d-%d' % pair, idx)
            labels = frozenset(labels)
            if len(labels) == 0:
                raise App.ValidationError('Edge %d-%d has no labels' % pair, idx)
            if min(labels) < 1:
                raise App.ValidationError('Edge %d-%d has a label below 1' % pair, idx)
            found[pair] = labels
            max_label = max(max_label, max(labels))

        if lifetime is None:
            lifetime = max(max_label, 1)
        if lifetime < 1:
            raise App.ValidationError('Lifetime must be positive')
        if max_label > lifetime:
            raise App.ValidationError('Label %d exceeds lifetime %d' % (max_label, lifetime))
        self.lifetime = lifetime

        self.edges = tuple(sorted(found.keys()))
        self.labels = tuple(found[pair] for pair in self.edges)
        self.sorted_labels = tuple(tuple(sorted(labels)) for labels in self.labels)
        self._index = dict((pair, eid) for (eid, pair) in enumerate(self.edges))

        incident = [[] for v in range(vertex_count)]
        for (eid, (u, v)) in enumerate(self.edges):
            incident[u].append((eid, v))
            incident[v].append((eid, u))
        self._incident = tuple(tuple(inc) for inc in incident)

        if names is not None:
            names = tuple(names)
            if len(names) != vertex_count:
                raise App.ValidationError('Names table has %d entries for %d vertices' % (
                    len(names), vertex_count))
            if len(set(names)) != len(names):
                raise App.ValidationError('Names table is not injective')
        self.names = names
        self._by_name = None

    @classmethod
    def dynamic(cls, vertex_count, pairs, lifetime, names=None):
        """
        Builds the dynamic-based graph (G,[lifetime]): every edge active
        at every timestamp.
        """
        full = range(1, lifetime+1)
        return cls(vertex_count, [(u, v, full) for (u, v) in pairs], lifetime, names)

    @property
    def edge_count(self):
        return len(self.edges)

    def full_labels(self):
        return frozenset(range(1, self.lifetime+1))

    def edge_id(self, u, v):
        """
        Returns the id of edge {u,v}, or ``None``.
        """
        return self._index.get((min(u, v), max(u, v)))

    def incident(self, vertex):
        """
        ``(edge_id, other_end)`` tuples for ``vertex``, sorted by edge id.
        """
        return self._incident[vertex]

    def degree(self, vertex):
        return len(self._incident[vertex])

    def check_time(self, time):
        if time < 1 or time > self.lifetime:
            raise App.RangeError('Timestamp %d is outside 1..%d' % (time, self.lifetime))

    def check_vertex(self, vertex):
        if vertex is None or vertex < 0 or vertex >= self.vertex_count:
            raise App.RangeError('Vertex %s is outside 0..%d' % (vertex, self.vertex_count-1))

    def snapshot_edges(self, time):
        """
        Edge ids active at ``time``.
        """
        self.check_time(time)
        return frozenset(eid for (eid, labels) in enumerate(self.labels) if time in labels)

    def snapshot(self, time):
        """
        The static graph G_time, as a ``networkx.Graph`` on every vertex of
        G.  Each edge carries its id in the ``eid`` attribute.
        """
        return self.subgraph(self.snapshot_edges(time))

    def base_graph(self):
        """
        The underlying static graph, labels ignored.
        """
        return self.subgraph(range(self.edge_count))

    def subgraph(self, eids):
        """
        A ``networkx.Graph`` on every vertex of G holding just the given
        edge ids.
        """
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        for eid in sorted(eids):
            (u, v) = self.edges[eid]
            graph.add_edge(u, v, eid=eid)
        return graph

    def nonempty_times(self):
        """
        Timestamps whose snapshot has at least one edge, ascending.
        """
        times = set()
        for labels in self.labels:
            times.update(labels)
        return sorted(times)

    def is_dynamic_based(self):
        full = self.full_labels()
        return all(labels == full for labels in self.labels)

    def name(self, vertex):
        if self.names is None:
            return str(vertex)
        return self.names[vertex]

    def vertex_by_name(self, name):
        """
        Looks a vertex up by name, falling back to a plain integer id.
        """
        if self.names is not None:
            if self._by_name is None:
                self._by_name = dict((n, v) for (v, n) in enumerate(self.names))
            if name in self._by_name:
                return self._by_name[name]
        try:
            vertex = int(name)
        except (TypeError, ValueError):
            raise App.RangeError('No vertex named "%s"' % (name))
        self.check_vertex(vertex)
        return vertex

    def with_names(self, names):
        return TemporalGraph(self.vertex_count,
            [(u, v, labels) for ((u, v), labels) in zip(self.edges, self.labels)],
            self.lifetime, names)

    def __eq__(self, other):
        return (isinstance(other, TemporalGraph) and
            self.vertex_count == other.vertex_count and
            self.lifetime == other.lifetime and
            self.edges == other.edges and
            self.labels == other.labels)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.vertex_count, self.lifetime, self.edges, self.labels))

    def __repr__(self):
        return '<TemporalGraph n=%d m=%d tau=%d>' % (
            self.vertex_count, self.edge_count, self.lifetime)


class TemporalWalk(object):
    """
    A start vertex plus a sequence of timed steps.  ``start`` may only be
    ``None`` for the empty walk on a graph without vertices.
    """

    def __init__(self, start, steps=()):
        self.start = start
        self.steps = tuple(Step(*step) for step in steps)

    @property
    def end(self):
        if self.steps:
            return self.steps[-1].v
        return self.start

    def vertices(self):
        """
        Every vertex the walk stands on, in order, starting with ``start``.
        """
        verts = [self.start]
        for step in self.steps:
            verts.append(step.v)
        return verts

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __eq__(self, other):
        return (isinstance(other, TemporalWalk) and
            self.start == other.start and self.steps == other.steps)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.start, self.steps))

    def __repr__(self):
        return '<TemporalWalk start=%s steps=%d>' % (self.start, len(self.steps))


class DynamicDigraph(object):
    """
    A finite digraph with integer transit times on its arcs.  Parallel
    arcs and negative transits are fine.
    """

    def __init__(self, vertex_count, arcs):
        if vertex_count < 0:
            raise App.ValidationError('Vertex count must be non-negative')
        self.vertex_count = vertex_count
        checked = []
        for (idx, (tail, head, transit)) in enumerate(arcs):
            for vertex in (tail, head):
                if vertex < 0 or vertex >= vertex_count:
                    raise App.ValidationError('Vertex %d out of range' % (vertex), idx)
            checked.append((tail, head, int(transit)))
        self.arcs = tuple(checked)

    def to_networkx(self):
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(range(self.vertex_count))
        for (tail, head, transit) in self.arcs:
            graph.add_edge(tail, head, transit=transit)
        return graph

    def __eq__(self, other):
        return (isinstance(other, DynamicDigraph) and
            self.vertex_count == other.vertex_count and self.arcs == other.arcs)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.vertex_count, self.arcs))


class CnfFormula(object):
    """
    A CNF formula over variables ``1..variable_count``.  Literals are
    signed variable indices.
    """

    def __init__(self, variable_count, clauses):
        if variable_count < 0:
            raise App.ValidationError('Variable count must be non-negative')
        self.variable_count = variable_count
        checked = []
        for (idx, clause) in enumerate(clauses):
            clause = tuple(int(lit) for lit in clause)
            for lit in clause:
                if lit == 0 or abs(lit) > variable_count:
                    raise App.ValidationError('Clause %d has invalid literal %d' % (idx+1, lit), idx)
            checked.append(clause)
        self.clauses = tuple(checked)

    @property
    def clause_count(self):
        return len(self.clauses)

    def check_reduction_input(self, min_width=3, max_width=3):
        """
        Makes sure every clause has between ``min_width`` and ``max_width``
        literals over distinct variables (which also rules out a clause
        holding both x and ~x).
        """
        if self.variable_count < 1:
            raise App.ValidationError('Formula has no variables')
        if not self.clauses:
            raise App.ValidationError('Formula has no clauses')
        for (idx, clause) in enumerate(self.clauses):
            if len(clause) < min_width or len(clause) > max_width:
                if min_width == max_width:
                    wanted = '%d' % (min_width)
                else:
                    wanted = '%d to %d' % (min_width, max_width)
                raise App.ValidationError('Clause %d has %d literals, expected %s' % (
                    idx+1, len(clause), wanted), idx)
            if len(set(abs(lit) for lit in clause)) != len(clause):
                raise App.ValidationError('Clause %d repeats a variable' % (idx+1), idx)

    def occurrences(self, literal):
        """
        Indices of the clauses containing ``literal``, in clause order.
        """
        return [idx for (idx, clause) in enumerate(self.clauses) if literal in clause]

    @staticmethod
    def literal_name(literal):
        if literal > 0:
            return 'x_%d' % (literal)
        return '~x_%d' % (-literal)

    def __eq__(self, other):
        return (isinstance(other, CnfFormula) and
            self.variable_count == other.variable_count and self.clauses == other.clauses)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.variable_count, self.clauses))

    def __repr__(self):
        return '<CnfFormula n=%d m=%d>' % (self.variable_count, len(self.clauses))
