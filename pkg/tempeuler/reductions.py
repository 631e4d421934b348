#!/usr/bin/env python
# vim: set expandtab tabstop=4 shiftwidth=4:

import itertools
import collections

from tempeuler.models import App, TemporalGraph, TemporalWalk, Step, ProblemVariant, CnfFormula
from tempeuler import static
from tempeuler.verify import verify, restrict, verify_trail_cover

# Generators for the SAT-based hardness constructions, plus the
# translations between satisfying assignments and Eulerian witnesses.

KIND_3SAT_WALK = '3sat-walk'
KIND_NAE_LOCALTOUR = 'nae3sat-localtour'
KIND_NAE_LOCALTRAIL = 'nae3sat-localtrail'
KIND_NAE_TRAIL = 'nae3sat-trail'
KIND_TWO_TRAIL_COVER = 'two-trail-cover'

# One realization of a forced edge u-v: the edge ids the first and the
# second trail take through it.
Forced = collections.namedtuple('Forced', ['u', 'v', 'first', 'second'])

class ReductionArtifact(object):
    """
    A reduced graph plus everything needed to translate witnesses and
    assignments: vertex names (on ``graph.names``), per-variable path
    edge ids, per-clause edge ids and the special vertices by name.
    """

    def __init__(self, kind, formula, graph, var_paths=(), clause_edges=(), special=None,
            forced=(), tail=(), base=None, pin=None, tau=None, closed=False, layout=None,
            forest=False):
        self.kind = kind
        self.formula = formula
        self.graph = graph
        self.var_paths = tuple(var_paths)
        self.clause_edges = tuple(clause_edges)
        self.special = dict(special or {})
        self.forced = tuple(forced)
        self.tail = tuple(tail)
        self.base = base
        self.pin = pin
        self.tau = tau if tau is not None else graph.lifetime
        self.closed = closed
        self.layout = layout
        self.forest = forest

    @property
    def names(self):
        return self.graph.names

    def vertex(self, name):
        return self.graph.vertex_by_name(name)

    def edge(self, u_name, v_name):
        eid = self.graph.edge_id(self.vertex(u_name), self.vertex(v_name))
        if eid is None:    # pragma: no cover
            raise App.ReductionError('No edge %s-%s in the construction' % (u_name, v_name))
        return eid

    def __repr__(self):
        return '<ReductionArtifact %s %r>' % (self.kind, self.graph)


class _Builder(object):
    """
    Collects named vertices (in id order) and named edges while a
    construction is put together.
    """

    def __init__(self, names=()):
        self.names = []
        self.ids = {}
        self.edges = []
        for name in names:
            self.vertex(name)

    def vertex(self, name):
        if name not in self.ids:
            self.ids[name] = len(self.names)
            self.names.append(name)
        return self.ids[name]

    def edge(self, u, v, labels):
        self.vertex(u)
        self.vertex(v)
        self.edges.append((u, v, frozenset(labels)))

    def graph(self, lifetime):
        return TemporalGraph(len(self.names),
            [(self.ids[u], self.ids[v], labels) for (u, v, labels) in self.edges],
            lifetime, self.names)


def four_clause_formula():
    """
    The unsatisfiable two-variable formula holding every sign pattern:
    (x1 v x2), (x1 v ~x2), (~x1 v x2), (~x1 v ~x2).
    """
    return CnfFormula(2, [(1, 2), (1, -2), (-1, 2), (-1, -2)])

def _literal_value(assignment, literal):
    value = assignment[abs(literal)-1]
    if literal > 0:
        return value
    return not value

def satisfies(formula, assignment):
    return all(any(_literal_value(assignment, lit) for lit in clause) for clause in formula.clauses)

def nae_satisfies(formula, assignment):
    for clause in formula.clauses:
        values = set(_literal_value(assignment, lit) for lit in clause)
        if len(values) != 2:
            return False
    return True

def _brute_force(formula, test):
    for assignment in itertools.product([False, True], repeat=formula.variable_count):
        if test(formula, assignment):
            return assignment
    return None

def brute_force_sat(formula):
    """
    First satisfying assignment in lexicographic order (False before
    True, x1 first), or ``None``.
    """
    return _brute_force(formula, satisfies)

def brute_force_nae(formula):
    """
    First NAE-satisfying assignment in lexicographic order, or ``None``.
    """
    return _brute_force(formula, nae_satisfies)

def _check_assignment(formula, assignment):
    assignment = tuple(bool(value) for value in assignment)
    if len(assignment) != formula.variable_count:
        raise App.UsageError('Assignment has %d values for %d variables' % (
            len(assignment), formula.variable_count))
    return assignment

def _certify(graph, walk, variant):
    violations = verify(graph, walk, variant)
    if violations:    # pragma: no cover
        raise App.ReductionError('Constructed %s witness fails verification: %s' % (
            variant, ', '.join(str(v) for v in violations)))
    return walk

###
### 3-SAT to Eulerian walk
###

def reduce_3sat_to_walk(formula, forest=False):
    """
    Builds the Eulerian walk instance for ``formula`` (clauses of one to
    three literals over distinct variables).  With lifetime 2n, time
    2i-1 holds the components of x_i and ~x_i (their clause edges
    included), time 2i hops through the hub T from variable i to i+1,
    and time 2n is everything except the clause edges.

    With ``forest=True`` time 2n is only a hop from variable n back to
    variable 1, followed by a second pass over the variables without
    clause edges, so that every snapshot is a forest (lifetime 4n-1).
    """
    formula.check_reduction_input(1, 3)
    n = formula.variable_count
    lifetime = 4*n - 1 if forest else 2*n

    builder = _Builder()
    for j in range(1, formula.clause_count+1):
        builder.vertex('a_%d' % (j))
        builder.vertex('b_%d' % (j))
    for i in range(1, n+1):
        builder.vertex(CnfFormula.literal_name(i))
        builder.vertex(CnfFormula.literal_name(-i))
    builder.vertex('T')

    for (j, clause) in enumerate(formula.clauses, 1):
        builder.edge('a_%d' % (j), 'b_%d' % (j), [2*abs(lit)-1 for lit in clause])
    for (j, clause) in enumerate(formula.clauses, 1):
        for lit in clause:
            i = abs(lit)
            if forest:
                labels = [2*i-1, 2*n+2*i-1]
            else:
                labels = [2*i-1, 2*n]
            builder.edge(CnfFormula.literal_name(lit), 'a_%d' % (j), labels)
    for i in range(1, n+1):
        labels = set()
        if i > 1:
            labels.add(2*i-2)
        if i < n:
            labels.add(2*i)
        if not forest:
            labels.add(2*n)
        else:
            if i == 1 or i == n:
                labels.add(2*n)
            if i > 1:
                labels.add(2*n+2*i-2)
            if i < n:
                labels.add(2*n+2*i)
        for lit in (i, -i):
            builder.edge('T', CnfFormula.literal_name(lit), labels)

    graph = builder.graph(lifetime)
    art = ReductionArtifact(KIND_3SAT_WALK, formula, graph,
        special={'T': graph.vertex_by_name('T')}, forest=forest)
    var_paths = []
    for i in range(1, n+1):
        sides = []
        for lit in (i, -i):
            sides.append(frozenset(art.edge(CnfFormula.literal_name(lit), 'a_%d' % (j+1))
                for j in formula.occurrences(lit)))
        var_paths.append(tuple(sides))
    art.var_paths = tuple(var_paths)
    art.clause_edges = tuple(art.edge('a_%d' % (j), 'b_%d' % (j))
        for j in range(1, formula.clause_count+1))
    return art

def _component_steps(graph, time, vertex):
    for comp in static.connected_components(graph.snapshot(time)):
        if vertex in comp.vertices:
            return [Step(u, v, time) for (u, v, eid) in static.doubled_dfs(graph, comp.edges, vertex)]
    return []    # pragma: no cover

def _hop(art, frm, to, time):
    hub = art.special['T']
    return [Step(frm, hub, time), Step(hub, to, time)]

def walk_witness_from_assignment(art, assignment):
    """
    Eulerian walk for a satisfying ``assignment``: at each time 2i-1 a
    doubled DFS of the true literal's component, hops through T in
    between, and a doubled DFS of everything left at time 2n (or a
    second pass over the false literals, in forest mode).
    """
    formula = art.formula
    assignment = _check_assignment(formula, assignment)
    if not satisfies(formula, assignment):
        raise App.UsageError('Assignment does not satisfy the formula')
    graph = art.graph
    n = formula.variable_count
    chosen = [art.vertex(CnfFormula.literal_name(i if assignment[i-1] else -i))
        for i in range(1, n+1)]
    opposite = [art.vertex(CnfFormula.literal_name(-i if assignment[i-1] else i))
        for i in range(1, n+1)]

    steps = []
    for i in range(1, n+1):
        steps.extend(_component_steps(graph, 2*i-1, chosen[i-1]))
        if i < n:
            steps.extend(_hop(art, chosen[i-1], chosen[i], 2*i))

    if art.forest:
        steps.extend(_hop(art, chosen[n-1], opposite[0], 2*n))
        for i in range(1, n+1):
            steps.extend(_component_steps(graph, 2*n+2*i-1, opposite[i-1]))
            if i < n:
                steps.extend(_hop(art, opposite[i-1], opposite[i], 2*n+2*i))
    else:
        steps.extend(_component_steps(graph, 2*n, chosen[n-1]))

    walk = TemporalWalk(chosen[0], steps)
    return _certify(graph, walk, ProblemVariant(ProblemVariant.WALK))

def assignment_from_walk(art, walk):
    """
    Reads an assignment off an Eulerian walk of a 3-SAT walk instance:
    x_i is true iff the walk's time 2i-1 part lies in the component of
    x_i (the vertex itself or the clause gadgets hanging off it).
    Variables whose time is unused come out false.
    """
    formula = art.formula
    graph = art.graph
    violations = verify(graph, walk, ProblemVariant(ProblemVariant.WALK))
    if violations:
        raise App.UsageError('Walk is not an Eulerian walk of the construction (%d violations)' % (
            len(violations)))
    assignment = []
    for i in range(1, formula.variable_count+1):
        side = set([art.vertex(CnfFormula.literal_name(i))])
        for j in formula.occurrences(i):
            side.add(art.vertex('a_%d' % (j+1)))
            side.add(art.vertex('b_%d' % (j+1)))
        touched = set()
        for step in restrict(walk, 2*i-1):
            touched.add(step.u)
            touched.add(step.v)
        assignment.append(len(touched & side) > 0)
    assignment = tuple(assignment)
    if not satisfies(formula, assignment):
        raise App.ReductionError('Extracted assignment does not satisfy the formula')
    return assignment

###
### NAE-3-SAT constructions
###

class _NaeLayout(object):
    """
    The named skeleton shared by the NAE constructions: s_1, s_2, t,
    the variable entry/exit vertices with their paths through the
    clause entry vertices, and the clause gadgets.  Forced edges are
    kept abstract; each construction realizes them its own way.
    """

    def __init__(self, formula):
        formula.check_reduction_input(3, 3)
        self.formula = formula
        n = formula.variable_count
        self.vertices = ['s_1', 's_2', 't']
        for i in range(1, n+1):
            self.vertices.append('I_%d' % (i))
            self.vertices.append('O_%d' % (i))

        self.normal = []
        self.forced = []
        self.entry_edges = []
        self.internal_edges = []
        self.clause_forced = []
        for (j, clause) in enumerate(formula.clauses, 1):
            entries = [self.entry_name(j, lit) for lit in clause]
            pairs = [('%s1_%d' % (x, j), '%s2_%d' % (x, j)) for x in ('a', 'b', 'c')]
            self.vertices.extend(entries)
            for pair in pairs:
                self.vertices.extend(pair)
            entry_edges = [((entry, pair[0]), (entry, pair[1])) for (entry, pair) in zip(entries, pairs)]
            internal = list(pairs)
            forced = [(pairs[0][0], pairs[2][1]), (pairs[0][1], pairs[1][0]), (pairs[2][0], pairs[1][1])]
            self.entry_edges.append(entry_edges)
            self.internal_edges.append(internal)
            self.clause_forced.append(forced)
            self.normal.extend(internal)
            for (first, second) in entry_edges:
                self.normal.append(first)
                self.normal.append(second)
            self.forced.extend(forced)

        self.paths = []
        self.degenerate = []
        for i in range(1, n+1):
            positive = self.path(i, i)
            negative = self.path(i, -i)
            if len(positive) == 1 and len(negative) == 1:
                # Unused variable: keep the two paths apart with a midpoint.
                mid = 'M(%s)' % (CnfFormula.literal_name(-i))
                self.vertices.append(mid)
                negative = [('I_%d' % (i), mid), (mid, 'O_%d' % (i))]
            if len(positive) == 1 or len(negative) == 1:
                self.degenerate.append(i)
            self.paths.append((positive, negative))
            self.normal.extend(positive)
            self.normal.extend(negative)

        self.forced.append(('s_1', 't'))
        self.forced.append(('s_2', 't'))
        self.forced.append(('t', 'I_1'))
        for i in range(1, n):
            self.forced.append(('O_%d' % (i), 'I_%d' % (i+1)))
        self.forced.append(('O_%d' % (n), 't'))

    @staticmethod
    def entry_name(clause_number, literal):
        return 'I_%d(%s)' % (clause_number, CnfFormula.literal_name(literal))

    def path(self, variable, literal):
        names = ['I_%d' % (variable)]
        names.extend(self.entry_name(j+1, literal) for j in self.formula.occurrences(literal))
        names.append('O_%d' % (variable))
        return list(zip(names, names[1:]))

    def plan(self, assignment):
        """
        Splits the normal edges between the first and second trail for a
        NAE-satisfying assignment.  A true variable puts its positive
        path in the first trail.  In each clause the first true literal
        sends both its entry edges to the first trail; the other two
        literals send theirs to the second, and the gadget's internal
        edges take the opposite side of their literal's entry edges.
        """
        first = []
        second = []
        for (i, (positive, negative)) in enumerate(self.paths):
            if assignment[i]:
                first.extend(positive)
                second.extend(negative)
            else:
                first.extend(negative)
                second.extend(positive)
        for (j, clause) in enumerate(self.formula.clauses):
            chosen = [_literal_value(assignment, lit) for lit in clause].index(True)
            for k in range(3):
                if k == chosen:
                    first.extend(self.entry_edges[j][k])
                    second.append(self.internal_edges[j][k])
                else:
                    second.extend(self.entry_edges[j][k])
                    first.append(self.internal_edges[j][k])
        return (first, second)

def _gadget(builder, u, v, labels):
    """
    Forced-edge gadget on u-v: four internal vertices, seven edges.
    Returns the named routes of the first and second trail through it.
    """
    w = ['fw(%s,%s,%d)' % (u, v, k) for k in range(1, 5)]
    for (a, b) in [(u, w[0]), (w[0], w[1]), (w[1], w[2]), (w[2], w[3]), (w[3], v),
            (w[0], w[2]), (w[1], w[3])]:
        builder.edge(a, b, labels)
    first = [(u, w[0]), (w[0], w[1]), (w[1], w[2]), (w[2], w[3]), (w[3], v)]
    second = [(u, w[0]), (w[0], w[2]), (w[2], w[1]), (w[1], w[3]), (w[3], v)]
    return (first, second)

def _nae_artifact(kind, layout, builder, lifetime, routes, tail=(), closed=False):
    graph = builder.graph(lifetime)
    art = ReductionArtifact(kind, layout.formula, graph, tau=lifetime, closed=closed, layout=layout)
    eids = lambda pairs: tuple(art.edge(u, v) for (u, v) in pairs)
    art.forced = tuple(Forced(u, v, eids(first), eids(second))
        for ((u, v), (first, second)) in zip(layout.forced, routes))
    art.var_paths = tuple((frozenset(eids(positive)), frozenset(eids(negative)))
        for (positive, negative) in layout.paths)
    forced_by_pair = dict(((f.u, f.v), f) for f in art.forced)
    clause_edges = []
    for j in range(layout.formula.clause_count):
        forced = []
        for pair in layout.clause_forced[j]:
            realization = forced_by_pair[pair]
            forced.extend(sorted(set(realization.first) | set(realization.second)))
        clause_edges.append({
            'entry': tuple(eids(pair) for pair in layout.entry_edges[j]),
            'internal': eids(layout.internal_edges[j]),
            'forced': tuple(forced),
        })
    art.clause_edges = tuple(clause_edges)
    art.special = dict((name, graph.vertex_by_name(name)) for name in ('s_1', 's_2', 't'))
    art.tail = tuple((art.vertex(u), art.vertex(v), time) for (u, v, time) in tail)
    return art

def reduce_nae3sat_to_localtour(formula):
    """
    Dynamic-based (G,[2]) which has an Eulerian local tour iff
    ``formula`` is NAE-satisfiable.  Every forced edge is realized with
    the four-vertex gadget, so s_1 and s_2 end up with degree 1 and no
    vertex has degree above 4.
    """
    layout = _NaeLayout(formula)
    builder = _Builder(layout.vertices)
    for (u, v) in layout.normal:
        builder.edge(u, v, (1, 2))
    routes = [_gadget(builder, u, v, (1, 2)) for (u, v) in layout.forced]
    return _nae_artifact(KIND_NAE_LOCALTOUR, layout, builder, 2, routes, closed=True)

def _check_nae(art, assignment):
    assignment = _check_assignment(art.formula, assignment)
    if not nae_satisfies(art.formula, assignment):
        raise App.UsageError('Assignment is not NAE-satisfying')
    return assignment

def _trail_edges(art, pairs, forced_side):
    eids = set(art.edge(u, v) for (u, v) in pairs)
    for realization in art.forced:
        eids.update(getattr(realization, forced_side))
    return eids

def _trail_steps(art, eids, start, time):
    trail = static.eulerian_trail(art.graph, eids, start=start)
    if trail is None:    # pragma: no cover
        raise App.ReductionError('Planned edge set has no trail from %s' % (art.graph.name(start)))
    return [Step(u, v, time) for (u, v, eid) in trail]

def localtour_witness_from_nae(art, assignment):
    """
    Eulerian local tour from s_1 for a NAE-satisfying ``assignment``:
    the first trail runs from s_1 to s_2 at time 1, the second from s_2
    back to s_1 at time 2.
    """
    assignment = _check_nae(art, assignment)
    (first, second) = art.layout.plan(assignment)
    s1 = art.special['s_1']
    s2 = art.special['s_2']
    steps = _trail_steps(art, _trail_edges(art, first, 'first'), s1, 1)
    steps.extend(_trail_steps(art, _trail_edges(art, second, 'second'), s2, 2))
    return _certify(art.graph, TemporalWalk(s1, steps), ProblemVariant(ProblemVariant.LOCAL_TOUR))

def nae_assignment_from_localtour(art, walk):
    """
    Reads the NAE assignment off an Eulerian local tour: x_i is true iff
    the time 1 trail holds all of x_i's positive path.  Checks that the
    two paths of every variable sit in opposite trails and that the two
    entry edges at every clause entry vertex share their trails.
    """
    graph = art.graph
    violations = verify(graph, walk, ProblemVariant(ProblemVariant.LOCAL_TOUR))
    if violations:
        raise App.UsageError('Walk is not an Eulerian local tour of the construction (%d violations)' % (
            len(violations)))
    first = set(graph.edge_id(s.u, s.v) for s in restrict(walk, 1))
    second = set(graph.edge_id(s.u, s.v) for s in restrict(walk, 2))

    assignment = []
    for (i, (positive, negative)) in enumerate(art.var_paths, 1):
        value = positive <= first
        if value:
            ok = negative <= second
        else:
            ok = positive <= second and negative <= first
        if not ok:
            raise App.ReductionError('Paths of x_%d are not split between the two trails' % (i))
        assignment.append(value)

    for (j, clause) in enumerate(art.clause_edges, 1):
        for (e1, e2) in clause['entry']:
            if (e1 in first) != (e2 in first) or (e1 in second) != (e2 in second):
                raise App.ReductionError('Entry edges of clause %d are split between trails' % (j))

    assignment = tuple(assignment)
    if not nae_satisfies(art.formula, assignment):
        raise App.ReductionError('Extracted assignment is not NAE-satisfying')
    return assignment

def _remap(base_graph, graph, eids):
    return frozenset(graph.edge_id(*base_graph.edges[eid]) for eid in eids)

def lift_localtour_to_localtrail(art, s, tau, closed=False):
    """
    Attaches a star with center ``u`` and leaves v_1, v_3 .. v_{tau+1}
    to the (G,[2]) local tour instance, the remaining leaf v_2 being
    ``s`` itself.  The result is dynamic-based with lifetime ``tau``
    (``tau``+1 for the closed variant) and has an Eulerian local trail
    (tour) iff the base instance has a local tour through ``s``.
    ``s`` may be a vertex id or a name.
    """
    if tau < 2:
        raise App.UsageError('Lifted lifetime must be at least 2, not %d' % (tau))
    base = art.graph
    if isinstance(s, str):
        s = base.vertex_by_name(s)
    base.check_vertex(s)
    n = base.vertex_count
    names = list(base.names) if base.names is not None else [str(v) for v in range(n)]
    names.append('u')
    names.append('v_1')
    leaves = {1: n+1, 2: s}
    for i in range(3, tau+2):
        leaves[i] = len(names)
        names.append('v_%d' % (i))
    center = n
    pairs = list(base.edges)
    for i in range(1, tau+2):
        pairs.append((center, leaves[i]))
    lifetime = tau + 1 if closed else tau
    graph = TemporalGraph.dynamic(len(names), pairs, lifetime, names)

    special = {'u': center}
    for (i, vertex) in leaves.items():
        special['v_%d' % (i)] = vertex
    lifted = ReductionArtifact(KIND_NAE_LOCALTRAIL, art.formula, graph, special=special,
        base=art, pin=s, tau=tau, closed=closed)
    lifted.var_paths = tuple((_remap(base, graph, positive), _remap(base, graph, negative))
        for (positive, negative) in art.var_paths)
    clause_edges = []
    for clause in art.clause_edges:
        clause_edges.append({
            'entry': tuple(tuple(sorted(_remap(base, graph, pair))) for pair in clause['entry']),
            'internal': tuple(sorted(_remap(base, graph, clause['internal']))),
            'forced': tuple(sorted(_remap(base, graph, clause['forced']))),
        })
    lifted.clause_edges = tuple(clause_edges)
    return lifted

def localtrail_witness_from_localtour(lifted, tour):
    """
    Local trail (tour) of a lifted instance from a local tour of the
    base instance which starts at the pinned vertex s.  Time 1 walks
    v_1 -> u -> s and then the tour's first trail; time 2 the second
    trail and then s -> u -> v_3; every later time i walks
    v_i -> u -> v_{i+1}, and the closed variant finally returns to v_1.
    """
    base = lifted.base.graph
    s = lifted.pin
    if verify(base, tour, ProblemVariant(ProblemVariant.LOCAL_TOUR)) or tour.start != s:
        raise App.UsageError('Expected an Eulerian local tour of the base instance starting at %s' % (
            base.name(s)))
    u = lifted.special['u']
    leaf = lambda i: lifted.special['v_%d' % (i)]

    steps = [Step(leaf(1), u, 1), Step(u, s, 1)]
    steps.extend(restrict(tour, 1))
    steps.extend(restrict(tour, 2))
    steps.append(Step(s, u, 2))
    steps.append(Step(u, leaf(3), 2))
    for i in range(3, lifted.tau+1):
        steps.append(Step(leaf(i), u, i))
        steps.append(Step(u, leaf(i+1), i))
    if lifted.closed:
        last = lifted.tau + 1
        steps.append(Step(leaf(last), u, last))
        steps.append(Step(u, leaf(1), last))
        variant = ProblemVariant(ProblemVariant.LOCAL_TOUR)
    else:
        variant = ProblemVariant(ProblemVariant.LOCAL_TRAIL)
    return _certify(lifted.graph, TemporalWalk(leaf(1), steps), variant)

def reduce_nae3sat_to_trail(formula, tau=2, closed=False):
    """
    Eulerian trail (tour, if ``closed``) instance with lifetime ``tau``.
    The skeleton is the local tour one, but every forced edge u-v
    becomes two paths of length two, one through p1(u,v) active only at
    time 1 and one through p2(u,v) active only at time 2.  Other edges
    are active at times 1 and 2.  For ``tau`` above 2 a tail hanging
    off s_1 uses up the extra timestamps.
    """
    if tau < 2:
        raise App.UsageError('Lifetime must be at least 2, not %d' % (tau))
    layout = _NaeLayout(formula)
    builder = _Builder(layout.vertices)
    for (u, v) in layout.normal:
        builder.edge(u, v, (1, 2))
    routes = []
    for (u, v) in layout.forced:
        p1 = 'p1(%s,%s)' % (u, v)
        p2 = 'p2(%s,%s)' % (u, v)
        builder.edge(u, p1, (1,))
        builder.edge(p1, v, (1,))
        builder.edge(u, p2, (2,))
        builder.edge(p2, v, (2,))
        routes.append(([(u, p1), (p1, v)], [(u, p2), (p2, v)]))

    tail = []
    if closed:
        if tau == 3:
            tail = [('s_1', 'v_3', 3), ('v_3', 'v_4', 3), ('v_4', 's_1', 3)]
        elif tau == 4:
            tail = [('s_1', 'v_3', 3), ('v_3', 'v_4', 4), ('v_4', 's_1', 4)]
        elif tau >= 5:
            tail = [('s_1', 'v_3', 3)]
            for i in range(3, tau-1):
                tail.append(('v_%d' % (i), 'v_%d' % (i+1), i+1))
            tail.append(('v_%d' % (tau-1), 's_1', tau))
    elif tau > 2:
        tail = [('s_1', 'v_3', 3)]
        for i in range(3, tau):
            tail.append(('v_%d' % (i), 'v_%d' % (i+1), i+1))
    for (u, v, time) in tail:
        builder.edge(u, v, (time,))

    return _nae_artifact(KIND_NAE_TRAIL, layout, builder, tau, routes, tail, closed)

def trail_witness_from_nae(art, assignment):
    """
    Eulerian trail (tour) for a NAE-satisfying ``assignment``: the first
    trail through every p1 path at time 1, the second through every p2
    path at time 2, then the tail.
    """
    assignment = _check_nae(art, assignment)
    (first, second) = art.layout.plan(assignment)
    s1 = art.special['s_1']
    s2 = art.special['s_2']
    steps = _trail_steps(art, _trail_edges(art, first, 'first'), s1, 1)
    steps.extend(_trail_steps(art, _trail_edges(art, second, 'second'), s2, 2))
    for (u, v, time) in art.tail:
        steps.append(Step(u, v, time))
    if art.closed:
        variant = ProblemVariant(ProblemVariant.TOUR)
    else:
        variant = ProblemVariant(ProblemVariant.TRAIL)
    return _certify(art.graph, TemporalWalk(s1, steps), variant)

def reduce_to_two_trail_cover(formula):
    """
    Static graph (lifetime 1) whose edges can be covered by two trails
    when ``formula`` is NAE-satisfiable: the local tour graph with two
    pendant vertices p_1, p_2 added at t.  The forced edges s_1-t and
    s_2-t stay plain edges.
    """
    layout = _NaeLayout(formula)
    builder = _Builder(layout.vertices)
    for (u, v) in layout.normal:
        builder.edge(u, v, (1,))
    routes = []
    for (u, v) in layout.forced:
        if (u, v) in (('s_1', 't'), ('s_2', 't')):
            builder.edge(u, v, (1,))
            routes.append(([(u, v)], [(u, v)]))
        else:
            routes.append(_gadget(builder, u, v, (1,)))
    builder.edge('t', 'p_1', (1,))
    builder.edge('t', 'p_2', (1,))
    art = _nae_artifact(KIND_TWO_TRAIL_COVER, layout, builder, 1, routes)
    art.special['p_1'] = art.vertex('p_1')
    art.special['p_2'] = art.vertex('p_2')
    return art

def two_trail_cover_from_nae(art, assignment):
    """
    The two covering trails for a NAE-satisfying ``assignment``: s_1 to
    p_1 and s_2 to p_2, every step at time 1.
    """
    assignment = _check_nae(art, assignment)
    (first, second) = art.layout.plan(assignment)
    s1t = art.edge('s_1', 't')
    s2t = art.edge('s_2', 't')
    first_edges = _trail_edges(art, first, 'first') - set([s2t])
    first_edges.add(art.edge('t', 'p_1'))
    second_edges = _trail_edges(art, second, 'second') - set([s1t])
    second_edges.add(art.edge('t', 'p_2'))
    trails = (
        TemporalWalk(art.special['s_1'], _trail_steps(art, first_edges, art.special['s_1'], 1)),
        TemporalWalk(art.special['s_2'], _trail_steps(art, second_edges, art.special['s_2'], 1)),
    )
    if verify_trail_cover(art.graph, trails):    # pragma: no cover
        raise App.ReductionError('Constructed trails do not cover the graph')
    return trails

###
### Fixture families
###

def hexagon_ring(k, tau=2):
    """
    A ring of ``k`` hexagons where consecutive hexagons share an edge,
    as a dynamic-based graph with lifetime ``tau``.  Hexagon i is the
    cycle p_i, q_i, r_i, q_{i+1}, p_{i+1}, s_i (indices mod k), so the
    shared edges are the p_i-q_i ones and their endpoints have degree 3.
    """
    if k < 3:
        raise App.UsageError('A hexagon ring needs at least 3 hexagons, not %d' % (k))
    names = []
    for i in range(k):
        names.extend(['p_%d' % (i), 'q_%d' % (i), 'r_%d' % (i), 's_%d' % (i)])
    p = lambda i: 4*(i % k)
    q = lambda i: 4*(i % k)+1
    r = lambda i: 4*(i % k)+2
    s = lambda i: 4*(i % k)+3
    pairs = []
    for i in range(k):
        pairs.extend([(p(i), q(i)), (q(i), r(i)), (r(i), q(i+1)), (p(i+1), s(i)), (s(i), p(i))])
    return TemporalGraph.dynamic(4*k, pairs, tau, names)
