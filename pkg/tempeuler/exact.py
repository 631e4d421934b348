#!/usr/bin/env python
# vim: set expandtab tabstop=4 shiftwidth=4:

import bisect
import heapq
import collections
import concurrent.futures

from tempeuler.models import App, ProblemVariant, TemporalWalk, Step
from tempeuler import static
from tempeuler.verify import verify, verify_trail_cover

# Exponential-time exact solvers.  Edge sets are ints used as bit
# vectors keyed by edge id.  Every solver gives up with a
# ``budget-exceeded`` result rather than guessing.

SearchState = collections.namedtuple('SearchState', ['position', 'time', 'covered', 'used_now', 'used'])

class SolveResult(object):
    """
    Outcome of an exact solve.  ``witness`` is a TemporalWalk (or a pair
    of them, for two-trail covers) when ``status`` is feasible.
    ``stats`` holds the expanded node count and the peak number of
    states held at once.
    """

    FEASIBLE = 'feasible'
    INFEASIBLE = 'infeasible'
    BUDGET_EXCEEDED = 'budget-exceeded'

    def __init__(self, status, variant=None, witness=None, nodes=0, peak=0, reason=None):
        self.status = status
        self.variant = variant
        self.witness = witness
        self.stats = {'nodes': nodes, 'peak': peak}
        self.reason = reason

    @property
    def feasible(self):
        return self.status == self.FEASIBLE

    def __repr__(self):
        return '<SolveResult %s %r>' % (self.status, self.stats)


class _LimitReached(Exception):
    """
    Internal signal that a search expanded more nodes than allowed.
    """


_Outcome = collections.namedtuple('_Outcome', ['witness', 'nodes', 'peak', 'exceeded'])

def _popcount(value):
    return bin(value).count('1')

def _certify(graph, variant, walk):
    violations = verify(graph, walk, variant)
    if violations:    # pragma: no cover
        raise App.TempEulerError('Solver produced an invalid %s witness: %s' % (
            variant, ', '.join(str(v) for v in violations)))
    return walk

def _edgeless(graph, variant, start):
    if start is None and graph.vertex_count > 0:
        start = 0
    return SolveResult(SolveResult.FEASIBLE, variant, TemporalWalk(start))

def _starts(graph, start):
    if start is not None:
        graph.check_vertex(start)
        return [start]
    return [v for v in range(graph.vertex_count) if graph.degree(v) > 0]

def _run_starts(graph, variant, starts, search, threads, retlines):
    """
    Runs ``search`` for every start vertex in increasing order and
    returns the witness of the lowest feasible start.  Stats add up
    over the starts tried up to that one, whether or not we ran them
    in parallel.
    """
    if threads > 1 and len(starts) > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(search, starts))
    else:
        outcomes = map(search, starts)

    nodes = 0
    peak = 0
    exceeded = False
    for (start, outcome) in zip(starts, outcomes):
        nodes += outcome.nodes
        peak = max(peak, outcome.peak)
        if outcome.witness is not None:
            App.log(retlines, App.STATUS_DEBUG, 'Found %s witness from vertex %d' % (variant, start))
            return SolveResult(SolveResult.FEASIBLE, variant,
                _certify(graph, variant, outcome.witness), nodes, peak)
        if outcome.exceeded:
            App.log(retlines, App.STATUS_ERROR, 'Node limit reached from vertex %d' % (start))
            exceeded = True
    if exceeded:
        return SolveResult(SolveResult.BUDGET_EXCEEDED, variant, None, nodes, peak,
            'node limit reached')
    return SolveResult(SolveResult.INFEASIBLE, variant, None, nodes, peak)

def _over_budget(variant, size, budget, what, retlines):
    App.log(retlines, App.STATUS_ERROR, '%s is %d, over the budget of %d' % (what, size, budget))
    return SolveResult(SolveResult.BUDGET_EXCEEDED, variant,
        reason='%s %d exceeds budget %d' % (what, size, budget))

def _dead_masks(graph, strict):
    """
    For each time 0..lifetime, the edges which can no longer be
    traversed once the walk is at that time.
    """
    masks = []
    for time in range(graph.lifetime+1):
        mask = 0
        for (eid, labels) in enumerate(graph.labels):
            last = max(labels)
            if last < time or (strict and last == time):
                mask |= 1 << eid
        masks.append(mask)
    return masks

def _next_label(labels, time, strict):
    """
    Smallest label at or after ``time`` (strictly after in strict mode).
    """
    if strict:
        idx = bisect.bisect_right(labels, time)
    else:
        idx = bisect.bisect_left(labels, time)
    if idx < len(labels):
        return labels[idx]
    return None

class _WalkSearch(object):
    """
    Forward search over (position, covered) keyed by the earliest time
    we can reach it.  An earlier arrival always dominates a later one
    since repeats are allowed, so this is Dijkstra with times as
    distances.
    """

    def __init__(self, graph, closed, strict, node_limit):
        self.graph = graph
        self.closed = closed
        self.strict = strict
        self.node_limit = node_limit
        self.full = (1 << graph.edge_count) - 1
        self.dead = _dead_masks(graph, strict)

    def __call__(self, start):
        graph = self.graph
        best = {(start, 0): 0}
        pred = {}
        heap = [(0, start, 0)]
        nodes = 0
        peak = 1
        while heap:
            (time, pos, cov) = heapq.heappop(heap)
            if best[(pos, cov)] != time:
                continue
            nodes += 1
            if self.node_limit and nodes > self.node_limit:
                return _Outcome(None, nodes, peak, True)
            if cov == self.full and (not self.closed or pos == start):
                return _Outcome(self.rebuild(start, pred, (pos, cov)), nodes, peak, False)
            for (eid, other) in graph.incident(pos):
                label = _next_label(graph.sorted_labels[eid], time, self.strict)
                if label is None:
                    continue
                key = (other, cov | (1 << eid))
                if self.dead[label] & ~key[1] & self.full:
                    continue
                if key not in best or label < best[key]:
                    best[key] = label
                    pred[key] = ((pos, cov), Step(pos, other, label))
                    heapq.heappush(heap, (label, other, key[1]))
            peak = max(peak, len(heap))
        return _Outcome(None, nodes, peak, False)

    def rebuild(self, start, pred, key):
        steps = []
        while key != (start, 0):
            (key, step) = pred[key]
            steps.append(step)
        steps.reverse()
        return TemporalWalk(start, steps)

def solve_walk_exact(graph, closed=False, strict=False, start=None, budget=24,
        node_limit=2000000, threads=1, retlines=None):
    """
    Exact Eulerian walk (closed walk) decision.  Tries every start
    vertex with an edge in increasing order, or just ``start`` when it
    is pinned.  ``budget`` caps the edge count; ``node_limit`` caps the
    states expanded per start (0 disables it).
    """
    variant = ProblemVariant.for_family(ProblemVariant.FAMILY_WALK, closed, strict)
    if graph.edge_count > budget:
        return _over_budget(variant, graph.edge_count, budget, 'Edge count', retlines)
    if graph.edge_count == 0:
        return _edgeless(graph, variant, start)
    search = _WalkSearch(graph, closed, strict, node_limit)
    return _run_starts(graph, variant, _starts(graph, start), search, threads, retlines)


class _LocalTrailSearch(object):
    """
    Depth-first backtracking for local trails.  The state carries the
    edges used at the current time, which resets whenever time moves on.
    Failed states are memoized.
    """

    def __init__(self, graph, closed, strict, node_limit, odd_pruning):
        self.graph = graph
        self.closed = closed
        self.strict = strict
        self.node_limit = node_limit
        self.full = (1 << graph.edge_count) - 1
        self.dead = _dead_masks(graph, strict)
        self.odd_masks = []
        if odd_pruning and closed and graph.lifetime == 2:
            for vertex in sorted(static.odd_degree_vertices(graph.base_graph())):
                self.odd_masks.append(sum(1 << eid for (eid, other) in graph.incident(vertex)))
        self.prune_odd = len(self.odd_masks) > 0

    def __call__(self, start):
        self.start = start
        self.failed = set()
        self.path = []
        self.nodes = 0
        try:
            found = self.dfs(start, 0, 0, 0)
        except _LimitReached:
            return _Outcome(None, self.nodes, len(self.failed), True)
        if found:
            return _Outcome(TemporalWalk(start, self.path), self.nodes, len(self.failed), False)
        return _Outcome(None, self.nodes, len(self.failed), False)

    def dfs(self, pos, time, cov, used_now):
        if cov == self.full and (not self.closed or pos == self.start):
            return True
        key = SearchState(pos, time, cov, used_now, None)
        if key in self.failed:
            return False
        self.nodes += 1
        if self.node_limit and self.nodes > self.node_limit:
            raise _LimitReached()
        if self.dead[time] & ~cov & self.full:
            self.failed.add(key)
            return False

        # Leaving time 1 of a closed tour on lifetime 2: the first trail
        # has to have touched every odd vertex by now.
        odd_ok = True
        if self.prune_odd and time == 1:
            odd_ok = all(mask & used_now for mask in self.odd_masks)

        for (eid, other) in self.graph.incident(pos):
            bit = 1 << eid
            for label in self.graph.sorted_labels[eid]:
                if label < time or (self.strict and label == time):
                    continue
                if label == time:
                    if used_now & bit:
                        continue
                    next_used = used_now | bit
                else:
                    if not odd_ok:
                        continue
                    next_used = bit
                self.path.append(Step(pos, other, label))
                if self.dfs(other, label, cov | bit, next_used):
                    return True
                self.path.pop()
        self.failed.add(key)
        return False

def solve_local_trail_exact(graph, closed=False, strict=False, start=None, budget=26,
        node_limit=2000000, threads=1, odd_pruning=True, retlines=None):
    """
    Exact Eulerian local trail (local tour) decision.  ``budget`` caps
    edges times lifetime.  ``odd_pruning`` enables the odd-vertex cut
    for closed searches on lifetime 2; it never changes the answer.
    """
    variant = ProblemVariant.for_family(ProblemVariant.FAMILY_LOCAL, closed, strict)
    size = graph.edge_count * graph.lifetime
    if size > budget:
        return _over_budget(variant, size, budget, 'Edges times lifetime', retlines)
    if graph.edge_count == 0:
        return _edgeless(graph, variant, start)
    search = _LocalTrailSearch(graph, closed, strict, node_limit, odd_pruning)
    if threads > 1:
        # One search object per worker, they keep per-run state.
        search = lambda s: _LocalTrailSearch(graph, closed, strict, node_limit, odd_pruning)(s)
    return _run_starts(graph, variant, _starts(graph, start), search, threads, retlines)


class _TrailSearch(object):
    """
    Backtracking over unused edges, always at the earliest usable label.
    ``failed`` maps (position, used) to the earliest time from which
    that state was shown to fail; arriving later can't do better.
    """

    def __init__(self, graph, closed, strict, node_limit):
        self.graph = graph
        self.closed = closed
        self.strict = strict
        self.node_limit = node_limit
        self.full = (1 << graph.edge_count) - 1
        self.dead = _dead_masks(graph, strict)
        self.vertex_masks = [sum(1 << eid for (eid, other) in graph.incident(v))
            for v in range(graph.vertex_count)]

    def __call__(self, start):
        self.start = start
        self.failed = {}
        self.path = []
        self.nodes = 0
        try:
            found = self.dfs(start, 0, 0)
        except _LimitReached:
            return _Outcome(None, self.nodes, len(self.failed), True)
        if found:
            return _Outcome(TemporalWalk(start, self.path), self.nodes, len(self.failed), False)
        return _Outcome(None, self.nodes, len(self.failed), False)

    def parity_ok(self, pos, remaining):
        """
        The unused edges must still form one trail from ``pos`` (ending
        at the start for closed searches).
        """
        if not remaining & self.vertex_masks[pos]:
            return False
        odd = set(v for (v, mask) in enumerate(self.vertex_masks)
            if _popcount(mask & remaining) % 2 == 1)
        if self.closed:
            if pos == self.start:
                return len(odd) == 0
            return odd == set([pos, self.start])
        if len(odd) == 0:
            return True
        return len(odd) == 2 and pos in odd

    def dfs(self, pos, time, used):
        if used == self.full and (not self.closed or pos == self.start):
            return True
        key = (pos, used)
        earliest = self.failed.get(key)
        if earliest is not None and time >= earliest:
            return False
        self.nodes += 1
        if self.node_limit and self.nodes > self.node_limit:
            raise _LimitReached()
        remaining = self.full & ~used
        if (self.dead[time] & remaining) or not self.parity_ok(pos, remaining):
            self.failed[key] = time
            return False
        for (eid, other) in self.graph.incident(pos):
            bit = 1 << eid
            if used & bit:
                continue
            label = _next_label(self.graph.sorted_labels[eid], time, self.strict)
            if label is None:
                continue
            self.path.append(Step(pos, other, label))
            if self.dfs(other, label, used | bit):
                return True
            self.path.pop()
        if earliest is None or time < earliest:
            self.failed[key] = time
        return False

def solve_trail_exact(graph, closed=False, strict=False, start=None, budget=26,
        node_limit=2000000, threads=1, retlines=None):
    """
    Exact Eulerian trail (tour) decision.  ``budget`` caps the edge count.
    """
    variant = ProblemVariant.for_family(ProblemVariant.FAMILY_TRAIL, closed, strict)
    if graph.edge_count > budget:
        return _over_budget(variant, graph.edge_count, budget, 'Edge count', retlines)
    if graph.edge_count == 0:
        return _edgeless(graph, variant, start)
    search = _TrailSearch(graph, closed, strict, node_limit)
    if threads > 1:
        search = lambda s: _TrailSearch(graph, closed, strict, node_limit)(s)
    return _run_starts(graph, variant, _starts(graph, start), search, threads, retlines)


class _CoverSearch(object):
    """
    Two-trail cover search.  First trails are enumerated as maximal
    trails only (extending a cover's first trail keeps it a cover), each
    edge set once.  For each, a second trail has to contain every edge
    the first one missed; it may reuse the first trail's edges.
    """

    def __init__(self, graph, node_limit):
        self.graph = graph
        self.node_limit = node_limit
        self.full = (1 << graph.edge_count) - 1
        self.nodes = 0
        self.seen = set()
        self.starts = [v for v in range(graph.vertex_count) if graph.degree(v) > 0]

    def tick(self):
        self.nodes += 1
        if self.node_limit and self.nodes > self.node_limit:
            raise _LimitReached()

    def first_trails(self, pos, used, path):
        """
        Generates (edge mask, steps) for every maximal trail extending
        ``path``.
        """
        self.tick()
        extended = False
        for (eid, other) in self.graph.incident(pos):
            bit = 1 << eid
            if used & bit:
                continue
            extended = True
            path.append(Step(pos, other, 1))
            for found in self.first_trails(other, used | bit, path):
                yield found
            path.pop()
        if not extended:
            yield (used, list(path))

    def second_trail(self, required):
        """
        A trail containing every edge of ``required``, as a list of
        steps, or ``None``.
        """
        eids = [eid for eid in range(self.graph.edge_count) if required >> eid & 1]
        trail = static.eulerian_trail(self.graph, eids)
        if trail is not None:
            return [Step(u, v, 1) for (u, v, eid) in trail]
        self.failed = set()
        for start in self.starts:
            path = []
            if self.extend(start, 0, required, path):
                return path
        return None

    def extend(self, pos, used, required, path):
        if required & ~used == 0:
            return True
        key = (pos, used)
        if key in self.failed:
            return False
        self.tick()
        for (eid, other) in self.graph.incident(pos):
            bit = 1 << eid
            if used & bit:
                continue
            path.append(Step(pos, other, 1))
            if self.extend(other, used | bit, required, path):
                return True
            path.pop()
        self.failed.add(key)
        return False

    def run(self):
        for start in self.starts:
            for (mask, steps) in self.first_trails(start, 0, []):
                if mask in self.seen:
                    continue
                self.seen.add(mask)
                second = self.second_trail(self.full & ~mask)
                if second is not None:
                    first = TemporalWalk(start, steps)
                    if second:
                        other = TemporalWalk(second[0].u, second)
                    else:
                        other = TemporalWalk(start)
                    return (first, other)
        return None

def two_trail_cover_exact(graph, budget=22, node_limit=2000000, retlines=None):
    """
    Decides whether two trails of the base graph of ``graph`` (labels
    are ignored) together contain every edge.  The trails may overlap.
    A feasible result carries the pair of trails, every step at time 1.
    """
    if graph.edge_count > budget:
        return _over_budget(None, graph.edge_count, budget, 'Edge count', retlines)
    start = 0 if graph.vertex_count > 0 else None
    if graph.edge_count == 0:
        return SolveResult(SolveResult.FEASIBLE, None, (TemporalWalk(start), TemporalWalk(start)))

    trail = static.eulerian_trail(graph, range(graph.edge_count))
    if trail is not None:
        App.log(retlines, App.STATUS_DEBUG, 'Graph has an Eulerian trail')
        first = TemporalWalk(trail[0][0], [Step(u, v, 1) for (u, v, eid) in trail])
        return SolveResult(SolveResult.FEASIBLE, None, (first, TemporalWalk(first.start)))

    components = static.nontrivial_components(graph.base_graph())
    if len(components) > 2:
        App.log(retlines, App.STATUS_INFO, '%d non-trivial components' % (len(components)))
        return SolveResult(SolveResult.INFEASIBLE)

    search = _CoverSearch(graph, node_limit)
    try:
        pair = search.run()
    except _LimitReached:
        return SolveResult(SolveResult.BUDGET_EXCEEDED, None, None, search.nodes, len(search.seen),
            'node limit reached')
    if pair is None:
        return SolveResult(SolveResult.INFEASIBLE, None, None, search.nodes, len(search.seen))
    violations = verify_trail_cover(graph, pair)
    if violations:    # pragma: no cover
        raise App.TempEulerError('Cover search produced an invalid cover')
    return SolveResult(SolveResult.FEASIBLE, None, pair, search.nodes, len(search.seen))


def naive_oracle(graph, variant, max_steps=None, start=None):
    """
    Breadth-first enumeration of step sequences, with no pruning beyond
    validity (identical states are only expanded once).  Meant as an
    independent check on the other solvers for tiny graphs.

    The default ``max_steps`` is 2*m*tau + n for walks, m*tau for local
    trails and m for trails.  An infeasible result only means nothing
    was found within the bound.
    """
    m = graph.edge_count
    if m == 0:
        return _edgeless(graph, variant, start)
    if max_steps is None:
        if variant.family == ProblemVariant.FAMILY_WALK:
            max_steps = 2 * m * graph.lifetime + graph.vertex_count
        elif variant.family == ProblemVariant.FAMILY_LOCAL:
            max_steps = m * graph.lifetime
        else:
            max_steps = m
    full = (1 << m) - 1
    local = variant.family == ProblemVariant.FAMILY_LOCAL
    trail = variant.family == ProblemVariant.FAMILY_TRAIL

    if start is not None:
        graph.check_vertex(start)
        starts = [start]
    else:
        starts = list(range(graph.vertex_count))

    parent = {}
    frontier = []
    for s in starts:
        state = (s, s, 0, 0, 0)
        parent[state] = None
        frontier.append(state)

    nodes = 0
    peak = len(frontier)
    for depth in range(max_steps+1):
        upcoming = []
        for state in frontier:
            (s, pos, time, cov, used_now) = state
            nodes += 1
            if cov == full and (not variant.closed or pos == s):
                steps = []
                while parent[state] is not None:
                    (state, step) = parent[state]
                    steps.append(step)
                steps.reverse()
                witness = _certify(graph, variant, TemporalWalk(s, steps))
                return SolveResult(SolveResult.FEASIBLE, variant, witness, nodes, peak)
            if depth == max_steps:
                continue
            for (eid, other) in graph.incident(pos):
                bit = 1 << eid
                if trail and cov & bit:
                    continue
                for label in graph.sorted_labels[eid]:
                    if label < time or (variant.strict and label == time):
                        continue
                    next_used = 0
                    if local:
                        if label == time:
                            if used_now & bit:
                                continue
                            next_used = used_now | bit
                        else:
                            next_used = bit
                    nxt = (s, other, label, cov | bit, next_used)
                    if nxt in parent:
                        continue
                    parent[nxt] = (state, Step(pos, other, label))
                    upcoming.append(nxt)
        frontier = upcoming
        peak = max(peak, len(frontier))
        if not frontier:
            break
    return SolveResult(SolveResult.INFEASIBLE, variant, None, nodes, peak)
