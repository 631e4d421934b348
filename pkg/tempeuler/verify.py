#!/usr/bin/env python
# vim: set expandtab tabstop=4 shiftwidth=4:

from tempeuler.models import App, ProblemVariant, Violation
from tempeuler import static

def verify(graph, walk, variant):
    """
    Checks ``walk`` against ``graph`` for the given ProblemVariant.
    Returns a list of Violations, which is empty when the walk is a
    valid Eulerian witness.  Malformed walks never raise; everything
    wrong with them is reported.

    Per-step checks are reported with the 0-based step index as their
    location.  Uncovered edges come back as ``not-eulerian`` with the
    edge id as location, and an open end on a closed variant is
    reported as ``not-closed`` at the last step.
    """
    violations = []
    prev_vertex = walk.start
    prev_time = None
    if walk.start is not None and (walk.start < 0 or walk.start >= graph.vertex_count):
        violations.append(Violation(Violation.BROKEN_CHAIN, 0))
    elif walk.start is None and walk.steps:
        violations.append(Violation(Violation.BROKEN_CHAIN, 0))

    covered = set()
    used_global = set()
    used_snapshot = set()
    for (idx, step) in enumerate(walk.steps):
        if step.u != prev_vertex:
            violations.append(Violation(Violation.BROKEN_CHAIN, idx))
        eid = None
        if (0 <= step.u < graph.vertex_count and 0 <= step.v < graph.vertex_count
                and step.u != step.v):
            eid = graph.edge_id(step.u, step.v)
        if eid is None or step.time not in graph.labels[eid]:
            violations.append(Violation(Violation.INACTIVE_TIME, idx))
        if prev_time is not None:
            if step.time < prev_time or (variant.strict and step.time == prev_time):
                violations.append(Violation(Violation.TIME_REGRESSION, idx))
        if eid is not None:
            covered.add(eid)
            if variant.family == ProblemVariant.FAMILY_LOCAL:
                if (eid, step.time) in used_snapshot:
                    violations.append(Violation(Violation.EDGE_REPEAT_IN_SNAPSHOT, idx))
                used_snapshot.add((eid, step.time))
            elif variant.family == ProblemVariant.FAMILY_TRAIL:
                if eid in used_global:
                    violations.append(Violation(Violation.EDGE_REPEAT_GLOBAL, idx))
                used_global.add(eid)
        prev_vertex = step.v
        prev_time = step.time

    for eid in range(graph.edge_count):
        if eid not in covered:
            violations.append(Violation(Violation.NOT_EULERIAN, eid))

    if variant.closed and walk.end != walk.start:
        violations.append(Violation(Violation.NOT_CLOSED, max(len(walk.steps)-1, 0)))

    return violations

def is_valid(graph, walk, variant):
    return len(verify(graph, walk, variant)) == 0

def restrict(walk, time):
    """
    The maximal contiguous run of steps of ``walk`` taken at ``time``,
    starting from the first such step.  On a valid walk that is every
    step at ``time``; an empty tuple if there are none.
    """
    steps = walk.steps
    first = 0
    while first < len(steps) and steps[first].time != time:
        first += 1
    last = first
    while last < len(steps) and steps[last].time == time:
        last += 1
    return steps[first:last]

def check_odd_coverage(graph, walk):
    """
    For a graph with lifetime 2 and a walk which verifies as a local
    tour: reports, per timestamp, the odd-degree vertices of the base
    graph that the walk does not visit at that timestamp.  Returns an
    empty dict when both timestamps visit every odd vertex.
    """
    if graph.lifetime != 2:
        raise App.UsageError('Odd-vertex coverage is only defined for lifetime 2, not %d' % (
            graph.lifetime))
    violations = verify(graph, walk, ProblemVariant(ProblemVariant.LOCAL_TOUR))
    if violations:
        raise App.UsageError('Odd-vertex coverage needs a valid local tour (%d violation(s), first: %s)' % (
            len(violations), violations[0]))
    odd = static.odd_degree_vertices(graph.base_graph())
    missing = {}
    for time in (1, 2):
        visited = set()
        for step in restrict(walk, time):
            visited.add(step.u)
            visited.add(step.v)
        gone = odd - visited
        if gone:
            missing[time] = frozenset(gone)
    return missing

def verify_trail_cover(graph, trails):
    """
    Checks that ``trails`` (TemporalWalks over the base graph, one time
    each) are each trails of ``graph`` and that together they contain
    every edge.  Timestamps on the steps are ignored.  Returns a list of
    Violations; step locations are counted across the concatenated
    trails.
    """
    violations = []
    covered = set()
    offset = 0
    for trail in trails:
        prev_vertex = trail.start
        used = set()
        for (idx, step) in enumerate(trail.steps):
            if step.u != prev_vertex:
                violations.append(Violation(Violation.BROKEN_CHAIN, offset+idx))
            eid = None
            if (0 <= step.u < graph.vertex_count and 0 <= step.v < graph.vertex_count
                    and step.u != step.v):
                eid = graph.edge_id(step.u, step.v)
            if eid is None:
                violations.append(Violation(Violation.INACTIVE_TIME, offset+idx))
            else:
                if eid in used:
                    violations.append(Violation(Violation.EDGE_REPEAT_GLOBAL, offset+idx))
                used.add(eid)
                covered.add(eid)
            prev_vertex = step.v
        offset += len(trail.steps)
    for eid in range(graph.edge_count):
        if eid not in covered:
            violations.append(Violation(Violation.NOT_EULERIAN, eid))
    return violations
