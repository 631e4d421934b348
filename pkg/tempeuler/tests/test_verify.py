from .base import TempEulerTests, graph_from_pairs, random_graphs, temporal_graphs

from hypothesis import given, settings

from tempeuler.models import App, TemporalGraph, TemporalWalk, ProblemVariant, Violation, Step
from tempeuler.verify import verify, is_valid, restrict, check_odd_coverage, verify_trail_cover
from tempeuler.exact import solve_walk_exact, solve_local_trail_exact, solve_trail_exact

WALK = ProblemVariant(ProblemVariant.WALK)
CLOSED_WALK = ProblemVariant(ProblemVariant.CLOSED_WALK)
LOCAL_TRAIL = ProblemVariant(ProblemVariant.LOCAL_TRAIL)
LOCAL_TOUR = ProblemVariant(ProblemVariant.LOCAL_TOUR)
TRAIL = ProblemVariant(ProblemVariant.TRAIL)
TOUR = ProblemVariant(ProblemVariant.TOUR)

class VerifyTests(TempEulerTests):
    """
    Tests for the witness verifier.
    """

    def setUp(self):
        # K_1,3 on lifetime 2, and a local trail over it
        self.star = TemporalGraph.dynamic(4, [(0, 1), (0, 2), (0, 3)], 2)
        self.star_walk = TemporalWalk(1, [(1, 0, 1), (0, 2, 1), (2, 0, 2), (0, 3, 2)])

    def test_valid_walk(self):
        self.assertEqual(verify(self.star, self.star_walk, WALK), [])
        self.assertEqual(is_valid(self.star, self.star_walk, LOCAL_TRAIL), True)

    def test_trail_repeat(self):
        """
        Edge 0-2 gets crossed twice, which only trails forbid.
        """
        self.assertEqual(verify(self.star, self.star_walk, TRAIL),
            [Violation(Violation.EDGE_REPEAT_GLOBAL, 2)])

    def test_local_repeat_in_snapshot(self):
        walk = TemporalWalk(1, [(1, 0, 1), (0, 2, 1), (2, 0, 1), (0, 3, 1)])
        self.assertEqual(verify(self.star, walk, LOCAL_TRAIL),
            [Violation(Violation.EDGE_REPEAT_IN_SNAPSHOT, 2)])
        self.assertEqual(verify(self.star, walk, WALK), [])

    def test_not_closed(self):
        self.assertEqual(verify(self.star, self.star_walk, LOCAL_TOUR),
            [Violation(Violation.NOT_CLOSED, 3)])

    def test_closed_walk(self):
        walk = TemporalWalk(0, [(0, 1, 1), (1, 0, 1), (0, 2, 1), (2, 0, 1), (0, 3, 2), (3, 0, 2)])
        self.assertEqual(verify(self.star, walk, CLOSED_WALK), [])

    def test_not_eulerian(self):
        walk = TemporalWalk(1, [(1, 0, 1), (0, 2, 1)])
        self.assertEqual(verify(self.star, walk, WALK), [Violation(Violation.NOT_EULERIAN, 2)])

    def test_broken_chain(self):
        walk = TemporalWalk(1, [(1, 0, 1), (2, 0, 1), (0, 3, 1)])
        violations = verify(self.star, walk, WALK)
        self.assertIn(Violation(Violation.BROKEN_CHAIN, 1), violations)

    def test_time_regression(self):
        walk = TemporalWalk(1, [(1, 0, 2), (0, 2, 1), (2, 0, 2), (0, 3, 2)])
        self.assertEqual(verify(self.star, walk, WALK), [Violation(Violation.TIME_REGRESSION, 1)])

    def test_strict_rejects_equal_times(self):
        strict = ProblemVariant(ProblemVariant.WALK, ProblemVariant.STRICT)
        walk = TemporalWalk(1, [(1, 0, 1), (0, 2, 1)])
        g = TemporalGraph.dynamic(3, [(0, 1), (0, 2)], 2)
        self.assertEqual(verify(g, walk, strict), [Violation(Violation.TIME_REGRESSION, 1)])
        walk = TemporalWalk(1, [(1, 0, 1), (0, 2, 2)])
        self.assertEqual(verify(g, walk, strict), [])

    def test_inactive_time(self):
        g = graph_from_pairs(3, [(0, 1), (1, 2)], [[1], [2]])
        walk = TemporalWalk(0, [(0, 1, 2), (1, 2, 2)])
        self.assertEqual(verify(g, walk, WALK), [Violation(Violation.INACTIVE_TIME, 0)])

    def test_missing_edge_is_inactive(self):
        """
        Stepping along a pair which isn't an edge, or off the graph, gets
        reported rather than raised.
        """
        walk = TemporalWalk(1, [(1, 2, 1), (2, 9, 1)])
        violations = verify(self.star, walk, WALK)
        self.assertIn(Violation(Violation.INACTIVE_TIME, 0), violations)
        self.assertIn(Violation(Violation.INACTIVE_TIME, 1), violations)

    def test_start_out_of_range(self):
        walk = TemporalWalk(7, [])
        self.assertIn(Violation(Violation.BROKEN_CHAIN, 0), verify(self.star, walk, WALK))

    def test_empty_walk_on_edgeless_graph(self):
        g = TemporalGraph(2, [])
        self.assertEqual(verify(g, TemporalWalk(0), TOUR), [])
        self.assertEqual(verify(TemporalGraph(0, []), TemporalWalk(None), TRAIL), [])

    def test_walk_monotonicity(self):
        """
        A valid trail is a valid local trail is a valid walk.
        """
        g = TemporalGraph.dynamic(3, [(0, 1), (1, 2), (0, 2)], 1)
        walk = TemporalWalk(0, [(0, 1, 1), (1, 2, 1), (2, 0, 1)])
        for variant in (TOUR, TRAIL, LOCAL_TOUR, LOCAL_TRAIL, CLOSED_WALK, WALK):
            self.assertEqual(verify(g, walk, variant), [])

    def test_restrict(self):
        self.assertEqual([tuple(s) for s in restrict(self.star_walk, 2)], [(2, 0, 2), (0, 3, 2)])
        self.assertEqual(restrict(self.star_walk, 3), ())

    def test_restrict_takes_first_run(self):
        """
        Out of order input: only the first run at a time comes back.
        """
        walk = TemporalWalk(1, [(1, 0, 1), (0, 2, 2), (2, 0, 1)])
        self.assertEqual(restrict(walk, 1), (Step(1, 0, 1),))
        self.assertEqual(restrict(walk, 2), (Step(0, 2, 2),))


def corruptions(graph, walk):
    """
    Yields ``(code, walk)`` for every single-step corruption of ``walk``:
    a step leaving from the wrong vertex, a step at a time its edge is
    not active, or a step earlier than the one before it.  ``code`` is
    the violation the corruption must produce.
    """
    steps = list(walk.steps)
    prev_vertex = walk.start
    for (idx, step) in enumerate(steps):
        def swap(new_step):
            return TemporalWalk(walk.start, steps[:idx] + [new_step] + steps[idx+1:])
        for other in range(graph.vertex_count):
            if other != prev_vertex:
                yield (Violation.BROKEN_CHAIN, swap(Step(other, step.v, step.time)))
        labels = graph.labels[graph.edge_id(step.u, step.v)]
        for time in range(0, graph.lifetime+2):
            if time not in labels:
                yield (Violation.INACTIVE_TIME, swap(Step(step.u, step.v, time)))
        if idx > 0:
            yield (Violation.TIME_REGRESSION, swap(Step(step.u, step.v, steps[idx-1].time-1)))
        prev_vertex = step.v


class VerifyMutationTests(TempEulerTests):
    """
    Solved witnesses, corrupted one step at a time, must all be
    rejected.
    """

    solvers = (
        (ProblemVariant.FAMILY_WALK, solve_walk_exact),
        (ProblemVariant.FAMILY_LOCAL, solve_local_trail_exact),
        (ProblemVariant.FAMILY_TRAIL, solve_trail_exact),
    )

    def witnesses(self, graph):
        for (family, solver) in self.solvers:
            for closed in (False, True):
                for strict in (False, True):
                    result = solver(graph, closed=closed, strict=strict)
                    if result.feasible:
                        yield (ProblemVariant.for_family(family, closed=closed, strict=strict), result.witness)

    def test_single_step_corruptions(self):
        witnesses = 0
        mutations = 0
        for graph in random_graphs(80, seed=21):
            for (variant, walk) in self.witnesses(graph):
                witnesses += 1
                self.assertEqual(verify(graph, walk, variant), [])
                for (code, bad) in corruptions(graph, walk):
                    mutations += 1
                    violations = verify(graph, bad, variant)
                    self.assertIn(code, [v.code for v in violations],
                        msg='%s on %r' % (variant, bad))
        self.assertGreater(witnesses, 10)
        self.assertGreater(mutations, witnesses)

    def test_restrict_round_trip(self):
        for graph in random_graphs(80, seed=22):
            for (variant, walk) in self.witnesses(graph):
                rebuilt = []
                for time in range(1, graph.lifetime+1):
                    rebuilt.extend(restrict(walk, time))
                self.assertEqual(tuple(rebuilt), walk.steps)

    @settings(deadline=None, max_examples=60)
    @given(temporal_graphs())
    def test_restrict_round_trip_property(self, graph):
        for strict in (False, True):
            result = solve_walk_exact(graph, strict=strict)
            if not result.feasible:
                continue
            rebuilt = []
            for time in range(1, graph.lifetime+1):
                rebuilt.extend(restrict(result.witness, time))
            self.assertEqual(tuple(rebuilt), result.witness.steps)


class OddCoverageTests(TempEulerTests):
    """
    The odd-vertex coverage check for lifetime 2 local tours.
    """

    def test_no_odd_vertices(self):
        g = TemporalGraph.dynamic(3, [(0, 1), (1, 2), (0, 2)], 2)
        walk = TemporalWalk(0, [(0, 1, 1), (1, 2, 1), (2, 0, 1)])
        self.assertEqual(check_odd_coverage(g, walk), {})

    def test_path(self):
        """
        Out along a-b-c at time 1 and back at time 2: both ends are
        visited at both times.
        """
        g = TemporalGraph.dynamic(3, [(0, 1), (1, 2)], 2)
        walk = TemporalWalk(0, [(0, 1, 1), (1, 2, 1), (2, 1, 2), (1, 0, 2)])
        self.assertEqual(check_odd_coverage(g, walk), {})

    def test_needs_local_tour(self):
        star = TemporalGraph.dynamic(4, [(0, 1), (0, 2), (0, 3)], 2)
        walk = TemporalWalk(1, [(1, 0, 1), (0, 2, 1), (2, 0, 2), (0, 3, 2)])
        with self.assertRaises(App.UsageError):
            check_odd_coverage(star, walk)

    def test_disconnected(self):
        """
        Two disjoint edges have no local tour, so a walk over just one of
        them is turned away.
        """
        g = TemporalGraph.dynamic(4, [(0, 1), (2, 3)], 2)
        walk = TemporalWalk(0, [(0, 1, 1), (1, 0, 2)])
        with self.assertRaises(App.UsageError):
            check_odd_coverage(g, walk)

    def test_needs_lifetime_two(self):
        g = TemporalGraph.dynamic(2, [(0, 1)], 3)
        with self.assertRaises(App.UsageError):
            check_odd_coverage(g, TemporalWalk(0, [(0, 1, 1)]))


class TrailCoverTests(TempEulerTests):
    """
    The two-trail cover checker.
    """

    def setUp(self):
        self.star = TemporalGraph.dynamic(5, [(0, 1), (0, 2), (0, 3), (0, 4)], 1)

    def test_valid_cover(self):
        trails = (TemporalWalk(1, [(1, 0, 1), (0, 2, 1)]), TemporalWalk(3, [(3, 0, 1), (0, 4, 1)]))
        self.assertEqual(verify_trail_cover(self.star, trails), [])

    def test_overlap_allowed(self):
        trails = (TemporalWalk(1, [(1, 0, 1), (0, 2, 1)]),
            TemporalWalk(1, [(1, 0, 1), (0, 3, 1)]))
        self.assertEqual(verify_trail_cover(self.star, trails), [Violation(Violation.NOT_EULERIAN, 3)])

    def test_repeat_inside_one_trail(self):
        trails = (TemporalWalk(1, [(1, 0, 1), (0, 2, 1), (2, 0, 1), (0, 3, 1)]),
            TemporalWalk(4, [(4, 0, 1)]))
        self.assertEqual(verify_trail_cover(self.star, trails),
            [Violation(Violation.EDGE_REPEAT_GLOBAL, 2)])
