from .base import TempEulerTests, graph_from_pairs

from tempeuler.models import App, TemporalGraph, TemporalWalk, ProblemVariant, DynamicDigraph
from tempeuler import poly, static

WALK = ProblemVariant(ProblemVariant.WALK)
CLOSED_WALK = ProblemVariant(ProblemVariant.CLOSED_WALK)
TRAIL = ProblemVariant(ProblemVariant.TRAIL)
TOUR = ProblemVariant(ProblemVariant.TOUR)

class ComponentChainTests(TempEulerTests):
    """
    The component-chain walk solver.
    """

    def test_ordered_path(self):
        """
        1-2 is only active at time 1 and 0-1 only at time 2, so the
        handoff has to be vertex 1.
        """
        g = graph_from_pairs(3, [(0, 1), (1, 2)], [[2], [1]])
        chain = poly.solve_walk_fixed_tau(g)
        self.assertEqual(chain.handoffs, (1,))
        self.assertEqual(chain.times, (1, 2))
        poly.check_chain(g, chain)
        walk = poly.chain_to_walk(g, chain)
        self.assertValidWitness(g, walk, WALK)
        self.assertEqual(walk.start, 1)

    def test_infeasible_gap(self):
        g = graph_from_pairs(4, [(0, 1), (1, 2), (2, 3)], [[2], [1], [2]])
        self.assertEqual(poly.solve_walk_fixed_tau(g), None)

    def test_empty_snapshots_skipped(self):
        """
        Timestamps 2 and 3 are empty; the chain only covers 1 and 4.
        """
        g = TemporalGraph(3, [(0, 1, [1]), (1, 2, [4])], 4)
        chain = poly.solve_walk_fixed_tau(g)
        self.assertEqual(chain.times, (1, 4))
        self.assertEqual(len(chain), 2)
        self.assertValidWitness(g, poly.chain_to_walk(g, chain), WALK)

    def test_single_snapshot(self):
        g = TemporalGraph.dynamic(4, [(0, 1), (1, 2), (1, 3)], 1)
        chain = poly.solve_walk_fixed_tau(g)
        self.assertEqual(chain.handoffs, ())
        self.assertValidWitness(g, poly.chain_to_walk(g, chain), WALK)

    def test_single_snapshot_disconnected(self):
        g = TemporalGraph.dynamic(4, [(0, 1), (2, 3)], 1)
        self.assertEqual(poly.solve_walk_fixed_tau(g), None)

    def test_edgeless(self):
        g = TemporalGraph(3, [])
        chain = poly.solve_walk_fixed_tau(g)
        self.assertEqual(len(chain), 0)
        walk = poly.chain_to_walk(g, chain)
        self.assertEqual(walk, TemporalWalk(0))

    def test_disconnected_over_time(self):
        """
        Two disjoint edges at different times can't be joined by a walk.
        """
        g = graph_from_pairs(4, [(0, 1), (2, 3)], [[1], [2]])
        self.assertEqual(poly.solve_walk_fixed_tau(g), None)

    def test_lexicographic_handoffs(self):
        """
        Every vertex of a triangle works as a handoff; the lowest wins.
        """
        g = TemporalGraph.dynamic(3, [(0, 1), (1, 2), (0, 2)], 3)
        chain = poly.solve_walk_fixed_tau(g)
        self.assertEqual(chain.handoffs, (0, 0))

    def test_threads_same_chain(self):
        g = graph_from_pairs(5, [(0, 1), (1, 2), (2, 3), (3, 4)], [[1], [1, 2], [2, 3], [3]])
        self.assertEqual(poly.solve_walk_fixed_tau(g, threads=4), poly.solve_walk_fixed_tau(g))

    def test_retlines(self):
        retlines = []
        g = TemporalGraph.dynamic(4, [(0, 1), (2, 3)], 1)
        poly.solve_walk_fixed_tau(g, retlines=retlines)
        self.assertEqual(retlines[-1][0], App.STATUS_INFO)

    def test_check_chain_rejects(self):
        g = graph_from_pairs(3, [(0, 1), (1, 2)], [[2], [1]])
        chain = poly.solve_walk_fixed_tau(g)
        comps = static.connected_components(g.snapshot(1))
        wrong = poly.ComponentChain((0,), (comps[0], chain.components[1]), (1, 2))
        with self.assertRaises(App.UsageError):
            poly.check_chain(g, wrong)
        with self.assertRaises(App.UsageError):
            poly.check_chain(g, poly.ComponentChain((1,), chain.components, (1, 3)))


class DynamicSolverTests(TempEulerTests):
    """
    Walks and trails on dynamic-based graphs.
    """

    def test_walk_connected(self):
        g = TemporalGraph.dynamic(5, [(0, 1), (1, 2), (1, 3), (3, 4)], 3)
        walk = poly.solve_dynamic_walk(g)
        self.assertValidWitness(g, walk, WALK)
        self.assertValidWitness(g, walk, CLOSED_WALK)
        self.assertEqual(set(step.time for step in walk), set([1]))

    def test_walk_isolated_vertices_fine(self):
        g = TemporalGraph.dynamic(5, [(1, 2), (2, 3)], 2)
        self.assertValidWitness(g, poly.solve_dynamic_walk(g), WALK)

    def test_walk_disconnected(self):
        g = TemporalGraph.dynamic(4, [(0, 1), (2, 3)], 2)
        self.assertEqual(poly.solve_dynamic_walk(g), None)

    def test_trail(self):
        g = TemporalGraph.dynamic(3, [(0, 1), (1, 2)], 2)
        self.assertValidWitness(g, poly.solve_dynamic_trail(g), TRAIL)
        self.assertEqual(poly.solve_dynamic_trail(g, closed=True), None)

    def test_tour(self):
        g = TemporalGraph.dynamic(4, [(0, 1), (1, 2), (2, 3), (0, 3)], 2)
        self.assertValidWitness(g, poly.solve_dynamic_trail(g, closed=True), TOUR)

    def test_trail_star(self):
        g = TemporalGraph.dynamic(4, [(0, 1), (0, 2), (0, 3)], 2)
        self.assertEqual(poly.solve_dynamic_trail(g), None)

    def test_edgeless(self):
        g = TemporalGraph(2, [], 2)
        self.assertEqual(poly.solve_dynamic_walk(g), TemporalWalk(0))
        self.assertEqual(poly.solve_dynamic_trail(g, closed=True), TemporalWalk(0))

    def test_requires_dynamic(self):
        g = graph_from_pairs(3, [(0, 1), (1, 2)], [[1, 2], [1]])
        with self.assertRaises(App.UsageError):
            poly.solve_dynamic_walk(g)
        with self.assertRaises(App.UsageError):
            poly.solve_dynamic_trail(g)


class OrlinTests(TempEulerTests):
    """
    The Eulerian test for dynamic digraphs.  Each condition gets knocked
    out on its own, in a handful of shapes.
    """

    feasible = [
        (2, [(0, 1, 1), (1, 0, 0)]),
        (2, [(0, 1, -1), (1, 0, 0)]),
        (1, [(0, 0, 1)]),
        (1, [(0, 0, -1)]),
        (3, [(0, 1, 2), (1, 2, -1), (2, 0, 0)]),
        (3, [(0, 1, 0), (1, 2, 0), (2, 0, 1)]),
        (4, [(0, 1, 1), (1, 0, 0)]),
        (3, [(0, 1, 3), (1, 0, -2), (1, 2, 0), (2, 1, 0)]),
        (2, [(0, 1, 1), (0, 1, 1), (1, 0, -1), (1, 0, 0)]),
        (4, [(0, 1, 5), (1, 2, -5), (2, 3, 1), (3, 0, 0)]),
    ]

    unbalanced = [
        (2, [(0, 1, 1)]),
        (2, [(0, 1, 1), (0, 1, 0)]),
        (3, [(0, 1, 1), (1, 2, 0)]),
        (3, [(0, 1, 1), (1, 0, 0), (1, 2, 0)]),
        (2, [(0, 1, 0), (0, 1, 0), (1, 0, 1)]),
        (3, [(0, 1, 0), (1, 2, 0), (2, 0, 1), (0, 2, 0)]),
        (4, [(0, 1, 1), (2, 3, 0)]),
        (2, [(1, 0, 1)]),
    ]

    disconnected = [
        (4, [(0, 1, 1), (1, 0, 0), (2, 3, 0), (3, 2, 0)]),
        (2, [(0, 0, 1), (1, 1, 0)]),
        (4, [(0, 0, 1), (1, 2, 0), (2, 1, 0)]),
        (6, [(0, 1, 1), (1, 0, 0), (2, 3, 0), (3, 2, 0), (4, 5, 0), (5, 4, 0)]),
        (3, [(0, 0, 1), (1, 1, 0), (2, 2, 0)]),
        (4, [(0, 1, 0), (1, 0, 0), (2, 3, 1), (3, 2, 0)]),
        (5, [(0, 0, 1), (3, 4, 0), (4, 3, 0)]),
    ]

    bad_sum = [
        (2, [(0, 1, 0), (1, 0, 0)]),
        (2, [(0, 1, 1), (1, 0, 1)]),
        (2, [(0, 1, -1), (1, 0, -1)]),
        (1, [(0, 0, 2)]),
        (1, [(0, 0, 0)]),
        (3, [(0, 1, 1), (1, 2, 1), (2, 0, 1)]),
        (3, [(0, 1, 5), (1, 2, -2), (2, 0, 0)]),
        (2, [(0, 1, 1), (1, 0, 0), (0, 1, 1), (1, 0, 0)]),
    ]

    def check(self, cases, feasible, condition):
        for (n, arcs) in cases:
            result = poly.orlin_check(DynamicDigraph(n, arcs))
            self.assertEqual(result.feasible, feasible, msg=repr(arcs))
            self.assertEqual(result.failed_condition, condition, msg=repr(arcs))

    def test_feasible(self):
        self.check(self.feasible, True, None)

    def test_unbalanced(self):
        self.check(self.unbalanced, False, 1)

    def test_disconnected(self):
        self.check(self.disconnected, False, 2)

    def test_bad_sum(self):
        self.check(self.bad_sum, False, 3)

    def test_reversal_negates(self):
        """
        Reversing every arc and negating every transit keeps the answer.
        """
        for (n, arcs) in self.feasible + self.bad_sum + self.disconnected:
            forward = poly.orlin_check(DynamicDigraph(n, arcs))
            backward = poly.orlin_check(DynamicDigraph(n, [(h, t, -x) for (t, h, x) in arcs]))
            self.assertEqual(forward.feasible, backward.feasible)
            self.assertEqual(forward.failed_condition, backward.failed_condition)

    def test_reason_text(self):
        result = poly.orlin_check(DynamicDigraph(2, [(0, 1, 0), (1, 0, 0)]))
        self.assertEqual(result.reason, 'transit times sum to 0')
