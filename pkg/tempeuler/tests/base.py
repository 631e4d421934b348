from django.test import SimpleTestCase, TestCase

from dynamic_preferences.registries import global_preferences_registry

import os
import random
import itertools
import tempfile
import shutil

import networkx as nx

from hypothesis import strategies as st

from tempeuler.models import App, TemporalGraph, TemporalWalk, ProblemVariant, CnfFormula
from tempeuler.verify import verify

def graph_from_pairs(n, pairs, labels):
    """
    Convenience builder: ``labels`` is either one label set for every
    edge or a list parallel to ``pairs``.
    """
    labels = list(labels)
    if all(isinstance(label, int) for label in labels):
        return TemporalGraph(n, [(u, v, labels) for (u, v) in pairs])
    return TemporalGraph(n, [(u, v, l) for ((u, v), l) in zip(pairs, labels)])

def connected_atlas(max_vertices=4):
    """
    Every connected graph from the networkx atlas with at least one edge
    and at most ``max_vertices`` vertices, as ``(n, pairs)`` tuples.
    """
    found = []
    for graph in nx.graph_atlas_g():
        n = graph.number_of_nodes()
        if n > max_vertices:
            break
        if graph.number_of_edges() == 0 or not nx.is_connected(graph):
            continue
        found.append((n, sorted(tuple(sorted(e)) for e in graph.edges())))
    return found

def labelings(pairs, tau):
    """
    Yields every assignment of non-empty label sets within ``1..tau``
    to ``pairs``.
    """
    choices = []
    for size in range(1, tau+1):
        choices.extend(frozenset(c) for c in itertools.combinations(range(1, tau+1), size))
    for combo in itertools.product(choices, repeat=len(pairs)):
        yield list(combo)

def random_graphs(count, max_n=6, max_m=10, max_tau=3, seed=0):
    """
    A reproducible stream of random temporal graphs.
    """
    rng = random.Random(seed)
    for idx in range(count):
        n = rng.randint(2, max_n)
        pairs = list(itertools.combinations(range(n), 2))
        m = rng.randint(1, min(max_m, len(pairs)))
        tau = rng.randint(1, max_tau)
        edges = []
        for (u, v) in sorted(rng.sample(pairs, m)):
            labels = [t for t in range(1, tau+1) if rng.random() < 0.6]
            if not labels:
                labels = [rng.randint(1, tau)]
            edges.append((u, v, labels))
        yield TemporalGraph(n, edges, tau)

def random_formulas(count, n, max_m, width=3, seed=0):
    """
    Reproducible random CNF formulas, each clause over ``width``
    distinct variables.
    """
    rng = random.Random(seed)
    for idx in range(count):
        clauses = []
        for j in range(rng.randint(1, max_m)):
            variables = rng.sample(range(1, n+1), width)
            clauses.append([v if rng.random() < 0.5 else -v for v in variables])
        yield CnfFormula(n, clauses)

@st.composite
def temporal_graphs(draw, max_n=5, max_m=6, max_tau=3):
    n = draw(st.integers(min_value=2, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), min_size=1, max_size=min(max_m, len(pairs)), unique=True))
    tau = draw(st.integers(min_value=1, max_value=max_tau))
    edges = []
    for (u, v) in chosen:
        labels = draw(st.sets(st.integers(min_value=1, max_value=tau), min_size=1))
        edges.append((u, v, labels))
    return TemporalGraph(n, edges, tau)


class TempEulerTests(SimpleTestCase):
    """
    Custom SimpleTestCase class for tempeuler's library code.  Holds the
    path to our ``testdata`` fixtures and a few assertion helpers.
    """

    testdata_path = os.path.join(os.path.dirname(__file__), '..', 'testdata')

    def testdata(self, filename):
        """
        Full path to one of our fixture files, which must exist.
        """
        path = os.path.join(self.testdata_path, filename)
        if not os.path.exists(path):    # pragma: no cover
            raise Exception('Required testing file "%s" does not exist!' % (filename))
        return path

    def read_testdata(self, filename):
        with open(self.testdata(filename)) as df:
            return df.read()

    def assertValidWitness(self, graph, walk, variant):
        """
        Asserts that ``walk`` verifies cleanly as a ``variant`` witness.
        """
        self.assertNotEqual(walk, None)
        self.assertEqual(verify(graph, walk, variant), [])

    def assertViolationCodes(self, violations, codes):
        self.assertEqual(sorted(set(v.code for v in violations)), sorted(codes))


class TempEulerCommandTests(TestCase):
    """
    Custom TestCase class for our management commands.  These need the
    database for the preferences store, and get a scratch directory for
    whatever files the commands write.
    """

    testdata_path = TempEulerTests.testdata_path

    prefs = None
    scratch = None

    def setUp(self):
        """
        Run automatically at the start of any test.  Resets our
        preferences to their defaults and sets up a scratch directory.
        """
        self.prefs = global_preferences_registry.manager()
        self.prefs['tempeuler__walk_budget'] = 24
        self.prefs['tempeuler__local_trail_budget'] = 26
        self.prefs['tempeuler__trail_budget'] = 26
        self.prefs['tempeuler__cover_budget'] = 22
        self.prefs['tempeuler__node_limit'] = 2000000
        self.prefs['tempeuler__poly_tau_limit'] = 4
        self.prefs['tempeuler__threads'] = 1
        self.scratch = tempfile.mkdtemp()

    def tearDown(self):
        """
        Run automatically at the test conclusion.  Gets rid of the
        scratch directory.
        """
        shutil.rmtree(self.scratch)

    def testdata(self, filename):
        return TempEulerTests.testdata(self, filename)

    def scratch_file(self, filename):
        return os.path.join(self.scratch, filename)

    def read(self, filename):
        with open(filename) as df:
            return df.read()
