#!/usr/bin/env python
# vim: set expandtab tabstop=4 shiftwidth=4:

import json
import random
import itertools

from tempeuler.models import App, TemporalGraph, TemporalWalk, ProblemVariant, DynamicDigraph, CnfFormula

# Line-oriented text formats.  Blank lines and lines starting with '#'
# (or 'c', for DIMACS) are ignored everywhere.

NAMES_VERSION = 1

def _lines(text, comment='#'):
    """
    Yields (line number, tokens) for every meaningful line of ``text``.
    """
    for (idx, line) in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith(comment):
            continue
        yield (idx, stripped.split())

def _int(lineno, token, what):
    try:
        return int(token)
    except ValueError:
        raise App.ParseError(lineno, 'Invalid %s "%s"' % (what, token))

def parse_tg(text):
    """
    Reads a temporal graph::

        tg N M TAU
        U V LABELS      (comma-separated, or * for every timestamp)
        ...
        names           (optional section)
        ID NAME
        ...
    """
    header = None
    edges = []
    seen = {}
    names = None
    for (lineno, tokens) in _lines(text):
        if header is None:
            if len(tokens) != 4 or tokens[0] != 'tg':
                raise App.ParseError(lineno, 'Expected header "tg N M TAU"')
            header = tuple(_int(lineno, t, 'header value') for t in tokens[1:])
            (n, m, tau) = header
            if n < 0 or m < 0 or tau < 1:
                raise App.ParseError(lineno, 'Header values out of range')
            continue
        if names is not None:
            if len(tokens) != 2:
                raise App.ParseError(lineno, 'Expected "ID NAME" in names section')
            vertex = _int(lineno, tokens[0], 'vertex id')
            if vertex < 0 or vertex >= n or vertex in names:
                raise App.ParseError(lineno, 'Bad or repeated vertex id %d in names section' % (vertex))
            names[vertex] = tokens[1]
            continue
        if tokens == ['names']:
            names = {}
            continue
        if len(tokens) != 3:
            raise App.ParseError(lineno, 'Expected "U V LABELS"')
        u = _int(lineno, tokens[0], 'vertex id')
        v = _int(lineno, tokens[1], 'vertex id')
        if u == v:
            raise App.ParseError(lineno, 'Self-loop on vertex %d' % (u))
        for vertex in (u, v):
            if vertex < 0 or vertex >= n:
                raise App.ParseError(lineno, 'Vertex %d out of range' % (vertex))
        pair = (min(u, v), max(u, v))
        if pair in seen:
            raise App.ParseError(lineno, 'Duplicate edge %d-%d (first on line %d)' % (
                pair[0], pair[1], seen[pair]))
        seen[pair] = lineno
        if tokens[2] == '*':
            labels = range(1, tau+1)
        else:
            labels = [_int(lineno, t, 'label') for t in tokens[2].split(',')]
            for label in labels:
                if label < 1 or label > tau:
                    raise App.ParseError(lineno, 'Label %d outside 1..%d' % (label, tau))
        edges.append((u, v, labels))

    if header is None:
        raise App.ParseError(1, 'Missing "tg" header')
    if len(edges) != m:
        raise App.ParseError(lineno, 'Header promises %d edges, found %d' % (m, len(edges)))
    if names is not None:
        if len(names) != n:
            raise App.ParseError(lineno, 'Names section covers %d of %d vertices' % (len(names), n))
        names = [names[v] for v in range(n)]
        if len(set(names)) != n:
            raise App.ParseError(lineno, 'Names section repeats a name')
    return TemporalGraph(n, edges, tau, names)

def serialize_tg(graph):
    """
    Canonical text form: edges sorted, full label sets written as ``*``,
    names section at the end if the graph has names.
    """
    lines = ['tg %d %d %d' % (graph.vertex_count, graph.edge_count, graph.lifetime)]
    full = graph.full_labels()
    for ((u, v), labels) in zip(graph.edges, graph.labels):
        if labels == full:
            text = '*'
        else:
            text = ','.join(str(label) for label in sorted(labels))
        lines.append('%d %d %s' % (u, v, text))
    if graph.names is not None:
        lines.append('names')
        for (vertex, name) in enumerate(graph.names):
            lines.append('%d %s' % (vertex, name))
    return '\n'.join(lines) + '\n'

def parse_dimacs(text):
    """
    Reads DIMACS CNF.  Every clause line has to end with its terminating
    0; width checks are left to the reductions.
    """
    header = None
    clauses = []
    lineno = 0
    for (lineno, tokens) in _lines(text, comment='c'):
        if tokens[0] == '%':
            break
        if header is None:
            if len(tokens) != 4 or tokens[0] != 'p' or tokens[1] != 'cnf':
                raise App.ParseError(lineno, 'Expected header "p cnf N M"')
            header = (_int(lineno, tokens[2], 'variable count'), _int(lineno, tokens[3], 'clause count'))
            continue
        literals = [_int(lineno, t, 'literal') for t in tokens]
        if literals[-1] != 0 or 0 in literals[:-1]:
            raise App.ParseError(lineno, 'Clause line must end with a single terminating 0')
        for lit in literals[:-1]:
            if abs(lit) > header[0]:
                raise App.ParseError(lineno, 'Literal %d exceeds variable count %d' % (lit, header[0]))
        clauses.append(literals[:-1])
    if header is None:
        raise App.ParseError(max(lineno, 1), 'Missing "p cnf" header')
    if len(clauses) != header[1]:
        raise App.ParseError(lineno, 'Header promises %d clauses, found %d' % (header[1], len(clauses)))
    return CnfFormula(header[0], clauses)

def serialize_dimacs(formula):
    lines = ['p cnf %d %d' % (formula.variable_count, formula.clause_count)]
    for clause in formula.clauses:
        lines.append(' '.join(str(lit) for lit in clause) + ' 0')
    return '\n'.join(lines) + '\n'

def parse_wit(text):
    """
    Reads a witness document::

        wit VARIANT START K [strict]
        FROM TO TIME
        ...

    ``START`` is ``-`` for the start-less empty walk.  Returns a
    ``(ProblemVariant, TemporalWalk)`` tuple.
    """
    header = None
    steps = []
    lineno = 0
    for (lineno, tokens) in _lines(text):
        if header is None:
            if len(tokens) not in (4, 5) or tokens[0] != 'wit':
                raise App.ParseError(lineno, 'Expected header "wit VARIANT START K"')
            ordering = ProblemVariant.NONDECREASING
            if len(tokens) == 5:
                if tokens[4] != 'strict':
                    raise App.ParseError(lineno, 'Unknown ordering "%s"' % (tokens[4]))
                ordering = ProblemVariant.STRICT
            try:
                variant = ProblemVariant(tokens[1], ordering)
            except App.ValidationError as e:
                raise App.ParseError(lineno, str(e))
            if tokens[2] == '-':
                start = None
            else:
                start = _int(lineno, tokens[2], 'start vertex')
            header = (variant, start, _int(lineno, tokens[3], 'step count'))
            continue
        if len(tokens) != 3:
            raise App.ParseError(lineno, 'Expected "FROM TO TIME"')
        steps.append(tuple(_int(lineno, t, 'step value') for t in tokens))
    if header is None:
        raise App.ParseError(max(lineno, 1), 'Missing "wit" header')
    if len(steps) != header[2]:
        raise App.ParseError(lineno, 'Header promises %d steps, found %d' % (header[2], len(steps)))
    return (header[0], TemporalWalk(header[1], steps))

def serialize_wit(variant, walk):
    start = '-' if walk.start is None else str(walk.start)
    header = 'wit %s %s %d' % (variant.kind, start, len(walk.steps))
    if variant.strict:
        header += ' strict'
    lines = [header]
    for step in walk.steps:
        lines.append('%d %d %d' % (step.u, step.v, step.time))
    return '\n'.join(lines) + '\n'

def parse_ddg(text):
    """
    Reads a dynamic digraph: ``ddg N M`` then ``TAIL HEAD TRANSIT`` lines.
    """
    header = None
    arcs = []
    lineno = 0
    for (lineno, tokens) in _lines(text):
        if header is None:
            if len(tokens) != 3 or tokens[0] != 'ddg':
                raise App.ParseError(lineno, 'Expected header "ddg N M"')
            header = (_int(lineno, tokens[1], 'vertex count'), _int(lineno, tokens[2], 'arc count'))
            continue
        if len(tokens) != 3:
            raise App.ParseError(lineno, 'Expected "TAIL HEAD TRANSIT"')
        (tail, head, transit) = [_int(lineno, t, 'arc value') for t in tokens]
        for vertex in (tail, head):
            if vertex < 0 or vertex >= header[0]:
                raise App.ParseError(lineno, 'Vertex %d out of range' % (vertex))
        arcs.append((tail, head, transit))
    if header is None:
        raise App.ParseError(max(lineno, 1), 'Missing "ddg" header')
    if len(arcs) != header[1]:
        raise App.ParseError(lineno, 'Header promises %d arcs, found %d' % (header[1], len(arcs)))
    return DynamicDigraph(header[0], arcs)

def serialize_ddg(digraph):
    lines = ['ddg %d %d' % (digraph.vertex_count, len(digraph.arcs))]
    for (tail, head, transit) in digraph.arcs:
        lines.append('%d %d %d' % (tail, head, transit))
    return '\n'.join(lines) + '\n'

def serialize_names(names, kind=None):
    """
    JSON-lines side table: a header record, then one ``{"id", "name"}``
    record per vertex.
    """
    header = {'v': NAMES_VERSION, 'count': len(names)}
    if kind is not None:
        header['kind'] = kind
    lines = [json.dumps(header, sort_keys=True)]
    for (vertex, name) in enumerate(names):
        lines.append(json.dumps({'id': vertex, 'name': name}, sort_keys=True))
    return '\n'.join(lines) + '\n'

def parse_names(text):
    """
    Reads a names side table back into a list indexed by vertex id.
    """
    header = None
    names = {}
    lineno = 0
    for (lineno, line) in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except ValueError as e:
            raise App.ParseError(lineno, 'Invalid JSON: %s' % (e))
        if header is None:
            if record.get('v') != NAMES_VERSION or 'count' not in record:
                raise App.ParseError(lineno, 'Expected names header record')
            header = record
            continue
        if 'id' not in record or 'name' not in record or record['id'] in names:
            raise App.ParseError(lineno, 'Expected a new {"id", "name"} record')
        names[record['id']] = record['name']
    if header is None:
        raise App.ParseError(max(lineno, 1), 'Missing names header record')
    if sorted(names.keys()) != list(range(header['count'])):
        raise App.ParseError(lineno, 'Names do not cover ids 0..%d' % (header['count']-1))
    return [names[v] for v in range(header['count'])]

def gen_random(n, target_m, tau, density=0.5, seed=0):
    """
    Seeded random temporal graph: ``target_m`` distinct edges drawn
    uniformly, each timestamp kept with probability ``density`` (an
    empty label set is drawn again).  ``density`` 1 gives a
    dynamic-based graph.
    """
    if n < 1 or tau < 1 or target_m < 0:
        raise App.UsageError('n and tau must be positive and m non-negative')
    if density <= 0 or density > 1:
        raise App.UsageError('Density must be in (0, 1], not %s' % (density))
    pairs = list(itertools.combinations(range(n), 2))
    if target_m > len(pairs):
        raise App.UsageError('%d edges do not fit on %d vertices' % (target_m, n))
    rng = random.Random(seed)
    edges = []
    for (u, v) in sorted(rng.sample(pairs, target_m)):
        labels = []
        while not labels:
            labels = [t for t in range(1, tau+1) if rng.random() < density]
        edges.append((u, v, labels))
    return TemporalGraph(n, edges, tau)
