"""Built-in property suite over a small graph corpus.

Every check is seeded and therefore byte-for-byte reproducible; the report
carries no timing or environment data. One row per (check, graph) pair.
"""

from __future__ import annotations

import random
from itertools import product

from .calculus import (
    chi_expansion,
    clique_cutoff,
    dchi,
    dchi_chain,
    exterior_derivative,
    iterated_wedge,
    scalar_wedge,
    wedge,
)
from .cliques import CliqueComplex
from .cohomology import betti, coboundary_matrix, euler_characteristic, matrix_product
from .forms import constant, random_form
from .graph import Graph
from .uniqueness import check_axioms, derivative_operator, mutant_catalogue, replay_witness

SELFTEST_GRAPHS = ("K3", "K4", "K5", "C4", "C5", "C6", "petersen", "octahedron")

BETTI_GOLDENS = {
    "C4": (1, 1),
    "K5": (1, 0, 0, 0, 0),
    "octahedron": (1, 0, 1),
    "petersen": (1, 6),
}


def _degrees(cx, cap=3):
    return range(min(cx.top_cardinality, cap + 1))


def _check_derivative_identities(name, cx, rng, trials):
    """d^2 = 0, linearity, anticommutativity, the graded product rule."""
    for k in _degrees(cx):
        for _ in range(trials):
            a = random_form(cx, k, rng)
            if not exterior_derivative(exterior_derivative(a)).is_zero():
                return False
            b = random_form(cx, k, rng)
            lhs = exterior_derivative(3 * a - b)
            if lhs != 3 * exterior_derivative(a) - exterior_derivative(b):
                return False
    pairs = [
        (r, s) for r, s in product(_degrees(cx), repeat=2) if r + s + 2 <= cx.max_card
    ]
    for r, s in pairs:
        for _ in range(trials):
            a = random_form(cx, r, rng)
            b = random_form(cx, s, rng)
            sign = -1 if (r * s) % 2 else 1
            if wedge(a, b) != sign * wedge(b, a):
                return False
            lhs = exterior_derivative(wedge(a, b))
            dsign = -1 if r % 2 else 1
            rhs = wedge(exterior_derivative(a), b) + dsign * wedge(a, exterior_derivative(b))
            if lhs != rhs:
                return False
    return True


def _check_scalar_wedge(name, cx, rng, trials):
    for k in _degrees(cx):
        for _ in range(trials):
            f = random_form(cx, 0, rng)
            a = random_form(cx, k, rng)
            if scalar_wedge(f, a) != wedge(f, a):
                return False
    return True


def _check_chain_closed_form(name, cx, rng, trials):
    n = cx.graph.n
    tuples = []
    for length in (1, 2, 3):
        everything = list(product(range(n), repeat=length))
        if len(everything) > 40 * trials:
            everything = [
                tuple(rng.randrange(n) for _ in range(length)) for _ in range(40 * trials)
            ]
        tuples.extend(everything)
    for vs in tuples:
        direct = dchi_chain(cx, vs)
        nested = iterated_wedge([dchi(cx, v) for v in vs])
        if direct != nested:
            return False
    return True


def _check_expansion(name, cx, rng, trials):
    for k in range(1, min(cx.top_cardinality, 4)):
        for _ in range(trials):
            a = random_form(cx, k, rng)
            if chi_expansion(a) != a:
                return False
    return True


def _check_cutoff(name, cx, rng, trials):
    for k in range(cx.top_cardinality - 1):
        cliques = cx.level(k + 2)
        for _ in range(trials):
            c = cliques[rng.randrange(len(cliques))]
            a = random_form(cx, k, rng)
            localized = exterior_derivative(scalar_wedge(clique_cutoff(cx, c), a))
            if localized.evaluate(c) != exterior_derivative(a).evaluate(c):
                return False
    return True


def _check_betti(name, cx, rng, trials):
    values = betti(cx)
    if name in BETTI_GOLDENS and values != BETTI_GOLDENS[name]:
        return False
    if sum((-1) ** k * b for k, b in enumerate(values)) != euler_characteristic(cx):
        return False
    for k in range(cx.top_cardinality - 1):
        upper = coboundary_matrix(cx, k + 1)
        lower = coboundary_matrix(cx, k)
        if any(any(row) for row in matrix_product(upper.data, lower.data)):
            return False
    return True


def _check_uniqueness(name, cx, rng, trials):
    report = check_axioms(derivative_operator(), cx, trials=trials, seed=rng.randrange(2**30))
    return report.passed


def _check_mutants(name, cx, rng, trials):
    for mutant in mutant_catalogue(cx):
        report = check_axioms(mutant, cx, trials=trials, seed=rng.randrange(2**30))
        if report.passed:
            return False
        reproduced = any(
            replay_witness(mutant, cx, check_name, result.witness)
            for check_name, result in report.failures()
            if result.witness is not None
        )
        if not reproduced:
            return False
    return True


def _closed_random_form(cx, k, rng):
    """A random closed form: constants at degree 0, derivatives of random
    forms in between, anything at the top degree."""
    if k == 0:
        return constant(cx, rng.randint(-9, 9) or 1)
    if k >= cx.top_cardinality - 1:
        return random_form(cx, k, rng)
    return exterior_derivative(random_form(cx, k - 1, rng))


def _check_associativity(name, cx, rng, trials):
    top = cx.top_cardinality
    combos = [
        (r, s, t) for r, s, t in product(_degrees(cx), repeat=3) if r + s + t + 1 <= top
    ]
    for r, s, t in combos:
        for _ in range(max(1, trials // 2)):
            a = _closed_random_form(cx, r, rng)
            b = _closed_random_form(cx, s, rng)
            c = _closed_random_form(cx, t, rng)
            if wedge(wedge(a, b), c) != wedge(a, wedge(b, c)):
                return False
    return True


_CHECKS = (
    ("derivative-identities", _check_derivative_identities),
    ("scalar-wedge-mean-rule", _check_scalar_wedge),
    ("chain-wedge-closed-form", _check_chain_closed_form),
    ("coordinate-expansion-identity", _check_expansion),
    ("cutoff-localization", _check_cutoff),
    ("betti-and-coboundary", _check_betti),
    ("uniqueness-certificate", _check_uniqueness),
)

_EXTRAS = (
    ("wedge-associativity-closed-forms", "octahedron", _check_associativity),
    ("mutant-rejection", "K4", _check_mutants),
)


def run_selftest(seed=0, trials=4):
    """Run every check on every corpus graph; returns a deterministic report."""
    complexes = {name: CliqueComplex.full(Graph.builtin(name)) for name in SELFTEST_GRAPHS}
    checks = []
    for index, (check_name, fn) in enumerate(_CHECKS):
        for gindex, gname in enumerate(SELFTEST_GRAPHS):
            rng = random.Random(seed * 1000003 + index * 1009 + gindex)
            ok = fn(gname, complexes[gname], rng, trials)
            checks.append(
                {"name": check_name, "graph": gname, "status": "pass" if ok else "fail"}
            )
    for offset, (check_name, gname, fn) in enumerate(_EXTRAS):
        rng = random.Random(seed * 1000003 + (len(_CHECKS) + offset) * 1009)
        ok = fn(gname, complexes[gname], rng, trials)
        checks.append({"name": check_name, "graph": gname, "status": "pass" if ok else "fail"})
    passed = all(c["status"] == "pass" for c in checks)
    return {"seed": seed, "trials": trials, "checks": checks, "passed": passed}


def render_text(report):
    width = max(len(c["name"]) for c in report["checks"])
    lines = [f"selftest (seed={report['seed']}, trials={report['trials']})"]
    for c in report["checks"]:
        lines.append(f"{c['status'].upper():5s} {c['name']:<{width}s} {c['graph']}")
    total = len(report["checks"])
    failed = sum(1 for c in report["checks"] if c["status"] != "pass")
    if failed:
        lines.append(f"selftest: {failed} of {total} checks FAILED")
    else:
        lines.append(f"selftest: all {total} checks passed")
    return "\n".join(lines) + "\n"
