"""Axiom checking and equality certification for candidate derivatives.

Any linear operator that raises degree by one, squares to zero, satisfies
the graded product rule, and agrees with the exterior derivative on 0-forms
is the exterior derivative. On a finite complex that statement is checkable:
sampled axiom checks plus an exhaustive basis-form comparison certify the
equality, and proof_trace replays the reduction argument behind it, link by
link, in exact arithmetic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .calculus import (
    clique_cutoff,
    exterior_derivative,
    expansion_terms,
    scalar_wedge,
    wedge,
)
from .errors import CapacityError, DomainError, GraphFormsError, ParseError
from .forms import Form, chi, random_form


class Operator:
    """A named candidate operator; apply maps a Form to a Form."""

    def __init__(self, name, fn=None):
        self.name = name
        self._fn = fn

    def apply(self, form):
        if self._fn is None:
            raise NotImplementedError("Operator subclass must define apply")
        return self._fn(form)

    def __repr__(self):
        return f"<Operator {self.name}>"


def derivative_operator():
    return Operator("exterior-derivative", exterior_derivative)


class TableOperator(Operator):
    """Operator defined by images of basis forms, extended linearly.

    Degrees or basis cliques missing from the table map to zero, keeping the
    operator total: a wrong or incomplete table fails the axiom checks
    instead of crashing them.
    """

    def __init__(self, complex, tables, name="operator-table"):
        super().__init__(name)
        self._complex = complex
        self._tables = dict(tables)
        self._image_degree = {}
        for k, table in self._tables.items():
            degrees = {img.degree for img in table.values()}
            if len(degrees) > 1:
                raise ParseError(
                    f"operator table degree {k} has images of mixed degrees {sorted(degrees)}"
                )
            if degrees:
                self._image_degree[k] = degrees.pop()

    def apply(self, form):
        k = form.degree
        table = self._tables.get(k, {})
        total = Form(self._complex, self._image_degree.get(k, k + 1))
        for clique, value in form.entries():
            image = table.get(clique)
            if image is not None:
                total = total + value * image
        return total

    @classmethod
    def from_json(cls, complex, obj, name="operator-table"):
        if not isinstance(obj, dict) or not isinstance(obj.get("degrees"), dict):
            raise ParseError("operator JSON must be an object with a 'degrees' object")
        graph = complex.graph
        tables = {}
        for key, entries in obj["degrees"].items():
            if not (isinstance(key, str) and key.isdigit()):
                raise ParseError(f"degree keys must be decimal strings, got {key!r}")
            k = int(key)
            if not isinstance(entries, list):
                raise ParseError(f"degree {key!r} entries must be a list")
            table = {}
            for ent in entries:
                if not isinstance(ent, dict) or "basis_clique" not in ent or "image" not in ent:
                    raise ParseError(
                        f"operator entry needs 'basis_clique' and 'image', got {ent!r}"
                    )
                labs = ent["basis_clique"]
                if not isinstance(labs, list):
                    raise ParseError(f"basis_clique must be a list of labels, got {labs!r}")
                ids = tuple(sorted(graph.id_of(lab) for lab in labs))
                if len(set(ids)) != len(ids):
                    raise ParseError(f"repeated vertex in basis clique {labs!r}")
                if len(ids) != k + 1:
                    raise ParseError(
                        f"basis clique {labs!r} has arity {len(ids)}, degree {k} needs {k + 1}"
                    )
                if complex.index_of(ids) is None:
                    raise ParseError(f"basis clique {labs!r} is not a clique of the graph")
                if ids in table:
                    raise ParseError(f"duplicate basis clique {labs!r} at degree {k}")
                table[ids] = Form.from_json(complex, ent["image"])
            tables[k] = table
        return cls(complex, tables, name=name)

    def to_json(self):
        graph = self._complex.graph
        return {
            "degrees": {
                str(k): [
                    {
                        "basis_clique": [graph.label(v) for v in clique],
                        "image": image.to_json(),
                    }
                    for clique, image in sorted(table.items())
                ]
                for k, table in sorted(self._tables.items())
            }
        }


def operator_table_json(op, complex, degrees=None):
    """Tabulate an operator's images on all basis forms as operator JSON."""
    if degrees is None:
        degrees = range(complex.top_cardinality)
    graph = complex.graph
    out = {}
    for k in degrees:
        rows = []
        for clique in complex.level(k + 1):
            image = op.apply(Form.unit(complex, clique))
            rows.append(
                {
                    "basis_clique": [graph.label(v) for v in clique],
                    "image": image.to_json(),
                }
            )
        out[str(k)] = rows
    return {"degrees": out}


# -- axiom checking ----------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "skipped"
    witness: dict | None = None

    @property
    def ok(self):
        return self.status == "pass"

    def to_json(self):
        return {"status": self.status, "witness": self.witness}


CHECK_NAMES = (
    "degree_raising",
    "squares_to_zero",
    "leibniz",
    "agrees_on_functions",
    "linearity_sampled",
    "equality_with_d",
)


@dataclass
class AxiomReport:
    operator: str
    seed: int
    trials: int
    degree_raising: CheckResult
    squares_to_zero: CheckResult
    leibniz: CheckResult
    agrees_on_functions: CheckResult
    linearity_sampled: CheckResult
    equality_with_d: CheckResult

    def checks(self):
        for name in CHECK_NAMES:
            yield name, getattr(self, name)

    @property
    def passed(self):
        return all(result.ok for _, result in self.checks())

    def failures(self):
        return [(name, r) for name, r in self.checks() if r.status == "fail"]

    def to_json(self):
        return {
            "operator": self.operator,
            "seed": self.seed,
            "trials": self.trials,
            "passed": self.passed,
            "checks": {name: result.to_json() for name, result in self.checks()},
        }

    def render_text(self):
        lines = [f"operator: {self.operator} (seed={self.seed}, trials={self.trials})"]
        for name, result in self.checks():
            lines.append(f"{result.status.upper():7s} {name}")
            if result.status == "fail" and result.witness:
                keys = ", ".join(sorted(result.witness))
                lines.append(f"        witness fields: {keys}")
        lines.append("verdict: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines) + "\n"


def _safe_apply(op, form):
    try:
        return op.apply(form), None
    except Exception as e:  # operator code is untrusted
        return None, f"{type(e).__name__}: {e}"


def _image_problem(out, err, complex, degree):
    """Description of what is wrong with an operator output, or None."""
    if err is not None:
        return {"error": err}
    if not isinstance(out, Form):
        return {"output_type": type(out).__name__}
    if out.complex is not complex:
        return {"output_complex": "different complex"}
    if out.degree != degree + 1:
        return {"output_degree": out.degree, "expected_degree": degree + 1}
    return None


def _shrink_one(still_fails, form):
    """Cut a failing witness down to a single-entry form when possible."""
    for key, value in form.entries():
        candidate = Form(form.complex, form.degree, {key: value})
        if still_fails(candidate):
            return candidate
    return form


def _shrink_pair(still_fails, a, b):
    best_a = a
    for key, value in a.entries():
        candidate = Form(a.complex, a.degree, {key: value})
        if still_fails(candidate, b):
            best_a = candidate
            break
    best_b = b
    for key, value in b.entries():
        candidate = Form(b.complex, b.degree, {key: value})
        if still_fails(best_a, candidate):
            best_b = candidate
            break
    return best_a, best_b


def _squares_violation(op, a):
    once, err = _safe_apply(op, a)
    if err is not None or not isinstance(once, Form):
        return "first application failed" if err is None else f"first application: {err}"
    twice, err = _safe_apply(op, once)
    if err is not None or not isinstance(twice, Form):
        return "second application failed" if err is None else f"second application: {err}"
    if not twice.is_zero():
        clique, value = twice.entries()[0]
        return f"square is nonzero: {value} at clique {clique}"
    return None


def _leibniz_violation(op, a, b):
    try:
        product = wedge(a, b)
        da, e1 = _safe_apply(op, a)
        db, e2 = _safe_apply(op, b)
        dp, e3 = _safe_apply(op, product)
        for err in (e1, e2, e3):
            if err is not None:
                return f"apply failed: {err}"
        if not all(isinstance(x, Form) for x in (da, db, dp)):
            return "apply returned a non-form"
        sign = -1 if a.degree % 2 else 1
        rhs = wedge(da, b) + sign * wedge(a, db)
        if dp == rhs:
            return None
        if dp.degree == rhs.degree:
            where = (dp - rhs).support()[0]
            return f"sides differ at clique {where}"
        return f"sides have degrees {dp.degree} and {rhs.degree}"
    except GraphFormsError as e:
        return f"identity not computable: {e}"


def _function_violation(op, f):
    out, err = _safe_apply(op, f)
    if err is not None:
        return f"apply failed: {err}"
    expected = exterior_derivative(f)
    if not isinstance(out, Form) or out != expected:
        return "disagrees with the derivative on a 0-form"
    return None


def _linearity_violation(op, a, b, ca, cb):
    try:
        combo = ca * a + cb * b
        lhs, e1 = _safe_apply(op, combo)
        ra, e2 = _safe_apply(op, a)
        rb, e3 = _safe_apply(op, b)
        for err in (e1, e2, e3):
            if err is not None:
                return f"apply failed: {err}"
        if not all(isinstance(x, Form) for x in (lhs, ra, rb)):
            return "apply returned a non-form"
        rhs = ca * ra + cb * rb
        if lhs != rhs:
            return "not linear on the sampled combination"
        return None
    except GraphFormsError as e:
        return f"identity not computable: {e}"


def _equality_violation(op, complex, clique):
    basis = Form.unit(complex, clique)
    out, err = _safe_apply(op, basis)
    if err is not None:
        return {"error": err}
    expected = exterior_derivative(basis)
    if not isinstance(out, Form) or out != expected:
        return {
            "expected": expected.to_json(),
            "got": out.to_json() if isinstance(out, Form) else repr(out),
        }
    return None


def certify_equality(op, complex):
    """Compare the operator with the derivative on every basis form.

    Exhaustive over all degrees with cliques present; linearity then extends
    the equality to every form.
    """
    graph = complex.graph
    for k in range(complex.top_cardinality):
        for clique in complex.level(k + 1):
            problem = _equality_violation(op, complex, clique)
            if problem is not None:
                witness = {
                    "degree": k,
                    "basis_clique": [graph.label(v) for v in clique],
                }
                witness.update(problem)
                return CheckResult("equality_with_d", "fail", witness)
    return CheckResult("equality_with_d", "pass")


def check_axioms(op, complex, trials=16, seed=0):
    """Run the four derivation axioms plus sampled linearity on an operator.

    Axiom order: degree raising, square to zero, graded product rule,
    agreement with the derivative on 0-forms. The 0-form agreement check is
    exhaustive over the characteristic basis plus `trials` random 0-forms;
    the others use `trials` seeded random forms per degree. When all pass,
    the basis-form equality certificate fills the final field; otherwise it
    is skipped. Every failure carries a witness that replay_witness can
    re-evaluate independently.
    """
    if complex.graph.n < 1:
        raise DomainError("axiom checking needs at least one vertex")
    if trials < 1:
        raise DomainError("trials must be at least 1")
    top = complex.top_cardinality
    needed = max(3, top + 1)
    if complex.max_card < needed:
        raise CapacityError(
            f"axiom checking needs max_card >= {needed} (built with {complex.max_card})",
            required_max_card=needed,
        )
    rng = random.Random(seed)
    degrees = list(range(top))

    def check_degree_raising():
        for k in degrees:
            for _ in range(trials):
                a = random_form(complex, k, rng)
                out, err = _safe_apply(op, a)
                problem = _image_problem(out, err, complex, k)
                if problem is not None:

                    def bad(form):
                        o, e = _safe_apply(op, form)
                        return _image_problem(o, e, complex, form.degree) is not None

                    small = _shrink_one(bad, a)
                    witness = {"degree": k, "input": small.to_json()}
                    witness.update(problem)
                    return CheckResult("degree_raising", "fail", witness)
        return CheckResult("degree_raising", "pass")

    def check_squares():
        for k in degrees:
            for _ in range(trials):
                a = random_form(complex, k, rng)
                problem = _squares_violation(op, a)
                if problem is not None:
                    small = _shrink_one(lambda f: _squares_violation(op, f) is not None, a)
                    return CheckResult(
                        "squares_to_zero",
                        "fail",
                        {
                            "degree": k,
                            "input": small.to_json(),
                            "detail": _squares_violation(op, small) or problem,
                        },
                    )
        return CheckResult("squares_to_zero", "pass")

    def check_leibniz():
        for r in degrees:
            partners = [s for s in degrees if r + s + 2 <= complex.max_card]
            if not partners:
                continue
            for _ in range(trials):
                s = rng.choice(partners)
                a = random_form(complex, r, rng)
                b = random_form(complex, s, rng)
                problem = _leibniz_violation(op, a, b)
                if problem is not None:
                    a, b = _shrink_pair(
                        lambda x, y: _leibniz_violation(op, x, y) is not None, a, b
                    )
                    return CheckResult(
                        "leibniz",
                        "fail",
                        {
                            "alpha": a.to_json(),
                            "beta": b.to_json(),
                            "detail": _leibniz_violation(op, a, b) or problem,
                        },
                    )
        return CheckResult("leibniz", "pass")

    def check_functions():
        candidates = [chi(complex, v) for v in range(complex.graph.n)]
        candidates.extend(random_form(complex, 0, rng) for _ in range(trials))
        for f in candidates:
            problem = _function_violation(op, f)
            if problem is not None:
                small = _shrink_one(lambda g: _function_violation(op, g) is not None, f)
                return CheckResult(
                    "agrees_on_functions",
                    "fail",
                    {"input": small.to_json(), "detail": _function_violation(op, small) or problem},
                )
        return CheckResult("agrees_on_functions", "pass")

    def check_linearity():
        for k in degrees:
            for _ in range(trials):
                a = random_form(complex, k, rng)
                b = random_form(complex, k, rng)
                ca = Fraction(rng.randint(-9, 9) or 1)
                cb = Fraction(rng.randint(-9, 9) or 1, rng.randint(1, 9))
                problem = _linearity_violation(op, a, b, ca, cb)
                if problem is not None:
                    a, b = _shrink_pair(
                        lambda x, y: _linearity_violation(op, x, y, ca, cb) is not None, a, b
                    )
                    return CheckResult(
                        "linearity_sampled",
                        "fail",
                        {
                            "a": str(ca),
                            "b": str(cb),
                            "alpha": a.to_json(),
                            "beta": b.to_json(),
                            "detail": problem,
                        },
                    )
        return CheckResult("linearity_sampled", "pass")

    results = {
        "degree_raising": check_degree_raising(),
        "squares_to_zero": check_squares(),
        "leibniz": check_leibniz(),
        "agrees_on_functions": check_functions(),
        "linearity_sampled": check_linearity(),
    }
    if all(r.ok for r in results.values()):
        results["equality_with_d"] = certify_equality(op, complex)
    else:
        results["equality_with_d"] = CheckResult("equality_with_d", "skipped")
    return AxiomReport(operator=op.name, seed=seed, trials=trials, **results)


def replay_witness(op, complex, check_name, witness):
    """Re-evaluate a reported failure witness from its serialized inputs.

    Returns True when the violation reproduces, so every witness in a
    report can be audited without trusting the checker run that found it.
    """
    w = witness or {}
    if check_name == "degree_raising":
        a = Form.from_json(complex, w["input"])
        out, err = _safe_apply(op, a)
        return _image_problem(out, err, complex, a.degree) is not None
    if check_name == "squares_to_zero":
        a = Form.from_json(complex, w["input"])
        return _squares_violation(op, a) is not None
    if check_name == "leibniz":
        a = Form.from_json(complex, w["alpha"])
        b = Form.from_json(complex, w["beta"])
        return _leibniz_violation(op, a, b) is not None
    if check_name == "agrees_on_functions":
        f = Form.from_json(complex, w["input"])
        return _function_violation(op, f) is not None
    if check_name == "linearity_sampled":
        from .forms import parse_rational

        a = Form.from_json(complex, w["alpha"])
        b = Form.from_json(complex, w["beta"])
        ca = parse_rational(w["a"])
        cb = parse_rational(w["b"])
        return _linearity_violation(op, a, b, ca, cb) is not None
    if check_name == "equality_with_d":
        ids = tuple(sorted(complex.graph.id_of(lab) for lab in w["basis_clique"]))
        return _equality_violation(op, complex, ids) is not None
    raise DomainError(f"unknown check name {check_name!r}")


# -- proof trace ----------------------------------------------------------


@dataclass
class TraceLink:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class ProofTrace:
    """Step-by-step reduction of a derivative value at one clique.

    Localize with the clique cutoff, expand the localized form in
    coefficient 0-forms and dchi chains, differentiate term by term with
    the product rule, reassemble, evaluate. Every link is checked as an
    exact equality.
    """

    alpha: Form
    clique: tuple
    rho: Form
    localized: Form
    tuples: list = field(default_factory=list)
    links: list = field(default_factory=list)
    value: Fraction = Fraction(0)

    @property
    def ok(self):
        return all(link.ok for link in self.links)

    def render_text(self):
        lines = [
            f"trace at clique {self.clique} (form degree {self.alpha.degree})",
            f"contributing tuples: {len(self.tuples)}",
        ]
        for link in self.links:
            status = "ok" if link.ok else "BROKEN"
            suffix = f"  [{link.detail}]" if link.detail else ""
            lines.append(f"  {status:6s} {link.name}{suffix}")
        lines.append(f"value: {self.value}")
        return "\n".join(lines) + "\n"


def proof_trace(alpha, clique):
    """Trace the cutoff-and-expansion reduction of d(alpha) at one clique."""
    if not isinstance(alpha, Form):
        raise DomainError(f"proof_trace expects a Form, got {type(alpha).__name__}")
    cx = alpha.complex
    k = alpha.degree
    c = tuple(clique)
    if len(c) != k + 2:
        raise DomainError(
            f"clique arity {len(c)} does not match degree {k} (need {k + 2} vertices)"
        )
    if cx.index_of(c) is None:
        raise DomainError(f"{c!r} is not a clique of the complex")

    rho = clique_cutoff(cx, c)
    localized = scalar_wedge(rho, alpha)
    d_alpha = exterior_derivative(alpha)
    d_localized = exterior_derivative(localized)
    target = d_alpha.evaluate(c)
    links = []

    got = d_localized.evaluate(c)
    links.append(
        TraceLink("cutoff-localization", got == target, f"localized {got}, direct {target}")
    )

    terms = list(expansion_terms(localized))
    tuples = [vs for vs, _, _, _ in terms]
    near = set(c)
    for v in c:
        near.update(cx.graph.neighbors(v))
    inside = all(v in near for vs in tuples for v in vs)
    links.append(
        TraceLink("support-within-one-step", inside, f"{len(tuples)} contributing tuples")
    )

    resum = Form(cx, k)
    for _, _, _, term in terms:
        resum = resum + term
    links.append(TraceLink("expansion-identity", resum == localized))

    per_term_ok = True
    termwise = Form(cx, k + 1)
    final = Fraction(0)
    for _, f, chain, term in terms:
        d_term = exterior_derivative(term)
        split = wedge(exterior_derivative(f), chain)
        if d_term != split:
            per_term_ok = False
        termwise = termwise + d_term
        final += split.evaluate(c)
    links.append(TraceLink("product-rule-per-term", per_term_ok))
    links.append(TraceLink("termwise-derivative-sum", termwise == d_localized))
    links.append(TraceLink("final-evaluation", final == target, f"{final} vs {target}"))

    return ProofTrace(alpha, c, rho, localized, tuples, links, target)


# -- mutant catalogue ---------------------------------------------------------


def scaled_derivative(factor=2):
    """The derivative scaled by a constant; no longer agrees on 0-forms."""
    return Operator(
        f"scaled-derivative-x{factor}", lambda a: exterior_derivative(a) * factor
    )


def edge_sign_flip(complex):
    """Negates one edge coefficient of degree-1 inputs before differentiating."""
    edges = complex.level(2)
    if not edges:
        raise DomainError("edge_sign_flip needs a graph with at least one edge")
    e = edges[0]

    def fn(a):
        if a.degree == 1:
            a = a - 2 * a.coeff(e) * Form.unit(complex, e)
        return exterior_derivative(a)

    return Operator(f"edge-sign-flip-at-{e}", fn)


def identity_leak(degree=0):
    """Returns its input unchanged at one degree: a degree-preserving leak."""

    def fn(a):
        if a.degree == degree:
            return a
        return exterior_derivative(a)

    return Operator(f"identity-leak-at-degree-{degree}", fn)


def degree_scaled_derivative():
    """The derivative scaled by (degree+1), as an unnormalized permutation
    sum would produce; agrees on 0-forms but breaks the product rule."""
    return Operator(
        "degree-scaled-derivative", lambda a: exterior_derivative(a) * (a.degree + 1)
    )


def zero_operator():
    """Maps everything to zero; satisfies every axiom except the 0-form one."""
    return Operator("zero-operator", lambda a: Form(a.complex, a.degree + 1))


def mutant_catalogue(complex):
    """Known-bad variants of the derivative for validating the checker."""
    return [
        scaled_derivative(2),
        edge_sign_flip(complex),
        identity_leak(0),
        degree_scaled_derivative(),
        zero_operator(),
    ]
