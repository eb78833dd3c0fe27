"""Wedge products, skew symmetrization, and the exterior derivative.

Conventions, all over exact rationals:

  * tensor product shares its middle argument:
        (a (x) b)(v_0..v_{r+s}) = a(v_0..v_r) * b(v_r..v_{r+s})
  * skew symmetrization averages over all argument permutations with signs,
    normalized by 1/(r+1)!
  * the wedge is the skew symmetrization of the tensor product
  * the derivative of a degree-r form is the alternating sum over argument
    omissions, evaluated on (r+2)-cliques

The module also provides the coordinate machinery that rewrites any form as
a combination of coefficient 0-forms wedged with chains of characteristic-
function derivatives, plus the clique cutoff that localizes a derivative to
one clique. Iterated wedges are left-nested throughout: a ^ b ^ c means
(a ^ b) ^ c, which matters because the wedge is only associative on closed
forms.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from itertools import combinations, permutations
from math import factorial

from .errors import DomainError
from .forms import Form, Tensor, chi
from .permutations import perm_sign, signed_permutations


def _require_same_complex(a, b):
    if a.complex is not b.complex:
        raise DomainError("operands are bound to different complexes")


def _require_form(a, what):
    if not isinstance(a, Form):
        raise DomainError(f"{what} expects a Form, got {type(a).__name__}")


def tensor_product(a, b):
    """Degree-(r+s) tensor with the shared-middle-argument convention."""
    if not isinstance(a, (Form, Tensor)) or not isinstance(b, (Form, Tensor)):
        raise DomainError("tensor_product expects forms or tensors")
    _require_same_complex(a, b)
    cx = a.complex
    r, s = a.degree, b.degree
    if a.is_zero() or b.is_zero():
        return Tensor(cx, r + s)
    coeffs = {}
    for clique in cx.level(r + s + 1):
        for p in permutations(clique):
            value = a.evaluate(p[: r + 1]) * b.evaluate(p[r:])
            if value:
                coeffs[p] = value
    return Tensor(cx, r + s, coeffs)


def skew_symmetrize(t):
    """Alternating part: signed average of a tensor over all argument orders."""
    if not isinstance(t, (Form, Tensor)):
        raise DomainError("skew_symmetrize expects a form or tensor")
    cx = t.complex
    r = t.degree
    if t.is_zero():
        return Form(cx, r)
    norm = factorial(r + 1)
    coeffs = {}
    for clique in cx.level(r + 1):
        total = Fraction(0)
        for p, sign in signed_permutations(r + 1):
            value = t.evaluate(tuple(clique[i] for i in p))
            if value:
                total += value if sign > 0 else -value
        if total:
            coeffs[clique] = total / norm
    return Form(cx, r, coeffs)


def wedge(a, b):
    """Wedge product of two forms: skew symmetrized tensor product."""
    _require_form(a, "wedge")
    _require_form(b, "wedge")
    return skew_symmetrize(tensor_product(a, b))


def iterated_wedge(forms):
    """Left-nested wedge of one or more forms: ((a ^ b) ^ c) ^ ..."""
    forms = list(forms)
    if not forms:
        raise DomainError("iterated_wedge needs at least one form")
    return reduce(wedge, forms)


def exterior_derivative(a):
    """Degree-raising derivative: alternating sum over argument omissions."""
    _require_form(a, "exterior_derivative")
    cx = a.complex
    r = a.degree
    if a.is_zero():
        return Form(cx, r + 1)
    coeffs = {}
    for clique in cx.level(r + 2):
        total = Fraction(0)
        for i in range(r + 2):
            value = a.coeff(clique[:i] + clique[i + 1 :])
            if value:
                total += value if i % 2 == 0 else -value
        if total:
            coeffs[clique] = total
    return Form(cx, r + 1, coeffs)


def is_closed(a):
    """True when the exterior derivative vanishes identically."""
    return exterior_derivative(a).is_zero()


def scalar_wedge(f, a):
    """Wedge with a 0-form by the mean-value rule.

    (f ^ a) has coefficient (sum of f over the clique)/(k+1) times the
    coefficient of a; exactly equal to wedge(f, a), at support-size cost.
    """
    _require_form(f, "scalar_wedge")
    _require_form(a, "scalar_wedge")
    _require_same_complex(f, a)
    if f.degree != 0:
        raise DomainError(f"scalar_wedge needs a 0-form on the left, got degree {f.degree}")
    k = a.degree
    coeffs = {}
    for clique, value in a.entries():
        mean = sum(f.coeff((v,)) for v in clique)
        if mean:
            coeffs[clique] = value * mean / (k + 1)
    return Form(a.complex, k, coeffs)


def dchi(complex, v):
    """Derivative of the characteristic 0-form of a vertex."""
    return exterior_derivative(chi(complex, v))


def dchi_chain(complex, vertices):
    """Left-nested wedge dchi(v_1) ^ ... ^ dchi(v_k), in closed form.

    On a (k+1)-clique the value is sign/k! where the sign is that of the
    unique argument placement matching v_1..v_k, and zero when the clique
    does not contain all the v_i. Repeated v_i give the zero form. An empty
    vertex list gives the constant-one 0-form (the empty wedge).
    """
    vs = tuple(vertices)
    k = len(vs)
    graph = complex.graph
    for v in vs:
        graph._check_vertex(v)
    if len(set(vs)) != k:
        return Form(complex, k)
    norm = factorial(k)
    vset = set(vs)
    coeffs = {}
    for clique in complex.level(k + 1):
        if not vset <= set(clique):
            continue
        pos = {v: i for i, v in enumerate(clique)}
        leftover = next(i for i, v in enumerate(clique) if v not in vset)
        tau = (leftover,) + tuple(pos[v] for v in vs)
        coeffs[clique] = Fraction(perm_sign(tau), norm)
    return Form(complex, k, coeffs)


def coefficient_form(a, vertices):
    """0-form x -> a(x, v_1, ..., v_k) for a degree-k form a."""
    _require_form(a, "coefficient_form")
    vs = tuple(vertices)
    if len(vs) != a.degree:
        raise DomainError(
            f"coefficient_form of a degree-{a.degree} form takes {a.degree} vertices"
        )
    cx = a.complex
    coeffs = {}
    for x in range(cx.graph.n):
        value = a.evaluate((x,) + vs)
        if value:
            coeffs[(x,)] = value
    return Form(cx, 0, coeffs)


def expansion_tuples(a):
    """Ordered vertex tuples that can contribute to the chi expansion of a.

    A tuple contributes only if its vertices, as a set, lie inside some
    support clique of a; everything else wedges to zero, so the sum over
    all |V|^k tuples collapses to this finite list.
    """
    k = a.degree
    found = set()
    for clique in a.support():
        for sub in combinations(clique, k):
            found.update(permutations(sub))
    return sorted(found)


def expansion_terms(a):
    """Yield (tuple, coefficient 0-form, dchi chain, their wedge) per tuple."""
    cx = a.complex
    for vs in expansion_tuples(a):
        f = coefficient_form(a, vs)
        if f.is_zero():
            continue
        chain = dchi_chain(cx, vs)
        yield vs, f, chain, scalar_wedge(f, chain)


def chi_expansion(a):
    """Rebuild a form from coefficient 0-forms wedged with dchi chains.

    Returns sum over contributing tuples of a_{v_1..v_k} ^ dchi(v_1) ^ ...
    ^ dchi(v_k); equal to the input exactly.
    """
    _require_form(a, "chi_expansion")
    total = Form(a.complex, a.degree)
    for _, _, _, term in expansion_terms(a):
        total = total + term
    return total


def clique_cutoff(complex, clique):
    """Indicator 0-form of a clique's vertex set (1 on it, 0 elsewhere).

    Its derivative vanishes on every edge inside the clique, so wedging
    with it preserves derivatives at that clique.
    """
    c = tuple(clique)
    if complex.index_of(c) is None:
        raise DomainError(f"{c!r} is not a clique of the complex")
    return Form(complex, 0, {(v,): 1 for v in c})
