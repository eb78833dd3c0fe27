"""Coboundary matrices and rational Betti numbers of a clique complex."""

from __future__ import annotations

from fractions import Fraction

from .errors import CapacityError, DomainError


class CoboundaryMatrix:
    """Matrix of the exterior derivative on basis forms of one degree.

    Rows follow the canonical order of (k+2)-cliques, columns the order of
    (k+1)-cliques; the entry is (-1)^i when the column clique is the row
    clique with its i-th vertex removed, else 0.
    """

    __slots__ = ("degree", "row_cliques", "col_cliques", "data")

    def __init__(self, degree, row_cliques, col_cliques, data):
        self.degree = degree
        self.row_cliques = tuple(row_cliques)
        self.col_cliques = tuple(col_cliques)
        self.data = tuple(tuple(row) for row in data)

    @property
    def shape(self):
        return (len(self.row_cliques), len(self.col_cliques))

    def entry(self, i, j):
        return self.data[i][j]

    def to_triplet_text(self):
        """Sparse text: a 'rows cols' header line, then 'row col value' lines
        for each nonzero entry in row-major order."""
        nrows, ncols = self.shape
        lines = [f"{nrows} {ncols}"]
        for i, row in enumerate(self.data):
            for j, value in enumerate(row):
                if value:
                    lines.append(f"{i} {j} {value}")
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"<CoboundaryMatrix degree={self.degree} shape={self.shape}>"


def coboundary_matrix(complex, k):
    """Coboundary matrix taking degree-k basis forms to degree k+1."""
    if not isinstance(k, int) or k < 0:
        raise DomainError(f"degree must be a non-negative integer, got {k!r}")
    cols = complex.level(k + 1)
    rows = complex.level(k + 2)
    col_index = {c: j for j, c in enumerate(cols)}
    data = []
    for clique in rows:
        row = [0] * len(cols)
        for i in range(k + 2):
            facet = clique[:i] + clique[i + 1 :]
            row[col_index[facet]] = 1 if i % 2 == 0 else -1
        data.append(row)
    return CoboundaryMatrix(k, rows, cols, data)


def matrix_product(a, b):
    """Plain rows-by-columns product; accepts row lists or CoboundaryMatrix."""
    a = getattr(a, "data", a)
    b = getattr(b, "data", b)
    if a and b and len(a[0]) != len(b):
        raise DomainError(f"shape mismatch: {len(a[0])} columns vs {len(b)} rows")
    if not b:
        return [[] for _ in a]
    ncols = len(b[0])
    return [
        [sum(ra[t] * b[t][j] for t in range(len(b))) for j in range(ncols)]
        for ra in a
    ]


def rational_rank(rows):
    """Rank over the rationals by exact fraction Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        prow = m[rank]
        inv = 1 / prow[col]
        for r in range(rank + 1, nrows):
            factor = m[r][col]
            if factor:
                scaled = factor * inv
                m[r] = [x - scaled * p for x, p in zip(m[r], prow)]
        rank += 1
        if rank == nrows:
            break
    return rank


def betti(complex):
    """Betti numbers (b_0, ..., b_top) over the rationals.

    Needs the complex enumerated one level above its largest clique, so the
    top coboundary is the honest zero map rather than a missing one.
    """
    top = complex.top_cardinality
    if top == 0:
        return ()
    if complex.max_card < top + 1:
        raise CapacityError(
            f"betti needs max_card >= {top + 1} (built with {complex.max_card})",
            required_max_card=top + 1,
        )
    ranks = [rational_rank(coboundary_matrix(complex, k).data) for k in range(top)]
    values = []
    for k in range(top):
        n_k = len(complex.level(k + 1))
        below = ranks[k - 1] if k > 0 else 0
        values.append(n_k - ranks[k] - below)
    return tuple(values)


def euler_characteristic(complex):
    """Alternating sum of clique counts over all enumerated levels."""
    return sum(
        (-1) ** k * len(complex.level(k + 1)) for k in range(complex.max_card)
    )
