"""Exact integer matrices: Smith and Hermite normal forms, kernels, Gale duals.

Matrices are plain lists of rows of Python ints, so there is no overflow and no
dtype bookkeeping.  Every routine returns fresh lists and leaves its input
untouched.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

IntMatrix = list[list[int]]


def as_matrix(rows: Iterable[Iterable[int]]) -> IntMatrix:
    m = [[int(x) for x in row] for row in rows]
    if m and any(len(r) != len(m[0]) for r in m):
        raise ValueError("ragged matrix")
    return m


def shape(M: Sequence[Sequence[int]]) -> tuple[int, int]:
    return len(M), (len(M[0]) if M else 0)


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(M: Sequence[Sequence[int]]) -> IntMatrix:
    if not M:
        return []
    return [list(col) for col in zip(*M)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> IntMatrix:
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(A: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def columns(M: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    return [tuple(c) for c in zip(*M)] if M else []


def from_columns(cols: Sequence[Sequence[int]], nrows: int | None = None) -> IntMatrix:
    if not cols:
        return [[] for _ in range(nrows or 0)]
    return [list(r) for r in zip(*cols)]


def content(v: Iterable[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries (zero stays zero)."""
    g = content(v)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def clear_denominators(v: Sequence[Fraction | int]) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector, same direction."""
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    return primitive([int(Fraction(x) * den) for x in v])


def determinant(M: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(r) for r in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ M @ V == D`` with ``U``, ``V`` unimodular and ``D`` diagonal."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def invariant_factors(self) -> list[int]:
        m, n = shape(self.D)
        return [self.D[i][i] for i in range(min(m, n)) if self.D[i][i] != 0]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def smith_normal_form(M: Sequence[Sequence[int]]) -> SmithDecomposition:
    """Smith normal form with both unimodular transforms.

    The diagonal entries are nonnegative and satisfy ``d1 | d2 | ...``.

    Example:
        >>> smith_normal_form([[0, 2], [2, 0]]).invariant_factors
        [2, 2]
    """
    D = as_matrix(M)
    m, n = shape(D)
    U, V = identity(m), identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        D[dst] = [a + q * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for row in D:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            # smallest nonzero entry of the trailing block becomes the pivot
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if D[i][j] and (best is None or abs(D[i][j]) < abs(D[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = D[t][t]
            clean = True
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
                    clean = clean and D[i][t] == 0
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
                    clean = clean and D[t][j] == 0
            if not clean:
                continue
            # divisibility: fold an offending row into the pivot row and retry
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if t < m and t < n and D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return SmithDecomposition(U=U, D=D, V=V)


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> IntMatrix:
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Zero rows are dropped, pivots are positive and entries above a pivot are
    reduced into ``[0, pivot)``.  Two row sets span the same lattice iff their
    HNFs coincide.
    """
    A = [list(r) for r in rows if any(r)]
    if not A:
        return []
    n = len(A[0])
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        # Euclid down the column until only row r is nonzero there
        for i in range(r + 1, len(A)):
            while A[i][c]:
                q = A[r][c] // A[i][c]
                A[r] = [u - q * v for u, v in zip(A[r], A[i])]
                A[r], A[i] = A[i], A[r]
        if A[r][c] < 0:
            A[r] = [-x for x in A[r]]
        for i in range(r):
            q = A[i][c] // A[r][c]
            if q:
                A[i] = [u - q * v for u, v in zip(A[i], A[r])]
        r += 1
        if r == len(A):
            break
    return [row for row in A if any(row)]


def rank(M: Sequence[Sequence[int]]) -> int:
    return smith_normal_form(M).rank if M and M[0] else 0


def is_surjective(M: Sequence[Sequence[int]]) -> bool:
    """True iff ``M: Z^cols -> Z^rows`` is onto, i.e. all invariant factors are 1."""
    m, _ = shape(M)
    if m == 0:
        return True
    inv = smith_normal_form(M).invariant_factors
    return len(inv) == m and all(d == 1 for d in inv)


def kernel_lattice(M: Sequence[Sequence[int]], ncols: int | None = None) -> IntMatrix:
    """Basis of ``{x in Z^n : M x = 0}`` as the columns of the returned matrix.

    The basis comes from the right transform of the Smith form, so the kernel
    is saturated.  The columns are brought into Hermite form, which makes the
    output canonical: equal kernels give equal matrices.
    """
    n = shape(M)[1] if M else (ncols or 0)
    if not M or n == 0:
        return from_columns(hermite_normal_form(identity(n)), n)
    snf = smith_normal_form(M)
    basis = [[snf.V[i][j] for i in range(n)] for j in range(snf.rank, n)]
    return from_columns(hermite_normal_form(basis), n)


def kernel_rows(M: Sequence[Sequence[int]], ncols: int | None = None) -> IntMatrix:
    """Kernel basis as rows in Hermite form (the transpose of ``kernel_lattice``)."""
    n = shape(M)[1] if M else (ncols or 0)
    if not M or n == 0:
        return identity(n)
    snf = smith_normal_form(M)
    return hermite_normal_form([[snf.V[i][j] for i in range(n)] for j in range(snf.rank, n)])


def gale_dual(P: Sequence[Sequence[int]]) -> IntMatrix:
    """Gale dual of a surjection ``P: Z^r -> Z^n``.

    Returns ``Q`` of shape ``(r - n) x r`` with ``Q @ P.T == 0`` and ``Q``
    surjective; its rows are a basis of the orthogonal complement of the row
    lattice of ``P``, put into Hermite form so the answer is canonical.

    Raises:
        ValueError: if ``P`` is not surjective (the columns do not span ``Z^n``).
    """
    P = as_matrix(P)
    n, r = shape(P)
    if not is_surjective(P):
        raise ValueError("columns of P do not span the lattice (P is not surjective)")
    snf = smith_normal_form(transpose(P))
    Q = [list(snf.U[i]) for i in range(n, r)]
    return hermite_normal_form(Q) if Q else []


def unimodular_row_equivalent(Q1: Sequence[Sequence[int]], Q2: Sequence[Sequence[int]]) -> bool:
    """Decide whether ``Q1 = U @ Q2`` for a unimodular ``U``.

    For surjective inputs this is equality of the saturated kernels; otherwise
    the row lattices are compared directly through their Hermite forms.
    """
    if shape(Q1) != shape(Q2):
        raise ValueError(f"shape mismatch: {shape(Q1)} vs {shape(Q2)}")
    if is_surjective(Q1) and is_surjective(Q2):
        return kernel_rows(Q1) == kernel_rows(Q2)
    if rank(Q1) != shape(Q1)[0] or rank(Q2) != shape(Q2)[0]:
        return False
    return hermite_normal_form(Q1) == hermite_normal_form(Q2)


def solve_rational(A: Sequence[Sequence[int | Fraction]], b: Sequence[int | Fraction]) -> list[Fraction] | None:
    """One rational solution of ``A x = b`` (or None); free variables set to 0."""
    m = len(A)
    n = len(A[0]) if m else 0
    R = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if R[i][c] != 0), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        inv = 1 / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(m):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
    if any(all(x == 0 for x in row[:-1]) and row[-1] != 0 for row in R):
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = R[i][-1]
    return x


def rational_kernel(A: Sequence[Sequence[int | Fraction]], n: int) -> list[list[Fraction]]:
    """Basis of the rational null space of ``A`` (``n`` columns)."""
    R = [[Fraction(x) for x in row] for row in A]
    m = len(R)
    pivots: list[int] = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if R[i][c] != 0), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        inv = 1 / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(m):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -R[i][fc]
        basis.append(v)
    return basis


def rational_rank(A: Sequence[Sequence[int | Fraction]]) -> int:
    if not A:
        return 0
    return len(A[0]) - len(rational_kernel(A, len(A[0])))


def unimodular_completion(v: Sequence[int]) -> IntMatrix:
    """A unimodular matrix ``U`` with ``U @ v == e1`` for a primitive vector ``v``."""
    if content(v) != 1:
        raise ValueError(f"{tuple(v)} is not primitive")
    snf = smith_normal_form([[x] for x in v])
    # U v V = (1, 0, ..., 0)^T with V = [+-1]
    s = snf.V[0][0]
    return [[s * x for x in row] for row in snf.U]


def parse_matrix(text: str) -> IntMatrix:
    """Parse ``"0 3; 3 0"`` (rows separated by ';', entries by spaces or commas)."""
    rows = [r.strip() for r in text.split(";") if r.strip()]
    return as_matrix([[int(x) for x in r.replace(",", " ").split()] for r in rows])
