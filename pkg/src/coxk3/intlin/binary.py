"""Representation of 0 and -2 by even indefinite binary lattices.

An even rank-2 lattice with Gram matrix [[a, b], [b, c]] has quadratic form
q(x, y) = a x^2 + 2b xy + c y^2.  Half of it, f = (a/2) x^2 + b xy + (c/2) y^2,
is an integral binary form of discriminant D = b^2 - ac, and q represents -2
exactly when f represents -1.

For non-square D we reduce f and walk its cycle of reduced forms.  Every
integer m with |m| < sqrt(D)/2 that f represents primitively shows up as a
leading coefficient somewhere on the cycle (Lagrange), and -1 always meets
that bound because D is a non-square discriminant, hence D >= 5.  So the
cycle walk is a decision procedure, not a heuristic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, isqrt

from .forms import GramForm, signature

Mat2 = tuple[int, int, int, int]  # row-major 2x2


@dataclass(frozen=True)
class Representation:
    target: int
    witness: tuple[int, int] | None
    method: str
    discriminant: int
    cycle_length: int | None = None
    bound: str | None = None
    notes: tuple[str, ...] = field(default=())

    @property
    def found(self) -> bool:
        return self.witness is not None

    def __bool__(self) -> bool:
        return self.found


def _mul(m: Mat2, n: Mat2) -> Mat2:
    a, b, c, d = m
    e, f, g, h = n
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def _apply(m: Mat2, v: tuple[int, int]) -> tuple[int, int]:
    return (m[0] * v[0] + m[1] * v[1], m[2] * v[0] + m[3] * v[1])


def _primitive(x: int, y: int) -> tuple[int, int]:
    g = gcd(x, y)
    x, y = x // g, y // g
    if x < 0 or (x == 0 and y < 0):
        x, y = -x, -y
    return x, y


def _check(G: GramForm) -> tuple[int, int, int]:
    if G.rank != 2:
        raise ValueError("represents needs a rank-2 form")
    if not G.even:
        raise ValueError("represents needs an even form")
    if signature(G) != (1, 1):
        raise ValueError("represents needs signature (1,1)")
    (a, b), (_, c) = G.gram
    return a, b, c


# --- binary form (A, B, C) = A x^2 + B xy + C y^2 -------------------------


def _normalize(f, r: int):
    """Translate b into its normal range; returns (form, translation s)."""
    a, b, c = f
    m = 2 * abs(a)
    if abs(a) > r:
        nb = abs(a) - ((abs(a) - b) % m)
    else:
        nb = r - ((r - b) % m)
    s = (nb - b) // (2 * a)
    return (a, nb, a * s * s + b * s + c), s


def _is_reduced(f, r: int) -> bool:
    a, b, _ = f
    return 0 < b <= r and b + 2 * abs(a) > r and 2 * abs(a) - b <= r


def _rho(f, r: int):
    """One reduction step; returns the new form and the substitution matrix."""
    a, b, c = f
    g, s = _normalize((c, -b, a), r)
    return g, (0, -1, 1, s)


def _cycle_search(f, D: int, target: int):
    r = isqrt(D)
    M: Mat2 = (1, 0, 0, 1)
    if f[0] == target:
        return (1, 0), 0
    # bring to a reduced form
    steps = 0
    while not _is_reduced(f, r):
        f, m = _rho(f, r)
        M = _mul(M, m)
        steps += 1
        if f[0] == target:
            return _apply(M, (1, 0)), 0
        if steps > 10_000 + 4 * D.bit_length() ** 2:
            raise RuntimeError("reduction did not terminate")
    start = f
    length = 0
    while True:
        if f[0] == target:
            return _apply(M, (1, 0)), None
        f, m = _rho(f, r)
        M = _mul(M, m)
        length += 1
        if f == start:
            return None, length


def _square_case(f, s: int):
    """f = A x^2 + B xy + C y^2 with B^2 - 4AC = s^2 > 0; decide f = -1."""
    A, B, C = f
    # isotropic primitive vector of f
    if A == 0:
        p, q = 1, 0
    else:
        p, q = _primitive(-B + s, 2 * A)
    # complete (p, q) to a unimodular matrix [[p, u], [q, v]]
    g, u0, v0 = _xgcd(p, q)
    assert g == 1
    u, v = -v0, u0  # p*v - q*u = p*u0 + q*v0 = 1
    M = (p, u, q, v)
    # transformed form: f(p x + u y, q x + v y) = B' xy + C' y^2
    Bp = 2 * A * p * u + B * (p * v + q * u) + 2 * C * q * v
    Cp = A * u * u + B * u * v + C * v * v
    if (1 + Cp) % Bp != 0:
        return None
    x = -(1 + Cp) // Bp
    return _apply(M, (x, 1))


def _xgcd(a: int, b: int):
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def represents(G: GramForm, target: int) -> Representation:
    """Decide whether the even (1,1) lattice G contains a vector of square ``target``.

    ``target`` is 0 or -2.  The witness, when present, satisfies w^T G w = target.
    """
    if target not in (0, -2):
        raise ValueError("target must be 0 or -2")
    a, b, c = _check(G)
    D = b * b - a * c
    s = isqrt(D)
    square = s * s == D

    if target == 0:
        if not square:
            return Representation(0, None, "discriminant", D,
                                  notes=("-det is not a perfect square",))
        w = (1, 0) if a == 0 else _primitive(-b + s, a)
        return Representation(0, w, "isotropic-root", D)

    f = (a // 2, b, c // 2)
    if square:
        w = _square_case(f, s)
        return Representation(-2, w, "isotropic-split", D,
                              bound="exact: y must be a unit after splitting")
    w, length = _cycle_search(f, D, -1)
    bound = "Lagrange: |m| < sqrt(D)/2 = sqrt(%d)/2 forces m onto the cycle" % D
    if w is None:
        return Representation(-2, None, "reduction-cycle", D, cycle_length=length, bound=bound)
    w = _smaller_witness(G, w)
    return Representation(-2, w, "reduction-cycle", D, cycle_length=length, bound=bound)


def _smaller_witness(G: GramForm, w, box: int = 6):
    # a short witness reads better in reports; the cycle one can be large
    for n in range(1, box + 1):
        ring = [(x, y) for x in range(-n, n + 1) for y in range(-n, n + 1) if max(abs(x), abs(y)) == n]
        ring.sort(key=lambda v: (abs(v[0]) + abs(v[1]), abs(v[0]), v[0] < 0, v[1] < 0))
        for v in ring:
            if G.square(v) == -2:
                return v
    return tuple(w)


def brute_force_represents(G: GramForm, target: int, bound: int = 50):
    """All-vectors search in the box |x|, |y| <= bound; a test oracle."""
    (a, b), (_, c) = G.gram
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            if (x or y) and a * x * x + 2 * b * x * y + c * y * y == target:
                return (x, y)
    return None
