"""Sparse polynomials in variables T1..Tn with rational coefficients."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, ...]


def _pad(e: Sequence[int], n: int) -> Exponent:
    return tuple(e) + (0,) * (n - len(e))


@dataclass(frozen=True)
class LaurentPolynomial:
    """A finite sum of terms c * T^e.

    Exponents may in principle be negative (hence the name), but every
    polynomial in this package has nonnegative exponents.  Zero coefficients
    are never stored.
    """

    nvars: int
    terms: tuple[tuple[Exponent, Fraction], ...]

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], int | Fraction] | Iterable = ()):
        acc: dict[Exponent, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            e = _pad(tuple(int(x) for x in e), nvars)
            if len(e) != nvars:
                raise ValueError("exponent longer than the number of variables")
            acc[e] = acc.get(e, Fraction(0)) + Fraction(c)
        clean = tuple(sorted(((e, c) for e, c in acc.items() if c != 0), key=_sort_key))
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    # construction helpers
    @classmethod
    def variable(cls, i: int, nvars: int) -> "LaurentPolynomial":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def constant(cls, c, nvars: int) -> "LaurentPolynomial":
        return cls(nvars, {(0,) * nvars: c})

    @property
    def support(self) -> list[Exponent]:
        return [e for e, _ in self.terms]

    def as_dict(self) -> dict[Exponent, Fraction]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def variables(self) -> set[int]:
        return {i for e, _ in self.terms for i, x in enumerate(e) if x}

    def extend(self, nvars: int) -> "LaurentPolynomial":
        if nvars < self.nvars:
            raise ValueError("cannot drop variables")
        return LaurentPolynomial(nvars, {_pad(e, nvars): c for e, c in self.terms})

    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            n = max(self.nvars, other.nvars)
            return other.extend(n)
        return LaurentPolynomial.constant(other, self.nvars)

    def __add__(self, other):
        other = self._coerce(other)
        n = max(self.nvars, other.nvars)
        acc = self.extend(n).as_dict()
        for e, c in other.terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPolynomial(n, acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(self.nvars, {e: -c for e, c in self.terms})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        n = max(self.nvars, other.nvars)
        a, b = self.extend(n), other.extend(n)
        acc: dict[Exponent, Fraction] = {}
        for e1, c1 in a.terms:
            for e2, c2 in b.terms:
                e = tuple(x + y for x, y in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentPolynomial(n, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = LaurentPolynomial.constant(1, self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def monomial_content(self) -> Exponent:
        """Exponent of the largest monomial dividing every term."""
        if not self.terms:
            return (0,) * self.nvars
        return tuple(min(e[i] for e, _ in self.terms) for i in range(self.nvars))

    def divide_monomial(self, m: Sequence[int]) -> "LaurentPolynomial":
        return LaurentPolynomial(self.nvars, {tuple(x - y for x, y in zip(e, m)): c for e, c in self.terms})

    def substitute_zero(self, indices: Iterable[int]) -> "LaurentPolynomial":
        idx = set(indices)
        return LaurentPolynomial(self.nvars, {e: c for e, c in self.terms if all(e[i] == 0 for i in idx)})

    def degree(self, Q: Sequence[Sequence[int]], exponent: Sequence[int] | None = None) -> tuple[int, ...]:
        """Degree of a monomial (the leading one by default) under the columns of Q."""
        e = exponent if exponent is not None else self.terms[0][0]
        return tuple(sum(row[i] * e[i] for i in range(len(e))) for row in Q)

    def term_degrees(self, Q: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
        return [self.degree(Q, e) for e, _ in self.terms]

    def normalized(self) -> "LaurentPolynomial":
        """Scale so the first term has coefficient 1."""
        if not self.terms:
            return self
        c = self.terms[0][1]
        return LaurentPolynomial(self.nvars, {e: x / c for e, x in self.terms})

    def __str__(self) -> str:
        return format_polynomial(self)

    def to_json(self) -> str:
        return str(self)


def _sort_key(item):
    e, _ = item
    # graded reverse lexicographic, largest first
    return (-sum(e), tuple(e[::-1]))


def _monomial_str(e: Exponent) -> str:
    parts = []
    for i, x in enumerate(e):
        if x == 1:
            parts.append(f"T{i + 1}")
        elif x > 1:
            parts.append(f"T{i + 1}^{x}")
    return "*".join(parts)


def format_polynomial(p: LaurentPolynomial) -> str:
    if not p.terms:
        return "0"
    out = []
    for k, (e, c) in enumerate(p.terms):
        mono = _monomial_str(e)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if mono and a == 1:
            body = mono
        elif mono:
            body = f"{a}*{mono}"
        else:
            body = str(a)
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|T(\d+)|(\^)|(\*)|([+-])|(\()|(\)))")


def parse_polynomial(text: str, nvars: int | None = None) -> LaurentPolynomial:
    """Parse strings like ``"T7*T8 - T2*T4 + 3*T3^2"``.

    Grammar: sums of products of integers (or fractions), ``T<i>`` and
    parenthesised sums, with ``^`` for nonnegative integer powers.
    """
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"unexpected character at {pos} in {text!r}")
        pos = m.end()
        num, var, caret, star, sign, lp, rp = m.groups()
        if num is not None:
            tokens.append(("num", Fraction(num)))
        elif var is not None:
            if int(var) < 1:
                raise ValueError("variables are numbered from T1")
            tokens.append(("var", int(var) - 1))
        elif caret:
            tokens.append(("^", None))
        elif star:
            tokens.append(("*", None))
        elif sign:
            tokens.append((sign, None))
        elif lp:
            tokens.append(("(", None))
        else:
            tokens.append((")", None))
    n = max([t[1] + 1 for t in tokens if t[0] == "var"] + [nvars or 0, 0])
    parser = _Parser(tokens, n)
    p = parser.sum()
    if parser.i != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    return p


class _Parser:
    def __init__(self, tokens, n):
        self.t, self.i, self.n = tokens, 0, n

    def peek(self):
        return self.t[self.i][0] if self.i < len(self.t) else None

    def take(self, kind):
        if self.peek() != kind:
            raise ValueError(f"expected {kind!r}")
        tok = self.t[self.i]
        self.i += 1
        return tok

    def sum(self):
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take(self.peek())[0] == "-" else 1
        acc = self.product() * sign
        while self.peek() in ("+", "-"):
            s = self.take(self.peek())[0]
            term = self.product()
            acc = acc + term if s == "+" else acc - term
        return acc

    def product(self):
        acc = self.power()
        while True:
            if self.peek() == "*":
                self.take("*")
                acc = acc * self.power()
            elif self.peek() in ("num", "var", "("):
                acc = acc * self.power()  # juxtaposition
            else:
                return acc

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.take("^")
            _, k = self.take("num")
            if k.denominator != 1 or k < 0:
                raise ValueError("exponents must be nonnegative integers")
            base = base ** int(k)
        return base

    def atom(self):
        kind = self.peek()
        if kind == "num":
            return LaurentPolynomial.constant(self.take("num")[1], self.n)
        if kind == "var":
            return LaurentPolynomial.variable(self.take("var")[1], self.n)
        if kind == "(":
            self.take("(")
            p = self.sum()
            self.take(")")
            return p
        raise ValueError("unexpected end of polynomial")
