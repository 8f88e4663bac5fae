"""Exact integer polynomials and largest-real-root extraction.

Root finding works on exact rationals: the polynomial is first reduced to
its square-free part so every real root is a sign change, a Sturm sequence
counts the roots in a bracket, the bracket is scanned from the top down to
isolate the largest root, and plain sign bisection finishes the job.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NoRootInBracketError

Number = int | Fraction


def _strip(coeffs: Iterable[Number]) -> tuple[Number, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with integer coefficients, ascending degree order."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = _strip(int(c) for c in self.coefficients)
        if not coeffs:
            raise ValueError("the zero polynomial is not allowed")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> IntPolynomial:
        """Build from ``{exponent: coefficient}``; repeated exponents are summed by the caller."""
        deg = max(terms)
        coeffs = [0] * (deg + 1)
        for e, c in terms.items():
            coeffs[e] += c
        return cls(tuple(coeffs))

    @classmethod
    def from_descending(cls, coeffs: Sequence[int]) -> IntPolynomial:
        return cls(tuple(reversed(coeffs)))

    @classmethod
    def x(cls) -> IntPolynomial:
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> int:
        return self.coefficients[-1]

    def __call__(self, x: Number) -> Number:
        acc: Number = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def evalf(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other: IntPolynomial | int) -> IntPolynomial:
        o = other.coefficients if isinstance(other, IntPolynomial) else (other,)
        n = max(len(o), len(self.coefficients))
        a = self.coefficients + (0,) * (n - len(self.coefficients))
        b = o + (0,) * (n - len(o))
        return IntPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: IntPolynomial | int) -> IntPolynomial:
        return self + (-other if isinstance(other, IntPolynomial) else -other)

    def __rsub__(self, other: int) -> IntPolynomial:
        return (-self) + other

    __radd__ = __add__

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if not isinstance(other, IntPolynomial):
            return IntPolynomial(tuple(c * other for c in self.coefficients))
        out = [0] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPolynomial:
        out = IntPolynomial((1,))
        for _ in range(e):
            out = out * self
        return out

    def derivative(self) -> tuple[int, ...]:
        return tuple(i * c for i, c in enumerate(self.coefficients))[1:]

    def descending(self) -> list[int]:
        return list(reversed(self.coefficients))

    def __str__(self) -> str:
        parts = []
        for e in range(self.degree, -1, -1):
            c = self.coefficients[e]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                coef = "" if mag == 1 else str(mag)
                body = coef + ("x" if e == 1 else f"x^{e}")
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


# -- exact rational polynomial helpers (ascending coefficient tuples) --------


def _rem(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
    r = list(a)
    db = len(b) - 1
    while len(r) - 1 >= db and any(r):
        shift = len(r) - 1 - db
        f = r[-1] / b[-1]
        for i, c in enumerate(b):
            r[i + shift] -= f * c
        r.pop()
        r = list(_strip(r))
    return _strip(r)


def _quo(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
    r = list(a)
    db = len(b) - 1
    q = [Fraction(0)] * max(len(a) - db, 1)
    while len(r) - 1 >= db and any(r):
        shift = len(r) - 1 - db
        f = r[-1] / b[-1]
        q[shift] = f
        for i, c in enumerate(b):
            r[i + shift] -= f * c
        r.pop()
    return _strip(q)


def _gcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
    a, b = _strip(a), _strip(b)
    while b:
        a, b = b, _rem(a, b)
    return a


def _eval(coeffs: Sequence[Number], x: Number) -> Number:
    acc: Number = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def squarefree_part(p: IntPolynomial) -> tuple[Fraction, ...]:
    a = tuple(Fraction(c) for c in p.coefficients)
    da = tuple(Fraction(c) for c in p.derivative())
    if not da:
        return a
    g = _gcd(a, da)
    return _quo(a, g) if len(g) > 1 else a


def sturm_sequence(coeffs: Sequence[Fraction]) -> list[tuple[Fraction, ...]]:
    f0 = _strip(coeffs)
    f1 = tuple(i * c for i, c in enumerate(f0))[1:]
    seq = [f0]
    if f1:
        seq.append(_strip(f1))
    while len(seq[-1]) > 1:
        r = _rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append(tuple(-c for c in r))
    return seq


def _sign_changes(seq: Sequence[Sequence[Fraction]], x: Fraction) -> int:
    signs = [v for v in (_eval(s, x) for s in seq) if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a < 0) != (b < 0))


def count_roots(p: IntPolynomial, lo: Number, hi: Number) -> int:
    """Number of distinct real roots in the half-open interval ``(lo, hi]``."""
    seq = sturm_sequence(squarefree_part(p))
    return _sign_changes(seq, Fraction(lo)) - _sign_changes(seq, Fraction(hi))


def largest_real_root(
    p: IntPolynomial,
    lo: Number | float | None = None,
    hi: Number | float | None = None,
    tol: float = 1e-12,
    q: int | None = None,
) -> float:
    """Largest real root of ``p`` in ``(lo, hi]``.

    The default bracket is ``(1 + 1e-9, q + 1]`` when ``q`` is given and
    otherwise ``(1 + 1e-9, C]`` with C a Cauchy bound for the roots.
    Raises :class:`NoRootInBracketError` when the bracket holds no root.
    """
    if p.degree < 1:
        raise NoRootInBracketError(f"constant polynomial {p} has no roots")
    if lo is None:
        lo = Fraction(1) + Fraction(1, 10**9)
    if hi is None:
        if q is not None:
            hi = q + 1
        else:
            hi = 1 + max(Fraction(abs(c), abs(p.leading)) for c in p.coefficients[:-1])
            hi = max(Fraction(hi), Fraction(lo) + 1)
    lo, hi = Fraction(lo), Fraction(hi)
    f = squarefree_part(p)
    seq = sturm_sequence(f)

    def roots_in(a: Fraction, b: Fraction) -> int:
        return _sign_changes(seq, a) - _sign_changes(seq, b)

    if roots_in(lo, hi) == 0:
        raise NoRootInBracketError(f"{p} has no real root in ({float(lo)}, {float(hi)}]")
    if _eval(f, hi) == 0:
        return float(hi)

    # descending scan: first subinterval from the top that holds a root
    pieces = 64
    step = (hi - lo) / pieces
    b = hi
    while True:
        a = max(lo, b - step)
        if roots_in(a, b):
            break
        b = a
    # isolate the top root, then shrink by sign bisection
    while roots_in(a, b) > 1:
        mid = (a + b) / 2
        if roots_in(mid, b):
            a = mid
        else:
            b = mid
    if _eval(f, b) == 0:
        return float(b)
    fb = _eval(f, b) > 0
    tol_frac = Fraction(tol) / 4
    while b - a > tol_frac:
        mid = (a + b) / 2
        fm = _eval(f, mid)
        if fm == 0:
            return float(mid)
        if (fm > 0) == fb:
            b = mid
        else:
            a = mid
    return float((a + b) / 2)
