"""Exact univariate polynomials over the rationals, f-functions, h-vectors and
the reflection t -> -1-t that encodes the Dehn-Sommerville relations."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .complex import SimplicialComplex
from .errors import InvalidInputError


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass int, Fraction or 'p/q' strings")
    return Fraction(x)


class FPolynomial:
    """Polynomial c0 + c1 t + ... + cn t^n with Fraction coefficients.

    Trailing zeros are trimmed, so the zero polynomial has no coefficients
    and degree -1.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable = ()):
        cs = [_frac(c) for c in coefficients]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coefficients: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def from_f_vector(cls, f: Sequence[int]) -> "FPolynomial":
        return cls([1, *f])

    @classmethod
    def monomial(cls, k: int, c=1) -> "FPolynomial":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = FPolynomial([other])
        if not isinstance(other, FPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return f"FPolynomial({self})"

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(terms).replace("+ -", "- ")

    def __add__(self, other) -> "FPolynomial":
        other = _coerce(other)
        n = max(len(self.coefficients), len(other.coefficients))
        return FPolynomial(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "FPolynomial":
        return FPolynomial(-c for c in self.coefficients)

    def __sub__(self, other) -> "FPolynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "FPolynomial":
        return _coerce(other) - self

    def __mul__(self, other) -> "FPolynomial":
        other = _coerce(other)
        if not self.coefficients or not other.coefficients:
            return FPolynomial()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return FPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "FPolynomial":
        result = FPolynomial([1])
        for _ in range(n):
            result = result * self
        return result

    def __call__(self, x):
        return evaluate(self, x)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coefficients]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "FPolynomial":
        return cls(_frac(c) for c in data)


def _coerce(x) -> FPolynomial:
    return x if isinstance(x, FPolynomial) else FPolynomial([x])


def f_function(c: SimplicialComplex) -> FPolynomial:
    """1 + sum_k f_k t^(k+1); the empty complex gives 1."""
    return FPolynomial.from_f_vector(c.f_vector)


def f_vector_of(f: FPolynomial) -> tuple:
    """Inverse of f_function: the coefficients of t, t^2, ..."""
    return tuple(f.coefficients[1:])


def evaluate(f: FPolynomial, x):
    """Horner evaluation; exact for int/Fraction input, numeric otherwise."""
    acc = 0
    for c in reversed(f.coefficients):
        acc = acc * x + c
    return acc


def derivative(f: FPolynomial) -> FPolynomial:
    return FPolynomial(k * c for k, c in enumerate(f.coefficients) if k)


def antiderivative(f: FPolynomial) -> FPolynomial:
    """The antiderivative vanishing at 0."""
    return FPolynomial([0] + [c / (k + 1) for k, c in enumerate(f.coefficients)])


def compose_affine(f: FPolynomial, a, b) -> FPolynomial:
    """f(a + b t)."""
    out = FPolynomial()
    power = FPolynomial([1])
    lin = FPolynomial([a, b])
    for c in f.coefficients:
        out = out + power * c
        power = power * lin
    return out


def reflect(f: FPolynomial) -> FPolynomial:
    """f(-1 - t)."""
    n = len(f.coefficients)
    out = [Fraction(0)] * n
    for k, c in enumerate(f.coefficients):
        if c:
            sign = -1 if k % 2 else 1
            for m in range(k + 1):
                out[m] += sign * c * comb(k, m)
    return FPolynomial(out)


def default_dimension(f: FPolynomial) -> int:
    return f.degree - 1


def ds_symmetric(f: FPolynomial, d: int | None = None) -> bool:
    """True iff f(t) + (-1)^d f(-1-t) vanishes identically."""
    if d is None:
        d = default_dimension(f)
    if f.degree > d + 1:
        raise InvalidInputError(f"degree {f.degree} exceeds d+1 = {d + 1}")
    r = reflect(f)
    return (f + r if d % 2 == 0 else f - r) == FPolynomial()


def ds_sign(f: FPolynomial) -> int | None:
    """The sign s with f(-1-t) = s f(t), or None when neither holds.

    A non-zero polynomial cannot satisfy both, so the answer is unique.
    """
    r = reflect(f)
    if r == f:
        return 1
    if r == -f:
        return -1
    return None


def h_polynomial(f: FPolynomial, d: int | None = None) -> tuple[Fraction, ...]:
    """Coefficients h_0..h_{d+1} of (x-1)^(d+1) f(1/(x-1)), ascending in x."""
    if d is None:
        d = default_dimension(f)
    if f.degree != d + 1:
        raise InvalidInputError(f"h-vector needs deg f = d+1 = {d + 1}, got {f.degree}")
    n = d + 1
    h = [Fraction(0)] * (n + 1)
    # sum_k c_k (x-1)^(n-k)
    for k, c in enumerate(f.coefficients):
        e = n - k
        for m in range(e + 1):
            h[m] += c * comb(e, m) * (-1) ** (e - m)
    return tuple(h)


def h_vector(f: FPolynomial, d: int | None = None) -> tuple:
    """h_polynomial with integral entries converted to int."""
    return tuple(int(x) if x.denominator == 1 else x for x in h_polynomial(f, d))


def is_palindromic(h: Sequence) -> bool:
    return tuple(h) == tuple(reversed(h))
