"""Concrete ground ring: the integers localized at a finite set of primes.

Fractional ideals are entered as finite lists of nonzero rational
generators.  Everything here works in exact rational arithmetic and serves
as an independent oracle for the vector-level operations in
:mod:`dedstar.extvec`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from .extvec import ValVector, ext_le, ext_neg

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class FracIdealSpec:
    """A fractional ideal given by nonzero rational generators.

    Rationals supported on primes outside the declared list are units of the
    localization, so arbitrary nonzero rationals are acceptable generators.
    """

    primes: Tuple[int, ...]
    gens: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.primes:
            raise ValueError("prime list must be nonempty")
        if len(set(self.primes)) != len(self.primes):
            raise ValueError("duplicate primes")
        if not self.gens:
            raise ValueError("generator list must be nonempty")
        if any(g == 0 for g in self.gens):
            raise ValueError("generators must be nonzero")

    @staticmethod
    def of(primes, gens) -> "FracIdealSpec":
        return FracIdealSpec(tuple(primes), tuple(Fraction(g) for g in gens))


def padic_val(r: Rational, p: int) -> int:
    """Exponent of p in the nonzero rational r (negative for denominators)."""
    r = Fraction(r)
    if r == 0:
        raise ValueError("valuation of zero is undefined here")
    if p < 2:
        raise ValueError(f"{p} is not a prime")
    v = 0
    num, den = r.numerator, r.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def vector_of_module(spec: FracIdealSpec) -> ValVector:
    """Valuation vector of the generated module: entry p = -min_g v_p(g)."""
    entries = tuple(
        -min(padic_val(g, p) for g in spec.gens) for p in spec.primes
    )
    return ValVector(spec.primes, entries)


def module_member(f: ValVector, r: Rational) -> bool:
    """Is the nonzero rational r in the module with vector f?"""
    r = Fraction(r)
    if r == 0:
        raise ValueError("membership test is for nonzero elements")
    for i, p in enumerate(f.primes):
        e = f.entries[i]
        if not ext_le(ext_neg(e), padic_val(r, p)):
            return False
    return True


def colon_oracle(I: FracIdealSpec, J: FracIdealSpec) -> ValVector:
    """(I : J) computed as the intersection of x^{-1} I over generators x of J.

    Works entirely in rational arithmetic on finite exponents and never calls
    the vector-level colon.  For finitely generated nonzero I and J the colon
    is never the zero module, so a vector is always returned.
    """
    if I.primes != J.primes:
        raise ValueError("prime lists differ")
    vI = [-min(padic_val(g, p) for g in I.gens) for p in I.primes]
    entries = []
    for i, p in enumerate(I.primes):
        # x^{-1} I has negated-valuation vector vI + v_p(x)
        entries.append(min(vI[i] + padic_val(x, p) for x in J.gens))
    return ValVector(I.primes, tuple(entries))


def product_spec(I: FracIdealSpec, J: FracIdealSpec) -> FracIdealSpec:
    """Generators of the product ideal: all pairwise generator products."""
    if I.primes != J.primes:
        raise ValueError("prime lists differ")
    return FracIdealSpec(I.primes, tuple(a * b for a in I.gens for b in J.gens))


def parse_rational(text: str) -> Fraction:
    """Parse 'a/b' or an integer literal into an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational {text!r}") from exc
