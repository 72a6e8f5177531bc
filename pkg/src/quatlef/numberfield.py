"""Totally real base fields and their exact zeta data.

Native support covers the rationals and real quadratic fields, where prime
splitting is decided by the Kronecker symbol and zeta values at negative
odd integers come from (generalized) Bernoulli numbers. Any other totally
real field enters through an external descriptor that supplies the degree,
discriminant, a splitting table and a table of zeta values; descriptors
with fewer real places than the degree are legal and make every downstream
invariant vanish.

Ideals are formal products of prime symbols. Nothing here models rings of
integers, units or class groups: every formula downstream consumes only
norms, exponents and ramification membership.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from .errors import ExternalFieldError, ValidationError
from .exact import bernoulli_poly_eval, parse_rational, riemann_zeta_neg

__all__ = [
    "PrimeIdeal",
    "Ideal",
    "TotallyRealField",
    "QuadraticCharacter",
    "is_prime",
    "factorize",
    "kronecker_symbol",
    "kronecker",
    "is_fundamental_discriminant",
    "split_prime",
    "ideal_from_integer",
    "gen_bernoulli",
    "dedekind_zeta_neg",
    "zeta_f_positive_even_numeric",
    "zeta_truncation_bound",
]


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorisation of n >= 1 as sorted (p, exponent) pairs."""
    if n < 1:
        raise ValidationError("can only factor positive integers")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def _squarefree(n: int) -> bool:
    return all(e == 1 for _, e in factorize(abs(n))) if n != 0 else False


def _jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n."""
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def kronecker_symbol(a: int, n: int) -> int:
    """Kronecker symbol (a/n), completely multiplicative in both slots."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -1
    e = 0
    while n % 2 == 0:
        n //= 2
        e += 1
    if e:
        if a % 2 == 0:
            return 0
        if e % 2 == 1 and a % 8 in (3, 5):
            sign = -sign
    return sign * _jacobi(a, n)


def is_fundamental_discriminant(D: int) -> bool:
    """True for D = 1, squarefree D = 1 mod 4, or D = 4m with squarefree
    m = 2, 3 mod 4."""
    if D % 4 == 1:
        return _squarefree(D)
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and _squarefree(m)
    return False


def kronecker(D: int, m: int) -> int:
    """Quadratic character value (D/m) for a fundamental discriminant D."""
    if not is_fundamental_discriminant(D):
        raise ValidationError(f"{D} is not a fundamental discriminant")
    return kronecker_symbol(D, m)


@dataclass(frozen=True)
class QuadraticCharacter:
    """The quadratic character attached to a fundamental discriminant."""

    fundamental_discriminant: int

    def __post_init__(self) -> None:
        if not is_fundamental_discriminant(self.fundamental_discriminant):
            raise ValidationError(
                f"{self.fundamental_discriminant} is not a fundamental discriminant"
            )

    @property
    def conductor(self) -> int:
        return abs(self.fundamental_discriminant)

    def __call__(self, m: int) -> int:
        return kronecker_symbol(self.fundamental_discriminant, m)


@dataclass(frozen=True, order=True)
class PrimeIdeal:
    """A prime of the base field, recorded by residue data only.

    The norm p^f is derived, e is the ramification index over p, and the
    label distinguishes conjugate primes above a split p. The label carries
    no arithmetic content: every formula downstream consumes the norm only.
    """

    p: int
    f: int = 1
    e: int = 1
    label: str = ""

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValidationError(f"residue characteristic {self.p} is not prime")
        if self.f < 1 or self.e < 1:
            raise ValidationError("residue degree and ramification index must be >= 1")

    @property
    def norm(self) -> int:
        return self.p**self.f

    def __str__(self) -> str:
        base = f"{self.p}:{self.f}:{self.e}"
        return f"{base}:{self.label}" if self.label else base


_KIND_RATIONALS = "rationals"
_KIND_QUADRATIC = "real-quadratic"
_KIND_EXTERNAL = "external"

_DESCRIPTOR_KEYS = {
    "degree",
    "abs_discriminant",
    "num_real_places",
    "zeta_neg",
    "splitting",
}


@dataclass(frozen=True)
class TotallyRealField:
    """Base field descriptor: the rationals, a real quadratic field, or
    externally supplied data for anything else.

    For the native kinds every entry is computed, never user-supplied.
    External data is trusted but checked for internal consistency: each
    listed prime must satisfy sum(e*f) = degree, and when the field is
    totally real each zeta table entry must be nonzero of sign
    (-1)^(j*degree).
    """

    kind: str
    d: int = 0
    degree: int = 1
    abs_discriminant: int = 1
    num_real_places: int = 1
    zeta_neg_table: tuple[Fraction, ...] = ()
    splitting_table: tuple[tuple[int, tuple[tuple[int, int], ...]], ...] = ()

    @classmethod
    def rationals(cls) -> "TotallyRealField":
        return cls(kind=_KIND_RATIONALS)

    @classmethod
    def real_quadratic(cls, d: int) -> "TotallyRealField":
        if d < 2 or not _squarefree(d):
            raise ValidationError("real quadratic field needs squarefree d > 1")
        disc = d if d % 4 == 1 else 4 * d
        return cls(
            kind=_KIND_QUADRATIC,
            d=d,
            degree=2,
            abs_discriminant=disc,
            num_real_places=2,
        )

    @classmethod
    def external(
        cls,
        degree: int,
        abs_discriminant: int,
        num_real_places: int,
        zeta_neg: tuple[Fraction, ...] = (),
        splitting: dict[int, list[tuple[int, int]]] | None = None,
    ) -> "TotallyRealField":
        if degree < 1:
            raise ValidationError("degree must be >= 1")
        if abs_discriminant < 1:
            raise ValidationError("absolute discriminant must be >= 1")
        if not 0 <= num_real_places <= degree:
            raise ValidationError("number of real places must lie in [0, degree]")
        zeta_neg = tuple(Fraction(v) for v in zeta_neg)
        if num_real_places == degree:
            for idx, value in enumerate(zeta_neg):
                j = idx + 1
                expected_positive = (j * degree) % 2 == 0
                if value == 0 or (value > 0) != expected_positive:
                    raise ValidationError(
                        f"zeta value for j={j} must be nonzero of sign"
                        f" (-1)^(j*degree); got {value}"
                    )
        table = []
        for p, pairs in sorted((splitting or {}).items()):
            if not is_prime(p):
                raise ValidationError(f"splitting table key {p} is not prime")
            pairs = tuple((int(f), int(e)) for f, e in pairs)
            if not pairs or any(f < 1 or e < 1 for f, e in pairs):
                raise ValidationError(f"invalid splitting data above {p}")
            if sum(e * f for f, e in pairs) != degree:
                raise ValidationError(
                    f"splitting above {p} violates sum(e*f) = degree"
                )
            table.append((p, pairs))
        return cls(
            kind=_KIND_EXTERNAL,
            degree=degree,
            abs_discriminant=abs_discriminant,
            num_real_places=num_real_places,
            zeta_neg_table=zeta_neg,
            splitting_table=tuple(table),
        )

    @classmethod
    def from_descriptor(cls, data: dict) -> "TotallyRealField":
        unknown = set(data) - _DESCRIPTOR_KEYS
        if unknown:
            raise ValidationError(f"unknown descriptor keys: {sorted(unknown)}")
        for key in ("degree", "abs_discriminant", "num_real_places"):
            if key not in data:
                raise ValidationError(f"descriptor missing key {key!r}")
        zeta_neg = tuple(parse_rational(v) for v in data.get("zeta_neg", ()))
        splitting = {
            int(p): [tuple(pair) for pair in pairs]
            for p, pairs in data.get("splitting", {}).items()
        }
        return cls.external(
            degree=int(data["degree"]),
            abs_discriminant=int(data["abs_discriminant"]),
            num_real_places=int(data["num_real_places"]),
            zeta_neg=zeta_neg,
            splitting=splitting,
        )

    @classmethod
    def from_json_file(cls, path: str | Path) -> "TotallyRealField":
        with open(path, encoding="utf-8") as handle:
            return cls.from_descriptor(json.load(handle))

    @property
    def is_totally_real(self) -> bool:
        return self.num_real_places == self.degree

    @property
    def fundamental_discriminant(self) -> int:
        if self.kind == _KIND_RATIONALS:
            return 1
        if self.kind == _KIND_QUADRATIC:
            return self.abs_discriminant
        raise ValidationError("external fields carry no quadratic character")

    def character(self) -> QuadraticCharacter:
        if self.kind != _KIND_QUADRATIC:
            raise ValidationError("only real quadratic fields have a character here")
        return QuadraticCharacter(self.fundamental_discriminant)

    def describe(self) -> str:
        if self.kind == _KIND_RATIONALS:
            return "Q"
        if self.kind == _KIND_QUADRATIC:
            return f"Q(sqrt({self.d}))"
        return f"external(degree={self.degree}, disc={self.abs_discriminant})"


def split_prime(field: TotallyRealField, p: int) -> list[PrimeIdeal]:
    """The primes of the field above the rational prime p."""
    if not is_prime(p):
        raise ValidationError(f"{p} is not prime")
    if field.kind == _KIND_RATIONALS:
        return [PrimeIdeal(p)]
    if field.kind == _KIND_QUADRATIC:
        symbol = kronecker_symbol(field.abs_discriminant, p)
        if symbol == 1:
            return [PrimeIdeal(p, 1, 1, "a"), PrimeIdeal(p, 1, 1, "b")]
        if symbol == -1:
            return [PrimeIdeal(p, 2, 1)]
        return [PrimeIdeal(p, 1, 2)]
    for q, pairs in field.splitting_table:
        if q == p:
            primes = []
            for idx, (f, e) in enumerate(pairs):
                label = chr(ord("a") + idx) if len(pairs) > 1 else ""
                primes.append(PrimeIdeal(p, f, e, label))
            return primes
    raise ExternalFieldError(f"prime {p} missing from the external splitting table")


@dataclass(frozen=True)
class Ideal:
    """Formal product of primes of one base field with positive exponents.

    The empty product is the unit ideal, which the engine rejects wherever
    a proper level is required.
    """

    field: TotallyRealField
    factors: tuple[tuple[PrimeIdeal, int], ...] = ()

    def __post_init__(self) -> None:
        merged: dict[PrimeIdeal, int] = {}
        for prime, exponent in self.factors:
            if not isinstance(prime, PrimeIdeal):
                raise ValidationError("ideal factors must be prime ideals")
            if exponent < 1:
                raise ValidationError("ideal exponents must be >= 1")
            merged[prime] = merged.get(prime, 0) + exponent
        object.__setattr__(self, "factors", tuple(sorted(merged.items())))

    @property
    def is_unit(self) -> bool:
        return not self.factors

    def norm(self) -> int:
        total = 1
        for prime, exponent in self.factors:
            total *= prime.norm**exponent
        return total

    def primes(self) -> tuple[PrimeIdeal, ...]:
        return tuple(prime for prime, _ in self.factors)

    def valuation(self, prime: PrimeIdeal) -> int:
        for candidate, exponent in self.factors:
            if candidate == prime:
                return exponent
        return 0

    def divides(self, other: "Ideal") -> bool:
        """True when every exponent of self is bounded by the one in other."""
        if self.field != other.field:
            raise ValidationError("ideal divisibility needs a common base field")
        return all(exp <= other.valuation(prime) for prime, exp in self.factors)

    def __str__(self) -> str:
        if self.is_unit:
            return "(1)"
        parts = []
        for prime, exponent in self.factors:
            parts.append(f"{prime}^{exponent}" if exponent > 1 else str(prime))
        return ",".join(parts)


def ideal_from_integer(field: TotallyRealField, n: int) -> Ideal:
    """The principal ideal generated by the rational integer n >= 2."""
    if n < 2:
        raise ValidationError("level integer must be >= 2")
    pairs = []
    for p, a in factorize(n):
        for prime in split_prime(field, p):
            pairs.append((prime, prime.e * a))
    return Ideal(field, tuple(pairs))


@lru_cache(maxsize=None)
def gen_bernoulli(k: int, chi: QuadraticCharacter) -> Fraction:
    """Generalized Bernoulli number B_{k,chi} for a quadratic character.

    B_{k,chi} = f^(k-1) * sum_{a=1}^{f} chi(a) B_k(a/f) with f the
    conductor; it computes L(1-k, chi) = -B_{k,chi}/k.
    """
    if k < 1:
        raise ValidationError("generalized Bernoulli index must be >= 1")
    f = chi.conductor
    total = Fraction(0)
    for a in range(1, f + 1):
        value = chi(a)
        if value:
            total += value * bernoulli_poly_eval(k, Fraction(a, f))
    return f ** (k - 1) * total


@lru_cache(maxsize=None)
def dedekind_zeta_neg(field: TotallyRealField, j: int) -> Fraction:
    """Exact zeta value of the field at 1 - 2j.

    Rationals use the Bernoulli formula directly; real quadratic fields
    multiply in L(1-2j, chi) = -B_{2j,chi}/(2j); external fields read their
    table. For totally real fields the result is a nonzero rational of
    sign (-1)^(j * degree).
    """
    if j < 1:
        raise ValidationError("zeta argument index must be >= 1")
    if field.kind == _KIND_RATIONALS:
        return riemann_zeta_neg(j)
    if field.kind == _KIND_QUADRATIC:
        l_value = -gen_bernoulli(2 * j, field.character()) / (2 * j)
        return riemann_zeta_neg(j) * l_value
    if j > len(field.zeta_neg_table):
        raise ExternalFieldError(
            f"external zeta table has no entry for j={j}"
        )
    return field.zeta_neg_table[j - 1]


@lru_cache(maxsize=64)
def _truncated_dirichlet(discriminant: int, two_j: int, terms: int) -> float:
    """Truncated Dirichlet series sum_{m<=terms} chi(m) m^(-two_j).

    discriminant 0 means the trivial character (the Riemann series).
    """
    if discriminant == 0:
        return sum(m ** (-two_j) for m in range(1, terms + 1))
    period = abs(discriminant)
    table = [kronecker_symbol(discriminant, m) for m in range(period)]
    total = 0.0
    for m in range(1, terms + 1):
        c = table[m % period]
        if c:
            total += c * m ** (-two_j)
    return total


def zeta_truncation_bound(field: TotallyRealField, j: int, terms: int) -> float:
    """Absolute truncation error bound degree * terms^(1-2j) / (2j-1)."""
    return field.degree * terms ** (1 - 2 * j) / (2 * j - 1)


def zeta_f_positive_even_numeric(
    field: TotallyRealField, j: int, terms: int
) -> float:
    """Floating-point zeta value of the field at 2j by truncated series.

    The quadratic case multiplies the Riemann series by the character
    series. The absolute truncation error is bounded by
    ``zeta_truncation_bound(field, j, terms)``. Only natively supported
    fields are allowed (external descriptors carry no character).
    """
    if j < 1:
        raise ValidationError("zeta argument index must be >= 1")
    if terms < 100:
        raise ValidationError("need at least 100 series terms")
    if field.kind == _KIND_RATIONALS:
        return _truncated_dirichlet(0, 2 * j, terms)
    if field.kind == _KIND_QUADRATIC:
        return _truncated_dirichlet(0, 2 * j, terms) * _truncated_dirichlet(
            field.abs_discriminant, 2 * j, terms
        )
    raise ValidationError("numeric zeta needs a natively supported field")
