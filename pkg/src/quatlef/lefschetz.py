"""Closed-form invariants of principal congruence subgroups in inner
forms of the special linear group over a quaternion algebra.

The pieces, in the order they combine:

* ``m_factor`` builds the per-degree local factor
  ``M(j) = zeta_F(1-2j) * prod_{P | level} (1 - N(P)^(-2j))
  * prod_{P ramified, P not | level} (1 + (-1)^j N(P)^(-j))``.
* ``lefschetz_number`` multiplies the M factors with the prefactor
  ``2^(-r) N(level)^(n(2n+1)) d(D)^(n(n+1)/2) tr`` into the closed form.
* ``h1_signature_classes`` enumerates the fixed-point components as
  tuples of local signatures (p_v, q_v) with q_v even, one per ramified
  real place, and ``euler_char_fixed_component`` evaluates each
  component's Euler characteristic; summing them against the trace must
  reproduce the closed form, which is the package's central identity.
* ``congruence_index``, ``genus_fuchsian``, ``modular_form_dim`` and the
  Betti-bound helpers are the downstream corollaries.
* ``euler_char_adelic_numeric`` re-evaluates an Euler characteristic in
  floating point straight from the mass-formula shape (Weyl quotient,
  compact-group volume, modulus factor, local orders, zeta series), so
  the exact and numeric paths check each other through the functional
  equation.

Everything is a pure function of immutable values and safe to call
concurrently; batch evaluation may run rows in parallel.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import comb, factorial

from . import finitegrp
from .errors import NotFuchsianError, TorsionError, ValidationError
from .exact import SymbolicScalar
from .numberfield import (
    Ideal,
    TotallyRealField,
    dedekind_zeta_neg,
    ideal_from_integer,
    zeta_f_positive_even_numeric,
)
from .quaternion import QuaternionAlgebra

__all__ = [
    "SignatureClass",
    "LefschetzInput",
    "LefschetzReport",
    "EulerCharReport",
    "GenusReport",
    "check_torsion_necessary",
    "m_factor",
    "lefschetz_number",
    "h1_signature_classes",
    "weyl_quotient",
    "euler_char_fixed_component",
    "lefschetz_via_decomposition",
    "congruence_index",
    "genus_fuchsian",
    "modular_form_dim",
    "betti_growth_exponent",
    "betti_lower_bound",
    "vol_sp_compact",
    "global_modulus_factor",
    "fixed_point_space_dim",
    "euler_char_adelic_numeric",
]

WARN_TORSION_UNVERIFIED = (
    "torsion-freeness unverified: the necessary condition (-1 != 1 mod level)"
    " holds but is not sufficient"
)
WARN_TORSION_OVERRIDDEN = (
    "torsion necessary condition FAILED (-1 = 1 mod level): the congruence"
    " group has 2-torsion; value computed formally under assume_torsion_free"
)
ZERO_COMPLEX_PLACE = "base field has a complex place"


@dataclass(frozen=True)
class SignatureClass:
    """Tuple of local signatures (p_v, q_v), one per ramified real place.

    Membership in the component-index set requires every q_v to be even;
    all pairs must sum to the same matrix size n.
    """

    signatures: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        sigs = tuple((int(p), int(q)) for p, q in self.signatures)
        sums = {p + q for p, q in sigs}
        if len(sums) > 1:
            raise ValidationError("all signatures must sum to the same n")
        for p, q in sigs:
            if p < 0 or q < 0:
                raise ValidationError("signature entries must be nonnegative")
            if q % 2:
                raise ValidationError(f"signature ({p},{q}) has odd q")
        object.__setattr__(self, "signatures", sigs)

    def __len__(self) -> int:
        return len(self.signatures)

    def __iter__(self):
        return iter(self.signatures)

    def binomial_factor(self, n: int) -> int:
        value = 1
        for p, _q in self.signatures:
            value *= comb(n, p)
        return value

    def __str__(self) -> str:
        return ";".join(f"{p},{q}" for p, q in self.signatures) or "-"


@dataclass(frozen=True)
class LefschetzInput:
    """Validated input bundle for the closed-form evaluation.

    trace_w is the trace of the induced involution on the coefficient
    module, supplied by the caller (1 for trivial coefficients). The
    totally definite case needs n >= 2 for strong approximation.
    """

    field: TotallyRealField
    algebra: QuaternionAlgebra
    n: int
    level: Ideal
    trace_w: Fraction = Fraction(1)
    assume_torsion_free: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "trace_w", Fraction(self.trace_w))
        if self.algebra.field != self.field:
            raise ValidationError("algebra is defined over a different field")
        _validate_setting(self.algebra, self.n, self.level)


@dataclass(frozen=True)
class LefschetzReport:
    """Value of the closed form plus its factor-by-factor breakdown.

    The value always equals two_power * level_norm_power * disc_power
    * trace_w * prod(m_factors) exactly; when the base field has a
    complex place every m factor is zero and zero_reason says so.
    """

    value: Fraction
    n: int
    trace_w: Fraction
    two_power: Fraction
    level_norm_power: int
    disc_power: int
    m_factors: tuple[Fraction, ...]
    warnings: tuple[str, ...] = ()
    zero_reason: str | None = None

    def factor_product(self) -> Fraction:
        product = self.two_power * self.level_norm_power * self.disc_power
        product *= self.trace_w
        for m in self.m_factors:
            product *= m
        return product


@dataclass(frozen=True)
class EulerCharReport:
    """Euler characteristic of one fixed-point component with breakdown."""

    value: Fraction
    n: int
    signature_class: SignatureClass
    binomial_factor: int
    two_power: Fraction
    level_norm_power: int
    disc_power: int
    m_factors: tuple[Fraction, ...]
    warnings: tuple[str, ...] = ()
    zero_reason: str | None = None

    def factor_product(self) -> Fraction:
        product = self.two_power * self.level_norm_power * self.disc_power
        product *= self.binomial_factor
        for m in self.m_factors:
            product *= m
        return product


@dataclass(frozen=True)
class GenusReport:
    """Genus data of the compact quotient surface in the Fuchsian case."""

    genus: int
    b1: int
    chi: int
    warnings: tuple[str, ...] = ()


def _validate_setting(algebra: QuaternionAlgebra, n: int, level: Ideal) -> None:
    if n < 1:
        raise ValidationError("matrix size n must be >= 1")
    if level.field != algebra.field:
        raise ValidationError("level ideal lives in a different field")
    if level.is_unit:
        raise ValidationError("level must be a proper ideal")
    if algebra.is_totally_definite() and n < 2:
        raise ValidationError(
            "totally definite algebras need n >= 2 (strong approximation)"
        )


def check_torsion_necessary(level: Ideal) -> bool:
    """Necessary torsion-freeness condition: -1 != 1 modulo the level.

    Equivalently the level must not divide (2). Passing this check does
    not certify torsion-freeness; failing it refutes it.
    """
    if level.is_unit:
        raise ValidationError("level must be a proper ideal")
    two = ideal_from_integer(level.field, 2)
    return not level.divides(two)


def _torsion_gate(level: Ideal, assume_torsion_free: bool) -> tuple[str, ...]:
    if check_torsion_necessary(level):
        return (WARN_TORSION_UNVERIFIED,)
    if not assume_torsion_free:
        raise TorsionError(
            "level divides (2), so the congruence group has 2-torsion;"
            " pass assume_torsion_free to evaluate the formula anyway"
        )
    return (WARN_TORSION_OVERRIDDEN,)


def m_factor(j: int, level: Ideal, algebra: QuaternionAlgebra) -> Fraction:
    """Local factor M(j) of the closed form; see the module docstring."""
    if j < 1:
        raise ValidationError("factor index j must be >= 1")
    if level.field != algebra.field:
        raise ValidationError("level ideal lives in a different field")
    if level.is_unit:
        raise ValidationError("level must be a proper ideal")
    value = dedekind_zeta_neg(algebra.field, j)
    for prime, _exp in level.factors:
        value *= 1 - Fraction(1, prime.norm ** (2 * j))
    for prime in algebra.ram_finite:
        if level.valuation(prime) == 0:
            value *= 1 + Fraction((-1) ** j, prime.norm**j)
    return value


def lefschetz_number(inp: LefschetzInput) -> LefschetzReport:
    """Closed form for the Lefschetz number of the symplectic involution.

    Zero exactly when the base field has a complex place or trace_w is 0;
    otherwise 2^(-r) N(level)^(n(2n+1)) d(D)^(n(n+1)/2) tr prod_j M(j).
    """
    warnings = _torsion_gate(inp.level, inp.assume_torsion_free)
    n, algebra = inp.n, inp.algebra
    two_power = Fraction(1, 2**algebra.r)
    level_norm_power = inp.level.norm() ** (n * (2 * n + 1))
    disc_power = algebra.signed_reduced_discriminant() ** (n * (n + 1) // 2)
    if not inp.field.is_totally_real:
        return LefschetzReport(
            value=Fraction(0),
            n=n,
            trace_w=inp.trace_w,
            two_power=two_power,
            level_norm_power=level_norm_power,
            disc_power=disc_power,
            m_factors=(Fraction(0),) * n,
            warnings=warnings,
            zero_reason=ZERO_COMPLEX_PLACE,
        )
    m_factors = tuple(m_factor(j, inp.level, algebra) for j in range(1, n + 1))
    value = two_power * level_norm_power * disc_power * inp.trace_w
    for m in m_factors:
        value *= m
    return LefschetzReport(
        value=value,
        n=n,
        trace_w=inp.trace_w,
        two_power=two_power,
        level_norm_power=level_norm_power,
        disc_power=disc_power,
        m_factors=m_factors,
        warnings=warnings,
    )


def h1_signature_classes(r: int, n: int) -> list[SignatureClass]:
    """All signature tuples ((p_v, q_v))_{v=1..r} with p+q = n, q even.

    There are (floor(n/2) + 1)^r of them, listed in lexicographic order
    of the q values.
    """
    if r < 0 or n < 1:
        raise ValidationError("need r >= 0 and n >= 1")
    classes = []
    choices = range(0, n + 1, 2)
    stack = [()]
    for _ in range(r):
        stack = [prefix + (q,) for prefix in stack for q in choices]
    for qs in stack:
        classes.append(SignatureClass(tuple((n - q, q) for q in qs)))
    return classes


def weyl_quotient(n: int, s: int, signature_class: SignatureClass) -> int:
    """Quotient of Weyl group orders: 2^(n*s) * prod_v C(n, p_v)."""
    if n < 1 or s < 0:
        raise ValidationError("need n >= 1 and s >= 0")
    for p, q in signature_class:
        if p + q != n:
            raise ValidationError("signature class does not match n")
    return 2 ** (n * s) * signature_class.binomial_factor(n)


def _validate_class(algebra: QuaternionAlgebra, n: int, cls: SignatureClass) -> None:
    if len(cls) != algebra.r:
        raise ValidationError(
            f"signature class has {len(cls)} entries, expected {algebra.r}"
        )
    for p, q in cls:
        if p + q != n:
            raise ValidationError("signature class does not match n")


def euler_char_fixed_component(
    algebra: QuaternionAlgebra,
    n: int,
    level: Ideal,
    signature_class: SignatureClass,
    assume_torsion_free: bool = False,
) -> EulerCharReport:
    """Euler characteristic of the fixed-point component of one signature
    class: 2^(-nr) N(level)^(n(2n+1)) d(D)^(n(n+1)/2) prod_v C(n, p_v)
    prod_j M(j).

    Nonzero exactly when the base field is totally real, and then of sign
    (-1)^(s n(n+1)/2).
    """
    _validate_setting(algebra, n, level)
    _validate_class(algebra, n, signature_class)
    warnings = _torsion_gate(level, assume_torsion_free)
    r = algebra.r
    two_power = Fraction(1, 2 ** (n * r))
    level_norm_power = level.norm() ** (n * (2 * n + 1))
    disc_power = algebra.signed_reduced_discriminant() ** (n * (n + 1) // 2)
    binomial = signature_class.binomial_factor(n)
    if not algebra.field.is_totally_real:
        return EulerCharReport(
            value=Fraction(0),
            n=n,
            signature_class=signature_class,
            binomial_factor=binomial,
            two_power=two_power,
            level_norm_power=level_norm_power,
            disc_power=disc_power,
            m_factors=(Fraction(0),) * n,
            warnings=warnings,
            zero_reason=ZERO_COMPLEX_PLACE,
        )
    m_factors = tuple(m_factor(j, level, algebra) for j in range(1, n + 1))
    value = two_power * level_norm_power * disc_power * binomial
    for m in m_factors:
        value *= m
    expected_sign = (-1) ** (algebra.s * n * (n + 1) // 2)
    assert value != 0 and (value > 0) == (expected_sign > 0), (
        f"sign law violated: chi = {value}, expected sign {expected_sign}"
    )
    return EulerCharReport(
        value=value,
        n=n,
        signature_class=signature_class,
        binomial_factor=binomial,
        two_power=two_power,
        level_norm_power=level_norm_power,
        disc_power=disc_power,
        m_factors=m_factors,
        warnings=warnings,
    )


def lefschetz_via_decomposition(inp: LefschetzInput) -> Fraction:
    """Lefschetz number as the trace-weighted sum of component Euler
    characteristics over all signature classes.

    Independent route: must agree with lefschetz_number exactly.
    """
    total = Fraction(0)
    for cls in h1_signature_classes(inp.algebra.r, inp.n):
        report = euler_char_fixed_component(
            inp.algebra, inp.n, inp.level, cls, inp.assume_torsion_free
        )
        total += report.value
    return total * inp.trace_w


def congruence_index(algebra: QuaternionAlgebra, n: int, level: Ideal) -> int:
    """Index of the principal congruence subgroup of the given level.

    Product over the level's primes of the lifted local group orders; the
    result is an integer by construction.
    """
    if level.field != algebra.field:
        raise ValidationError("level ideal lives in a different field")
    if level.is_unit:
        raise ValidationError("level must be a proper ideal")
    if n < 1:
        raise ValidationError("matrix size n must be >= 1")
    ram = set(algebra.ram_finite)
    index = 1
    for prime, exponent in level.factors:
        kind = "ramified" if prime in ram else "split"
        index *= finitegrp.local_index_factor(prime.norm, kind, n, exponent)
    return index


def genus_fuchsian(
    algebra: QuaternionAlgebra,
    level: Ideal,
    assume_torsion_free: bool = False,
) -> GenusReport:
    """Genus of the compact quotient Riemann surface in the Fuchsian case.

    g = 1 + 2^(-degree) N(level)^3 |d(D) zeta_F(-1)|
    prod_{P | level} (1 - N(P)^-2) prod_{P ramified, P not | level}
    (1 - N(P)^-1), and b1 = 2g. The Euler characteristic 2 - 2g must agree
    with the n = 1 closed form at trace 1, which is asserted.
    """
    field = algebra.field
    if not field.is_totally_real:
        raise NotFuchsianError("base field is not totally real")
    if not algebra.is_fuchsian():
        raise NotFuchsianError(
            "algebra must be a division algebra split at exactly one real place"
        )
    _validate_setting(algebra, 1, level)
    warnings = _torsion_gate(level, assume_torsion_free)
    g = Fraction(1, 2**field.degree) * level.norm() ** 3
    g *= abs(
        Fraction(algebra.signed_reduced_discriminant())
        * dedekind_zeta_neg(field, 1)
    )
    for prime, _exp in level.factors:
        g *= 1 - Fraction(1, prime.norm**2)
    for prime in algebra.ram_finite:
        if level.valuation(prime) == 0:
            g *= 1 - Fraction(1, prime.norm)
    g += 1
    assert g.denominator == 1, f"genus came out non-integral: {g}"
    genus = g.numerator
    closed = lefschetz_number(
        LefschetzInput(
            field=field,
            algebra=algebra,
            n=1,
            level=level,
            trace_w=Fraction(1),
            assume_torsion_free=assume_torsion_free,
        )
    ).value
    assert closed == 2 - 2 * genus, (
        f"genus formula disagrees with the closed form: chi={closed}, g={genus}"
    )
    if genus < 2 and check_torsion_necessary(level):
        warnings = warnings + (
            f"genus {genus} is below 2 although the torsion check passed",
        )
    return GenusReport(genus=genus, b1=2 * genus, chi=2 - 2 * genus, warnings=warnings)


def modular_form_dim(genus: int, k: int) -> int:
    """Dimension of weight-k cusp forms for a torsion-free cocompact
    Fuchsian group of the given quotient genus: g for k = 2, and
    (k-1)(g-1) for even k >= 4."""
    if k < 2 or k % 2:
        raise ValidationError("weight must be an even integer >= 2")
    if genus < 0:
        raise ValidationError("genus must be >= 0")
    if k == 2:
        return genus
    return (k - 1) * (genus - 1)


def betti_growth_exponent(n: int) -> Fraction:
    """Exponent n(2n+1)/(4n^2-1) governing the lower bound for the total
    Betti number in terms of the congruence index."""
    if n < 1:
        raise ValidationError("matrix size n must be >= 1")
    return Fraction(n * (2 * n + 1), 4 * n * n - 1)


def betti_lower_bound(inp: LefschetzInput) -> Fraction:
    """|closed form at trace 1|: a certified lower bound for the total
    Betti number of the congruence group."""
    return abs(lefschetz_number(replace(inp, trace_w=Fraction(1))).value)


def vol_sp_compact(n: int) -> SymbolicScalar:
    """Volume of the rank-n compact symplectic group for the trace form:
    prod_{j=1}^{n} (2 pi)^(2j) / (2 (2j-1)!)."""
    if n < 1:
        raise ValidationError("rank must be >= 1")
    coeff = Fraction(1)
    for j in range(1, n + 1):
        coeff *= Fraction(2 ** (2 * j), 2 * factorial(2 * j - 1))
    return SymbolicScalar(coeff, pi_exp=n * (n + 1))


def global_modulus_factor(algebra: QuaternionAlgebra, n: int) -> Fraction:
    """Product of the local volume normalisation constants over the
    finite places: 2^(n degree) (-1)^(r n(n+1)/2) d(D)^(-n(n+1)/2),
    a positive rational equal to
    2^(n degree) prod_{P ramified} N(P)^(-n(n+1)/2)."""
    if n < 1:
        raise ValidationError("matrix size n must be >= 1")
    e = n * (n + 1) // 2
    sign = (-1) ** (algebra.r * e)
    return Fraction(
        sign * 2 ** (n * algebra.field.degree),
        algebra.signed_reduced_discriminant() ** e,
    )


def fixed_point_space_dim(algebra: QuaternionAlgebra, n: int, cls: SignatureClass) -> int:
    """Dimension s n(n+1) + sum_v 4 p_v q_v of the symmetric space of the
    twisted fixed-point group; always even."""
    _validate_class(algebra, n, cls)
    dim = algebra.s * n * (n + 1)
    for p, q in cls:
        dim += 4 * p * q
    return dim


def euler_char_adelic_numeric(
    algebra: QuaternionAlgebra,
    n: int,
    level: Ideal,
    signature_class: SignatureClass,
    terms: int,
) -> float:
    """Floating-point Euler characteristic straight from the adelic mass
    formula, independent of the exact path.

    (-1)^p |d_F|^(d/2) * (Weyl quotient) * vol^(-degree) * mf^(-1)
    * prod_P N(P)^(d a_P) / |U_P|, with d = n(2n+1), 2p the symmetric
    space dimension, vol the compact symplectic volume, mf the global
    modulus factor, and the local orders taken from the finite-group
    module; the convergent part of the local product is the zeta values
    at 2, 4, ..., 2n evaluated by truncated series (Tamagawa number 1).
    """
    field = algebra.field
    if field.kind not in ("rationals", "real-quadratic"):
        raise ValidationError("numeric cross-check needs a natively supported field")
    if terms < 10**4:
        raise ValidationError("need at least 10^4 series terms")
    _validate_setting(algebra, n, level)
    _validate_class(algebra, n, signature_class)
    d = n * (2 * n + 1)
    dim_x = fixed_point_space_dim(algebra, n, signature_class)
    assert dim_x % 2 == 0
    sign = (-1) ** (dim_x // 2)
    disc_factor = float(field.abs_discriminant) ** (d / 2)
    weyl = weyl_quotient(n, algebra.s, signature_class)
    vol = vol_sp_compact(n).to_float() ** field.degree
    modulus = float(global_modulus_factor(algebra, n))
    local_exact = Fraction(level.norm() ** d)
    for prime, _exp in level.factors:
        q = prime.norm
        local_exact *= Fraction(finitegrp.sp_order(n, q), q**d)
    for prime in algebra.ram_finite:
        if level.valuation(prime) == 0:
            q = prime.norm
            local_exact *= Fraction(
                finitegrp.sp_order(n, q), finitegrp.ramified_local_order(n, q)
            )
    local = float(local_exact)
    for j in range(1, n + 1):
        local *= zeta_f_positive_even_numeric(field, j, terms)
    return sign * disc_factor * weyl / vol / modulus * local
