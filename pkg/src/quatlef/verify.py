"""Oracle-equivalence and invariant suites behind the ``verify`` command.

Each suite returns a list of (check name, ok, detail) triples. The checks
pin every closed form against an independent route: exhaustive
enumeration for the finite group orders and indices, the component
decomposition against the closed product formula, the functional equation
between exact negative zeta values and truncated series at positive even
integers, and the floating-point mass-formula path against the exact
Euler characteristics.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial, pi

from . import finitegrp, lefschetz, numberfield
from .lefschetz import (
    LefschetzInput,
    SignatureClass,
    euler_char_adelic_numeric,
    euler_char_fixed_component,
    h1_signature_classes,
    lefschetz_number,
    lefschetz_via_decomposition,
)
from .numberfield import (
    TotallyRealField,
    dedekind_zeta_neg,
    ideal_from_integer,
    zeta_f_positive_even_numeric,
)
from .quaternion import QuaternionAlgebra, hilbert_ramification_q

Check = tuple[str, bool, str]

DEFAULT_TERMS = 10**6
ADELIC_REL_TOL = 1e-5
FUNCTIONAL_REL_TOL = 1e-6


def _eq(name: str, got, want) -> Check:
    return (name, got == want, f"got {got}, want {want}")


def _close(name: str, got: float, want: float, rel: float) -> Check:
    ok = abs(got - want) <= rel * abs(want)
    return (name, ok, f"got {got!r}, want {want!r} within rel {rel}")


def _fields() -> dict[str, TotallyRealField]:
    return {
        "Q": TotallyRealField.rationals(),
        "Q(sqrt(5))": TotallyRealField.real_quadratic(5),
        "Q(sqrt(2))": TotallyRealField.real_quadratic(2),
    }


def _algebras_for(field: TotallyRealField) -> list[tuple[str, QuaternionAlgebra]]:
    """Split, a {2,3}-style ramified algebra, and a Hamilton-type algebra."""
    out = [("split", QuaternionAlgebra(field, (), 0))]
    if field.kind == "rationals":
        primes = tuple(
            numberfield.split_prime(field, p)[0] for p in (2, 3)
        )
        out.append(("ram23", QuaternionAlgebra(field, primes, 0)))
        out.append(("hamilton", QuaternionAlgebra(field, primes[:1], 1)))
    else:
        out.append(("hamilton", QuaternionAlgebra(field, (), 2)))
        prime2 = numberfield.split_prime(field, 2)[0]
        out.append(("ram2r1", QuaternionAlgebra(field, (prime2,), 1)))
    return out


def decomposition_grid() -> list[LefschetzInput]:
    """Valid inputs covering three fields, n <= 3, levels of norm <= 50."""
    grid: list[LefschetzInput] = []
    for field in _fields().values():
        max_level = 10 if field.degree == 1 else 7
        for _name, algebra in _algebras_for(field):
            for n in range(1, 4):
                if algebra.is_totally_definite() and n < 2:
                    continue
                for level_int in range(3, max_level + 1):
                    level = ideal_from_integer(field, level_int)
                    if level.norm() > 50:
                        continue
                    if not lefschetz.check_torsion_necessary(level):
                        continue
                    grid.append(
                        LefschetzInput(
                            field=field,
                            algebra=algebra,
                            n=n,
                            level=level,
                            trace_w=Fraction(1),
                        )
                    )
    return grid


def suite_bernoulli() -> list[Check]:
    from .exact import bernoulli, bernoulli_poly_eval, riemann_zeta_neg

    checks = [
        _eq("B_0", bernoulli(0), Fraction(1)),
        _eq("B_1", bernoulli(1), Fraction(-1, 2)),
        _eq("B_12", bernoulli(12), Fraction(-691, 2730)),
        _eq("B_2(1/5)", bernoulli_poly_eval(2, Fraction(1, 5)), Fraction(1, 150)),
        _eq("B_4(2/5)", bernoulli_poly_eval(4, Fraction(2, 5)), Fraction(91, 3750)),
        _eq("zeta(-1)", riemann_zeta_neg(1), Fraction(-1, 12)),
        _eq("zeta(-3)", riemann_zeta_neg(2), Fraction(1, 120)),
        _eq("zeta(-5)", riemann_zeta_neg(3), Fraction(-1, 252)),
    ]
    for k in range(3, 40, 2):
        checks.append(_eq(f"B_{k} = 0", bernoulli(k), Fraction(0)))
    for m in range(1, 25):
        total = sum(comb(m + 1, j) * bernoulli(j) for j in range(m + 1))
        checks.append(_eq(f"recurrence m={m}", total, Fraction(0)))
    return checks


def suite_zeta() -> list[Check]:
    fields = _fields()
    q5 = fields["Q(sqrt(5))"]
    checks = [
        _eq("zeta_Q(sqrt(5))(-1)", dedekind_zeta_neg(q5, 1), Fraction(1, 30)),
        _eq("zeta_Q(sqrt(5))(-3)", dedekind_zeta_neg(q5, 2), Fraction(1, 60)),
        _eq(
            "zeta_Q(sqrt(2))(-1)",
            dedekind_zeta_neg(fields["Q(sqrt(2))"], 1),
            Fraction(1, 12),
        ),
        _eq(
            "B_{2,chi_5}",
            numberfield.gen_bernoulli(2, q5.character()),
            Fraction(4, 5),
        ),
        _eq(
            "B_{4,chi_5}",
            numberfield.gen_bernoulli(4, q5.character()),
            Fraction(-8),
        ),
        _eq(
            "B_{1,chi_5}",
            numberfield.gen_bernoulli(1, q5.character()),
            Fraction(0),
        ),
    ]
    for label, field in fields.items():
        for j in range(1, 9):
            value = dedekind_zeta_neg(field, j)
            sign_ok = value != 0 and (value > 0) == ((j * field.degree) % 2 == 0)
            checks.append(
                (f"sign zeta_{label}(1-2*{j})", sign_ok, f"value {value}")
            )
    return checks


def suite_functional_equation(terms: int = DEFAULT_TERMS) -> list[Check]:
    checks = []
    for label, field in _fields().items():
        for j in (1, 2):
            lhs = zeta_f_positive_even_numeric(field, j, terms)
            lhs *= float(field.abs_discriminant) ** ((4 * j - 1) / 2)
            lhs *= (2 * factorial(2 * j - 1) / (2 * pi) ** (2 * j)) ** field.degree
            rhs = (-1) ** (j * field.degree) * float(dedekind_zeta_neg(field, j))
            checks.append(
                _close(
                    f"functional equation {label} j={j}",
                    lhs,
                    rhs,
                    FUNCTIONAL_REL_TOL,
                )
            )
    return checks


def suite_kronecker() -> list[Check]:
    checks = [
        _eq("(5/2)", numberfield.kronecker(5, 2), -1),
        _eq("(5/4)", numberfield.kronecker(5, 4), 1),
        _eq("(5/10)", numberfield.kronecker(5, 10), 0),
    ]
    for disc in (5, 8, 12, 13):
        mult_ok = all(
            numberfield.kronecker_symbol(disc, m * k)
            == numberfield.kronecker_symbol(disc, m)
            * numberfield.kronecker_symbol(disc, k)
            for m in range(1, 40)
            for k in range(1, 40)
        )
        checks.append(
            (f"multiplicativity of ({disc}/.)", mult_ok, "checked m, k < 40")
        )
        period_ok = all(
            numberfield.kronecker_symbol(disc, m)
            == numberfield.kronecker_symbol(disc, m + abs(disc))
            for m in range(1, 200)
        )
        checks.append((f"period of ({disc}/.)", period_ok, f"period |{disc}|"))
    return checks


def suite_hilbert() -> list[Check]:
    checks = []
    bad = 0
    for a in range(-20, 21):
        if a == 0:
            continue
        for b in range(-20, 21):
            if b == 0:
                continue
            algebra = hilbert_ramification_q(a, b)
            if (len(algebra.ram_finite) + algebra.ram_real_count) % 2:
                bad += 1
    checks.append(
        ("parity over [-20,20]^2", bad == 0, f"{bad} violations")
    )
    hamilton = hilbert_ramification_q(-1, -1)
    checks.append(
        _eq(
            "(-1,-1) ramification",
            ([p.p for p in hamilton.ram_finite], hamilton.ram_real_count),
            ([2], 1),
        )
    )
    split = hilbert_ramification_q(1, 7)
    checks.append(_eq("(1,7) splits", split.is_division(), False))
    minus3 = hilbert_ramification_q(-1, -3)
    checks.append(
        _eq(
            "(-1,-3) ramification",
            ([p.p for p in minus3.ram_finite], minus3.ram_real_count),
            ([3], 1),
        )
    )
    return checks


def suite_finite_orders() -> list[Check]:
    checks = []
    for m, q in ((2, 2), (2, 3), (2, 5), (2, 7), (3, 2)):
        checks.append(
            _eq(
                f"sl_order({m},{q})",
                finitegrp.sl_order(m, q),
                finitegrp.brute_force_sl(m, q),
            )
        )
    for n, q in ((1, 2), (1, 3), (1, 5), (2, 2)):
        checks.append(
            _eq(
                f"sp_order({n},{q})",
                finitegrp.sp_order(n, q),
                finitegrp.brute_force_sp(n, q),
            )
        )
    for q in (2, 3, 5, 7):
        checks.append(
            _eq(
                f"sp_order(1,{q}) = sl_order(2,{q})",
                finitegrp.sp_order(1, q),
                finitegrp.sl_order(2, q),
            )
        )
    for q in (2, 3, 5):
        checks.append(
            _eq(
                f"ramified_local_order(1,{q})",
                finitegrp.ramified_local_order(1, q),
                finitegrp.brute_force_ramified_sl1(q),
            )
        )
    for n, q in ((1, 2), (1, 3), (2, 2)):
        checks.append(
            _eq(
                f"unitary_order({n},{q})",
                finitegrp.unitary_order(n, q),
                finitegrp.brute_force_unitary(n, q),
            )
        )
    for n in range(1, 6):
        for q in (2, 3, 4, 5, 7, 8, 9):
            checks.append(
                _eq(
                    f"ramified=unitary*q^(n(n+1)) ({n},{q})",
                    finitegrp.ramified_local_order(n, q),
                    finitegrp.unitary_order(n, q) * q ** (n * (n + 1)),
                )
            )
    checks.append(
        _eq(
            "CRT sl(2,6)",
            finitegrp.brute_force_sl(2, 6),
            finitegrp.brute_force_sl(2, 2) * finitegrp.brute_force_sl(2, 3),
        )
    )
    return checks


def suite_index() -> list[Check]:
    field = TotallyRealField.rationals()
    split = QuaternionAlgebra(field, (), 0)
    checks = []
    for n_mod in (2, 3, 4, 5, 6):
        level = ideal_from_integer(field, n_mod)
        checks.append(
            _eq(
                f"index split level ({n_mod})",
                lefschetz.congruence_index(split, 1, level),
                finitegrp.brute_force_sl(2, n_mod),
            )
        )
    prime2 = numberfield.split_prime(field, 2)[0]
    ram2 = QuaternionAlgebra(field, (prime2,), 1)
    checks.append(
        _eq(
            "index ramified-at-2 level (2)",
            lefschetz.congruence_index(ram2, 1, ideal_from_integer(field, 2)),
            12,
        )
    )
    return checks


def suite_lefschetz() -> list[Check]:
    field = TotallyRealField.rationals()
    split = QuaternionAlgebra(field, (), 0)
    ram23 = QuaternionAlgebra(
        field, tuple(numberfield.split_prime(field, p)[0] for p in (2, 3)), 0
    )
    checks = []
    for n_mod in (3, 4, 5, 6, 7):
        value = lefschetz_number(
            LefschetzInput(field, split, 1, ideal_from_integer(field, n_mod))
        ).value
        want = Fraction(-finitegrp.brute_force_sl(2, n_mod), 12)
        checks.append(_eq(f"L(split, n=1, ({n_mod}))", value, want))
    for n_mod, want_l, want_g in ((5, -20, 11), (7, -56, 29)):
        level = ideal_from_integer(field, n_mod)
        value = lefschetz_number(LefschetzInput(field, ram23, 1, level)).value
        report = lefschetz.genus_fuchsian(ram23, level)
        checks.append(_eq(f"L(ram23, ({n_mod}))", value, Fraction(want_l)))
        checks.append(_eq(f"genus(ram23, ({n_mod}))", report.genus, want_g))
        checks.append(_eq(f"b1(ram23, ({n_mod}))", report.b1, 2 * want_g))
        checks.append(_eq(f"chi=2-2g ({n_mod})", report.chi, value))
    q5 = TotallyRealField.real_quadratic(5)
    hamilton = QuaternionAlgebra(q5, (), 2)
    level3 = ideal_from_integer(q5, 3)
    cls = SignatureClass(((2, 0), (2, 0)))
    chi = euler_char_fixed_component(hamilton, 2, level3, cls).value
    checks.append(_eq("chi(Hamilton/Q(sqrt5)), n=2, (3)", chi, Fraction(119556)))
    inp = LefschetzInput(q5, hamilton, 2, level3)
    checks.append(
        _eq(
            "decomposition 4*chi",
            lefschetz_via_decomposition(inp),
            Fraction(478224),
        )
    )
    checks.append(
        _eq("closed form 478224", lefschetz_number(inp).value, Fraction(478224))
    )
    return checks


def suite_binomial() -> list[Check]:
    # C(n, q_v) = C(n, p_v) since p_v + q_v = n, so the binomial factor
    # of a class computes both sides of the identity.
    checks = []
    for n in range(1, 7):
        for r in range(0, 5):
            classes = h1_signature_classes(r, n)
            total = sum(cls.binomial_factor(n) for cls in classes)
            want = 2 ** (r * (n - 1))
            checks.append(_eq(f"binomial identity n={n} r={r}", total, want))
            checks.append(
                _eq(f"class count n={n} r={r}", len(classes), (n // 2 + 1) ** r)
            )
    return checks


def suite_decomposition() -> list[Check]:
    grid = decomposition_grid()
    failures = []
    for inp in grid:
        closed = lefschetz_number(inp).value
        summed = lefschetz_via_decomposition(inp)
        if closed != summed:
            failures.append(f"{inp}: {closed} != {summed}")
    checks = [
        (
            f"decomposition identity on {len(grid)} inputs",
            not failures and len(grid) >= 50,
            "; ".join(failures[:3]) or f"{len(grid)} inputs, all equal",
        )
    ]
    return checks


def suite_signs() -> list[Check]:
    grid = decomposition_grid()
    bad_sign, bad_int, bad_dim = [], [], []
    for inp in grid:
        report = lefschetz_number(inp)
        if report.value.denominator != 1:
            bad_int.append(str(inp))
        expected = (-1) ** (inp.algebra.s * inp.n * (inp.n + 1) // 2)
        for cls in h1_signature_classes(inp.algebra.r, inp.n):
            chi = euler_char_fixed_component(
                inp.algebra, inp.n, inp.level, cls
            ).value
            if chi == 0 or (chi > 0) != (expected > 0):
                bad_sign.append(f"{inp} class {cls}")
            if lefschetz.fixed_point_space_dim(inp.algebra, inp.n, cls) % 2:
                bad_dim.append(f"{inp} class {cls}")
    return [
        (
            f"integrality of L over {len(grid)} inputs",
            not bad_int,
            "; ".join(bad_int[:3]) or "all integral",
        ),
        (
            "sign law for chi",
            not bad_sign,
            "; ".join(bad_sign[:3]) or "all match (-1)^(s n(n+1)/2)",
        ),
        (
            "even symmetric-space dimension",
            not bad_dim,
            "; ".join(bad_dim[:3]) or "all even",
        ),
    ]


def suite_volumes() -> list[Check]:
    from .exact import SymbolicScalar

    checks = [
        _eq(
            "vol Sp(1)",
            lefschetz.vol_sp_compact(1),
            SymbolicScalar(Fraction(2), 2),
        ),
        _eq(
            "vol Sp(2)",
            lefschetz.vol_sp_compact(2),
            SymbolicScalar(Fraction(8, 3), 6),
        ),
        _eq(
            "vol Sp(3)",
            lefschetz.vol_sp_compact(3),
            SymbolicScalar(Fraction(32, 45), 12),
        ),
    ]
    field = TotallyRealField.rationals()
    split = QuaternionAlgebra(field, (), 0)
    ram23 = QuaternionAlgebra(
        field, tuple(numberfield.split_prime(field, p)[0] for p in (2, 3)), 0
    )
    q5 = TotallyRealField.real_quadratic(5)
    hamilton = QuaternionAlgebra(q5, (), 2)
    checks += [
        _eq("mf split n=1", lefschetz.global_modulus_factor(split, 1), Fraction(2)),
        _eq("mf ram23 n=1", lefschetz.global_modulus_factor(ram23, 1), Fraction(1, 3)),
        _eq(
            "mf Hamilton n=2",
            lefschetz.global_modulus_factor(hamilton, 2),
            Fraction(16),
        ),
    ]
    return checks


def suite_adelic(terms: int = DEFAULT_TERMS) -> list[Check]:
    field = TotallyRealField.rationals()
    split = QuaternionAlgebra(field, (), 0)
    ram23 = QuaternionAlgebra(
        field, tuple(numberfield.split_prime(field, p)[0] for p in (2, 3)), 0
    )
    empty = SignatureClass(())
    checks = []
    cases = [(split, 1, n_mod) for n_mod in (3, 4, 5, 6, 7)]
    cases += [(ram23, 1, 5), (ram23, 1, 7), (split, 2, 3)]
    for algebra, n, n_mod in cases:
        level = ideal_from_integer(field, n_mod)
        exact = euler_char_fixed_component(algebra, n, level, empty).value
        numeric = euler_char_adelic_numeric(algebra, n, level, empty, terms)
        checks.append(
            _close(
                f"adelic {algebra.describe()} n={n} level ({n_mod})",
                numeric,
                float(exact),
                ADELIC_REL_TOL,
            )
        )
    q5 = TotallyRealField.real_quadratic(5)
    hamilton = QuaternionAlgebra(q5, (), 2)
    level3 = ideal_from_integer(q5, 3)
    cls = SignatureClass(((2, 0), (2, 0)))
    exact = euler_char_fixed_component(hamilton, 2, level3, cls).value
    numeric = euler_char_adelic_numeric(hamilton, 2, level3, cls, terms)
    checks.append(
        _close("adelic Hamilton/Q(sqrt5) n=2", numeric, float(exact), ADELIC_REL_TOL)
    )
    return checks


SUITES = {
    "bernoulli": suite_bernoulli,
    "zeta": suite_zeta,
    "functional-equation": suite_functional_equation,
    "kronecker": suite_kronecker,
    "hilbert": suite_hilbert,
    "finite-orders": suite_finite_orders,
    "index": suite_index,
    "lefschetz": suite_lefschetz,
    "binomial": suite_binomial,
    "decomposition": suite_decomposition,
    "signs": suite_signs,
    "volumes": suite_volumes,
    "adelic": suite_adelic,
}


def run_suites(names: list[str] | None = None) -> dict[str, list[Check]]:
    """Run the requested suites (all by default) and return their checks."""
    if names is None:
        names = list(SUITES)
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        from .errors import ValidationError

        raise ValidationError(f"unknown verification suites: {unknown}")
    return {name: SUITES[name]() for name in names}
