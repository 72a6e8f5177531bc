"""Command-line frontend.

Subcommands: zeta, lefschetz, euler-char, index, genus, table, verify.
Field, algebra and level specifications mirror the library constructors;
a JSON config file can supply any flag, with explicit flags winning.
Exact rationals serialise as "p/q" strings everywhere; floats appear only
in the explicitly requested numeric cross-check with a stated tolerance.

Exit codes: 0 success, 2 validation error, 3 torsion necessary condition
failed without the assume-torsion-free override, 1 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import verify as verify_mod
from .errors import QuatlefError, TorsionError, ValidationError
from .exact import format_rational, parse_rational
from .lefschetz import (
    LefschetzInput,
    SignatureClass,
    check_torsion_necessary,
    congruence_index,
    euler_char_adelic_numeric,
    euler_char_fixed_component,
    genus_fuchsian,
    h1_signature_classes,
    lefschetz_number,
    modular_form_dim,
)
from .numberfield import (
    Ideal,
    PrimeIdeal,
    TotallyRealField,
    dedekind_zeta_neg,
    ideal_from_integer,
    split_prime,
)
from .quaternion import QuaternionAlgebra, hilbert_ramification_q

_TABLE_ROW_CAP = 10**4
_ADELIC_REL_TOL = 1e-5

_CONFIG_KEYS = {
    "field",
    "ram",
    "ram_primes",
    "split",
    "hilbert",
    "ram_real",
    "n",
    "level",
    "levels",
    "trace_w",
    "assume_torsion_free",
    "signature",
    "adelic_terms",
    "jmax",
    "weights",
    "format",
    "out",
    "suite",
}


def _parse_field(spec) -> TotallyRealField:
    spec = str(spec).strip()
    if spec.lower() == "q":
        return TotallyRealField.rationals()
    if spec.startswith("quad:"):
        return TotallyRealField.real_quadratic(int(spec[len("quad:") :]))
    if spec.startswith("external:"):
        return TotallyRealField.from_json_file(spec[len("external:") :])
    raise ValidationError(
        f"unknown field spec {spec!r}; use q, quad:<d> or external:<path>"
    )


def _resolve_ram_primes(field: TotallyRealField, spec: str) -> tuple[PrimeIdeal, ...]:
    primes = []
    for segment in spec.split(","):
        segment = segment.strip()
        if not segment:
            raise ValidationError("empty entry in ramification list")
        if ":" in segment:
            p_text, label = segment.split(":", 1)
        else:
            p_text, label = segment, None
        candidates = split_prime(field, int(p_text))
        if label is None:
            primes.append(candidates[0])
        else:
            matches = [c for c in candidates if c.label == label]
            if not matches:
                raise ValidationError(
                    f"no prime above {p_text} with label {label!r}"
                )
            primes.append(matches[0])
    return tuple(primes)


def _parse_algebra(args, field: TotallyRealField) -> QuaternionAlgebra:
    chosen = [
        name
        for name, value in (
            ("--split", args.split),
            ("--hilbert", args.hilbert),
            ("--ram/--ram-real", args.ram or args.ram_real is not None),
        )
        if value
    ]
    if len(chosen) > 1:
        raise ValidationError(f"conflicting algebra specs: {', '.join(chosen)}")
    if args.hilbert:
        if field.kind != "rationals":
            raise ValidationError("--hilbert presentations are supported over Q only")
        a_text, _, b_text = args.hilbert.partition(",")
        return hilbert_ramification_q(int(a_text), int(b_text))
    if args.split:
        return QuaternionAlgebra(field, (), 0)
    if not args.ram and args.ram_real is None:
        raise ValidationError(
            "algebra required: pass --split, --hilbert a,b or --ram/--ram-real"
        )
    ram = _resolve_ram_primes(field, str(args.ram)) if args.ram else ()
    ram_real = int(args.ram_real) if args.ram_real is not None else 0
    return QuaternionAlgebra(field, ram, ram_real)


def _parse_level(field: TotallyRealField, spec) -> Ideal:
    spec = str(spec).strip()
    if spec.isdigit():
        return ideal_from_integer(field, int(spec))
    pairs = []
    for segment in spec.split(","):
        base, _, exp_text = segment.strip().partition("^")
        exponent = int(exp_text) if exp_text else 1
        parts = base.split(":")
        if len(parts) == 3:
            p, f, e = parts
            label = ""
        elif len(parts) == 4:
            p, f, e, label = parts
        else:
            raise ValidationError(
                f"bad level segment {segment!r}; use N or p:f:e[:label][^k]"
            )
        prime = PrimeIdeal(int(p), int(f), int(e), label)
        if prime not in split_prime(field, prime.p):
            raise ValidationError(
                f"prime {prime} does not exist in {field.describe()}"
            )
        pairs.append((prime, exponent))
    return Ideal(field, tuple(pairs))


def _parse_signature(spec: str | None) -> SignatureClass:
    if not spec:
        return SignatureClass(())
    pairs = []
    for segment in spec.split(";"):
        p_text, _, q_text = segment.strip().partition(",")
        pairs.append((int(p_text), int(q_text)))
    return SignatureClass(tuple(pairs))


def _apply_config(args: argparse.Namespace) -> None:
    if not getattr(args, "config", None):
        return
    with open(args.config, encoding="utf-8") as handle:
        data = json.load(handle)
    unknown = set(data) - _CONFIG_KEYS
    if unknown:
        raise ValidationError(f"unknown config keys: {sorted(unknown)}")
    for key, value in data.items():
        if key in ("ram_primes", "ram", "hilbert") and isinstance(value, list):
            # list forms of the algebra spec normalise to the flag strings
            key = "ram" if key == "ram_primes" else key
            value = ",".join(str(entry) for entry in value)
        current = getattr(args, key, None)
        if current is None or (key == "split" and current is False):
            setattr(args, key, value)


def _emit(args, text: str) -> None:
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _json_text(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _csv_text(header: list[str], rows: list[list[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _algebra_dict(algebra: QuaternionAlgebra) -> dict:
    return {
        "ram_finite": [str(p) for p in algebra.ram_finite],
        "ram_real": algebra.ram_real_count,
        "signed_reduced_discriminant": algebra.signed_reduced_discriminant(),
    }


def _level_dict(level: Ideal) -> dict:
    return {"factors": str(level), "norm": level.norm()}


def _cmd_zeta(args) -> int:
    field = _parse_field(args.field)
    jmax = int(args.jmax)
    if jmax < 1:
        raise ValidationError("--jmax must be >= 1")
    values = [
        {"j": j, "value": format_rational(dedekind_zeta_neg(field, j))}
        for j in range(1, jmax + 1)
    ]
    if args.format == "csv":
        rows = [[str(v["j"]), v["value"]] for v in values]
        _emit(args, _csv_text(["j", "zeta_1_minus_2j"], rows))
    else:
        payload = {"command": "zeta", "field": field.describe(), "values": values}
        _emit(args, _json_text(payload))
    return 0


def _build_input(args, field, algebra, level) -> LefschetzInput:
    trace = parse_rational(args.trace_w) if args.trace_w else Fraction(1)
    return LefschetzInput(
        field=field,
        algebra=algebra,
        n=int(args.n),
        level=level,
        trace_w=trace,
        assume_torsion_free=bool(args.assume_torsion_free),
    )


def _cmd_lefschetz(args) -> int:
    field = _parse_field(args.field)
    algebra = _parse_algebra(args, field)
    level = _parse_level(field, args.level)
    report = lefschetz_number(_build_input(args, field, algebra, level))
    payload = {
        "command": "lefschetz",
        "field": field.describe(),
        "algebra": _algebra_dict(algebra),
        "level": _level_dict(level),
        "n": report.n,
        "trace_w": format_rational(report.trace_w),
        "value": format_rational(report.value),
        "factors": {
            "two_power": format_rational(report.two_power),
            "level_norm_power": report.level_norm_power,
            "discriminant_power": report.disc_power,
            "m_factors": [format_rational(m) for m in report.m_factors],
        },
        "warnings": list(report.warnings),
        "zero_reason": report.zero_reason,
    }
    if args.format == "csv":
        rows = [["value", format_rational(report.value)], ["n", str(report.n)]]
        rows += [["warning", w] for w in report.warnings]
        _emit(args, _csv_text(["key", "value"], rows))
    else:
        _emit(args, _json_text(payload))
    return 0


def _cmd_euler_char(args) -> int:
    field = _parse_field(args.field)
    algebra = _parse_algebra(args, field)
    level = _parse_level(field, args.level)
    signature = _parse_signature(args.signature)
    n = int(args.n)
    report = euler_char_fixed_component(
        algebra, n, level, signature, bool(args.assume_torsion_free)
    )
    payload = {
        "command": "euler-char",
        "field": field.describe(),
        "algebra": _algebra_dict(algebra),
        "level": _level_dict(level),
        "n": report.n,
        "signature": str(report.signature_class),
        "binomial_factor": report.binomial_factor,
        "value": format_rational(report.value),
        "factors": {
            "two_power": format_rational(report.two_power),
            "level_norm_power": report.level_norm_power,
            "discriminant_power": report.disc_power,
            "m_factors": [format_rational(m) for m in report.m_factors],
        },
        "warnings": list(report.warnings),
        "zero_reason": report.zero_reason,
    }
    if args.adelic_terms:
        terms = int(args.adelic_terms)
        numeric = euler_char_adelic_numeric(algebra, n, level, signature, terms)
        payload["adelic_numeric"] = {
            "value": numeric,
            "terms": terms,
            "rel_tolerance": _ADELIC_REL_TOL,
        }
    if args.format == "csv":
        rows = [
            ["value", format_rational(report.value)],
            ["signature", str(report.signature_class)],
        ]
        _emit(args, _csv_text(["key", "value"], rows))
    else:
        _emit(args, _json_text(payload))
    return 0


def _cmd_index(args) -> int:
    field = _parse_field(args.field)
    algebra = _parse_algebra(args, field)
    level = _parse_level(field, args.level)
    value = congruence_index(algebra, int(args.n), level)
    if args.format == "csv":
        _emit(args, _csv_text(["key", "value"], [["index", str(value)]]))
    else:
        payload = {
            "command": "index",
            "field": field.describe(),
            "algebra": _algebra_dict(algebra),
            "level": _level_dict(level),
            "n": int(args.n),
            "index": value,
        }
        _emit(args, _json_text(payload))
    return 0


def _cmd_genus(args) -> int:
    field = _parse_field(args.field)
    algebra = _parse_algebra(args, field)
    level = _parse_level(field, args.level)
    report = genus_fuchsian(algebra, level, bool(args.assume_torsion_free))
    weights = (
        [int(w) for w in str(args.weights).split(",")] if args.weights else []
    )
    dims = {str(k): modular_form_dim(report.genus, k) for k in weights}
    payload = {
        "command": "genus",
        "field": field.describe(),
        "algebra": _algebra_dict(algebra),
        "level": _level_dict(level),
        "genus": report.genus,
        "b1": report.b1,
        "chi": report.chi,
        "cusp_form_dims": dims,
        "warnings": list(report.warnings),
    }
    if args.format == "csv":
        rows = [
            ["genus", str(report.genus)],
            ["b1", str(report.b1)],
            ["chi", str(report.chi)],
        ]
        rows += [[f"dim_weight_{k}", str(v)] for k, v in sorted(dims.items())]
        _emit(args, _csv_text(["key", "value"], rows))
    else:
        _emit(args, _json_text(payload))
    return 0


def _cmd_table(args) -> int:
    field = _parse_field(args.field)
    algebra = _parse_algebra(args, field)
    lo_text, _, hi_text = str(args.levels).partition(":")
    lo, hi = int(lo_text), int(hi_text or lo_text)
    if hi - lo + 1 > _TABLE_ROW_CAP:
        raise ValidationError(f"level range exceeds the {_TABLE_ROW_CAP} row cap")
    trace = parse_rational(args.trace_w) if args.trace_w else Fraction(1)
    n_size = int(args.n)
    header = [
        "level",
        "norm",
        "torsion_ok",
        "index",
        "lefschetz",
        "chi_components",
        "genus",
        "b1",
        "note",
    ]
    rows = []
    for n_level in range(max(lo, 2), hi + 1):
        level = ideal_from_integer(field, n_level)
        if not check_torsion_necessary(level):
            rows.append(
                [str(n_level), str(level.norm()), "false"]
                + [""] * 5
                + ["torsion check failed"]
            )
            continue
        inp = LefschetzInput(
            field=field, algebra=algebra, n=n_size, level=level, trace_w=trace
        )
        index = congruence_index(algebra, n_size, level)
        report = lefschetz_number(inp)
        chis = [
            format_rational(
                euler_char_fixed_component(algebra, n_size, level, cls).value
            )
            for cls in h1_signature_classes(algebra.r, n_size)
        ]
        genus_text = b1_text = ""
        if n_size == 1 and algebra.is_fuchsian() and field.is_totally_real:
            genus_report = genus_fuchsian(algebra, level)
            genus_text, b1_text = str(genus_report.genus), str(genus_report.b1)
        rows.append(
            [
                str(n_level),
                str(level.norm()),
                "true",
                str(index),
                format_rational(report.value),
                "|".join(chis),
                genus_text,
                b1_text,
                "",
            ]
        )
    _emit(args, _csv_text(header, rows))
    return 0


def _cmd_verify(args) -> int:
    names = str(args.suite).split(",") if args.suite else None
    results = verify_mod.run_suites(names)
    total_pass = total_fail = 0
    for name, checks in results.items():
        passed = sum(1 for _, ok, _ in checks if ok)
        failed = len(checks) - passed
        total_pass += passed
        total_fail += failed
        sys.stdout.write(f"{name}: {passed} passed, {failed} failed\n")
        for check_name, ok, detail in checks:
            if not ok:
                sys.stdout.write(f"  FAIL [{name}] {check_name}: {detail}\n")
    sys.stdout.write(f"total: {total_pass} passed, {total_fail} failed\n")
    return 1 if total_fail else 0


def _add_field_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--field",
        help="base field: q, quad:<d>, or external:<path to descriptor>",
    )
    parser.add_argument("--config", help="JSON config file mirroring the flags")
    parser.add_argument("--out", help="write output to this path instead of stdout")


def _add_algebra_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--ram",
        help="comma list of ramified rational primes, entries p or p:label",
    )
    parser.add_argument(
        "--split", action="store_true", help="the split (matrix) algebra"
    )
    parser.add_argument(
        "--hilbert", help="presentation a,b over Q (i^2=a, j^2=b)"
    )
    parser.add_argument(
        "--ram-real", dest="ram_real", type=int, help="ramified real place count"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quatlef",
        description=(
            "Exact Lefschetz numbers, Euler characteristics, indices and"
            " genera for congruence subgroups in quaternionic inner forms"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_zeta = sub.add_parser("zeta", help="zeta values at 1-2j")
    _add_field_flags(p_zeta)
    p_zeta.add_argument("--jmax", type=int, default=None)
    p_zeta.add_argument("--format", choices=("json", "csv"), default=None)
    p_zeta.set_defaults(func=_cmd_zeta)

    for name, func, with_n in (
        ("lefschetz", _cmd_lefschetz, True),
        ("euler-char", _cmd_euler_char, True),
        ("index", _cmd_index, True),
        ("genus", _cmd_genus, False),
    ):
        p_cmd = sub.add_parser(name)
        _add_field_flags(p_cmd)
        _add_algebra_flags(p_cmd)
        if with_n:
            p_cmd.add_argument("--n", type=int, default=None)
        p_cmd.add_argument("--level", default=None)
        p_cmd.add_argument("--format", choices=("json", "csv"), default=None)
        if name in ("lefschetz", "euler-char", "genus"):
            p_cmd.add_argument(
                "--assume-torsion-free",
                dest="assume_torsion_free",
                action="store_true",
                default=None,
            )
        if name == "lefschetz":
            p_cmd.add_argument("--trace-w", dest="trace_w", default=None)
        if name == "euler-char":
            p_cmd.add_argument(
                "--signature", help="semicolon list of p,q pairs, one per place"
            )
            p_cmd.add_argument(
                "--adelic-terms",
                dest="adelic_terms",
                type=int,
                help="include the floating-point mass-formula cross-check",
            )
        if name == "genus":
            p_cmd.add_argument("--weights", help="comma list of even weights")
        p_cmd.set_defaults(func=func)

    p_table = sub.add_parser("table", help="CSV over a range of levels")
    _add_field_flags(p_table)
    _add_algebra_flags(p_table)
    p_table.add_argument("--n", type=int, default=None)
    p_table.add_argument("--levels", help="inclusive integer range lo:hi")
    p_table.add_argument("--trace-w", dest="trace_w", default=None)
    p_table.set_defaults(func=_cmd_table)

    p_verify = sub.add_parser("verify", help="run the oracle suites")
    p_verify.add_argument("--suite", help="comma list of suite names")
    p_verify.set_defaults(func=_cmd_verify)
    return parser


_REQUIRED = {
    "zeta": ("field", "jmax"),
    "lefschetz": ("field", "n", "level"),
    "euler-char": ("field", "n", "level"),
    "index": ("field", "n", "level"),
    "genus": ("field", "level"),
    "table": ("field", "n", "levels"),
    "verify": (),
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_config(args)
        for key in _REQUIRED[args.command]:
            if getattr(args, key, None) is None:
                raise ValidationError(f"missing required option --{key}")
        return args.func(args)
    except TorsionError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3
    except (QuatlefError, OSError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
