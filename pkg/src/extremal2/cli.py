"""Command-line surface: render the pipeline's tables as stable artifacts.

Subcommands: catalog, bounds, classify, character, chi, rm.  Output is
deterministic and byte-stable per (arguments, format); the version line
goes to stderr so stdout stays clean for diffing.  Exit codes: 0 success,
1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from importlib import resources

from . import __version__, bounds, classify
from .charser import character_vector, expand
from .chimat import CharMatrix
from .classify import chi_of
from .genus import CATALOG, category, genus
from .reedmuller import (
    lemma6_scan,
    min_weight_rm46,
    rm_codes,
    verify_theorem1_xi,
    weight_enumerator,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


def _chi_json(m: CharMatrix) -> dict[str, str]:
    return m.to_json()


def _coeff_str(value: Fraction) -> str:
    return str(value)


# ---------------------------------------------------------------------------
# data builders (everything below renders these dicts)


def catalog_data() -> list[dict]:
    rows = []
    for cat in CATALOG:
        rows.append(
            {
                "id": cat.id,
                "c_mod8": str(cat.c_mod8),
                "h_mod1": str(cat.h_mod1),
                "s_matrix": {
                    "num": [[str(e) for e in row] for row in cat.s_num],
                    "sqrt_norm": str(cat.s_norm),
                },
            }
        )
    return rows


def bounds_summary_data(only: str | None = None) -> list[dict]:
    rows = []
    for cat in CATALOG:
        if only and cat.id != only:
            continue
        c_min, c_max = bounds.c_extremes(cat)
        rows.append({"category": cat.id, "c_min": str(c_min), "c_max": str(c_max)})
    return rows


def nmax_positive_data() -> list[dict]:
    return [
        {
            "category": row["category"],
            "c": str(row["c"]),
            "chi": _chi_json(row["chi"]),
            "h_ext": str(row["h_ext"]),
            "n_max": row["n_max"],
        }
        for row in bounds.positive_table()
    ]


def nmax_negative_data() -> list[dict]:
    return [
        {
            "category": row["category"],
            "c": str(row["c"]),
            "chi": _chi_json(row["chi"]),
            "h_ext": str(row["h_ext"]),
            "alpha": str(row["alpha"]),
            "beta": str(row["beta"]),
            "n_max": row["n_max"],
            "chi10": str(row["chi10"]),
        }
        for row in bounds.negative_table()
    ]


def classify_data(only: str | None = None) -> list[dict]:
    rows = []
    for r in classify.classify_all():
        if only and r.category.id != only:
            continue
        rows.append(
            {
                "category": r.category.id,
                "c": str(r.c),
                "h_ext": str(r.h_ext),
                "ell": r.ell,
                "chi": _chi_json(r.chi),
                "realization": r.realization_note,
            }
        )
    return rows


def character_data(cat_id: str, c: Fraction, order: int) -> dict:
    cat = category(cat_id)
    g = genus(cat, c)
    vec = character_vector(expand(g, chi_of(cat, c), order))
    return {
        "category": cat.id,
        "c": str(c),
        "exponent0": str(vec.exponent0),
        "exponent1": str(vec.exponent1),
        "series0": [_coeff_str(v) for v in vec.series0],
        "series1": [_coeff_str(v) for v in vec.series1],
    }


def chi_data(cat_id: str, c: Fraction) -> dict:
    cat = category(cat_id)
    g = genus(cat, c)
    return {
        "category": cat.id,
        "c": str(c),
        "h_ext": str(g.h_ext),
        "chi": _chi_json(chi_of(cat, c)),
    }


def rm_data() -> dict:
    codes = rm_codes()
    min_w, witness = min_weight_rm46()
    sweep = lemma6_scan()
    cert = verify_theorem1_xi()
    dual_of_rm14 = codes.rm14.dual()
    rm24_is_dual = codes.rm24.dim == dual_of_rm14.dim and all(
        w in codes.rm24 for w in dual_of_rm14.basis
    )
    return {
        "dims": {"rm14": codes.rm14.dim, "rm24": codes.rm24.dim,
                 "rm16": codes.rm16.dim, "rm46": codes.rm46.dim},
        "rm16_weight_enumerator": {
            str(k): v for k, v in weight_enumerator(codes.rm16).items()
        },
        "rm24_equals_rm14_dual": rm24_is_dual,
        "rm46_min_weight": min_w,
        "rm46_min_weight_witness": str(witness),
        "weight6_count": sweep.weight6_count,
        "lemma_sweep_conditions_pass": sweep.all_conditions_pass,
        "lemma_sweep_cosets_match": sweep.all_cosets_match,
        "coset_enumerator": {str(k): v for k, v in sweep.coset_enumerator.items()},
        "xi": str(cert.xi),
        "xi_alpha": str(cert.xi.blocks(4)[0]),
        "xi_conditions": {
            "i": cert.conditions.cond_i,
            "ii": cert.conditions.cond_ii,
            "iii": cert.conditions.cond_iii,
            "iv": cert.conditions.cond_iv,
            "subcode": cert.conditions.subcode_ok,
            "doubly_even": cert.conditions.doubly_even_ok,
        },
        "min_coset_weight": cert.min_coset_weight,
        "top_weight": str(cert.top_weight),
    }


# ---------------------------------------------------------------------------
# renderers


def _render_json(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _render_csv(rows: list[dict]) -> str:
    flat_rows = []
    for row in rows:
        flat = {}
        for key, val in row.items():
            if isinstance(val, dict):
                for sub, sval in val.items():
                    flat[f"{key}_{sub}"] = sval
            else:
                flat[key] = val
        flat_rows.append(flat)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(flat_rows[0].keys()), lineterminator="\n")
    writer.writeheader()
    writer.writerows(flat_rows)
    return buf.getvalue()


def _render_md_table(rows: list[dict]) -> str:
    # flatten nested dicts the same way the csv renderer does
    flat_rows = []
    for row in rows:
        item = {}
        for key, val in row.items():
            if isinstance(val, dict):
                for sub, sval in val.items():
                    item[f"{key}_{sub}"] = sval
            else:
                item[key] = val
        flat_rows.append(item)
    headers = list(flat_rows[0].keys())
    lines = ["| " + " | ".join(headers) + " |",
             "| " + " | ".join("---" for _ in headers) + " |"]
    for row in flat_rows:
        lines.append("| " + " | ".join(str(row[h]) for h in headers) + " |")
    return "\n".join(lines) + "\n"


def _render_character_md(data: dict) -> str:
    lines = [
        f"# character ({data['category']}, c = {data['c']})",
        "",
        f"- vacuum component: q^({data['exponent0']}) * "
        f"({_poly(data['series0'])})",
        f"- module component: q^({data['exponent1']}) * "
        f"({_poly(data['series1'])})",
    ]
    return "\n".join(lines) + "\n"


def _poly(coeffs: list[str]) -> str:
    terms = []
    for n, c in enumerate(coeffs):
        if n == 0:
            terms.append(c)
        elif n == 1:
            terms.append(f"{c}*q")
        else:
            terms.append(f"{c}*q^{n}")
    return " + ".join(terms)


def _render_rm_md(data: dict) -> str:
    cond = data["xi_conditions"]
    lines = [
        "# binary-code certificate",
        "",
        f"- dims: RM(1,4)={data['dims']['rm14']}, RM(2,4)={data['dims']['rm24']}, "
        f"RM(1,6)={data['dims']['rm16']}, RM(4,6)={data['dims']['rm46']}",
        f"- RM(1,6) weight enumerator: {data['rm16_weight_enumerator']}",
        f"- RM(2,4) = RM(1,4)^perp: {data['rm24_equals_rm14_dual']}",
        f"- RM(4,6) minimum weight: {data['rm46_min_weight']} "
        f"(witness {data['rm46_min_weight_witness']})",
        f"- weight-6 words of RM(2,4): {data['weight6_count']}; "
        f"all pass conditions: {data['lemma_sweep_conditions_pass']}; "
        f"all cosets 64x^28+64x^36: {data['lemma_sweep_cosets_match']}",
        f"- construction word xi = {data['xi']}",
        f"- conditions (i)-(iv): {cond['i']}, {cond['ii']}, {cond['iii']}, {cond['iv']}"
        f" (subcode {cond['subcode']}, doubly even {cond['doubly_even']})",
        f"- min coset weight {data['min_coset_weight']} -> top weight {data['top_weight']}",
    ]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# fixtures


def _load_fixture(name: str):
    path = resources.files("extremal2").joinpath("fixtures", name)
    return json.loads(path.read_text())


def _check_against(data, fixture_name: str, key: str | None = None) -> int:
    fixture = _load_fixture(fixture_name)
    expected = fixture[key] if key else fixture
    if data == expected:
        print("check passed", file=sys.stderr)
        return EXIT_OK
    print(f"check FAILED against fixtures/{fixture_name}", file=sys.stderr)
    return EXIT_MISMATCH


# ---------------------------------------------------------------------------
# argument handling


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="extremal2",
        description="Exact classification of extremal two-module VOA characters.",
    )
    parser.add_argument("--version", action="version", version=f"extremal2 {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, formats=("json", "csv", "md")):
        p.add_argument("--format", choices=formats, default="json")
        p.add_argument("--out", default=None, help="write output to a file")
        p.add_argument("--check", action="store_true",
                       help="compare regenerated output against the bundled fixture")

    p_catalog = sub.add_parser("catalog", help="the 8 rank-two categories")
    add_common(p_catalog)

    p_bounds = sub.add_parser("bounds", help="central-charge bounds")
    p_bounds.add_argument("category", nargs="?", default=None,
                          help="restrict the summary to one category id")
    p_bounds.add_argument("--table", choices=("summary", "nmax-positive", "nmax-negative"),
                          default="summary")
    add_common(p_bounds)

    p_classify = sub.add_parser("classify", help="the 15 surviving genera")
    p_classify.add_argument("--category", default=None)
    add_common(p_classify)

    p_char = sub.add_parser("character", help="character vector of a genus")
    p_char.add_argument("--category", required=True)
    p_char.add_argument("--c", required=True, type=_parse_fraction)
    p_char.add_argument("--order", type=int, default=8)
    add_common(p_char, formats=("json", "md"))

    p_chi = sub.add_parser("chi", help="characteristic matrix of a genus")
    p_chi.add_argument("--category", required=True)
    p_chi.add_argument("--c", required=True, type=_parse_fraction)
    add_common(p_chi, formats=("json", "md"))

    p_rm = sub.add_parser("rm", help="binary-code certificates")
    p_rm.add_argument("action", choices=("verify",))
    add_common(p_rm, formats=("json", "md"))

    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    print(f"extremal2 {__version__}", file=sys.stderr)

    try:
        if args.command == "catalog":
            data = catalog_data()
            text = {"json": _render_json, "csv": _render_csv, "md": _render_md_table}[
                args.format
            ](data)
            _emit(text, args.out)
            if args.check:
                return _check_against(data, "catalog.json", "rows")
            return EXIT_OK

        if args.command == "bounds":
            if args.category is not None:
                category(args.category)  # validate id
            if args.table == "summary":
                data = bounds_summary_data(args.category)
                fixture = ("bounds_summary.json", "rows") if args.category is None else None
            elif args.table == "nmax-positive":
                data = nmax_positive_data()
                fixture = ("nmax_positive.json", "rows")
            else:
                data = nmax_negative_data()
                fixture = ("nmax_negative.json", "rows")
            text = {"json": _render_json, "csv": _render_csv, "md": _render_md_table}[
                args.format
            ](data)
            _emit(text, args.out)
            if args.check:
                if fixture is None:
                    parser.error("--check requires the unrestricted table")
                return _check_against(data, *fixture)
            return EXIT_OK

        if args.command == "classify":
            if args.category is not None:
                category(args.category)
            data = classify_data(args.category)
            text = {"json": _render_json, "csv": _render_csv, "md": _render_md_table}[
                args.format
            ](data)
            _emit(text, args.out)
            # always self-verify the full classification against the embedded table
            if not classify.matches_golden(classify.classify_all()):
                print("classification differs from the embedded golden table",
                      file=sys.stderr)
                return EXIT_MISMATCH
            if args.check and args.category is None:
                return _check_against(data, "classify.json", "rows")
            return EXIT_OK

        if args.command == "character":
            if args.order < 1:
                parser.error("--order must be at least 1")
            data = character_data(args.category, args.c, args.order)
            text = _render_json(data) if args.format == "json" else _render_character_md(data)
            _emit(text, args.out)
            if args.check:
                return _check_character(data)
            return EXIT_OK

        if args.command == "chi":
            data = chi_data(args.category, args.c)
            text = _render_json(data) if args.format == "json" else _render_md_table([data])
            _emit(text, args.out)
            return EXIT_OK

        if args.command == "rm":
            data = rm_data()
            text = _render_json(data) if args.format == "json" else _render_rm_md(data)
            _emit(text, args.out)
            if args.check:
                return _check_against(data, "rm_verify.json")
            return EXIT_OK
    except ValueError as exc:
        parser.error(str(exc))

    raise AssertionError("unreachable")


def _check_character(data: dict) -> int:
    rows = _load_fixture("characters.json")["rows"]
    for row in rows:
        if row["category"] == data["category"] and row["c"] == data["c"]:
            ok = (
                row["exponent0"] == data["exponent0"]
                and row["exponent1"] == data["exponent1"]
                and row["series0"] == data["series0"][: len(row["series0"])]
                and row["series1"] == data["series1"][: len(row["series1"])]
            )
            if ok:
                print("check passed", file=sys.stderr)
                return EXIT_OK
            print("check FAILED against fixtures/characters.json", file=sys.stderr)
            return EXIT_MISMATCH
    print("no fixture row for this genus", file=sys.stderr)
    return EXIT_MISMATCH


if __name__ == "__main__":
    raise SystemExit(main())
