"""Command-line surface.

Subcommands: validate, cohomology, oracle, compare, tor, fan, maximality.
JSON on standard output is the canonical format (sorted keys, stable across
runs); the table format is rendered from the same JSON document.  Exit
status: 0 on success and true verdicts, 1 on validation failures (including
usage errors), 2 on cross-check mismatches.
"""

from __future__ import annotations

import argparse
import json
import sys

from .combinatorics import parse_complex
from .dga import CochainAlgebra, koszul_tor, space_cohomology
from .errors import CrossCheckError, ValidationError
from .group_data import (
    assert_free_action,
    char_matrix_for_subgroup,
    parse_char_matrix,
    parse_subgroup,
)
from .linalg import parse_coeff, ring_table
from .oracle import oracle_cohomology
from .toric import (
    component_count,
    maximality_check,
    maximality_diagnostic,
    parse_fan,
    variety_cohomology,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ValidationError(f"usage: {message}")


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise ValidationError(f"{path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from exc


def _read_complex(path: str):
    return parse_complex(_load_json(path))


def _read_action(path: str, m: int):
    """Accept either a characteristic matrix or a subgroup document.

    Returns (chi, k_basis, copies): copies is the number of identical pieces
    the algebraic model carries relative to one cellular quotient, i.e.
    2^(n - rank) for a non-surjective matrix and 1 otherwise."""
    doc = _load_json(path)
    if isinstance(doc, dict) and "generators" in doc:
        sub_m, basis = parse_subgroup(doc)
        if sub_m != m:
            raise ValidationError(f"{path}: subgroup has m={sub_m}, complex has m={m}")
        chi = char_matrix_for_subgroup(m, basis)
        return chi, basis, 1
    chi = parse_char_matrix(doc)
    if chi.m != m:
        raise ValidationError(f"{path}: matrix has m={chi.m}, complex has m={m}")
    basis = chi.kernel_basis()
    return chi, basis, 2 ** (chi.n - chi.rank2())


def _emit(doc, fmt: str):
    if fmt == "table":
        print(_render_table(doc))
    else:
        print(json.dumps(doc, sort_keys=True, indent=2))


def _degree_lines(coeff, degrees):
    lines = [f"{'d':>3}  {'H^d':<20}"]
    for entry in degrees:
        rank = entry["rank"]
        parts = []
        if rank:
            name = {"Z": "Z", "Q": "Q"}.get(coeff, coeff)
            parts.append(name if rank == 1 else f"{name}^{rank}")
        for t in entry.get("torsion", []):
            parts.append(f"Z/{t}")
        lines.append(f"{entry['d']:>3}  {' + '.join(parts) or '0':<20}")
    return lines


def _render_table(doc) -> str:
    """Tabular view derived from the canonical JSON document."""
    lines = []
    if isinstance(doc, dict) and "degrees" in doc and "coeff" in doc:
        lines.extend(_degree_lines(doc["coeff"], doc["degrees"]))
    elif isinstance(doc, dict):
        for key in sorted(doc):
            value = doc[key]
            if isinstance(value, dict) and "degrees" in value and "coeff" in value:
                lines.append(f"{key}:")
                lines.extend("  " + x for x in _degree_lines(value["coeff"], value["degrees"]))
            else:
                lines.append(f"{key}: {json.dumps(value, sort_keys=True)}")
    else:
        lines.append(json.dumps(doc, sort_keys=True))
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_validate(args) -> int:
    sc = _read_complex(args.complex)
    doc = {
        "m": sc.m,
        "faces": len(sc.faces),
        "facets": [[j + 1 for j in sorted(f)] for f in sc.facets],
        "max_face_size": sc.max_face_size,
        "valid": True,
    }
    if args.action:
        _, basis, _ = _read_action(args.action, sc.m)
        assert_free_action(sc, basis)
        doc["free"] = True
        doc["subgroup_order"] = 2 ** len(basis)
    _emit(doc, args.format)
    return 0


def _cmd_cohomology(args) -> int:
    sc = _read_complex(args.complex)
    chi, _, _ = _read_action(args.matrix, sc.m)
    result = space_cohomology(sc, chi, args.coeff, max_degree=args.max_degree)
    doc = result.to_json_obj()
    if args.export_matrices:
        algebra = CochainAlgebra(sc, chi)
        top = sc.max_face_size if args.max_degree is None else args.max_degree
        dump = []
        for d in range(top + 1):
            mat = algebra.differential_matrix(d)
            dump.append(
                {"d": d, "rows": mat.nrows, "cols": mat.ncols, "entries": mat.triplets()}
            )
        with open(args.export_matrices, "w", encoding="utf-8") as handle:
            json.dump({"differentials": dump}, handle, sort_keys=True, indent=2)
    if args.ring:
        descriptor, characteristic = parse_coeff(args.coeff)
        if characteristic is None:
            raise ValidationError("--ring requires field coefficients (Q or F_p)")
        algebra = CochainAlgebra(sc, chi)
        top = sc.max_face_size if args.max_degree is None else args.max_degree
        table = ring_table(algebra, characteristic, top)
        doc = {"cohomology": doc, "ring": table.to_json_obj()}
    _emit(doc, args.format)
    return 0


def _cmd_oracle(args) -> int:
    sc = _read_complex(args.complex)
    _, basis, _ = _read_action(args.action, sc.m)
    result = oracle_cohomology(sc, basis, args.coeff)
    _emit(result.to_json_obj(), args.format)
    return 0


def _cmd_compare(args) -> int:
    sc = _read_complex(args.complex)
    chi, basis, copies = _read_action(args.action, sc.m)
    model = space_cohomology(sc, chi, args.coeff, max_degree=args.max_degree)
    cellular = oracle_cohomology(sc, basis, args.coeff).scaled(copies)
    m_doc = model.to_json_obj()
    o_doc = cellular.to_json_obj()
    diffs = []
    for d in range(max(len(m_doc["degrees"]), len(o_doc["degrees"]))):
        left = m_doc["degrees"][d] if d < len(m_doc["degrees"]) else None
        right = o_doc["degrees"][d] if d < len(o_doc["degrees"]) else None
        if left != right:
            diffs.append(d)
    doc = {
        "coeff": args.coeff,
        "copies": copies,
        "model": m_doc,
        "oracle": o_doc,
        "match": not diffs,
        "diffs": diffs,
    }
    _emit(doc, args.format)
    if diffs:
        print(f"mismatch in degrees {diffs}", file=sys.stderr)
        return 2
    return 0


def _cmd_tor(args) -> int:
    sc = _read_complex(args.complex)
    chi, _, _ = _read_action(args.matrix, sc.m)
    dims = koszul_tor(sc, chi, args.variant)
    _emit({"variant": args.variant, "coeff": "F2", "dims": dims}, args.format)
    return 0


def _cmd_fan(args) -> int:
    fan = parse_fan(_load_json(args.fan))
    for note in fan.warnings:
        print(note, file=sys.stderr)
    doc = {
        "valid": True,
        "n": fan.n,
        "m": fan.m,
        "max_cones": len(fan.max_cones),
        "warnings": fan.warnings,
    }
    if args.components:
        doc["components"] = component_count(fan)
    if args.coeff:
        doc["cohomology"] = variety_cohomology(fan, args.coeff).to_json_obj()
    _emit(doc, args.format)
    return 0


def _cmd_maximality(args) -> int:
    fan = parse_fan(_load_json(args.fan))
    record = maximality_check(fan)
    _emit(record, args.format)
    if not record["maximal"]:
        print(
            "maximality violated: " + json.dumps(maximality_diagnostic(fan), sort_keys=True),
            file=sys.stderr,
        )
        return 2
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="rtoric", description="Cohomology of real toric spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        p.add_argument("--format", choices=("json", "table"), default="json")
        return p

    p = add("validate", _cmd_validate, "validate a complex and optional action data")
    p.add_argument("complex")
    p.add_argument("action", nargs="?", default=None)

    p = add("cohomology", _cmd_cohomology, "cohomology of the quotient space model")
    p.add_argument("complex")
    p.add_argument("matrix")
    p.add_argument("--coeff", default="Z")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--ring", action="store_true")
    p.add_argument("--export-matrices", metavar="PATH", default=None)

    p = add("oracle", _cmd_oracle, "cellular cohomology of the quotient space")
    p.add_argument("complex")
    p.add_argument("action")
    p.add_argument("--coeff", default="Z")

    p = add("compare", _cmd_compare, "model vs cellular oracle, per degree")
    p.add_argument("complex")
    p.add_argument("action")
    p.add_argument("--coeff", default="Z")
    p.add_argument("--max-degree", type=int, default=None)

    p = add("tor", _cmd_tor, "F_2 Koszul dimensions")
    p.add_argument("complex")
    p.add_argument("matrix")
    p.add_argument("--variant", choices=("real", "complex-even"), default="real")

    p = add("fan", _cmd_fan, "validate a fan; optional components and cohomology")
    p.add_argument("fan")
    p.add_argument("--components", action="store_true")
    p.add_argument("--coeff", default=None)

    p = add("maximality", _cmd_maximality, "real vs complex mod-2 Betti sums")
    p.add_argument("fan")

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CrossCheckError as exc:
        print(f"cross-check failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
