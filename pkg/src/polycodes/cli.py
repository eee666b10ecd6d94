"""Command-line front end.

Subcommands: factor, code-info, dual, gray, distance, enumerate, quantum,
verify.  Code records are JSON objects

    {"q": .., "p": .., "m": .., "modulus": [..]?, "l": .., "n": ..,
     "a": [[..], ..], "g": [[..], ..], "M": [..row-major..]?,
     "expect": {"params": [N,k,d], "flags": [..], "quantum": [N,K,D]?}?}

with polynomials as ascending coefficient lists of field-element codes.
Exit codes: 0 ok, 1 verification failure, 2 input error, 3 budget
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence

from . import duality, gray, lincode, polycode, quantum
from .errors import BudgetExceeded, PolycodesError
from .gf import Field, field_from_order, field_make
from .lincode import DEFAULT_BUDGET
from .poly import Poly, factor, parse_poly
from .ring import format_vector as ring_format_vector
from .polycode import PolycyclicCode

TABLES = ("table1", "table2", "table3", "table4")


@dataclass
class Record:
    id: str
    field: Field
    l: int
    n: int
    a_comps: list[Poly]
    g_comps: list[Poly]
    m_rows: Optional[list[list[int]]]
    expect: dict
    long: bool

    def code(self) -> PolycyclicCode:
        return polycode.code_new(self.field, self.l, self.n, self.a_comps, self.g_comps)

    def gray_spec(self) -> gray.GraySpec:
        if self.m_rows is None:
            return gray.identity_gray(self.field, self.l)
        return gray.gray_spec(self.field, self.m_rows)

    def to_json(self) -> dict:
        out: dict = {"id": self.id, "q": self.field.q, "p": self.field.p,
                     "m": self.field.m}
        if self.field.m > 1:
            out["modulus"] = list(self.field.modulus)
        out.update({"l": self.l, "n": self.n,
                    "a": [[a.coeff(i) for i in range(a.degree + 1)] or [0]
                          for a in self.a_comps],
                    "g": [[g.coeff(i) for i in range(g.degree + 1)]
                          for g in self.g_comps]})
        if self.m_rows is not None:
            out["M"] = [c for row in self.m_rows for c in row]
        if self.expect:
            out["expect"] = self.expect
        if self.long:
            out["long"] = True
        return out


def parse_record(obj: dict, idx: int = 0) -> Record:
    field = field_make(obj["p"], obj.get("m", 1), obj.get("modulus"))
    if field.q != obj["q"]:
        raise ValueError(f"q={obj['q']} does not match p^m={field.q}")
    l, n = obj["l"], obj["n"]
    a = [Poly.make(field, c) for c in obj["a"]]
    g = [Poly.make(field, c) for c in obj["g"]]
    if len(a) != l or len(g) != l:
        raise ValueError("a and g must each hold l coefficient lists")
    m_rows = None
    if "M" in obj and obj["M"] is not None:
        m_rows = _matrix_arg(obj["M"], l)
    expect = obj.get("expect", {})
    if "params" in expect:
        nn, kk = expect["params"][0], expect["params"][1]
        if nn != n * l or kk != n * l - sum(p.degree for p in g):
            raise ValueError(f"record {obj.get('id')}: expected params "
                             f"disagree with the generator degrees")
    return Record(obj.get("id", f"record{idx}"), field, l, n, a, g, m_rows,
                  expect, bool(obj.get("long", False)))


def _matrix_arg(value, l: int) -> list[list[int]]:
    if isinstance(value, str):
        value = json.loads(value)
    if value and isinstance(value[0], list):
        rows = [list(r) for r in value]
    else:
        if len(value) != l * l:
            raise ValueError(f"row-major M must have {l * l} entries")
        rows = [list(value[i * l:(i + 1) * l]) for i in range(l)]
    return rows


def _field_from_args(args) -> Field:
    if args.q is not None:
        return field_from_order(args.q)
    if args.p is not None:
        return field_make(args.p, args.m or 1)
    raise ValueError("specify the field with --q or --p/--m")


def _load_records(paths: Sequence[str]) -> list[Record]:
    records = []
    for path in paths:
        data = json.loads(Path(path).read_text())
        if isinstance(data, dict):
            data = [data]
        records.extend(parse_record(obj, i) for i, obj in enumerate(data))
    return records


def bundled_corpus_path(name: str) -> Path:
    res = resources.files("polycodes").joinpath(f"corpus/{name}.json")
    return Path(str(res))


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_factor(args) -> int:
    field = _field_from_args(args)
    f = parse_poly(field, args.poly)
    fact = factor(f, seed=args.seed)
    if args.json:
        print(json.dumps({
            "unit": fact.unit,
            "factors": [{"coeffs": list(p.coeffs), "multiplicity": m}
                        for p, m in fact.factors]}))
    else:
        print(fact)
    return 0


def _code_report(rec: Record, budget: int) -> dict:
    C = rec.code()
    gs = rec.gray_spec()
    img = gray.gray_image(C, gs)
    d, exact = lincode.min_distance(img, budget)
    out = {
        "id": rec.id,
        "q": rec.field.q, "l": rec.l, "n": rec.n,
        "shift_vector": ring_format_vector(C.shift_vector()),
        "modulus_components": [str(m) for m in C.mod_comps],
        "g": [str(g) for g in C.gen_comps],
        "h": [str(h) for h in C.check_comps],
        "ann_self_orthogonal": duality.is_ann_self_orthogonal(C),
        "ann_self_dual": duality.is_ann_self_dual(C),
        "ann_dual_containing": duality.is_ann_dual_containing(C),
        "ann_lcd": duality.is_ann_lcd(C),
        "gray_params": [img.n, img.k, d],
        "distance_exact": exact,
        "gray_lcd": lincode.is_lcd(img),
        "classification": lincode.classify(img) if exact else "unknown",
        "quasicyclic": gray.is_quasi_cyclic(img, polycode.shift_spec_of(C)),
    }
    return out


def cmd_code_info(args) -> int:
    rec = _load_records([args.record])[0]
    info = _code_report(rec, args.budget)
    if args.json:
        print(json.dumps(info))
        return 0
    n, k, d = info["gray_params"]
    rel = "" if info["distance_exact"] else ">="
    print(f"{info['id']}: q={info['q']} l={info['l']} n={info['n']}")
    print("  a:", info["shift_vector"])
    print("  moduli:", "; ".join(info["modulus_components"]))
    print("  g:", "; ".join(info["g"]))
    print("  h:", "; ".join(info["h"]))
    print(f"  annihilator: self-orthogonal={info['ann_self_orthogonal']}"
          f" self-dual={info['ann_self_dual']}"
          f" dual-containing={info['ann_dual_containing']} lcd={info['ann_lcd']}")
    print(f"  Psi(C): [{n},{k},{rel}{d}]_{info['q']}"
          f"  classification={info['classification']}"
          f" lcd={info['gray_lcd']} quasicyclic={info['quasicyclic']}")
    return 0


def cmd_dual(args) -> int:
    rec = _load_records([args.record])[0]
    C = rec.code()
    D = duality.ann_dual(C)
    flags = {
        "self_orthogonal": duality.is_ann_self_orthogonal(C),
        "self_dual": duality.is_ann_self_dual(C),
        "dual_containing": duality.is_ann_dual_containing(C),
        "lcd": duality.is_ann_lcd(C),
    }
    if args.json:
        print(json.dumps({
            "dual_g": [[p.coeff(i) for i in range(p.degree + 1)] for p in D.gen_comps],
            **flags}))
        return 0
    print("dual generators:", "; ".join(str(g) for g in D.gen_comps))
    for name, value in flags.items():
        print(f"  {name}: {value}")
    return 0


def cmd_gray(args) -> int:
    rec = _load_records([args.record])[0]
    if args.M is not None:
        rec.m_rows = _matrix_arg(args.M, rec.l)
    img = gray.gray_image(rec.code(), rec.gray_spec())
    if args.json:
        print(json.dumps({"n": img.n, "k": img.k,
                          "generator": [list(r) for r in img.gen]}))
        return 0
    print(f"Psi(C): [{img.n},{img.k}] over F_{rec.field.q}")
    for row in img.gen:
        print(" ".join(str(c) for c in row))
    return 0


def cmd_distance(args) -> int:
    rec = _load_records([args.record])[0]
    img = gray.gray_image(rec.code(), rec.gray_spec())
    d, exact = lincode.min_distance(img, args.budget)
    rel = "" if exact else ">="
    if args.json:
        print(json.dumps({"n": img.n, "k": img.k, "d": d, "exact": exact}))
    else:
        print(f"[{img.n},{img.k},{rel}{d}]_{rec.field.q}")
    return 0


def cmd_enumerate(args) -> int:
    field = _field_from_args(args)
    a_lists = json.loads(args.a)
    a_comps = [Poly.make(field, c) for c in a_lists]
    total = polycode.count_codes(field, args.l, args.n, a_comps, seed=args.seed)
    if total > args.budget:
        raise BudgetExceeded(f"{total} codes exceed budget {args.budget}")
    shown = 0
    for C in polycode.enumerate_codes(field, args.l, args.n, a_comps, seed=args.seed):
        if args.lcd and not duality.is_ann_lcd(C):
            continue
        if args.dual_containing and not duality.is_ann_dual_containing(C):
            continue
        img = gray.gray_image(C, gray.identity_gray(field, args.l))
        if args.min_k is not None and img.k < args.min_k:
            continue
        d = None
        if img.k > 0 and field.q ** img.k * img.n <= args.budget:
            d, _ = lincode.min_distance(img, args.budget)
        if args.min_d is not None and (d is None or d < args.min_d):
            continue
        entry = {
            "g": [[p.coeff(i) for i in range(p.degree + 1)] for p in C.gen_comps],
            "params": [img.n, img.k, d],
            "ann_lcd": duality.is_ann_lcd(C),
            "ann_dual_containing": duality.is_ann_dual_containing(C),
        }
        if args.json:
            print(json.dumps(entry))
        else:
            gens = "; ".join(str(p) for p in C.gen_comps)
            print(f"[{img.n},{img.k},{d}] lcd={entry['ann_lcd']}"
                  f" dual-containing={entry['ann_dual_containing']}  g: {gens}")
        shown += 1
    print(f"# {shown} of {total} codes", file=sys.stderr)
    return 0


def cmd_quantum(args) -> int:
    rec = _load_records([args.record])[0]
    qp = quantum.quantum_from_polycyclic(rec.code(), rec.gray_spec(), args.budget)
    if args.json:
        print(json.dumps({"n": qp.n, "k": qp.k, "d_lb": qp.d, "lambda": qp.lam}))
    else:
        print(f"[[{qp.n},{qp.k},>={qp.d}]]_{rec.field.q}  lambda={qp.lam}")
    return 0


def verify_record(rec: Record, budget: int) -> dict:
    """Recompute a record's expectations; flags check is a subset check
    since the published remark columns are not exhaustive."""
    result = {
        "id": rec.id, "q": rec.field.q, "l": rec.l, "n": rec.n,
        "expected": rec.expect.get("params", []),
        "flags_expected": sorted(rec.expect.get("flags", [])),
        "quantum_expected": rec.expect.get("quantum"),
        "computed": None, "flags_computed": [], "quantum_computed": None,
        "checks": {"params": None, "flags": None, "quantum": None},
        "status": "skipped",
    }
    C = rec.code()
    gs = rec.gray_spec()
    img = gray.gray_image(C, gs)
    d, exact = lincode.min_distance(img, budget)
    if not exact:
        raise BudgetExceeded(f"{rec.id}: distance enumeration over budget")
    result["computed"] = [img.n, img.k, d]
    flags = set()
    if lincode.is_lcd(img):
        flags.add("lcd")
    cls = lincode.classify(img)
    if cls in ("mds", "amds"):
        flags.add(cls)
    if gray.is_quasi_cyclic(img, polycode.shift_spec_of(C)):
        flags.add("quasicyclic")
    if duality.is_ann_dual_containing(C):
        flags.add("dualcontaining")
    result["flags_computed"] = sorted(flags)
    result["checks"]["params"] = result["computed"] == result["expected"]
    result["checks"]["flags"] = set(result["flags_expected"]).issubset(flags)
    if result["quantum_expected"] is not None:
        qp = quantum.quantum_from_polycyclic(C, gs, budget)
        result["quantum_computed"] = [qp.n, qp.k, qp.d]
        result["checks"]["quantum"] = (result["quantum_computed"]
                                       == result["quantum_expected"])
    ok = all(v for v in result["checks"].values() if v is not None)
    result["status"] = "pass" if ok else "fail"
    return result


def cmd_verify(args) -> int:
    paths = args.corpus or [str(bundled_corpus_path(t)) for t in TABLES]
    records = _load_records(paths)
    results = []
    failures = 0
    skipped = 0
    for rec in records:
        if rec.long and not args.all:
            skipped += 1
            results.append({
                "id": rec.id, "q": rec.field.q, "l": rec.l, "n": rec.n,
                "expected": rec.expect.get("params", []),
                "flags_expected": sorted(rec.expect.get("flags", [])),
                "quantum_expected": rec.expect.get("quantum"),
                "computed": None, "flags_computed": [],
                "quantum_computed": None,
                "checks": {"params": None, "flags": None, "quantum": None},
                "status": "skipped",
            })
            continue
        res = verify_record(rec, args.budget)
        results.append(res)
        if res["status"] == "fail":
            failures += 1
    if args.json:
        print(json.dumps({"results": results, "failures": failures,
                          "skipped": skipped}))
    else:
        header = f"{'id':8} {'q':>3} {'l':>2} {'n':>2} {'expected':>14} {'computed':>14} {'flags':>6} {'quantum':>8} status"
        print(header)
        for r in results:
            exp = ",".join(map(str, r["expected"]))
            comp = ",".join(map(str, r["computed"])) if r["computed"] else "-"
            fl = {None: "-", True: "ok", False: "FAIL"}[r["checks"]["flags"]]
            qu = {None: "-", True: "ok", False: "FAIL"}[r["checks"]["quantum"]]
            print(f"{r['id']:8} {r['q']:>3} {r['l']:>2} {r['n']:>2} "
                  f"{exp:>14} {comp:>14} {fl:>6} {qu:>8} {r['status']}")
        print(f"# {len(records) - skipped} verified, {skipped} skipped, "
              f"{failures} failed")
    if args.report_dir:
        from .report import write_report
        for p in write_report(results, args.report_dir):
            print(f"# wrote {p}", file=sys.stderr)
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_field_opts(sp) -> None:
    sp.add_argument("--q", type=int, help="field order (prime power)")
    sp.add_argument("--p", type=int, help="characteristic")
    sp.add_argument("--m", type=int, default=1, help="extension degree")


def _add_common(sp) -> None:
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                    help="work budget (codewords x length)")
    sp.add_argument("--seed", type=int, default=0, help="factorization seed")
    sp.add_argument("--json", action="store_true", help="machine output")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="polycodes",
        description="polycyclic codes over product rings GF(q)^l")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("factor", help="factor a polynomial over GF(q)")
    _add_field_opts(sp)
    _add_common(sp)
    sp.add_argument("poly", help="polynomial ('x^7+1' or '[1,0,...,1]')")
    sp.set_defaults(func=cmd_factor)

    for name, fn, hint in (("code-info", cmd_code_info, "full report for a code record"),
                           ("dual", cmd_dual, "annihilator dual and duality predicates"),
                           ("distance", cmd_distance, "Gray-image distance"),
                           ("quantum", cmd_quantum, "CSS parameters from a record")):
        sp = sub.add_parser(name, help=hint)
        _add_common(sp)
        sp.add_argument("record", help="path to a JSON code record")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("gray", help="generator matrix of the Gray image")
    _add_common(sp)
    sp.add_argument("record", help="path to a JSON code record")
    sp.add_argument("--M", help="row-major block map, overriding the record")
    sp.set_defaults(func=cmd_gray)

    sp = sub.add_parser("enumerate", help="enumerate all codes for a shift vector")
    _add_field_opts(sp)
    _add_common(sp)
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--a", required=True,
                    help="JSON list of l ascending coefficient lists")
    sp.add_argument("--lcd", action="store_true", help="only annihilator-LCD codes")
    sp.add_argument("--dual-containing", action="store_true",
                    help="only annihilator dual-containing codes")
    sp.add_argument("--min-k", type=int)
    sp.add_argument("--min-d", type=int)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("verify", help="recompute a verification corpus")
    _add_common(sp)
    sp.add_argument("corpus", nargs="*",
                    help="corpus JSON files (default: bundled tables)")
    sp.add_argument("--all", action="store_true",
                    help="include rows tagged long-running")
    sp.add_argument("--report-dir",
                    help="write report.csv and figures to this directory")
    sp.set_defaults(func=cmd_verify)

    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (PolycodesError, ValueError, KeyError, OSError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
