"""Command-line surface: analyze presentation/table files, export posets,
check bounds, run the verification suites, and search the open question.

Output is line-oriented `key: value` facts in decimal. Exit codes: 0 for
success / all-pass, 1 for a negative or failing result, 2 for usage and
input errors. Every command is deterministic for fixed (input, flags,
seed); the one exception is the elapsed_ms line of `verify`.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

import numpy as np

from . import _accel, constructions, core, green, ideals, rewriting
from .errors import (
    CapExceeded,
    NotAssociative,
    NotConfluent,
    ParseError,
    PreconditionViolated,
    UnsupportedInfinite,
)

_KIND_FLAGS = {
    "bi": "bi_ideal",
    "right": "right_ideal",
    "left": "left_ideal",
    "two-sided": "two_sided_ideal",
}

SUITES = (
    "bi-ideal-family",
    "left-ideal-cs-family",
    "brandt-tower",
    "null-extension",
    "brandt-example",
    "reference-monoids",
    "small-order-oracle",
)


def _parse_n_range(text: str):
    lo, sep, hi = text.partition("..")
    try:
        if sep:
            a, b = int(lo), int(hi)
        else:
            a = b = int(lo)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}, expected A..B") from None
    if b < a:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(a, b + 1)


def _detect_input_kind(text: str) -> str:
    for raw in text.splitlines():
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        if body.startswith("letters:"):
            return "presentation"
        if body.startswith("order:"):
            return "table"
        break
    raise ParseError(1, 1, "input must start with 'letters:' or 'order:'")


def _load_input(args):
    """Returns (semigroup, rewriting system or None)."""
    text = Path(args.input).read_text()
    kind = args.format or _detect_input_kind(text)
    if kind == "presentation":
        rs = rewriting.parse_presentation(text)
        return rewriting.semigroup_from_presentation(rs, cap=args.cap), rs
    return core.parse_table_text(text), None


def _resolve_element(s, rs, token: str) -> int:
    if rs is not None:
        try:
            return rewriting.element_index(rs, s, token)
        except ValueError:
            pass  # not a word over the alphabet; fall through to name lookup
    return s.index(token)


def _write_json(path, payload):
    Path(path).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def cmd_height(args) -> int:
    s, _ = _load_input(args)
    relations = [args.relation] if args.relation else list(green.RELATIONS)
    for rel in relations:
        print(f"{rel}: {green.height(s, rel)}")
    return 0


def cmd_classes(args) -> int:
    s, _ = _load_input(args)
    rel = args.relation or "R"
    poset = green.class_poset(s, rel)
    print(f"relation: {rel}")
    print(f"classes: {len(poset.classes)}")
    print(f"height: {poset.height}")
    for i, cls in enumerate(poset.classes):
        members = ", ".join(s.names[a] for a in cls)
        print(f"c{i}: {{{members}}}")
    return 0


def cmd_poset(args) -> int:
    s, _ = _load_input(args)
    rel = args.relation or "R"
    dot = green.class_poset(s, rel).to_dot()
    if args.dot:
        Path(args.dot).write_text(dot)
    else:
        sys.stdout.write(dot)
    return 0


def cmd_elements(args) -> int:
    s, _ = _load_input(args)
    print(f"order: {s.order}")
    for i, name in enumerate(s.names):
        print(f"e{i}: {name}")
    return 0


def cmd_complete(args) -> int:
    text = Path(args.input).read_text()
    if _detect_input_kind(text) != "presentation":
        print("error: 'complete' needs a presentation input", file=sys.stderr)
        return 2
    rs = rewriting.parse_presentation(text)
    ok, witness = rewriting.is_complete(rs)
    print(f"rules: {len(rs.rules)}")
    print(f"critical_pairs: {len(rewriting.critical_pairs(rs))}")
    print(f"complete: {'true' if ok else 'false'}")
    if ok:
        return 0
    print(f"witness_source: {rs.display(witness.source)}")
    print(f"witness_left: {rs.display(rewriting.reduce_word(rs, witness.left_result))}")
    print(f"witness_right: {rs.display(rewriting.reduce_word(rs, witness.right_result))}")
    return 1


def cmd_bounds(args) -> int:
    s, rs = _load_input(args)
    kind = _KIND_FLAGS[args.kind]
    gens = {_resolve_element(s, rs, tok) for tok in args.generators}
    handle = ideals.generate(s, gens, kind)
    report = ideals.bound_report(s, handle)
    members = ", ".join(handle.member_names)
    print(f"members: {{{members}}}")
    sys.stdout.write(report.to_text())
    if args.json:
        _write_json(args.json, report.to_json_dict())
    return 0 if report.passed else 1


# ---------------------------------------------------------------------------
# verification suites


def _jsonable(value):
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (frozenset, set)):
        return sorted(_jsonable(v) for v in value)
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.bool_,)):
        return bool(value)
    return value


def _case(case_id, expected, computed):
    expected = {k: _jsonable(v) for k, v in expected.items()}
    computed = {k: _jsonable(v) for k, v in computed.items()}
    return {
        "id": case_id,
        "expected": expected,
        "computed": computed,
        "pass": expected == computed,
    }


def _family_case(fi, extra_expected=None, extra_computed=None):
    s = fi.semigroup
    handle = fi.distinguished
    complement = sorted(set(s.names) - set(handle.member_names))
    ok, _ = rewriting.is_complete(rewriting.parse_presentation(fi.presentation_text))
    report = ideals.bound_report(s, handle)
    expected = {
        "order": fi.expected["order"],
        "height_r": fi.expected["height_r"],
        "relative_height": fi.expected["relative_height"],
        "chain_param": fi.expected["chain_param"],
        "complement": sorted(fi.expected["excluded"]),
        "complete": True,
        "bound_pass": True,
        "bound_tight": True,
    }
    computed = {
        "order": s.order,
        "height_r": green.height(s, "R"),
        "relative_height": ideals.relative_height(handle),
        "chain_param": ideals.chain_param(s, handle),
        "complement": complement,
        "complete": ok,
        "bound_pass": report.passed,
        "bound_tight": report.tight,
    }
    if extra_expected:
        expected.update(extra_expected)
        computed.update(extra_computed)
    return expected, computed


def suite_bi_ideal_family(args):
    ns = args.n or range(2, 7)
    cases = []
    for n in ns:
        fi = constructions.bi_ideal_family(n)
        expected, computed = _family_case(fi)
        cases.append(_case(f"n={n}", expected, computed))
    return cases


def suite_left_ideal_cs_family(args):
    ns = args.n or range(2, 9)
    cases = []
    for n in ns:
        fi = constructions.left_ideal_cs_family(n)
        jp = green.class_poset(fi.semigroup, "J")
        single_chain = all(len(c) <= 1 for c in jp.covers) and jp.height == len(jp.classes)
        expected, computed = _family_case(
            fi,
            {"height_j": fi.expected["height_j"], "single_j_chain": True},
            {"height_j": jp.height, "single_j_chain": single_chain},
        )
        cases.append(_case(f"n={n}", expected, computed))
    return cases


def _principal_right_ideal_heights(s):
    """relative R-height of every aS^1, by element index."""
    out = []
    for a in range(s.order):
        handle = ideals.generate(s, {a}, "right_ideal")
        out.append(ideals.relative_height(handle))
    return out


def suite_brandt_tower(args):
    ns = args.n or range(1, 5)
    cases = []
    for n in ns:
        fi = constructions.right_ideal_tower(n)
        expected = {
            "order": fi.expected["order"],
            "height_r": fi.expected["height_r"],
            "relative_height": fi.expected["relative_height"],
            "chain_param": fi.expected["chain_param"],
        }
        computed = {
            "order": fi.semigroup.order,
            "height_r": green.height(fi.semigroup, "R"),
            "relative_height": ideals.relative_height(fi.distinguished),
            "chain_param": ideals.chain_param(fi.semigroup, fi.distinguished),
        }
        if n == 2:
            expected["matches_brandt_example"] = True
            computed["matches_brandt_example"] = bool(
                np.array_equal(fi.semigroup.table, constructions.brandt_example().table)
            )
        cases.append(_case(f"tower n={n}", expected, computed))
    # one-step extension laws over small bases
    bases = [
        ("trivial", constructions.trivial_semigroup()),
        ("left-zero-2", constructions.left_zero_semigroup(2)),
        ("bi-family-2", constructions.bi_ideal_family(2).semigroup),
    ]
    for label, s in bases:
        t = constructions.brandt_extension(s, 2)
        base_heights = _principal_right_ideal_heights(s)
        lifted_ok = True
        for a in range(s.order):
            lifted = 2 * a  # index of (1, a, 1); see brandt_extension layout
            h = ideals.relative_height(ideals.generate(t, {lifted}, "right_ideal"))
            if h != base_heights[a] + 2:
                lifted_ok = False
        expected = {"height": green.height(s, "R") + 1, "principal_law": True}
        computed = {"height": green.height(t, "R"), "principal_law": lifted_ok}
        cases.append(_case(f"extension {label}", expected, computed))
    return cases


def suite_null_extension(args):
    bases = [
        ("left-family-3", constructions.left_ideal_cs_family(3).semigroup),
        ("trivial", constructions.trivial_semigroup()),
        ("left-zero-2", constructions.left_zero_semigroup(2)),
    ]
    cases = []
    for label, t_sem in bases:
        s, handle = constructions.null_extension(t_sem)
        m = t_sem.order
        mirror = all(
            green.leq(s, m + a, m + b, "R") == green.leq(t_sem, a, b, "R")
            for a in range(m)
            for b in range(m)
        )
        expected = {
            "order": 2 * m + 1,
            "relative_height": 2,
            "chain_param": green.height(t_sem, "R") + 1,
            "mirror_order": True,
            "bound_pass": True,
        }
        computed = {
            "order": s.order,
            "relative_height": ideals.relative_height(handle),
            "chain_param": ideals.chain_param(s, handle),
            "mirror_order": mirror,
            "bound_pass": ideals.bound_report(s, handle).passed,
        }
        cases.append(_case(f"base {label}", expected, computed))
    return cases


def suite_brandt_example(args):
    s = constructions.brandt_example()
    handle = ideals.generate(s, {s.index("(1,1)")}, "right_ideal")
    sub = core.restrict_to_subsemigroup(handle)
    ap = green.class_poset(sub, "R")
    sp = green.class_poset(s, "R")
    zero_class = sp.class_index(s.index("0"))
    expected = {
        "height_s": 2,
        "height_a": 3,
        "a_members": sorted(["(1,1)", "(1,2)", "0"]),
        "a_poset_is_3_chain": True,
        "s_poset_two_maximal_over_zero": True,
    }
    computed = {
        "height_s": sp.height,
        "height_a": ap.height,
        "a_members": sorted(handle.member_names),
        "a_poset_is_3_chain": len(ap.classes) == 3 and ap.height == 3,
        "s_poset_two_maximal_over_zero": (
            len(sp.classes) == 3
            and sp.maximal_classes() == tuple(i for i in range(3) if i != zero_class)
            and sp.minimal_classes() == (zero_class,)
        ),
    }
    return [_case("brandt-example", expected, computed)]


def suite_reference_monoids(args):
    ns = args.n or range(1, 4)
    cases = []
    for n in ns:
        s = constructions.full_transformation_monoid(n)
        expected = {rel: n for rel in green.RELATIONS}
        computed = {rel: green.height(s, rel) for rel in green.RELATIONS}
        cases.append(_case(f"full-transformations n={n}", expected, computed))
    s = constructions.symmetric_inverse_monoid(3)
    info = green.inverse_structure(s)
    expected = {"order": 34, "kind": "inverse", "idempotent_height": 4, "height_r": 4}
    computed = {
        "order": s.order,
        "kind": info.kind,
        "idempotent_height": info.idempotent_height,
        "height_r": green.height(s, "R"),
    }
    cases.append(_case("partial-bijections n=3", expected, computed))
    return cases


def _minimal_right_ideal_union(s):
    """Union of the minimal principal right ideals, found by raw inclusion."""
    principals = {frozenset({a, *s.table[a].tolist()}) for a in range(s.order)}
    minimal = [p for p in principals if not any(q < p for q in principals)]
    return frozenset().union(*minimal)


def _table_violations(s) -> list:
    """Every invariant the small-order oracle asserts, on one semigroup."""
    v = []
    try:
        kinfo = green.kernel(s)
        if not kinfo.is_completely_simple:
            v.append("kernel is not completely simple")
    except RuntimeError as exc:
        v.append(f"kernel: {exc}")
    hr = green.height(s, "R")
    if hr > green.height(s, "J"):
        v.append("H_R exceeds H_J")
    if (hr == 1) != (_minimal_right_ideal_union(s) == frozenset(range(s.order))):
        v.append("height-1 union lemma fails")
    reg = green.regular_elements(s)
    for mask in range(1, 1 << s.order):
        members = frozenset(i for i in range(s.order) if mask >> i & 1)
        for kind in ideals.IDEAL_KINDS:
            if not ideals.is_kind(s, members, kind):
                continue
            handle = core.SubsetHandle(s, members, kind)
            report = ideals.bound_report(s, handle)
            where = f"{kind} {sorted(members)}"
            if not report.passed:
                v.append(f"{report.theorem_id} bound fails on {where}")
            if report.sanity_bound is not None and report.relative_height > report.sanity_bound:
                v.append(f"sanity bound fails on {where}")
            if kind == "bi_ideal" and all(
                green.has_local_right_identity(handle, a) for a in members
            ):
                if report.relative_height != report.chain_param:
                    v.append(f"local-right-identity proposition fails on {where}")
            if kind == "left_ideal" and members <= reg:
                if report.relative_height != report.chain_param:
                    v.append(f"regular-left-ideal proposition fails on {where}")
    return v


_ORACLE_COUNTS = {1: 1, 2: 8, 3: 113}


def suite_small_order_oracle(args):
    max_order = args.order or 3
    if not 1 <= max_order <= 5:
        raise ValueError("--order must be between 1 and 5")
    samples = args.samples
    cases = []
    for m in range(1, max_order + 1):
        if m <= 3:
            tables = _accel.enumerate_assoc_tables(m)
            expected = {"tables": _ORACLE_COUNTS[m], "violations": 0}
        else:
            tables = _accel.sample_assoc_tables(m, samples, seed=args.seed)
            expected = {"tables": samples, "violations": 0}
        violations = 0
        first = None
        names = [str(i) for i in range(m)]
        for tab in tables:
            bad = _table_violations(core.from_table(names, tab))
            if bad:
                violations += len(bad)
                if first is None:
                    first = bad[0]
        computed = {"tables": int(len(tables)), "violations": violations}
        case = _case(f"order {m}", expected, computed)
        if first is not None:
            case["first_violation"] = first
        cases.append(case)
    return cases


_SUITE_FUNCS = {
    "bi-ideal-family": suite_bi_ideal_family,
    "left-ideal-cs-family": suite_left_ideal_cs_family,
    "brandt-tower": suite_brandt_tower,
    "null-extension": suite_null_extension,
    "brandt-example": suite_brandt_example,
    "reference-monoids": suite_reference_monoids,
    "small-order-oracle": suite_small_order_oracle,
}


def cmd_verify(args) -> int:
    start = time.perf_counter()
    cases = _SUITE_FUNCS[args.suite](args)
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    failures = sum(1 for c in cases if not c["pass"])
    print(f"suite: {args.suite}")
    for c in cases:
        print(f"case {c['id']}: {'pass' if c['pass'] else 'FAIL'}")
        if not c["pass"]:
            for key in sorted(c["expected"]):
                if c["expected"][key] != c["computed"].get(key):
                    print(f"  expected {key}: {c['expected'][key]}")
                    print(f"  computed {key}: {c['computed'].get(key)}")
    print(f"cases: {len(cases)}")
    print(f"failures: {failures}")
    print(f"elapsed_ms: {elapsed_ms}")
    if args.json:
        _write_json(
            args.json,
            {"suite": args.suite, "cases": cases, "elapsed_ms": elapsed_ms},
        )
    return 0 if failures == 0 else 1


# ---------------------------------------------------------------------------
# open-question search


def _best_bi_ideal_score(s):
    """Max of relative_height - (3*chain_param - 2) over all bi-ideals."""
    best = None
    for mask in range(1, 1 << s.order):
        members = frozenset(i for i in range(s.order) if mask >> i & 1)
        if not ideals.is_kind(s, members, "bi_ideal"):
            continue
        handle = core.SubsetHandle(s, members, "bi_ideal")
        h = ideals.relative_height(handle)
        n = ideals.chain_param(s, handle)
        score = h - (3 * n - 2)
        if best is None or score > best[0]:
            best = (score, h, n, tuple(sorted(members)))
    return best


def cmd_search_open1(args) -> int:
    budget = args.budget
    max_order = args.max_order
    searched = 0
    best = None  # (score, order, table tuple, h, n, members)

    def consider(tab, m):
        nonlocal best
        found = _best_bi_ideal_score(core.from_table([str(i) for i in range(m)], tab))
        if found is None:
            return
        score, h, n, members = found
        key = (score, -m)
        if best is None or key > (best[0], -best[1]):
            table_rows = tuple(tuple(int(x) for x in row) for row in tab)
            best = (score, m, table_rows, h, n, members)

    remaining = budget
    for m in range(1, min(3, max_order) + 1):
        if remaining <= 0:
            break
        tables = _accel.enumerate_assoc_tables(m)[:remaining]
        for tab in tables:
            consider(tab, m)
        searched += len(tables)
        remaining -= len(tables)
    sampled_orders = [m for m in range(4, max_order + 1)]
    for pos, m in enumerate(sampled_orders):
        if remaining <= 0:
            break
        share = remaining if pos == len(sampled_orders) - 1 else (
            remaining // (len(sampled_orders) - pos)
        )
        if share <= 0:
            continue
        tables = _accel.sample_assoc_tables(m, share, seed=args.seed + m)
        for tab in tables:
            consider(tab, m)
        searched += len(tables)
        remaining -= share
    print(f"searched_tables: {searched}")
    print(f"max_order: {max_order}")
    print(f"seed: {args.seed}")
    report = {
        "searched_tables": searched,
        "max_order": max_order,
        "seed": args.seed,
        "best": None,
    }
    if best is None:
        print("best: none")
    else:
        score, m, table_rows, h, n, members = best
        print(f"best_score: {score}")
        print(f"best_order: {m}")
        print(f"best_relative_height: {h}")
        print(f"best_chain_param: {n}")
        print(f"best_target_bound: {3 * n - 1}")
        print(f"best_bi_ideal: {' '.join(str(i) for i in members)}")
        print(f"best_table: {';'.join(' '.join(str(x) for x in row) for row in table_rows)}")
        report["best"] = {
            "score": score,
            "order": m,
            "relative_height": h,
            "chain_param": n,
            "target_bound": 3 * n - 1,
            "bi_ideal": list(members),
            "table": [list(r) for r in table_rows],
        }
    if args.json:
        _write_json(args.json, report)
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_input_flags(p):
    p.add_argument("input", help="presentation or table file")
    p.add_argument(
        "--format",
        choices=("presentation", "table"),
        help="override input kind detection",
    )
    p.add_argument("--cap", type=int, default=rewriting.DEFAULT_CAP,
                   help="irreducible-word enumeration cap")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="greenheight",
        description="Finite-semigroup heights, Green's posets, and ideal bounds",
    )
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("height", help="Green's-relation heights of the input")
    _add_input_flags(p)
    p.add_argument("--relation", choices=green.RELATIONS)
    p.set_defaults(func=cmd_height)

    p = sub.add_parser("classes", help="list Green's classes")
    _add_input_flags(p)
    p.add_argument("--relation", choices=green.RELATIONS)
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("poset", help="export the class poset as DOT")
    _add_input_flags(p)
    p.add_argument("--relation", choices=green.RELATIONS)
    p.add_argument("--dot", help="output path (stdout when omitted)")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("elements", help="list elements of the input")
    _add_input_flags(p)
    p.set_defaults(func=cmd_elements)

    p = sub.add_parser("complete", help="check presentation completeness")
    p.add_argument("input")
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("bounds", help="height-bound report for a generated subset")
    _add_input_flags(p)
    p.add_argument("--kind", choices=sorted(_KIND_FLAGS), required=True)
    p.add_argument("--generators", nargs="+", required=True,
                   help="generator element names (or words, for presentations)")
    p.add_argument("--json", help="also write the report as JSON")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--n", type=_parse_n_range, help="parameter range A..B")
    p.add_argument("--order", type=int, help="small-order-oracle: max order")
    p.add_argument("--samples", type=int, default=100_000,
                   help="small-order-oracle: sample count per order above 3")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", help="write the machine-readable report here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(
        "search-open1",
        help="search for a bi-ideal beating the completely-simple bound",
    )
    p.add_argument("--budget", type=int, default=200,
                   help="number of tables to examine")
    p.add_argument("--max-order", type=int, default=4, choices=range(1, 6))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", help="write the report here")
    p.set_defaults(func=cmd_search_open1)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2
    if getattr(args, "command", None) is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.func(args)
    except (
        ParseError,
        NotAssociative,
        NotConfluent,
        CapExceeded,
        PreconditionViolated,
        UnsupportedInfinite,
        OSError,
        KeyError,
        ValueError,
    ) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"error: {msg}", file=sys.stderr)
        return 2


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
