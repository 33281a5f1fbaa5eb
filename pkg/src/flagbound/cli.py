"""Command-line front end for the flag-code distance calculus.

Subcommands::

    dvalues       max distances with prescribed shared positions
    enumerate     the distance vectors at a given flag distance
    bounds        cardinality bound certificates per distance
    verify        analyze a flag code file (census, disjointness)
    realize       construct a flag pair with a given distance vector
    oracle-check  compare closed formulas against field enumeration
    tables        all built-in table reproductions for n = 7

Output is deterministic: identical invocations produce identical
bytes. The default rendering is a human table; ``--csv`` and
``--json-lines`` switch to machine-readable streams. Polynomials are
printed in the package grammar (e.g. ``q^4+2*q^2+1``); ``--q`` prints
evaluated integers instead. Warnings go to stderr; with ``--strict``
any warning turns the exit code nonzero.
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import os
import sys
import warnings

from flagbound.bounds import (
    SubspaceBoundProvider,
    Theorem,
    best_bound,
    load_bounds_file,
    min_distance_lower_bound_for_disjoint,
    refined_bound,
    variety_bound,
)
from flagbound.distvec import (
    DistanceVector,
    TypeVector,
    component_range,
    enumerate_distance_vectors,
    full_type,
    max_flag_distance,
)
from flagbound.dvalues import (
    canonical_difference_multiset,
    check_pattern,
    max_distance_with_zeros,
)
from flagbound.flagalg import (
    EnumerationLimitError,
    brute_force_distance_vector_set,
    code_census,
    distance_vector_of_pair,
    is_disjoint,
    is_m_disjoint,
    parse_flag_code,
    realize_distance_vector,
)

ENV_BOUNDS_FILE = "FLAGBOUND_BOUNDS_FILE"


def _fmt_tuple(xs) -> str:
    return "(" + ",".join(str(x) for x in xs) + ")"


def _fmt_pattern(pattern) -> str:
    return ",".join(str(i) for i in pattern)


def _parse_int_list(text: str, what: str):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"bad {what}: {text!r} (expected a comma list of integers)")


def _resolve_type(args) -> TypeVector:
    if args.type is not None:
        dims = _parse_int_list(args.type, "type")
        return TypeVector(dims, args.n)
    return full_type(args.n)


def _type_params(t: TypeVector) -> dict:
    return {"n": t.n, "type": list(t.dims)}


def _echo(command: str, params: dict) -> str:
    parts = [f"# flagbound {command}"]
    for key, value in params.items():
        if isinstance(value, list):
            value = ",".join(str(x) for x in value)
        parts.append(f"{key}={value}")
    return " ".join(parts)


def _cell(column, value) -> str:
    # Tuples render bare for pattern columns ("1,3") and wrapped
    # otherwise ("(0,2,4)"); everything else via str().
    if isinstance(value, tuple):
        return _fmt_pattern(value) if column == "pattern" else _fmt_tuple(value)
    return str(value)


def _emit_table(out, mode, command, params, columns, rows):
    if mode == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_cell(c, row[c]) for c in columns])
        return
    if mode == "jsonl":
        for row in rows:
            record = {"command": command, "params": params}
            for key, value in row.items():
                record[key] = list(value) if isinstance(value, tuple) else value
            out.write(json.dumps(record, sort_keys=True) + "\n")
        return
    out.write(_echo(command, params) + "\n")
    cells = [[_cell(c, row[c]) for c in columns] for row in rows]
    widths = [
        max(len(col), *(len(line[i]) for line in cells)) if cells else len(col)
        for i, col in enumerate(columns)
    ]
    header = "  ".join(col.ljust(w) for col, w in zip(columns, widths)).rstrip()
    out.write(header + "\n")
    for line in cells:
        out.write("  ".join(c.ljust(w) for c, w in zip(line, widths)).rstrip() + "\n")


def _emit_report(out, mode, command, params, items):
    # items: ordered (key, value) pairs; value may be a list of lines.
    if mode == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["key", "value"])
        for key, value in items:
            if isinstance(value, list):
                value = " | ".join(value)
            writer.writerow([key, value])
        return
    if mode == "jsonl":
        for key, value in items:
            record = {"command": command, "params": params, "key": key, "value": value}
            out.write(json.dumps(record, sort_keys=True) + "\n")
        return
    out.write(_echo(command, params) + "\n")
    for key, value in items:
        if isinstance(value, list):
            out.write(key + ":\n")
            for line in value:
                out.write(line + "\n")
        else:
            out.write(f"{key}: {value}\n")


def _dedup_full_patterns(t: TypeVector):
    seen = {}
    for M in range(1, t.r + 1):
        for pattern in itertools.combinations(range(1, t.r + 1), M):
            key = canonical_difference_multiset(t.n, pattern)
            if key not in seen:
                seen[key] = pattern
    return list(seen.values())


def _all_patterns(t: TypeVector):
    out = []
    for M in range(1, t.r + 1):
        out.extend(itertools.combinations(range(1, t.r + 1), M))
    return out


def _dvalues_rows(t: TypeVector, patterns):
    columns = ["pattern", "diffs", "vector", "value"] if t.is_full else ["pattern", "vector", "value"]
    rows = []
    for pattern in patterns:
        vector, value = max_distance_with_zeros(t, pattern)
        row = {"pattern": pattern}
        if t.is_full:
            row["diffs"] = canonical_difference_multiset(t.n, pattern)
        row["vector"] = vector.components
        row["value"] = value
        rows.append(row)
    return columns, rows


def cmd_dvalues(args, out):
    t = _resolve_type(args)
    params = _type_params(t)
    if args.M is not None:
        params["M"] = args.M
    if args.pattern is not None:
        requested = check_pattern(t, _parse_int_list(args.pattern, "pattern"))
        params["pattern"] = list(requested)
        if args.M is not None and args.M != len(requested):
            raise ValueError(f"pattern {requested} has {len(requested)} positions, not M={args.M}")
        patterns = [requested]
    elif t.is_full:
        patterns = _dedup_full_patterns(t)
    else:
        patterns = _all_patterns(t)
    if args.M is not None:
        if not 1 <= args.M <= t.r:
            raise ValueError(f"M={args.M} out of range 1..{t.r}")
        patterns = [p for p in patterns if len(p) == args.M]
    columns, rows = _dvalues_rows(t, patterns)
    _emit_table(out, args.mode, "dvalues", params, columns, rows)
    return 0


def cmd_enumerate(args, out):
    t = _resolve_type(args)
    params = {"d": args.d, **_type_params(t)}
    vectors = enumerate_distance_vectors(args.d, t)
    rows = [{"vector": v.components} for v in vectors]
    _emit_table(out, args.mode, "enumerate", params, ["vector"], rows)
    return 0


def _load_provider(args) -> SubspaceBoundProvider:
    path = args.bounds_file or os.environ.get(ENV_BOUNDS_FILE)
    if path:
        return SubspaceBoundProvider(load_bounds_file(path))
    return SubspaceBoundProvider()


def _poly_cell(poly, q_eval):
    return str(poly.evaluate(q_eval)) if q_eval else str(poly)


def _bound_row(d, t, cert, q_eval, section=None):
    sup = str(t.n) if t.is_full else f"(t,{t.n})"
    if cert.theorem in (Theorem.VARIETY, Theorem.GRASSMANNIAN):
        pattern = cert.pattern
        value = max_distance_with_zeros(t, pattern)[1]
        dims = tuple(t.dims[i - 1] for i in pattern)
        if len(dims) == 1:
            size = f"|G_q({dims[0]},{t.n})|"
        else:
            size = f"|F_q({_fmt_tuple(dims)},{t.n})|"
        justification = f"D({_fmt_pattern(pattern)})^{sup}={value}; {size}"
    else:
        i = cert.pattern
        entry = cert.provenance[0]
        bar_d = component_range(d, t, i).lo
        if "Singleton" in entry.source:
            warnings.warn(
                f"no exact value for A_q({t.n},{bar_d},{t.dims[i - 1]}); "
                f"using the Singleton-type fallback"
            )
        justification = (
            f"bar-d_{i}={bar_d}; A_q({t.n},{bar_d},{t.dims[i - 1]}) [{entry.source}]"
        )
    for poly, key in cert.rivals:
        justification += f"; rival {poly} at {key}"
    row = {
        "d": d,
        "bound": _poly_cell(cert.bound, q_eval),
        "theorem": cert.theorem.value,
        "justification": justification,
    }
    if section is not None:
        row["section"] = section
    return row


def _bounds_rows(t, distances, provider, per_theorem, q_eval):
    rows = []
    if not per_theorem:
        for d in distances:
            rows.append(_bound_row(d, t, best_bound(d, t, provider), q_eval))
        return ["d", "bound", "theorem", "justification"], rows
    for d in distances:
        rows.append(_bound_row(d, t, variety_bound(d, t), q_eval, section="variety"))
    for d in distances:
        try:
            refined = refined_bound(d, t, provider)
        except ValueError:
            continue
        if refined.bound.evaluate(2) <= variety_bound(d, t).bound.evaluate(2):
            rows.append(_bound_row(d, t, refined, q_eval, section="refined"))
    return ["section", "d", "bound", "theorem", "justification"], rows


def cmd_bounds(args, out):
    t = _resolve_type(args)
    params = _type_params(t)
    if args.d is not None:
        distances = [args.d]
        params["d"] = args.d
    else:
        distances = list(range(2, max_flag_distance(t) + 1, 2))
    if args.per_theorem:
        params["per_theorem"] = True
    if args.q:
        params["q"] = args.q
    provider = _load_provider(args)
    columns, rows = _bounds_rows(t, distances, provider, args.per_theorem, args.q)
    _emit_table(out, args.mode, "bounds", params, columns, rows)
    return 0


def cmd_verify(args, out):
    with open(args.codefile) as fh:
        code = parse_flag_code(fh.read())
    t = code.type
    params = {"file": args.codefile}
    census = code_census(code)
    items = [
        ("q", code.q),
        ("n", t.n),
        ("type", ",".join(map(str, t.dims))),
        ("flags", len(code)),
        ("min distance", census.min_distance),
    ]
    if census.vectors_at_min:
        at_min = sorted(v.components for v in census.vectors_at_min)
        items.append(("D(C)", " ".join(_fmt_tuple(v) for v in at_min)))
        histogram = {}
        for (d, _), count in census.all_pairs.items():
            histogram[d] = histogram.get(d, 0) + count
        items.append(
            ("distances", " ".join(f"{d}:{histogram[d]}" for d in sorted(histogram)))
        )
    else:
        items.append(("D(C)", "(none)"))
    for text in args.pattern or []:
        pattern = check_pattern(t, _parse_int_list(text, "pattern"))
        ok, witness = is_disjoint(code, pattern)
        if ok:
            verdict = "yes"
        else:
            a = code.flags.index(witness[0]) + 1
            b = code.flags.index(witness[1]) + 1
            verdict = f"no (flags {a},{b} agree)"
        items.append((f"disjoint ({_fmt_pattern(pattern)})", verdict))
    if len(code) > 1:
        smallest_M = next(M for M in range(1, t.r + 1) if is_m_disjoint(code, M)[0])
        projected = tuple(
            min(v.components[i] for (_, v) in census.all_pairs)
            for i in range(t.r)
        )
        bound = min_distance_lower_bound_for_disjoint(projected, smallest_M)
        items.append(("m-disjoint", f"smallest M = {smallest_M}"))
        items.append(("projected distances", _fmt_tuple(projected)))
        items.append((f"distance lower bound (M={smallest_M})", bound))
    _emit_report(out, args.mode, "verify", params, items)
    return 0


def cmd_realize(args, out):
    t = _resolve_type(args)
    components = _parse_int_list(args.vector, "vector")
    v = DistanceVector(components, t)
    params = {"v": _fmt_tuple(components), **_type_params(t), "q": args.q}
    F, G = realize_distance_vector(v, args.q)
    measured = distance_vector_of_pair(F, G)
    items = [
        ("F", [" ".join(map(str, row)) for row in F.nested_basis()]),
        ("G", [" ".join(map(str, row)) for row in G.nested_basis()]),
        (
            "round-trip",
            f"{_fmt_tuple(measured.components)} "
            + ("ok" if measured == v else "MISMATCH"),
        ),
    ]
    _emit_report(out, args.mode, "realize", params, items)
    return 0 if measured == v else 1


def cmd_oracle_check(args, out):
    t = _resolve_type(args)
    params = {**_type_params(t), "q": args.q}
    if args.sample_pairs:
        params["sample_pairs"] = args.sample_pairs
        params["seed"] = args.seed
    rows = []
    failures = 0
    for d in range(0, max_flag_distance(t) + 1, 2):
        enumerated = set(enumerate_distance_vectors(d, t))
        measured = brute_force_distance_vector_set(
            d, t, args.q, sample_pairs=args.sample_pairs, seed=args.seed
        )
        if args.sample_pairs:
            # Sampling may miss vectors; require measured ⊆ enumerated and
            # every enumerated vector to be realizable over the field.
            ok = measured <= enumerated
            if ok:
                for v in enumerated:
                    pair = realize_distance_vector(v, args.q)
                    if distance_vector_of_pair(*pair) != v:
                        ok = False
                        break
        else:
            ok = measured == enumerated
        failures += not ok
        rows.append(
            {
                "d": d,
                "enumerated": len(enumerated),
                "measured": len(measured),
                "status": "ok" if ok else "FAIL",
            }
        )
    _emit_table(
        out, args.mode, "oracle-check", params,
        ["d", "enumerated", "measured", "status"], rows,
    )
    return 1 if failures else 0


def cmd_tables(args, out):
    if args.mode == "csv":
        raise ValueError("tables emits several tables; use the individual commands for CSV")
    sections = []
    full7 = full_type(7)
    t7 = TypeVector((1, 3, 5, 6), 7)
    provider = _load_provider(args)

    for title, t in (("max distances, full type, n=7", full7),
                     ("max distances, type (1,3,5,6), n=7", t7)):
        patterns = _dedup_full_patterns(t) if t.is_full else _all_patterns(t)
        columns, rows = _dvalues_rows(t, patterns)
        sections.append(("dvalues", title, _type_params(t), columns, rows))
    for title, t in (("bounds, full type, n=7", full7),
                     ("bounds, type (1,3,5,6), n=7", t7)):
        distances = list(range(2, max_flag_distance(t) + 1, 2))
        columns, rows = _bounds_rows(t, distances, provider, True, None)
        params = {**_type_params(t), "per_theorem": True}
        sections.append(("bounds", title, params, columns, rows))
    first = True
    for command, title, params, columns, rows in sections:
        if args.mode != "jsonl":
            if not first:
                out.write("\n")
            out.write(f"== {title} ==\n")
        first = False
        _emit_table(out, args.mode, command, params, columns, rows)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="flagbound",
        description="distance-vector calculus and cardinality bounds for flag codes",
    )
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true", help="emit CSV")
    fmt.add_argument("--json-lines", action="store_true", help="emit JSON records, one per line")
    common.add_argument("--strict", action="store_true",
                        help="exit nonzero if any warning was issued")

    typed = argparse.ArgumentParser(add_help=False)
    typed.add_argument("-n", type=int, required=True, help="ambient dimension")
    group = typed.add_mutually_exclusive_group()
    group.add_argument("-t", "--type", help="type vector, e.g. 1,3,5,6")
    group.add_argument("--full", action="store_true", help="full type (default)")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dvalues", parents=[common, typed],
                       help="max distances with prescribed shared positions")
    p.add_argument("-M", type=int, help="restrict to patterns of this size")
    p.add_argument("--pattern", help="a single pattern of positions, e.g. 2,3")
    p.set_defaults(func=cmd_dvalues)

    p = sub.add_parser("enumerate", parents=[common, typed],
                       help="distance vectors at a given flag distance")
    p.add_argument("-d", type=int, required=True, help="flag distance (even)")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("bounds", parents=[common, typed],
                       help="cardinality bound certificates")
    p.add_argument("-d", type=int, help="a single distance (default: all admissible)")
    p.add_argument("--per-theorem", action="store_true",
                   help="split the variety and refined families into sections")
    p.add_argument("--q", type=int, help="evaluate bounds at this prime power")
    p.add_argument("--bounds-file", help="override file with known A_q(n,d,k) values")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", parents=[common],
                       help="analyze a flag code file")
    p.add_argument("codefile", help="path to a flag code file")
    p.add_argument("--pattern", action="append",
                   help="check disjointness at these positions (repeatable)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("realize", parents=[common, typed],
                       help="construct a flag pair with a given distance vector")
    p.add_argument("-v", "--vector", required=True, help="distance vector, e.g. 2,0,2")
    p.add_argument("-q", type=int, required=True, help="field size (prime)")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("oracle-check", parents=[common, typed],
                       help="compare closed formulas against field enumeration")
    p.add_argument("-q", type=int, required=True, help="field size (prime)")
    p.add_argument("--sample-pairs", type=int,
                   help="sample this many random pairs instead of all")
    p.add_argument("--seed", type=int, default=0, help="sampling seed")
    p.set_defaults(func=cmd_oracle_check)

    p = sub.add_parser("tables", parents=[common],
                       help="all built-in table reproductions for n = 7")
    p.add_argument("--bounds-file", help="override file with known A_q(n,d,k) values")
    p.set_defaults(func=cmd_tables)

    return parser


def _is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    for p in range(2, int(q**0.5) + 1):
        if q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
    return True


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.mode = "csv" if args.csv else ("jsonl" if args.json_lines else "human")
    if getattr(args, "q", None) is not None and args.command in ("bounds",):
        if not _is_prime_power(args.q):
            parser.error(f"--q {args.q} is not a prime power")
    if getattr(args, "d", None) is not None and args.command == "bounds":
        if args.d % 2 or args.d < 2:
            parser.error(f"-d {args.d} must be a positive even distance")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            status = args.func(args, sys.stdout)
        except (ValueError, EnumerationLimitError, OSError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    for item in caught:
        print(f"warning: {item.message}", file=sys.stderr)
    if args.strict and caught:
        return 1
    return status


if __name__ == "__main__":
    sys.exit(main())
