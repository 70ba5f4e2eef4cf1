"""Command line front end.

Exit codes: 0 success, 1 bad input or domain error, 2 a verification
failed, 3 the element budget (CRYSTALKIT_BUDGET) was exceeded.  Errors are
reported as a single line ``crystalkit: error: <kind>: <message>`` on stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .crystal import BudgetExceeded, to_dot
from .partitions import PartitionPair, pair_to_json, parse_partition

SCHEMA_VERSION = 1

EXIT_OK, EXIT_DOMAIN, EXIT_VERIFY, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class VerificationFailed(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _envelope(command: str, payload) -> str:
    return json.dumps({"schema": f"crystalkit.{command}/{SCHEMA_VERSION}", "result": payload},
                      sort_keys=True)


def _pair_str(pr: PartitionPair) -> str:
    return f"{pr.plus};{pr.minus}"


def _pair(plus: str, minus: str) -> PartitionPair:
    return PartitionPair(parse_partition(plus), parse_partition(minus))


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.replace(" ", "").split(",") if x != ""]


# -- commands ------------------------------------------------------------------------

def cmd_lr(args, out):
    from .partitions import lr_coefficient
    from .tableaux import lr_via_crystal
    lam, mu, nu = (parse_partition(x) for x in (args.lam, args.mu, args.nu))
    values = {}
    if args.method in ("tableaux", "both"):
        values["tableaux"] = lr_coefficient(lam, mu, nu)
    if args.method in ("crystal", "both"):
        values["crystal"] = lr_via_crystal(lam, mu, nu)
    if len(set(values.values())) > 1:
        raise VerificationFailed(f"tableaux={values['tableaux']} crystal={values['crystal']}")
    value = next(iter(values.values()))
    if args.json:
        out.write(_envelope("lr", {"lam": list(lam), "mu": list(mu), "nu": list(nu),
                                   "value": value, "methods": sorted(values)}) + "\n")
    else:
        out.write(f"{value}\n")


def _table_lines(table) -> list[str]:
    return [f"{_pair_str(pr)}\t{m}" for pr, m in table.sorted_items()]


def cmd_tensor(args, out):
    from .tableaux import tensor_decompose
    a = _pair(args.mu, args.nu)
    b = _pair(args.sigma, args.tau)
    table = tensor_decompose(a, b, args.rank, method=args.method)
    if args.json:
        out.write(_envelope("tensor-decompose", {"rank": args.rank, "entries": table.to_json()}) + "\n")
    else:
        out.write("pair\tmult\n" + "".join(line + "\n" for line in _table_lines(table)))
    if args.plot:
        from .plots import bar_chart
        items = table.sorted_items()
        bar_chart([_pair_str(p) for p, _ in items], [m for _, m in items], args.plot,
                  title=f"{_pair_str(a)} x {_pair_str(b)}, N={args.rank}")


def cmd_bitableaux(args, out):
    from .tableaux import bitableau_to_json, bitableaux_crystal, verify_bitableaux_iso
    h = bitableaux_crystal(parse_partition(args.mu), parse_partition(args.nu), args.rank)
    elems = h.elements()
    verified = None
    if args.verify:
        verified = verify_bitableaux_iso(parse_partition(args.mu), parse_partition(args.nu), args.rank)
    if args.json:
        payload = {"rank": args.rank, "count": len(elems), "verified": verified}
        if args.list:
            payload["elements"] = [bitableau_to_json(b) for b in elems]
        out.write(_envelope("bitableaux", payload) + "\n")
    else:
        out.write(f"elements\t{len(elems)}\n")
        if args.list:
            for b in elems:
                out.write(h.fmt(b) + "\n")
        if verified is not None:
            out.write(f"isomorphism\t{'ok' if verified else 'FAILED'}\n")
    if verified is False:
        raise VerificationFailed("bitableaux crystal is not isomorphic to the tensor product")


def cmd_howe(args, out):
    from .fockcrystal import howe_decompose
    comps = howe_decompose(args.m, args.n)
    if args.json:
        out.write(_envelope("howe", {"m": args.m, "n": args.n, "components": [
            {"label": list(c.label), "dual_label": list(c.dual_label),
             "multiplicity": c.multiplicity, "size": c.size} for c in comps]}) + "\n")
    else:
        out.write("label\tdual_label\tmultiplicity\tsize\n")
        for c in comps:
            out.write(f"{c.label}\t{c.dual_label}\t{c.multiplicity}\t{c.size}\n")
    if args.plot:
        from .plots import bar_chart
        bar_chart([str(c.label) for c in comps], [c.size for c in comps], args.plot,
                  title=f"{args.m} x {args.n} matrices", ylabel="component size")


def cmd_h_set(args, out):
    from .fockcrystal import h_set, socle_weight
    top = _pair(args.mu, args.nu)
    bottom = _pair(args.zeta, args.eta)
    n = args.level if args.level is not None else len(top.plus) + len(top.minus) + 2
    n = max(n, len(bottom.plus) + len(bottom.minus))
    gamma = socle_weight(top, bottom, n)
    if gamma.is_boson_weight():
        hs = h_set(bottom, gamma, n)
        members = hs.members
    else:
        members = []
    if args.json:
        payload = {"level": n, "size": len(members)}
        if args.list:
            payload["members"] = [M.to_json() for M in members]
        out.write(_envelope("h-set", payload) + "\n")
    else:
        out.write(f"{len(members)}\n")
        if args.list:
            for M in members:
                out.write(json.dumps(M.to_json()) + "\n")


def _parse_word(text: str) -> list[tuple[int, int]]:
    letters = []
    for chunk in text.replace(";", " ").split():
        parts = chunk.strip("()").split(",")
        if len(parts) != 2:
            raise ValueError(f"letter {chunk!r} is not of the form row,col")
        letters.append((int(parts[0]), int(parts[1])))
    return letters


def cmd_straighten(args, out):
    from .qwedge import straighten, word_matrix
    from .ratfun import format_ratfun
    word = _parse_word(args.word)
    m = args.m or max((a for a, _ in word), default=0)
    n = args.n or max((b for _, b in word), default=0)
    if any(not (1 <= a <= m and 1 <= b <= n) for a, b in word):
        raise ValueError("letter outside the m x n grid")
    x = straighten(word, strategy=args.strategy, m=m, n=n)
    if args.json:
        out.write(_envelope("straighten", {"m": m, "n": n, "terms": x.to_json()}) + "\n")
        return
    if x.is_zero():
        out.write("0\n")
    for w, c in x.items():
        letters = " ".join(f"{a},{b}" for a, b in w)
        mat = "/".join("".join(map(str, r)) for r in word_matrix(w, m, n))
        out.write(f"{format_ratfun(c)}\t{letters}\t{mat}\n")


def cmd_canonical_basis(args, out):
    from .qwedge import base_change_csv, bar, bi_weights, canonical_basis, matrix_label
    if (args.rows is None) != (args.cols is None):
        raise ValueError("--rows and --cols go together")
    if args.rows is not None:
        spaces = [(tuple(_int_list(args.rows)), tuple(_int_list(args.cols)))]
    else:
        spaces = bi_weights(args.m, args.n)
    blocks = []
    failures = []
    for rows, cols in spaces:
        cb = canonical_basis(args.m, args.n, rows, cols)
        for M, G in cb.elements.items():
            if bar(G) != G:
                failures.append(f"G({matrix_label(M)}) is not bar-invariant")
        blocks.append((rows, cols, cb))
    for rows, cols, cb in blocks:
        for c, M in enumerate(cb.matrices):
            col = [row[c] for row in cb.base_change()]
            for r, v in enumerate(col):
                if r == c:
                    ok = v.items() == [(0, 1)]
                else:
                    ok = v.is_zero() or (v.valuation() >= 1 and r > c)
                if not ok:
                    failures.append(f"entry ({r},{c}) of block {rows};{cols} is {v}")
    if args.json:
        payload = []
        for rows, cols, cb in blocks:
            payload.append({"rows": list(rows), "cols": list(cols),
                            "monomials": [[list(r) for r in M] for M in cb.matrices],
                            "G": [cb.elements[M].to_json() for M in cb.matrices]})
        out.write(_envelope("canonical-basis", {"m": args.m, "n": args.n, "spaces": payload}) + "\n")
    else:
        for k, (rows, cols, cb) in enumerate(blocks):
            if len(blocks) > 1:
                if k:
                    out.write("\n")
                out.write(f"# rows={','.join(map(str, rows))} cols={','.join(map(str, cols))}\n")
            out.write(base_change_csv(cb))
    if args.plot:
        from .plots import matrix_chart
        rows, cols, cb = max(blocks, key=lambda b: len(b[2].matrices))
        labels = [matrix_label(M) for M in cb.matrices]
        values = [[float(len(v.items())) for v in row] for row in cb.base_change()]
        matrix_chart(labels, labels, values, args.plot, cbar_label="number of q-terms",
                     title=f"rows {rows}, cols {cols}")
    if failures:
        raise VerificationFailed(failures[0])


def cmd_crystal_graph(args, out):
    from .fockcrystal import matrix_crystal
    from .tableaux import bitableaux_crystal, dual_sst_crystal, sst_crystal
    if args.kind == "sst":
        h = sst_crystal(parse_partition(args.mu), args.rank)
    elif args.kind == "dual":
        h = dual_sst_crystal(parse_partition(args.nu), args.rank)
    elif args.kind == "bitableaux":
        h = bitableaux_crystal(parse_partition(args.mu), parse_partition(args.nu), args.rank)
    else:
        h = matrix_crystal(args.m, args.n)
    elems = h.elements()
    dot = to_dot(elems, h, max_nodes=min(args.max_nodes, 10_000), name=h.name)
    if args.json:
        out.write(_envelope("crystal-graph", {"nodes": len(elems), "dot": dot}) + "\n")
    else:
        out.write(dot)


def cmd_socle(args, out):
    from .charalg import socle_layer_general, socle_layers
    ab = _pair(args.a, args.b)
    gd = _pair(args.g, args.d2)
    if args.layer is not None:
        tables = [socle_layer_general(ab, gd, args.layer)]
    else:
        tables = socle_layers(ab, gd)
    data = [t.to_json() for t in tables]
    if args.json:
        out.write(_envelope("socle", {"top": pair_to_json(ab), "bottom": pair_to_json(gd),
                                      "layers": data}) + "\n")
    else:
        body = data[0] if args.layer is not None else data
        out.write(json.dumps(body, sort_keys=True) + "\n")
    if args.plot:
        from .plots import layered_chart
        layered_chart([[(_pair_str(pr), m) for pr, m in t.entries.sorted_items()] for t in tables],
                      args.plot, title=f"{_pair_str(ab)} x {_pair_str(gd)}")


def cmd_transition(args, out):
    from .charalg import verify_transition_inverse
    ok = verify_transition_inverse(args.degree)
    if args.json:
        out.write(_envelope("transition-check", {"degree": args.degree, "ok": ok}) + "\n")
    else:
        out.write("ok\n" if ok else "mismatch\n")
    if not ok:
        raise VerificationFailed(f"m and n matrices are not inverse up to degree {args.degree}")


def cmd_cauchy(args, out):
    from .charalg import cauchy_mismatch, format_element
    diff = cauchy_mismatch(args.kind, args.vars, args.degree)
    if args.json:
        payload = {"kind": args.kind, "vars": args.vars, "degree": args.degree, "ok": diff is None}
        if diff is not None:
            payload["first_difference"] = {"exponents": list(diff[0]), "lhs": format_element(diff[1]),
                                           "rhs": format_element(diff[2])}
        out.write(_envelope("cauchy-verify", payload) + "\n")
    elif diff is None:
        out.write("ok\n")
    else:
        out.write(f"mismatch at exponents {list(diff[0])}\n"
                  f"lhs\t{format_element(diff[1])}\nrhs\t{format_element(diff[2])}\n")
    if diff is not None:
        raise VerificationFailed(f"coefficient {list(diff[0])} differs")


# -- parser ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="crystalkit", description="Crystals, q-wedges and socle multiplicities.")
    p.add_argument("--version", action="version", version=f"crystalkit {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text, plot=False):
        sp = sub.add_parser(name, help=help_text, description=help_text)
        sp.add_argument("--json", action="store_true", help="versioned JSON output")
        if plot:
            sp.add_argument("--plot", metavar="PATH", help="also write a figure (png/svg/pdf)")
        sp.set_defaults(func=func)
        return sp

    sp = add("lr", cmd_lr, "Littlewood-Richardson coefficient c^lam_{mu nu}")
    sp.add_argument("--lam", required=True)
    sp.add_argument("--mu", required=True)
    sp.add_argument("--nu", required=True)
    sp.add_argument("--method", choices=("tableaux", "crystal", "both"), default="tableaux")

    sp = add("tensor-decompose", cmd_tensor, "decompose B_{mu,nu} x B_{sigma,tau} at rank N", plot=True)
    for flag in ("--mu", "--nu", "--sigma", "--tau"):
        sp.add_argument(flag, default="")
    sp.add_argument("--rank", type=int, required=True)
    sp.add_argument("--method", choices=("components", "highest"), default="highest")

    sp = add("bitableaux", cmd_bitableaux, "the bitableaux crystal B_{mu,nu} at rank N")
    sp.add_argument("--mu", default="")
    sp.add_argument("--nu", default="")
    sp.add_argument("--rank", type=int, required=True)
    sp.add_argument("--verify", action="store_true", help="check the tensor product isomorphism")
    sp.add_argument("--list", action="store_true", help="list the elements")

    sp = add("howe", cmd_howe, "decompose the m x n 0-1 matrix crystal", plot=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)

    sp = add("h-set", cmd_h_set, "size of the H-set counting (zeta,eta) below (mu,nu)")
    for flag in ("--mu", "--nu", "--zeta", "--eta"):
        sp.add_argument(flag, default="")
    sp.add_argument("--level", type=int, default=None, help="level n (default l(mu)+l(nu)+2)")
    sp.add_argument("--list", action="store_true", help="list the matrices")

    sp = add("straighten", cmd_straighten, "expand a wedge word in standard monomials")
    sp.add_argument("--word", required=True, help='letters "a,b" separated by spaces, e.g. "1,2 2,1"')
    sp.add_argument("--m", type=int, default=0)
    sp.add_argument("--n", type=int, default=0)
    sp.add_argument("--strategy", choices=("left", "right"), default="left")

    sp = add("canonical-basis", cmd_canonical_basis, "canonical basis base-change matrix as CSV", plot=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--rows", default=None, help="row sums, e.g. 1,1")
    sp.add_argument("--cols", default=None, help="column sums, e.g. 1,1")

    sp = add("crystal-graph", cmd_crystal_graph, "crystal graph in DOT")
    sp.add_argument("--kind", choices=("sst", "dual", "bitableaux", "matrix"), required=True)
    sp.add_argument("--mu", default="")
    sp.add_argument("--nu", default="")
    sp.add_argument("--rank", type=int, default=3)
    sp.add_argument("--m", type=int, default=2)
    sp.add_argument("--n", type=int, default=2)
    sp.add_argument("--max-nodes", type=int, default=10_000)

    sp = add("socle", cmd_socle, "socle layers of V_{a,b} x V_{g,d2}", plot=True)
    for flag in ("--a", "--b", "--g", "--d2"):
        sp.add_argument(flag, default="")
    sp.add_argument("--layer", type=int, default=None)

    sp = add("transition-check", cmd_transition, "check that the m and n matrices are inverse")
    sp.add_argument("--degree", type=int, required=True)

    sp = add("cauchy-verify", cmd_cauchy, "check a non-symmetric Cauchy identity")
    sp.add_argument("--kind", choices=("E-E", "E-H"), required=True)
    sp.add_argument("--vars", type=int, required=True)
    sp.add_argument("--degree", type=int, required=True)
    return p


def _fail(err, kind: str, message) -> None:
    text = " ".join(str(message).split())
    err.write(f"crystalkit: error: {kind}: {text}\n")


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        args.func(args, out)
    except UsageError as exc:
        _fail(err, "usage", exc)
        return EXIT_DOMAIN
    except (VerificationFailed, AssertionError) as exc:
        _fail(err, "verification", exc)
        return EXIT_VERIFY
    except BudgetExceeded as exc:
        _fail(err, "budget", exc)
        return EXIT_BUDGET
    except (ValueError, KeyError, ArithmeticError) as exc:
        _fail(err, "domain", exc)
        return EXIT_DOMAIN
    except SystemExit as exc:  # --help and --version
        return int(exc.code or 0)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
