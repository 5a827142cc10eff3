"""``coxkit`` command-line front end.

Every subcommand reads a diagram or multigraph file, calls one library
function and prints aligned text (default), JSON (``--json``) or DOT
(``--dot``).  Exit status: 0 on success, 2 on bad input, 1 on internal
errors.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import cellrep, diagram, theta, words, zigzag
from .errors import CoxkitError

EXIT_OK, EXIT_INTERNAL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def _int_table(labels, matrix) -> str:
    cells = [[""] + list(labels)] + [[lab] + [str(int(x)) for x in row]
                                     for lab, row in zip(labels, np.asarray(matrix))]
    width = max(len(c) for row in cells for c in row)
    return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells) + "\n"


def _words_text(d, ws) -> str:
    return "".join(words.format_word(d, w) + "\n" for w in ws)


# -- commands ------------------------------------------------------------------

def cmd_check(args):
    d = diagram.load_diagram(args.file)
    verdict = diagram.finiteness_check(d)
    if args.json:
        return _dump(verdict.to_json())
    if verdict.finite:
        return "finite\n"
    reason = verdict.reason
    if isinstance(reason, diagram.CycleFound):
        detail = "cycle " + " ".join(reason.vertices)
    elif isinstance(reason, diagram.InfiniteLabel):
        detail = f"infinite label on {reason.edge.u}-{reason.edge.v}"
    else:
        a, b = reason.first, reason.second
        detail = f"two labeled edges {a.u}-{a.v} and {b.u}-{b.v}"
    return f"infinite: {detail}\n"


def cmd_cell(args):
    d = diagram.load_diagram(args.file)
    cell = words.enumerate_small_cell(d, args.max_len, workers=args.threads)
    if args.json:
        return _dump({"size": len(cell), "truncated": cell.truncated,
                      "words": [words.format_word(d, w) for w in cell]})
    note = " (truncated)" if cell.truncated else ""
    return f"# {len(cell)} rigid words{note}\n" + _words_text(d, cell)


def cmd_intersect(args):
    d = diagram.load_diagram(args.file)
    ws = words.intersection(d, args.left, args.right, args.max_len)
    if args.json:
        return _dump({"left": args.left, "right": args.right,
                      "words": [words.format_word(d, w) for w in ws]})
    return _words_text(d, ws)


def cmd_table(args):
    d = diagram.load_diagram(args.file)
    table = words.cell_table(d)
    return _dump(table.to_json()) if args.json else table.to_text()


def cmd_oracle(args):
    d = diagram.load_diagram(args.file)
    w = words.parse_word(d, args.word)
    report = words.oracle_unique_reduced(d, w, args.cap)
    rigid = words.is_rigid(d, w)
    if args.json:
        out = report.to_json()
        out.update(word=words.format_word(d, w), rigid=bool(rigid))
        return _dump(out)
    return (f"word: {words.format_word(d, w)}\nstatus: {report.status.value}\n"
            f"orbit size: {report.orbit_size}\nrigid: {'yes' if rigid else 'no'}\n")


def cmd_lambda(args):
    d = diagram.load_diagram(args.file)
    lam = cellrep.lambda_graph(d, args.cell, args.max_len)
    if args.dot:
        return lam.to_dot()
    if args.json:
        return _dump(lam.to_json())
    lines = [f"# {len(lam)} vertices, {len(lam.edges)} edges" + (" (truncated)" if lam.truncated else "")]
    lines += [f"vertex {lam.name(w)}" for w in lam.vertices]
    lines += [f"edge {lam.name(u)} {lam.name(v)} {t}" for u, v, t in lam.edges]
    return "\n".join(lines) + "\n"


def cmd_zigzag(args):
    g = zigzag.load_multigraph(args.file)
    if args.dot:
        return g.to_dot(doubled=True)
    if args.cartan:
        c = zigzag.cartan_matrix(g)
        return _dump(c.tolist()) if args.json else _int_table(g.vertices, c)
    if args.graded_cartan:
        c = zigzag.graded_cartan_matrix(g)
        return _dump(c.to_json()) if args.json else c.to_text(g.vertices)
    p = zigzag.build_zigzag(g)
    if args.json:
        return _dump(p.to_json())
    return f"dimension {p.dimension}\n" + "".join(f"{x} (degree {x.degree})\n" for x in p.basis)


def cmd_act(args):
    d = diagram.load_diagram(args.file)
    lam = cellrep.lambda_graph(d, args.cell, args.max_len)
    labels = [lam.name(w) for w in lam.vertices]
    if args.graded:
        m = cellrep.graded_action_matrix(d, args.cell, args.by, lam)
        if args.json:
            return _dump({"generator": args.by, "basis": labels, "graded": m.to_json()})
        return m.to_text(labels)
    m = cellrep.action_matrix(d, args.cell, args.by, lam)
    if args.json:
        return _dump({"generator": args.by, "basis": labels, "ungraded": m.tolist()})
    return _int_table(labels, m)


def cmd_theta(args):
    d = diagram.load_diagram(args.file)
    omega_graph = zigzag.load_multigraph(args.omega)
    class_s = [v for v in args.class_s.split(",") if v]
    th = theta.build_theta(d, theta.bipartite_ade(omega_graph, class_s))
    if args.dot:
        return th.to_dot()
    if args.json:
        return _dump(th.to_json())
    lines = [f"# Theta over {th.omega.name}: {len(th.vertices)} vertices, {len(th.edges)} edges"]
    lines += [f"vertex {v}  # {th.origin[v]}" for v in th.vertices]
    lines += [f"edge {u} {v}" for u, v in th.edges]
    return "\n".join(lines) + "\n"


def cmd_catalog(args):
    entries = theta.ade_catalog(args.coxeter_number)
    if args.json:
        return _dump([e.to_json() for e in entries])
    return "".join(f"{e.name}  h={e.coxeter_number}  s: {','.join(e.class_s)}  t: {','.join(e.class_t)}\n"
                   for e in entries)


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_argument_group("output")
    fmt.add_argument("--json", action="store_true", help="JSON output")
    fmt.add_argument("--dot", action="store_true", help="DOT output (lambda, zigzag, theta)")
    common.add_argument("--threads", type=int, default=None, metavar="N",
                        help="worker threads for cell enumeration")

    p = _Parser(prog="coxkit", description="Rigid words, cell trees and zig-zag data.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help, file=True):
        sp = sub.add_parser(name, help=help, parents=[common])
        if file:
            sp.add_argument("file")
        sp.set_defaults(func=func)
        return sp

    add("check", cmd_check, "finiteness of the small cell")
    add("cell", cmd_cell, "enumerate rigid words").add_argument("--max-len", type=int)
    sp = add("intersect", cmd_intersect, "rigid words t...s for --left s --right t")
    sp.add_argument("--left", required=True)
    sp.add_argument("--right", required=True)
    sp.add_argument("--max-len", type=int)
    add("table", cmd_table, "left/right cell table")
    sp = add("oracle", cmd_oracle, "braid-move classification of a word")
    sp.add_argument("--word", required=True)
    sp.add_argument("--cap", type=int, default=words.DEFAULT_ORBIT_CAP)
    sp = add("lambda", cmd_lambda, "tree on a left cell")
    sp.add_argument("--cell", required=True)
    sp.add_argument("--max-len", type=int)
    sp = add("zigzag", cmd_zigzag, "zig-zag data of a multigraph file")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--cartan", action="store_true")
    g.add_argument("--graded-cartan", action="store_true")
    sp = add("act", cmd_act, "action matrix of a generator on a cell")
    sp.add_argument("--cell", required=True)
    sp.add_argument("--by", required=True)
    sp.add_argument("--graded", action="store_true")
    sp.add_argument("--max-len", type=int)
    sp = add("theta", cmd_theta, "glue cell trees onto a bipartite Dynkin diagram")
    sp.add_argument("--omega", required=True)
    sp.add_argument("--class-s", required=True)
    sp = add("catalog", cmd_catalog, "bipartite Dynkin diagrams of a Coxeter number", file=False)
    sp.add_argument("--coxeter-number", type=int, required=True)
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.json and args.dot:
            raise CoxkitError("--json and --dot are mutually exclusive")
        if args.threads is not None and args.threads < 1:
            raise CoxkitError("--threads must be positive")
        stdout.write(args.func(args))
        return EXIT_OK
    except _UsageError as e:
        stderr.write(f"{e}\n")
        return EXIT_USAGE
    except SystemExit as e:  # --help
        return EXIT_OK if not e.code else EXIT_USAGE
    except (CoxkitError, OSError) as e:
        stderr.write(f"coxkit: error: {e}\n")
        return EXIT_USAGE
    except Exception as e:  # noqa: BLE001
        stderr.write(f"coxkit: internal error: {type(e).__name__}: {e}\n")
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
