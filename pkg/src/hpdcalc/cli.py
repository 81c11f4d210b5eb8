"""Command-line front end: ``hpdcalc <command> [flags]``.

Every command prints one report. JSON reports follow::

    {"command", "inputs", "blocks": [{"label", "alpha", "beta", "rank"}],
     "certificates": [{"name", "lhs", "rhs", "pass"}], ...}

Exit status is 0 when every certificate passes, 1 when one fails and 2 on a
usage error or violated precondition.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from html import escape

from .bott import omega_cohomology
from .chern import chi_top, complete_intersection
from .divisor_ext import DivisorGeometry, chi_on_divisor, ext_on_divisor
from .hpd_engine import (
    CATALOG,
    Certificate,
    GenerationSchedule,
    GridState,
    SODReport,
    example_catalog,
    generation_schedule,
    hpd1_decomposition,
    hpd2_decomposition,
    mutation_walkthrough,
)
from .kgroup import (
    Collection,
    gram_matrix,
    is_exceptional_collection,
    left_mutate,
    mutation_matrix,
    right_mutate,
    transform_gram,
)

FORMATS = ("json", "tsv", "ascii", "svg")


class UsageError(Exception):
    pass


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _pair(text: str) -> tuple[int, int]:
    vals = _ints(text)
    if len(vals) != 2:
        raise argparse.ArgumentTypeError(f"expected u,v got {text!r}")
    return vals


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="json")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--sweep", help="NAME=LO:HI, run the command for each integer value (inclusive)")

    p = argparse.ArgumentParser(prog="hpdcalc", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("cohom", parents=[common], help="H^q(P^n, Omega^p(k))")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--p", type=int, default=0)
    s.add_argument("--k", type=int, required=True)

    s = sub.add_parser("chi", parents=[common], help="chi_top of a complete intersection")
    s.add_argument("--dims", type=_ints, required=True, help="factor dimensions, e.g. 5 or 2,1")
    s.add_argument("--degree", type=_ints, action="append", default=[], help="one multidegree per equation")

    for name, helptext in (("gram", "Gram matrix of a line-bundle collection"),
                           ("mutate", "mutate a line-bundle collection")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("--n", type=int, help="P^n (shorthand for --dims n)")
        s.add_argument("--dims", type=_ints)
        s.add_argument("--twists", required=True,
                       help="twists, e.g. 0,1,2 on P^n or '0,0;1,1' on a product")
        if name == "mutate":
            s.add_argument("--t", type=int, required=True)
            s.add_argument("--side", choices=("left", "right"), default="left")

    s = sub.add_parser("ext", parents=[common], help="RHom on the universal hyperplane H_L")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--ell", type=int, required=True)
    s.add_argument("--from", dest="source", type=_pair, required=True)
    s.add_argument("--to", dest="target", type=_pair, required=True)

    for name in ("hpd1", "hpd2"):
        s = sub.add_parser(name, parents=[common], help=f"{name.upper()} decomposition")
        s.add_argument("--m", type=int, required=True)
        s.add_argument("--d", type=int, required=True)
        s.add_argument("--ell", type=int, required=True)

    s = sub.add_parser("walk", parents=[common], help="mutation walkthrough (or generation schedule with --k)")
    s.add_argument("--i", type=int, required=True)
    s.add_argument("--ell", type=int, required=True)
    s.add_argument("--d", type=int)
    s.add_argument("--k", type=int)

    s = sub.add_parser("example", parents=[common], help="example catalog entry")
    s.add_argument("--name", choices=CATALOG, required=True)
    s.add_argument("--n", type=int)
    return p


# -- dispatch ---------------------------------------------------------------


def _envelope(command, inputs, blocks=(), certificates=(), **extra) -> dict:
    out = {
        "command": command,
        "inputs": inputs,
        "blocks": list(blocks),
        "certificates": [c.to_dict() for c in certificates],
    }
    out.update(extra)
    return out


def _parse_twists(text: str):
    if ";" not in text:
        # single-factor shorthand: "0,1,2"
        return [(t,) for t in _ints(text)]
    return [_ints(t) for t in text.split(";") if t.strip()]


def _collection(args) -> Collection:
    if args.dims is not None:
        dims = args.dims
    elif args.n is not None:
        dims = (args.n,)
    else:
        raise UsageError("give --n or --dims")
    return Collection.of_twists(dims, _parse_twists(args.twists))


def _classes(c: Collection) -> list[dict]:
    return [{"class": str(x), "terms": [[list(t), m] for t, m in x.terms.items()]} for x in c.objects]


def _grid_state_dict(state: GridState) -> dict:
    return {
        "i": state.i, "ell": state.ell, "d": state.d,
        "support": sorted(list(b) for b in state.support),
        "script": [
            {"stage": s.stage, "alpha": s.alpha,
             "mutated_past": [list(b) for b in s.mutated_past],
             "skipped": [list(b) for b in s.skipped],
             "certificates": list(s.certificate_ids)}
            for s in state.script
        ],
    }


def _schedule_dict(sched: GenerationSchedule) -> dict:
    return {
        "i": sched.i, "ell": sched.ell, "k": sched.k, "d": sched.d,
        "entries": [{"box": list(e.box), "detector": list(e.detector),
                     "certificates": list(e.certificate_ids)} for e in sched.entries],
    }


def dispatch(args) -> tuple[dict, object]:
    """Run one command; returns the JSON-ready report and the underlying value."""
    cmd = args.command
    if cmd == "cohom":
        table = omega_cohomology(args.n, args.p, args.k)
        inputs = {"n": args.n, "p": args.p, "k": args.k}
        return _envelope(cmd, inputs, table={str(q): v for q, v in table.items()},
                         euler=table.euler), table
    if cmd == "chi":
        degrees = args.degree
        spec = complete_intersection(args.dims, degrees)
        value = chi_top(spec)
        inputs = {"dims": list(args.dims), "degrees": [list(d) for d in degrees]}
        return _envelope(cmd, inputs, chi=value), value
    if cmd == "gram":
        c = _collection(args)
        g = gram_matrix(c)
        rep = is_exceptional_collection(c)
        certs = [Certificate.equal("exceptional_collection", len(rep.violations), 0)]
        inputs = {"dims": list(c.ambient), "twists": [list(t) for t in _parse_twists(args.twists)]}
        violations = [{"layer": v.layer, "pair": list(v.pair), "detail": v.detail} for v in rep.violations]
        return _envelope(cmd, inputs, certificates=certs, gram=g.tolist(), violations=violations), g
    if cmd == "mutate":
        c = _collection(args)
        new = left_mutate(c, args.t) if args.side == "left" else right_mutate(c, args.t)
        predicted = transform_gram(gram_matrix(c), mutation_matrix(gram_matrix(c), args.t, args.side))
        recomputed = gram_matrix(new)
        mismatches = sum(
            predicted[s, t] != recomputed[s, t] for s in range(len(c)) for t in range(len(c))
        )
        certs = [Certificate.equal("gram_transformation_law", mismatches, 0)]
        inputs = {"dims": list(c.ambient), "twists": [list(t) for t in _parse_twists(args.twists)],
                  "t": args.t, "side": args.side}
        return _envelope(cmd, inputs, certificates=certs, collection=_classes(new),
                         gram=recomputed.tolist()), new
    if cmd == "ext":
        g = DivisorGeometry(args.m, args.d, args.ell)
        ans = ext_on_divisor(g, tuple(args.source), tuple(args.target))
        certs = [Certificate.equal("cone_euler", ans.euler, chi_on_divisor(g, args.source, args.target))]
        inputs = {"m": args.m, "d": args.d, "ell": args.ell,
                  "from": list(args.source), "to": list(args.target)}

        def tab(t):
            return None if t is None else {str(q): v for q, v in t.items()}

        return _envelope(cmd, inputs, certificates=certs, determined=ans.determined,
                         table=tab(ans.table), term_before=tab(ans.term_before),
                         term_after=tab(ans.term_after), euler=ans.euler), ans
    if cmd in ("hpd1", "hpd2", "example"):
        if cmd == "hpd1":
            report = hpd1_decomposition(args.m, args.d, args.ell)
        elif cmd == "hpd2":
            report = hpd2_decomposition(args.m, args.d, args.ell)
        else:
            report = example_catalog(args.name, args.n)
        return {"command": cmd, **report.to_dict()}, report
    if cmd == "walk":
        if args.k is None:
            state = mutation_walkthrough(args.i, args.ell, args.d)
            inputs = {"i": args.i, "ell": args.ell, "d": state.d}
            return _envelope(cmd, inputs, certificates=list(state.certificates.values()),
                             grid=_grid_state_dict(state)), state
        sched = generation_schedule(args.i, args.ell, args.k, args.d)
        inputs = {"i": args.i, "ell": args.ell, "k": args.k, "d": sched.d}
        return _envelope(cmd, inputs, certificates=list(sched.certificates.values()),
                         schedule=_schedule_dict(sched)), sched
    raise UsageError(f"unknown command {cmd!r}")


# -- rendering --------------------------------------------------------------

_LEGEND = {
    ".": "unused",
    "g": "A(alpha) x D(P(L)) box, right orthogonal defines C",
    "w": "HPD I box D(X)(0,beta)",
    "#": "box in both collections",
    "c": "box absorbed into C_{H_L}",
    "b": "object being mutated",
    "S": "mutated past in this stage",
    "s": "mutated past earlier",
    "x": "skipped (vanishing certificate)",
}


def _report_cells(report: SODReport):
    i, ell = report.grid
    absorbed = {(b.alpha, b.beta) for b in report.case_blocks if b.label == "LEFSCHETZ_BLOCK"}
    cells = {}
    for a in range(i):
        for b in range(ell):
            grey, white = a >= 1, b >= 1
            if (a, b) in absorbed and not grey:
                code = "c"
            elif grey and white:
                code = "#"
            elif grey:
                code = "g"
            elif white:
                code = "w"
            else:
                code = "."
            cells[(a, b)] = code
    return [(None, range(i), range(ell), cells)]


def _state_panels(state: GridState):
    i, ell = state.i, state.ell
    alphas = range(i)
    betas = range(min(2 - i, 0), ell)
    panels = []
    done: set = set()
    for step in state.script:
        cells = {(a, b): "." for a in alphas for b in betas}
        if ell >= 2:
            cells[(0, 1)] = "b"
        for box in done:
            cells[box] = "s"
        for box in step.skipped:
            if box in cells:
                cells[box] = "x"
        for box in step.mutated_past:
            cells[box] = "S"
        panels.append((f"stage {step.stage}: alpha = {step.alpha}", alphas, betas, cells))
        done |= set(step.mutated_past)
    cells = {(a, b): ("s" if (a, b) in state.support else ".") for a in alphas for b in betas}
    panels.append(("final support", alphas, betas, cells))
    return panels


def _schedule_panels(sched: GenerationSchedule):
    alphas = range(0, sched.i + 1)
    betas = range(sched.k + 1 - sched.ell, sched.ell)
    cells = {(a, b): "." for a in alphas for b in betas}
    for n, e in enumerate(sched.entries, 1):
        cells[e.box] = str(n)
        if e.detector in cells:
            cells[e.detector] = f"d{n}"
    return [("n: n-th box shown to vanish; dn: its detector", alphas, betas, cells)]


def _panels(obj):
    if isinstance(obj, SODReport):
        if obj.grid is None:
            raise ValueError("report carries no grid data")
        return _report_cells(obj), obj.grid[0] >= 2
    if isinstance(obj, GridState):
        return _state_panels(obj), obj.i >= 2
    if isinstance(obj, GenerationSchedule):
        return _schedule_panels(obj), True
    raise ValueError(f"cannot render a grid for {type(obj).__name__}")


def render_grid(obj, fmt: str = "ascii") -> str:
    """Draw ``alpha`` downwards and ``beta`` rightwards, thick line after ``beta = 0``.

    Accepts an :class:`SODReport` with grid data, a :class:`GridState` or a
    :class:`GenerationSchedule`. Output is a pure function of the input.
    """
    panels, divider = _panels(obj)
    if fmt == "ascii":
        return _ascii(panels, divider)
    if fmt == "svg":
        return _svg(panels, divider)
    raise ValueError(f"unknown grid format {fmt!r}")


def _ascii(panels, divider: bool) -> str:
    lines = []
    for title, alphas, betas, cells in panels:
        if title:
            lines.append(title)
        head = "   a\\b |"
        for b in betas:
            head += f"{b:>3}"
            if divider and b == 0 and b != betas[-1]:
                head += " ‖"
        lines.append(head)
        lines.append("-" * len(head))
        for a in alphas:
            row = f"{a:>6} |"
            for b in betas:
                row += f"{cells[(a, b)]:>3}"
                if divider and b == 0 and b != betas[-1]:
                    row += " ‖"
            lines.append(row)
        lines.append("")
    used = sorted({c for _, _, _, cells in panels for c in cells.values() if c in _LEGEND})
    lines.extend(f"  {c}  {_LEGEND[c]}" for c in used)
    return "\n".join(lines).rstrip() + "\n"


_FILL = {".": "#ffffff", "g": "#bbbbbb", "w": "#ffffff", "#": "#dddddd", "c": "#cce5ff",
         "b": "#ffe08a", "S": "#888888", "s": "#bbbbbb", "x": "#ffffff"}


def _svg(panels, divider: bool) -> str:
    size, pad = 30, 40
    parts = []
    y0 = 0
    width = 0
    for title, alphas, betas, cells in panels:
        ncol, nrow = len(betas), len(alphas)
        width = max(width, pad + ncol * size + 10)
        if title:
            parts.append(f'<text x="4" y="{y0 + 14}" font-size="12">{escape(title)}</text>')
        top = y0 + 22
        for bi, b in enumerate(betas):
            parts.append(f'<text x="{pad + bi * size + 10}" y="{top + 10}" font-size="10">{b}</text>')
        top += 14
        for ai, a in enumerate(alphas):
            parts.append(f'<text x="4" y="{top + ai * size + 19}" font-size="10">{a}</text>')
            for bi, b in enumerate(betas):
                code = cells[(a, b)]
                x, y = pad + bi * size, top + ai * size
                fill = _FILL.get(code, "#ffffff")
                parts.append(f'<rect x="{x}" y="{y}" width="{size}" height="{size}" '
                             f'fill="{fill}" stroke="#000000" stroke-width="1"/>')
                if code not in ".wg#":
                    parts.append(f'<text x="{x + 10}" y="{y + 19}" font-size="12">{escape(code)}</text>')
        if divider and 0 in betas and betas[-1] != 0:
            x = pad + (list(betas).index(0) + 1) * size
            parts.append(f'<line x1="{x}" y1="{top}" x2="{x}" y2="{top + nrow * size}" '
                         f'stroke="#000000" stroke-width="4"/>')
        y0 = top + nrow * size + 10
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{y0}" '
            f'viewBox="0 0 {width} {y0}">')
    return "\n".join([head, *parts, "</svg>"]) + "\n"


def _tsv(report: dict) -> str:
    lines = ["label\talpha\tbeta\trank"]
    for b in report.get("blocks", []):
        cells = ["" if b[k] is None else str(b[k]) for k in ("label", "alpha", "beta", "rank")]
        lines.append("\t".join(cells))
    return "\n".join(lines) + "\n"


def _ascii_report(report: dict, value) -> str:
    lines = [f"{report['command']} " + " ".join(f"{k}={v}" for k, v in report["inputs"].items())]
    for key in ("table", "chi", "euler", "gram"):
        if key in report:
            lines.append(f"{key}: {report[key]}")
    if report.get("blocks"):
        lines.append("blocks:")
        for b in report["blocks"]:
            coords = [str(b[k]) if b[k] is not None else "-" for k in ("alpha", "beta")]
            where = "" if coords == ["-", "-"] else f" ({','.join(coords)})"
            lines.append(f"  {b['label']}{where} rank {b['rank']}")
    if report.get("certificates"):
        lines.append("certificates:")
    for c in report.get("certificates", []):
        mark = "ok " if c["pass"] else "FAIL"
        lines.append(f"  [{mark}] {c['name']}: {c['lhs']} vs {c['rhs']}")
    for note in report.get("annotations", []):
        lines.append(f"  note: {note}")
    text = "\n".join(lines) + "\n"
    try:
        text += "\n" + render_grid(value, "ascii")
    except ValueError:
        pass
    return text


def format_report(report: dict, value, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    if fmt == "tsv":
        return _tsv(report)
    if fmt == "ascii":
        return _ascii_report(report, value)
    return render_grid(value, "svg")


def _sweep_values(spec: str):
    try:
        name, rng = spec.split("=", 1)
        lo, hi = (int(x) for x in rng.split(":"))
    except ValueError as exc:
        raise UsageError(f"bad --sweep {spec!r}; expected NAME=LO:HI") from exc
    return name.strip(), range(lo, hi + 1)


def _passed(report: dict) -> bool:
    return all(c["pass"] for c in report.get("certificates", []))


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        if args.sweep:
            name, values = _sweep_values(args.sweep)
            if not hasattr(args, name):
                raise UsageError(f"--sweep parameter {name!r} is not a flag of {args.command}")

            def one(v):
                ns = argparse.Namespace(**{**vars(args), name: v})
                return dispatch(ns)

            with ThreadPoolExecutor() as pool:
                results = list(pool.map(one, values))
            if args.format == "json":
                text = json.dumps([r for r, _ in results], indent=2) + "\n"
            else:
                text = "".join(format_report(r, v, args.format) for r, v in results)
            ok = all(_passed(r) for r, _ in results)
        else:
            report, value = dispatch(args)
            text = format_report(report, value, args.format)
            ok = _passed(report)
    except (UsageError, ValueError, IndexError, KeyError) as exc:
        print(f"hpdcalc {args.command}: error: {exc}", file=stderr)
        parser.print_usage(stderr)
        return 2

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return 0 if ok else 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
