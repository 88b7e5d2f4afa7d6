"""Batch subcommands over the library: ``python -m cuspfdeg <group> <command> ...``.

Exit status is 0 on success, 1 on a domain error (one-line diagnostic on
stderr) and 2 on a usage error.  JSON output has sorted keys.
"""

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import cuspidal as C
from . import hecke as H
from . import partitions as P
from . import stm as S
from .extraspecial import ESPair, decode, encode, hook_strip_decomposition
from .qseries import ledger_analyze, to_json_obj


def rational(token):
    try:
        return Fraction(token.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"malformed rational {token!r}")


def param_pair(token):
    parts = token.split(',')
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected 'm_minus,m_plus', got {token!r}")
    return rational(parts[0]), rational(parts[1])


def part_list(token):
    try:
        return P.partition(token)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed partition {token!r}")


def _frac(x):
    return str(x)


def _mult_obj(m):
    return {str(k): v for k, v in m.items()}


def _lst(lam):
    return list(lam)


# record builders

def residue_record(params, lm, lp):
    pt = H.coordinates(params, lm, lp)
    led, f = H.residue_q(params, pt)
    _, even, odd = ledger_analyze(led)
    rec = pt.to_json_obj()
    rec["residue"] = {"canonical": to_json_obj(f), "even_mult": _mult_obj(even),
                      "odd_cycl": _mult_obj(odd), "q_part": str(f)}
    return rec


def _residue_task(args):
    mm, mp, n, lm, lp = args
    return residue_record(H.HeckeParams(mm, mp, n), lm, lp)


def _map(fn, items, jobs):
    if jobs and jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(fn, items, chunksize=8))
    return [fn(x) for x in items]


# emitters

def emit(records, fmt, columns, out):
    if fmt == 'json':
        out.write(json.dumps(records, sort_keys=True, ensure_ascii=False) + "\n")
        return
    rows = [[_cell(r.get(c)) for c in columns] for r in records]
    if fmt == 'csv':
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        w.writerows(rows)
        out.write(buf.getvalue())
        return
    widths = [max([len(c)] + [len(r[i]) for r in rows]) for i, c in enumerate(columns)]
    out.write("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip() + "\n")
    for r in rows:
        out.write("  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip() + "\n")


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, list):
        return "[" + ",".join(_cell(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ",".join(f"{k}:{_cell(x)}" for k, x in sorted(v.items())) + "}"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


# commands

def cmd_espec_encode(a, out):
    p = encode(a.lam)
    hooks, strips = hook_strip_decomposition(p)
    rec = {"lambda": _lst(a.lam), "m": _frac(p.m), "rho": _lst(p.rho),
           "hooks": [[_frac(x), _frac(y)] for x, y in hooks],
           "strips": [_frac(x) for x in strips]}
    if a.format == 'table':
        out.write(f"m = {p.m}  rho = {list(p.rho)}\n")
        out.write(p.tableau().render() + "\n")
        return 0
    emit([rec], a.format, ["lambda", "m", "rho", "hooks", "strips"], out)
    return 0


def cmd_espec_decode(a, out):
    lam = decode(ESPair(a.m, a.rho))
    if a.format == 'table':
        out.write("[" + ",".join(str(x) for x in lam) + "]\n")
        return 0
    emit([{"m": _frac(a.m), "rho": _lst(a.rho), "lambda": _lst(lam)}],
         a.format, ["m", "rho", "lambda"], out)
    return 0


def _params(a):
    return H.HeckeParams(a.params[0], a.params[1], a.rank, a.base)


def cmd_residual_enumerate(a, out):
    params = _params(a)
    recs = [H.coordinates(params, lm, lp).to_json_obj()
            for lm, lp in H.enumerate_residual_points(params)]
    emit(recs, a.format, ["lambda_minus", "lambda_plus", "coords"], out)
    return 0


def cmd_residue_compute(a, out):
    params = _params(a)
    if a.lm is None and a.lp is None:
        items = [(params.m_minus, params.m_plus, params.rank, lm, lp)
                 for lm, lp in H.enumerate_residual_points(params)]
    else:
        items = [(params.m_minus, params.m_plus, params.rank, a.lm or (), a.lp or ())]
    recs = _map(_residue_task, items, a.jobs)
    for r in recs:
        r["even_mult"] = r["residue"]["even_mult"]
        r["odd_cycl"] = r["residue"]["odd_cycl"]
        r["q_part"] = r["residue"]["q_part"]
    if a.format == 'json':
        for r in recs:
            del r["even_mult"], r["odd_cycl"], r["q_part"]
    emit(recs, a.format, ["lambda_minus", "lambda_plus", "q_part", "even_mult", "odd_cycl"], out)
    return 0


def cmd_classify_no_odd(a, out):
    params = _params(a)
    pts = C.classify_no_odd(params.m_minus, params.m_plus, params.base, params.rank)
    recs = [residue_record(params, lm, lp) for lm, lp in pts]
    for r in recs:
        r["even_mult"] = r["residue"]["even_mult"]
    if a.format == 'json':
        for r in recs:
            del r["even_mult"]
    emit(recs, a.format, ["lambda_minus", "lambda_plus", "even_mult"], out)
    return 0


def cmd_verify_uniqueness(a, out):
    params = _params(a)
    report = C.verify_uniqueness(params, params.rank)
    if a.format == 'json':
        out.write(json.dumps(report.to_json_obj(), sort_keys=True) + "\n")
    else:
        recs = []
        for e in report.entries:
            recs.append({"templates": [f"{f}({x},{y})" for f, x, y in e["templates"]],
                         "solutions": e["solutions"], "orbits": e["orbits"], "pass": e["pass"]})
        for e in report.negatives:
            f, x, y = e["template"]
            recs.append({"templates": [f"{f}({x},{y}) [other rank]"],
                         "solutions": e["solutions"], "orbits": 0, "pass": e["pass"]})
        emit(recs, a.format, ["templates", "solutions", "orbits", "pass"], out)
        if a.format == 'table':
            out.write(f"{params}: {'pass' if report.ok else 'FAIL'}\n")
    return 0 if report.ok else 1


def _step_record(step, point):
    rec = step.to_json_obj()
    rec["point"] = {"lambda_minus": _lst(point[0]), "lambda_plus": _lst(point[1])}
    return rec


def cmd_stm_apply(a, out):
    params = _params(a)
    point = (a.lm or (), a.lp or ())
    if a.gen == 'translate':
        if a.side is None:
            raise S.STMError("translate needs --side")
        tgt, pt, step = S.translate(params, point, a.side, a.to)
    elif a.gen == 'extraspecial':
        tgt, pt, step = S.extraspecial_map(params, point)
    else:
        tgt, pt = S.iso_apply(a.gen, params, point)
        step = S.STMStep(S._GEN_ALIASES[a.gen], params, tgt, {})
    rec = _step_record(step, pt)
    if a.format == 'table':
        out.write(f"{step.kind}: {params} -> {tgt}  point ({list(pt[0])}, {list(pt[1])})\n")
        return 0
    emit([rec], a.format, ["kind", "source", "target", "point"], out)
    return 0


def cmd_stm_trace(a, out):
    params = _params(a)
    if a.lm is None and a.lp is None:
        steps = S.reduce_to_minimal(params)
        recs = [s.to_json_obj() for s in steps]
    else:
        steps, tgt, pt = S.trace(params, (a.lm or (), a.lp or ()))
        recs = [s.to_json_obj() for s in steps]
        recs.append({"kind": "end", "source": tgt.to_json_obj(), "target": tgt.to_json_obj(),
                     "metadata": {}, "point": {"lambda_minus": _lst(pt[0]),
                                               "lambda_plus": _lst(pt[1])}})
    if a.format == 'json':
        out.write(json.dumps(recs, sort_keys=True) + "\n")
        return 0
    for r in recs:
        r["source"] = _fmt_params(r["source"])
        r["target"] = _fmt_params(r["target"])
    emit(recs, a.format, ["kind", "source", "target", "metadata"], out)
    return 0


def _fmt_params(obj):
    return f"C_{obj['rank']}({obj['m_minus']},{obj['m_plus']})[b={obj['base']}]"


def cmd_oracle_brute_force(a, out):
    params = _params(a)
    pts = H.brute_force_residual_points(params, a.bound)
    recs = [{"coords": [["+" if s > 0 else "-", e] for s, e in c]} for c in pts]
    emit(recs, a.format, ["coords"], out)
    return 0


def build_parser():
    ap = argparse.ArgumentParser(prog="python -m cuspfdeg",
                                 description="Residues of type C affine Hecke algebras.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument("-v", "--verbose", action="store_true")

    hp = argparse.ArgumentParser(add_help=False)
    hp.add_argument("--params", type=param_pair, required=True, help="m_minus,m_plus")
    hp.add_argument("--rank", type=int, default=0)
    hp.add_argument("--base", type=int, choices=(1, 2), default=None)

    pt = argparse.ArgumentParser(add_help=False)
    pt.add_argument("--lm", type=part_list, default=None, help="lambda_minus, e.g. 4,2")
    pt.add_argument("--lp", type=part_list, default=None, help="lambda_plus")

    groups = ap.add_subparsers(dest="group", required=True)

    g = groups.add_parser("espec").add_subparsers(dest="command", required=True)
    c = g.add_parser("encode", parents=[common])
    c.add_argument("--lambda", dest="lam", type=part_list, required=True)
    c.set_defaults(fn=cmd_espec_encode)
    c = g.add_parser("decode", parents=[common])
    c.add_argument("--m", type=rational, required=True)
    c.add_argument("--rho", type=part_list, default=())
    c.set_defaults(fn=cmd_espec_decode)

    g = groups.add_parser("residual").add_subparsers(dest="command", required=True)
    g.add_parser("enumerate", parents=[common, hp]).set_defaults(fn=cmd_residual_enumerate)

    g = groups.add_parser("residue").add_subparsers(dest="command", required=True)
    g.add_parser("compute", parents=[common, hp, pt]).set_defaults(fn=cmd_residue_compute)

    g = groups.add_parser("classify").add_subparsers(dest="command", required=True)
    g.add_parser("no-odd", parents=[common, hp]).set_defaults(fn=cmd_classify_no_odd)

    g = groups.add_parser("verify").add_subparsers(dest="command", required=True)
    g.add_parser("uniqueness", parents=[common, hp]).set_defaults(fn=cmd_verify_uniqueness)

    g = groups.add_parser("stm").add_subparsers(dest="command", required=True)
    c = g.add_parser("apply", parents=[common, hp, pt])
    c.add_argument("--gen", required=True,
                   choices=("eta", "eta_plus", "eta_minus", "translate", "extraspecial"))
    c.add_argument("--side", choices=("-", "+"))
    c.add_argument("--to", type=rational, default=None, help="target parameter for translate")
    c.set_defaults(fn=cmd_stm_apply)
    g.add_parser("trace", parents=[common, hp, pt]).set_defaults(fn=cmd_stm_trace)

    g = groups.add_parser("oracle").add_subparsers(dest="command", required=True)
    c = g.add_parser("brute-force", parents=[common, hp])
    c.add_argument("--bound", type=int, default=None, help="largest v-exponent scanned")
    c.set_defaults(fn=cmd_oracle_brute_force)
    return ap


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    ap = build_parser()
    try:
        a = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        return a.fn(a, out)
    except (ValueError, ZeroDivisionError) as e:
        err.write(f"error: {e}\n")
        return 1


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
