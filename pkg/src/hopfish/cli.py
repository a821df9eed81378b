"""Command-line entry point.

Exit codes: 0 success or valid, 1 checked and failed, 2 input error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from . import __version__
from .algebra import Homomorphism, tensor
from .enumeration import SearchConfig, enumerate_census, resolve_workers
from .exactlin import RationalMatrix
from .fusion import check_multiplicative, format_fusion_rule, fp_dimensions, quasi_hopf_obstruction, representation_ring_table
from .hopf import (
    HopfData,
    QuasiHopfData,
    check_hopfish,
    function_algebra_hopf,
    group_algebra_hopf,
    hopf_to_hopfish,
    hopf_verify,
    quasi_from_hopf,
    quasi_hopf_verify,
    structure_hopfish_data,
    z2_cocycle_quasi,
)
from .hypergroupoid import AxiomFailure, validate
from .morita import (
    MoritaRefusal,
    block_dims,
    central_block_idempotents,
    matrix_pair,
    self_conjugate,
    transport,
    z3_report,
)
from .bimodule import regular
from .serialize import (
    InputError,
    dumps_report,
    interval_json,
    parse_algebra,
    parse_hopf_maps,
    parse_quasi,
    read_document,
    structure_to_json,
    parse_structure,
)

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


class Run:
    """Collects the report of one command invocation."""

    def __init__(self, args, argv):
        self.args = args
        self.report = {"command": ["hopfish"] + list(argv), "inputs": {}}
        self.lines: list[str] = []
        self.start = time.perf_counter()

    def document(self, path):
        doc = read_document(path)
        self.report["inputs"][path] = hashlib.sha256(doc.text.encode("utf-8")).hexdigest()
        return doc

    def say(self, line: str = "") -> None:
        self.lines.append(line)

    def finish(self, code: int) -> int:
        if getattr(self.args, "timing", False):
            self.report["timing_seconds"] = round(time.perf_counter() - self.start, 6)
        self.report["exit_code"] = code
        text = dumps_report(self.report)
        if self.args.out:
            with open(self.args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        if self.args.json or not self.lines:
            sys.stdout.write(text)
        else:
            sys.stdout.write("\n".join(self.lines) + "\n")
        return code


def _check_table(run: Run, res) -> None:
    width = max((len(k) for k in res.checks), default=0)
    for name, ok in res.checks.items():
        run.say(f"  {name:<{width}}  {'PASS' if ok else 'FAIL'}")
    for name, val in res.info.items():
        run.say(f"  {name:<{width}}  {val} (info)")


def _check_json(res) -> dict:
    return {"checks": dict(res.checks), "details": _jsonable(res.details), "info": _jsonable(res.info),
            "ok": res.ok, "failed": res.failed}


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, RationalMatrix):
        return [[_jsonable(v) for v in row] for row in x.tolist()]
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    from .serialize import rat
    return rat(x)


# ---------------------------------------------------------------------------
# verify / enumerate / analyze


def cmd_verify(run: Run) -> int:
    # the verdict is always printed as JSON
    run.args.json = True
    doc = run.document(run.args.path)
    t = parse_structure(doc)
    try:
        h = validate(t)
    except AxiomFailure as exc:
        run.report["verdict"] = {"valid": False, "stage": exc.stage, "axiom": exc.axiom,
                                 "witness": list(exc.witness), "message": str(exc)}
        return EXIT_FAILED
    run.report["verdict"] = {"valid": True, "units": list(h.units), "l": list(h.l), "r": list(h.r),
                             "sigma": list(h.sigma)}
    return EXIT_OK


def _fp_json(report) -> list:
    return [{"element": f.element, "charpoly": str(f.charpoly), "charpoly_coeffs": list(f.charpoly.coeffs),
             "interval": interval_json(f.lo, f.hi, f.integer_value)} for f in report.dims]


def census_entry_json(entry) -> dict:
    return {
        "tensor": structure_to_json(entry.tensor),
        "is_hypergroupoid": entry.is_hypergroupoid,
        "is_groupoid": entry.is_groupoid,
        "is_group": entry.is_group,
        "sigma_involutive": entry.sigma_involutive,
        "fp_dims": [interval_json(f.lo, f.hi, f.integer_value) for f in entry.fp_dims],
    }


def cmd_enumerate(run: Run) -> int:
    a = run.args
    cfg = SearchConfig(a.n, a.max_mult, a.mode)
    census = enumerate_census(cfg, resolve_workers(a.workers), a.node_limit)
    entries = [census_entry_json(e) for e in census.entries]
    run.report["verdict"] = {"count": len(entries), "complete": census.complete}
    run.report["census"] = entries
    if a.out:
        # the census file itself is the JSON array of entries
        with open(a.out, "w", encoding="utf-8") as fh:
            fh.write(dumps_report(entries))
        a.out = None
    run.say(f"n={a.n} max_mult={a.max_mult} mode={a.mode}: {len(entries)} classes"
            + ("" if census.complete else " (search cut off by --node-limit)"))
    for i, e in enumerate(census.entries):
        kind = "group" if e.is_group else "groupoid" if e.is_groupoid else "hypergroupoid" if e.is_hypergroupoid else "sesquialgebra"
        run.say(f"  [{i}] e={list(e.tensor.e)} {kind}")
    return EXIT_OK if census.complete else EXIT_FAILED


def cmd_analyze(run: Run) -> int:
    doc = run.document(run.args.path)
    t = parse_structure(doc)
    try:
        h = validate(t)
        valid = {"valid": True, "sigma": list(h.sigma)}
    except AxiomFailure as exc:
        valid = {"valid": False, "stage": exc.stage, "axiom": exc.axiom, "witness": list(exc.witness)}
    fp = fp_dimensions(t)
    obstruction = quasi_hopf_obstruction(t)
    table = representation_ring_table(t)
    single_unit = sum(t.e) == 1
    run.report["verdict"] = {
        "obstruction": obstruction["verdict"],
        "witnesses": obstruction["witnesses"],
        "meaning": obstruction["meaning"],
        "hypergroupoid": valid,
    }
    run.report["fp_dimensions"] = _fp_json(fp)
    run.report["fp_multiplicative"] = check_multiplicative(t, fp) if single_unit else None
    run.report["fusion_table"] = [{"g": g, "x": x, "terms": [[k, m] for k, m in terms]} for (g, x), terms in table]
    run.say(f"structure on {t.n} elements, units {[g for g in range(t.n) if t.e[g]]}")
    run.say(f"hypergroupoid: {'yes' if valid['valid'] else 'no (' + valid['axiom'] + ')'}")
    run.say("fusion rules:")
    for (g, x), terms in table:
        run.say("  " + format_fusion_rule(g, x, terms))
    run.say("Frobenius-Perron dimensions:")
    for f in fp.dims:
        iv = interval_json(f.lo, f.hi, f.integer_value)
        exact = f"= {f.integer_value}" if f.integer_value is not None else "irrational"
        run.say(f"  FPdim({f.element}) in [{iv['lo_decimal']}, {iv['hi_decimal']}]  {exact}")
        run.say(f"    charpoly {f.charpoly}; exact endpoints {iv['lo']} .. {iv['hi']}")
    run.say(f"verdict: {obstruction['verdict']} ({obstruction['meaning']})")
    return EXIT_OK


# ---------------------------------------------------------------------------
# morita


def _parse_group(text: str) -> int:
    t = text.replace(" ", "")
    if t.startswith("Z/") and t[2:].isdigit() and int(t[2:]) >= 1:
        return int(t[2:])
    raise InputError(f"unsupported group {text!r}; expected Z/m")


def _morita_z3(run: Run) -> int:
    a = run.args
    out = z3_report(a.r, a.s, a.t)
    out["verdict"] = "hopfish" if out["hopfish"] else "not hopfish"
    run.report["verdict"] = out
    run.say(f"Q = A0^{a.r} + A1^{a.s} + A2^{a.t} over k^Z/3")
    run.say(f"  B block dims       {tuple(out['B_block_dims'])}")
    run.say(f"  S^B block dims     {tuple(out['S_block_dims'])} (predicted {tuple(out['predicted_S_block_dims'])})")
    run.say(f"  self-conjugate     {out['self_conjugate']}")
    run.say(f"  verdict            {out['verdict']}")
    return EXIT_OK if out["hopfish"] else EXIT_FAILED


def _report_transport(run: Run, src, pair, full: bool) -> int:
    res = transport(src, pair)
    out = {
        "B": pair.B.label,
        "B_dim": pair.B.dim,
        "dims": {"eps": res.data.eps.dim, "delta": res.data.delta.dim, "S": res.data.S.dim},
        "hopfish": res.hopfish,
        "self_conjugate": self_conjugate(src.S, pair.Q),
    }
    if pair.blocks:
        zs = central_block_idempotents(pair)
        out["B_block_dims"] = list(block_dims(regular(pair.B), zs))
        out["S_block_dims"] = list(block_dims(res.data.S, zs))
    ok = res.hopfish
    run.say(f"B = {pair.B.label} (dim {pair.B.dim})")
    run.say(f"  transported dims   eps {out['dims']['eps']}, delta {out['dims']['delta']}, S {out['dims']['S']}")
    if pair.blocks:
        run.say(f"  B block dims       {tuple(out['B_block_dims'])}")
        run.say(f"  S^B block dims     {tuple(out['S_block_dims'])}")
    run.say(f"  self-conjugate     {out['self_conjugate']}")
    if full:
        chk = check_hopfish(res.data)
        out["hopfish_suite"] = _check_json(chk)
        ok = ok and chk.ok
        run.say("  full hopfish suite:")
        _check_table(run, chk)
    out["verdict"] = "hopfish" if ok else "not hopfish"
    run.say(f"  verdict            {out['verdict']}")
    run.report["verdict"] = out
    return EXIT_OK if ok else EXIT_FAILED


def _morita_matrix(run: Run) -> int:
    m = _parse_group(run.args.group)
    src = hopf_to_hopfish(function_algebra_hopf(m))
    return _report_transport(run, src, matrix_pair(run.args.n, src.algebra), run.args.full)


def _morita_transport(run: Run) -> int:
    t = parse_structure(run.document(run.args.path))
    try:
        validate(t)
    except AxiomFailure as exc:
        raise InputError(f"source structure is not a hypergroupoid ({exc.axiom} fails)") from None
    src = structure_hopfish_data(t)
    return _report_transport(run, src, matrix_pair(run.args.n, src.algebra), run.args.full)


def cmd_morita(run: Run) -> int:
    for name in ("n", "r", "s", "t"):
        v = getattr(run.args, name, None)
        if v is not None and v < 1:
            raise MoritaRefusal(f"--{name} must be at least 1")
    return {"z3": _morita_z3, "matrix": _morita_matrix, "transport": _morita_transport}[run.args.kind](run)


# ---------------------------------------------------------------------------
# hopf-check / quasi-hopf-check

HOPF_EXAMPLES = {
    "kZ2": lambda: function_algebra_hopf(2),
    "kZ3": lambda: function_algebra_hopf(3),
    "kZ4": lambda: function_algebra_hopf(4),
    "QZ2": lambda: group_algebra_hopf(2),
    "kZ3-wrong-antipode": lambda: function_algebra_hopf(3, antipode="identity"),
}

QUASI_EXAMPLES = {
    "trivial": lambda: quasi_from_hopf(function_algebra_hopf(2)),
    "cocycle": lambda: z2_cocycle_quasi(),
    "negated-alpha": lambda: z2_cocycle_quasi(alpha=(-1, -1)),
}


def _load_maps(run: Run):
    a = run.args
    if not (a.algebra and a.delta and a.epsilon):
        raise InputError("--algebra, --delta and --epsilon are required without --example")
    A = parse_algebra(run.document(a.algebra))
    anti = run.document(a.antipode) if a.antipode else None
    D, E, S = parse_hopf_maps(A, run.document(a.delta), run.document(a.epsilon), anti)
    return A, D, E, S


def _quasi_from_files(run: Run, A, D, E, S):
    qd = parse_quasi(run.document(run.args.quasi), A)
    if "antipode" in qd:
        S = Homomorphism(A.opposite(), A, qd["antipode"])
    if S is None:
        raise InputError("quasi-Hopf data needs an antipode (--antipode or \"antipode\" in the quasi file)")
    return QuasiHopfData(A, D, E, S, qd["phi"], qd["phi_inv"], qd["alpha"], qd["beta"])


def _emit_checks(run: Run, title: str, res) -> int:
    run.report["verdict"] = _check_json(res)
    run.say(title)
    _check_table(run, res)
    run.say("result: " + ("all axioms hold" if res.ok else "FAILED: " + ", ".join(res.failed)))
    return EXIT_OK if res.ok else EXIT_FAILED


def cmd_hopf_check(run: Run) -> int:
    a = run.args
    if a.example:
        h = HOPF_EXAMPLES[a.example]()
        return _emit_checks(run, f"Hopf check: {a.example}", hopf_verify(h))
    A, D, E, S = _load_maps(run)
    if a.quasi:
        return _emit_checks(run, "quasi-Hopf check", quasi_hopf_verify(_quasi_from_files(run, A, D, E, S)))
    if S is None:
        raise InputError("one of --antipode or --quasi is required")
    return _emit_checks(run, "Hopf check", hopf_verify(HopfData(A, D, E, S)))


def cmd_quasi_hopf_check(run: Run) -> int:
    a = run.args
    if a.example:
        return _emit_checks(run, f"quasi-Hopf check: {a.example}", quasi_hopf_verify(QUASI_EXAMPLES[a.example]()))
    if not a.quasi:
        raise InputError("--quasi is required without --example")
    A, D, E, S = _load_maps(run)
    return _emit_checks(run, "quasi-Hopf check", quasi_hopf_verify(_quasi_from_files(run, A, D, E, S)))


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=argparse.SUPPRESS, help="also write the JSON report here")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="print the JSON report")
    common.add_argument("--workers", type=int, default=argparse.SUPPRESS,
                        help="worker processes (default: $HOPFISH_WORKERS or 1)")
    common.add_argument("--timing", action="store_true", default=argparse.SUPPRESS,
                        help="add wall-clock time to the report")

    p = argparse.ArgumentParser(prog="hopfish", description="Exact checks for hopfish structures.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--out", default=None, help="also write the JSON report here")
    p.add_argument("--json", action="store_true", default=False, help="print the JSON report")
    p.add_argument("--workers", type=int, default=None, help="worker processes (default: $HOPFISH_WORKERS or 1)")
    p.add_argument("--timing", action="store_true", default=False, help="add wall-clock time to the report")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="validate a structure file")
    v.add_argument("path")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("enumerate", parents=[common], help="census of structures up to relabeling")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--max-mult", type=int, required=True)
    e.add_argument("--mode", choices=("sesqui", "hyper"), default="hyper")
    e.add_argument("--node-limit", type=int, default=None)
    e.set_defaults(func=cmd_enumerate)

    an = sub.add_parser("analyze", parents=[common], help="fusion table and FP dimensions")
    an.add_argument("--in", dest="path", required=True)
    an.set_defaults(func=cmd_analyze)

    m = sub.add_parser("morita", parents=[common], help="transport along a Morita equivalence")
    msub = m.add_subparsers(dest="kind", required=True)
    z = msub.add_parser("z3", parents=[common], help="Q = A0^r + A1^s + A2^t over k^Z/3")
    for name in ("r", "s", "t"):
        z.add_argument(f"--{name}", type=int, required=True)
    z.set_defaults(func=cmd_morita)
    mx = msub.add_parser("matrix", parents=[common], help="k^G to M_n(k^G)")
    mx.add_argument("--n", type=int, required=True)
    mx.add_argument("--group", default="Z/2")
    mx.add_argument("--full", action="store_true", help="run the whole hopfish suite on the result")
    mx.set_defaults(func=cmd_morita)
    tr = msub.add_parser("transport", parents=[common], help="structure file data to M_n(k^G)")
    tr.add_argument("--in", dest="path", required=True)
    tr.add_argument("--n", type=int, default=2)
    tr.add_argument("--full", action="store_true")
    tr.set_defaults(func=cmd_morita)

    for name, title, func, examples in (("hopf-check", "Hopf", cmd_hopf_check, HOPF_EXAMPLES),
                                        ("quasi-hopf-check", "quasi-Hopf", cmd_quasi_hopf_check, QUASI_EXAMPLES)):
        h = sub.add_parser(name, parents=[common], help=f"{title} axioms, per-axiom table")
        h.add_argument("--example", choices=sorted(examples))
        h.add_argument("--algebra")
        h.add_argument("--delta")
        h.add_argument("--epsilon")
        h.add_argument("--antipode")
        h.add_argument("--quasi")
        h.set_defaults(func=func)
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    run = Run(args, argv)
    try:
        code = args.func(run)
    except (InputError, MoritaRefusal) as exc:
        run.report["error"] = str(exc)
        run.lines = []
        print(f"error: {exc}", file=sys.stderr)
        return run.finish(EXIT_INPUT)
    return run.finish(code)


if __name__ == "__main__":
    sys.exit(main())
