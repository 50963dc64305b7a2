"""Command line front end: ``motzeta <command> (--preset NAME | --config FILE) ...``."""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .blowup import BlowupStep, blowup_step, make_d_nonlinear, replay
from .config import DualGraph, from_dual_graph
from .errors import (
    DLinear,
    IterationCapExceeded,
    MissingEdge,
    MissingMu,
    MissingNu,
    MotzetaError,
    ParseError,
    UnknownPreset,
    ValidationError,
)
from .invariants import (
    dl_naive_zeta,
    dl_nearby_cycles,
    dl_zeta,
    euler_milnor,
    monodromy_zeta,
    motivic_volume,
    serre_invariant,
    smoothness_report,
    trace_of_monodromy,
    volume_coefficient,
    volume_poincare,
    weil_series,
)
from .io import config_to_json, parse_config
from .presets import preset
from .verify import verify

COMMANDS = ("zeta", "serre", "trace", "volume", "weil", "limit", "dl", "blowup", "verify")

EXIT_OK, EXIT_VALIDATION, EXIT_PRECONDITION, EXIT_VERIFY = 0, 2, 3, 4


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="motzeta", description="Motivic invariants of snc resolution data.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("command", choices=COMMANDS)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--preset", help="smooth_point, node, monomial(N1,N2) or cusp")
    src.add_argument("--config", help="JSON config file ('-' for stdin)")
    p.add_argument("--degree", type=int, default=None, help="truncation degree D")
    p.add_argument("--d", type=int, default=None, help="ramification degree d")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--edge", help="blowup: edge to blow up, as 'i,j'")
    p.add_argument("--make-nonlinear", type=int, metavar="D", help="blowup: blow up until d is not X_s-linear")
    p.add_argument("--steps", help="JSON file with blow-up steps to replay before running")
    return p


def _load(args):
    if args.preset is not None:
        obj = preset(args.preset).config
    elif args.config == "-":
        obj = parse_config(sys.stdin.read())
    else:
        with open(args.config, encoding="utf-8") as fh:
            obj = parse_config(fh.read())
    if args.steps:
        if not isinstance(obj, DualGraph):
            raise ParseError("--steps needs a dual-graph config", field="steps")
        with open(args.steps, encoding="utf-8") as fh:
            raw = json.load(fh)
        steps = raw.get("steps", raw) if isinstance(raw, dict) else raw
        if not isinstance(steps, list):
            raise ParseError("steps must be a list", field="steps")
        obj = replay(obj, [BlowupStep.from_json(s) for s in steps])
    return obj


def _need_d(args):
    if args.d is None:
        raise ParseError("this command needs --d", field="d")
    if args.d < 1:
        raise ParseError("--d must be positive", field="d")
    return args.d


def _emit(args, payload: dict, text: str, out):
    if args.json:
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write(text + "\n")


def _run(args, out) -> int:
    obj = _load(args)
    c = from_dual_graph(obj) if isinstance(obj, DualGraph) else obj
    cmd = args.command
    D = args.degree

    if cmd == "zeta":
        z = monodromy_zeta(c)
        _emit(args, {"monodromy_zeta": z.to_json(), "text": z.render()}, z.render(), out)
    elif cmd == "trace":
        if args.d is not None:
            d = _need_d(args)
            t = trace_of_monodromy(c, d)
            _emit(args, {"d": d, "trace": t}, str(t), out)
        else:
            D = D or 12
            table = [(d, trace_of_monodromy(c, d)) for d in range(1, D + 1)]
            sm = smoothness_report(c)
            lines = [f"d={d}: {t}" for d, t in table] + [f"smooth (trace(1) != 0): {sm.smooth_criterion}"]
            _emit(args, {"traces": dict(table), "smoothness": sm.to_json()}, "\n".join(lines), out)
    elif cmd == "serre":
        d = _need_d(args)
        s = serre_invariant(c, d)
        chi = c.euler(s)
        _emit(args, {"d": d, "serre": s.to_json(), "text": s.render(), "euler_char": chi},
              f"{s.render()}\neuler_char = {chi}", out)
    elif cmd == "volume":
        S = volume_poincare(c)
        D = D or 6
        coeffs = {d: volume_coefficient(c, d) for d in ([args.d] if args.d else range(1, D + 1))}
        lines = [f"S(T) = {S.render()}"] + [f"d={d}: {v.render()}" for d, v in coeffs.items()]
        _emit(args, {"series": S.to_json(), "text": S.render(),
                     "coefficients": {str(d): v.to_json() for d, v in coeffs.items()}}, "\n".join(lines), out)
    elif cmd == "weil":
        S = weil_series(c)
        text = f"S(T) = {S.render()}"
        payload = {"series": S.to_json(), "text": S.render()}
        if D:
            coeffs = S.expand(D)
            text += "\n" + "\n".join(f"d={d}: {v.render()}" for d, v in enumerate(coeffs) if d)
            payload["coefficients"] = [v.to_json() for v in coeffs]
        _emit(args, payload, text, out)
    elif cmd == "limit":
        vol = motivic_volume(c)
        payload = {"motivic_volume": vol.to_json(), "text": vol.render(),
                   "euler_char": c.euler(vol), "euler_milnor": euler_milnor(c)}
        text = f"S(X;K^s) = {vol.render()}\neuler_char = {c.euler(vol)}"
        if all(x.nu is not None for x in c.components):
            lim = (-weil_series(c)).limit()
            payload["limit_of_minus_weil"] = lim.to_json()
            payload["agree"] = lim == vol
            text += f"\nlim(-S(T)) = {lim.render()} ({'agrees' if lim == vol else 'DIFFERS'})"
        _emit(args, payload, text, out)
    elif cmd == "dl":
        Z, Zn, Sf = dl_zeta(c), dl_naive_zeta(c), dl_nearby_cycles(c)
        _emit(args, {"zeta": Z.to_json(), "naive_zeta": Zn.to_json(), "nearby_cycles": Sf.to_json()},
              f"Z(T) = {Z.render()}\nZ_naive(T) = {Zn.render()}\nS_f = {Sf.render()}", out)
    elif cmd == "blowup":
        if not isinstance(obj, DualGraph):
            raise ParseError("blowup needs a dual-graph config", field="config")
        if args.make_nonlinear is not None:
            g, steps = make_d_nonlinear(obj, args.make_nonlinear)
        elif args.edge:
            g, step = blowup_step(obj, [x.strip() for x in args.edge.split(",")])
            steps = [step]
        else:
            raise ParseError("blowup needs --edge or --make-nonlinear", field="blowup")
        payload = {"graph": config_to_json(g), "steps": [s.to_json() for s in steps]}
        lines = [f"step {k}: blow up ({','.join(s.edge)}) -> {s.new_vertex} (N={s.new_N}, nu={s.new_nu})"
                 for k, s in enumerate(steps, 1)] or ["no blow-ups needed"]
        lines.append(json.dumps(payload, indent=2))
        _emit(args, payload, "\n".join(lines), out)
    elif cmd == "verify":
        rep = verify(obj, D or 20)
        _emit(args, rep.to_json(), rep.render(), out)
        return EXIT_OK if rep.passed else EXIT_VERIFY
    return EXIT_OK


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return _run(args, out)
    except (ValidationError, ParseError, UnknownPreset) as exc:
        return _fail(args, err, exc, EXIT_VALIDATION)
    except (DLinear, MissingNu, MissingMu, MissingEdge, IterationCapExceeded) as exc:
        return _fail(args, err, exc, EXIT_PRECONDITION)
    except (MotzetaError, OSError) as exc:
        return _fail(args, err, exc, EXIT_VALIDATION)


def _fail(args, err, exc, code: int) -> int:
    if args.json:
        payload = {"error": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, DLinear):
            payload.update(d=exc.d, J=list(exc.witness))
        if isinstance(exc, ValidationError):
            payload["violations"] = [{"field": v.field, "rule": v.rule, "detail": v.detail} for v in exc.violations]
        err.write(json.dumps(payload, indent=2) + "\n")
    else:
        err.write(f"error: {exc}\n")
    return code

if __name__ == "__main__":
    sys.exit(main())
