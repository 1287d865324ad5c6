"""Command-line interface: ``latticeiso <command> ...``.

Distances are always given as the squared value R. Exit status is 0 on
success, 1 when a domain precondition fails (or a certificate is rejected),
and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Any

from . import __version__
from .arith import (
    all_representations,
    factorize,
    is_realized,
    mandatory_gcd_divisor,
    primitive_representation,
    core_decompose,
    radicand,
    solve_unit_bezout,
)
from .certify import FORMAT_VERSION, certify_nonisomorphic, verify_certificate
from .construct import (
    DIRECTIONS,
    PathWitness,
    axis_translation,
    build_path,
    loop_erase,
    path_length_within_bound,
)
from .errors import LatticeIsoError, NoPrimitiveRepresentation
from .lattice import (
    LatticeVector,
    component_count,
    component_count_1d,
    same_component,
    window_edges,
)
from .spectra import angle_witness, cosine_spectrum, dot_spectrum
from .walks import DEFAULT_BUDGET, PathCountQuery, count_paths, count_walks, verify_collinear_uniqueness

log = logging.getLogger("latticeiso")


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer: {text!r}")
    return v


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be a nonnegative integer: {text!r}")
    return v


def _vec(v) -> list[int]:
    return [v[0], v[1]]


def _witness_dict(w) -> dict[str, Any]:
    return {
        "r1": w.r1, "r2": w.r2, "a": w.a, "b": w.b,
        "cosine": [w.cosine.num, w.cosine.den], "p": w.p, "n": w.n,
    }


def path_to_dict(w: PathWitness, with_steps: bool = True) -> dict[str, Any]:
    d = {
        "r": w.r,
        "start": _vec(w.start),
        "end": _vec(w.end),
        "length": w.length,
    }
    if with_steps:
        d["steps"] = [_vec(s) for s in w.steps]
    return d


def path_to_lines(w: PathWitness, with_steps: bool = True):
    yield f"r {w.r}"
    yield f"start {w.start.x} {w.start.y}"
    yield f"end {w.end.x} {w.end.y}"
    yield f"length {w.length}"
    if with_steps:
        for s in w.steps:
            yield f"{s.x} {s.y}"


def path_from_lines(lines) -> PathWitness:
    """Parse the line format written by :func:`path_to_lines`."""
    header = {}
    steps = []
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] in ("r", "start", "end", "length"):
            header[parts[0]] = [int(p) for p in parts[1:]]
        else:
            steps.append(LatticeVector(int(parts[0]), int(parts[1])))
    w = PathWitness(header["r"][0], LatticeVector(*header["start"]), steps)
    if "end" in header and list(w.end) != header["end"]:
        raise ValueError("end point does not match the steps")
    return w


# --- command handlers ----------------------------------------------------
# Each returns (result payload, text lines).


def cmd_reps(a):
    reps = all_representations(a.R)
    if not reps:
        log.info("%d is not a sum of two squares", a.R)
    result = [{"a": p.a, "b": p.b, "primitive": p.primitive} for p in reps]
    lines = [f"{p.a} {p.b}" + (" primitive" if p.primitive else "") for p in reps]
    return result, lines


def cmd_realized(a):
    ok = is_realized(a.R)
    return ok, ["true" if ok else "false"]


def cmd_factor(a):
    fac = factorize(a.N)
    result = [[p, e] for p, e in fac]
    text = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in fac) or "1"
    return result, [text]


def cmd_core(a):
    core, gamma, q_part = core_decompose(a.R)
    rad = radicand(a.R)
    try:
        prim = primitive_representation(a.R)
        prim_out = [prim.a, prim.b]
    except NoPrimitiveRepresentation:
        prim_out = None
    result = {
        "r": a.R,
        "core": core,
        "gamma": gamma,
        "p_part": [list(x) for x in rad.p_part],
        "q_part": [list(x) for x in q_part],
        "h": mandatory_gcd_divisor(a.R),
        "primitive_representation": prim_out,
    }
    lines = [f"{k} {json.dumps(v)}" for k, v in result.items()]
    return result, lines


def cmd_components(a):
    if a.dim == 1:
        k = component_count_1d(a.R)
    else:
        k = component_count(a.R)
    return k, [str(k)]


def cmd_same_component(a):
    ok = same_component(a.R, (a.X0, a.Y0), (a.X1, a.Y1))
    return ok, ["true" if ok else "false"]


def cmd_spectrum(a):
    if a.dots:
        vals = sorted(dot_spectrum(a.R))
        return vals, [str(v) for v in vals]
    cos = sorted(cosine_spectrum(a.R), key=lambda c: c.value)
    return [[c.num, c.den] for c in cos], [str(c) for c in cos]


def cmd_witness(a):
    w = angle_witness(a.R1, a.R2)
    d = _witness_dict(w)
    lines = [
        f"vectors ({w.a},{w.b}) and ({w.b},{w.a}) at squared length {w.r1}",
        f"cosine {w.cosine}",
        f"separating prime power {w.p}^{w.n}",
        f"not realized at squared length {w.r2}",
    ]
    return d, lines


def cmd_bezout(a):
    bz = solve_unit_bezout(a.A, a.B)
    return {"a": bz.a, "b": bz.b, "s": bz.s, "t": bz.t}, [f"s {bz.s}", f"t {bz.t}"]


def cmd_unit_translation(a):
    seq = axis_translation(a.R, a.direction)
    total = seq.total()
    result = {
        "r": a.R,
        "direction": a.direction,
        "length": len(seq),
        "sum": _vec(total),
        "steps": [_vec(s) for s in seq],
    }
    lines = [f"length {len(seq)}", f"sum {total.x} {total.y}"]
    lines += [f"{s.x} {s.y}" for s in seq]
    return result, lines


def cmd_path(a):
    w = build_path(a.R, (a.X0, a.Y0), (a.X1, a.Y1))
    if a.loop_erase:
        w = loop_erase(w)
    result = path_to_dict(w, with_steps=not a.summary)
    result["within_bound"] = path_length_within_bound(w.length, a.R)
    lines = list(path_to_lines(w, with_steps=not a.summary))
    return result, lines


def cmd_count_paths(a):
    q = PathCountQuery(a.R, a.L, (a.X0, a.Y0), (a.X1, a.Y1))
    n = count_paths(q, budget=a.budget)
    return n, [str(n)]


def cmd_walks(a):
    n = count_walks(a.R, a.L, (0, 0), (a.X, a.Y))
    return n, [str(n)]


def cmd_collinear(a):
    ok = verify_collinear_uniqueness(a.R, (a.PX, a.PY), a.N, budget=a.budget)
    return ok, ["true" if ok else "false"]


def cmd_certify(a):
    c = certify_nonisomorphic(a.R1, a.R2)
    if c.witness is None:
        lines = [f"component counts differ: k({c.r1}) = {c.k1}, k({c.r2}) = {c.k2}"]
    else:
        w = c.witness
        lines = [
            f"component counts agree: k = {c.k1}",
            f"cores {c.core1} and {c.core2} differ",
            f"cosine {w.cosine} (vectors ({w.a},{w.b}), ({w.b},{w.a})) occurs at {w.r1}, not at {w.r2}",
            f"separating prime power {w.p}^{w.n}",
        ]
    return c.to_dict(), lines


class CertificateRejected(LatticeIsoError):
    pass


def cmd_verify_cert(a):
    with open(a.FILE) as fh:
        data = json.load(fh)
    if isinstance(data, dict) and "result" in data and "command" in data:
        data = data["result"]
    ok = verify_certificate(data)
    if not ok:
        raise CertificateRejected(f"certificate in {a.FILE} failed verification")
    return True, ["valid"]


def cmd_window(a):
    edges = window_edges(a.R, a.N)
    if a.format == "dot":
        lines = [f"graph window_{a.R}_{a.N} {{"]
        for x in range(-a.N, a.N + 1):
            for y in range(-a.N, a.N + 1):
                lines.append(f'  "{x},{y}";')
        lines += [f'  "{u.x},{u.y}" -- "{v.x},{v.y}";' for u, v in edges]
        lines.append("}")
        return None, lines
    result = {
        "r": a.R,
        "n": a.N,
        "vertices": (2 * a.N + 1) ** 2,
        "edges": [[_vec(u), _vec(v)] for u, v in edges],
    }
    if a.format == "json":
        return result, [json.dumps(result)]
    lines = [f"{u.x} {u.y} {v.x} {v.y}" for u, v in edges]
    return result, lines


# --- parser --------------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                   help="emit a JSON envelope instead of text")
    p.add_argument("--budget", type=_positive, metavar="NODES", default=argparse.SUPPRESS,
                   help=f"node limit for path searches (default {DEFAULT_BUDGET})")
    p.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                   help="suppress diagnostics on stderr")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="latticeiso",
        description="Exact tools for distance graphs G(Z^2, sqrt R).",
        parents=[common],
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    def add(name, func, help, args):
        sp = sub.add_parser(name, help=help, description=help, parents=[common])
        for arg, typ in args:
            sp.add_argument(arg, type=typ)
        sp.set_defaults(func=func)
        return sp

    P, N, Z = _positive, _nonneg, int
    add("reps", cmd_reps, "list representations R = a^2 + b^2 with a >= b >= 0", [("R", P)])
    add("realized", cmd_realized, "is R a sum of two squares", [("R", P)])
    add("factor", cmd_factor, "prime factorization", [("N", P)])
    add("core", cmd_core, "split R into core, power of 2 and 3-mod-4 squares", [("R", P)])
    sp = add("components", cmd_components, "number of components of G(Z^2, sqrt R)", [("R", P)])
    sp.add_argument("--dim", type=int, choices=(1, 2), default=2,
                    help="1 counts components of G(Z, R) instead")
    add("same-component", cmd_same_component, "are two points in the same component",
        [("R", P), ("X0", Z), ("Y0", Z), ("X1", Z), ("Y1", Z)])
    sp = add("spectrum", cmd_spectrum, "exact cosines between vectors of squared length R", [("R", P)])
    sp.add_argument("--dots", action="store_true", help="print integer dot products instead")
    add("witness", cmd_witness, "angle present at core R1 but absent at core R2 (R1 > R2)",
        [("R1", P), ("R2", P)])
    add("bezout", cmd_bezout, "least s >= 0 with s*A - t*B = -1 (A even, B odd)",
        [("A", N), ("B", P)])
    sp = add("unit-translation", cmd_unit_translation,
             "steps of squared length R summing to a unit vector", [("R", P)])
    sp.add_argument("--direction", choices=sorted(DIRECTIONS), default="+y")
    sp = add("path", cmd_path, "walk between two points built from unit translations",
             [("R", P), ("X0", Z), ("Y0", Z), ("X1", Z), ("Y1", Z)])
    sp.add_argument("--loop-erase", action="store_true", help="erase loops to get a path")
    sp.add_argument("--summary", action="store_true", help="omit the step list")
    add("count-paths", cmd_count_paths, "number of self-avoiding paths of length L",
        [("R", P), ("L", N), ("X0", Z), ("Y0", Z), ("X1", Z), ("Y1", Z)])
    sp = add("walks", cmd_walks, "number of walks of length L from the origin to (X, Y)",
             [("R", P), ("L", N)])
    sp.add_argument("X", type=int, nargs="?", default=0)
    sp.add_argument("Y", type=int, nargs="?", default=0)
    add("collinear", cmd_collinear, "is the straight path 0, P, ..., N*P the unique path",
        [("R", P), ("PX", Z), ("PY", Z), ("N", P)])
    add("certify", cmd_certify, "certificate that G(Z^2, sqrt R1) and G(Z^2, sqrt R2) differ",
        [("R1", P), ("R2", P)])
    add("verify-cert", cmd_verify_cert, "independently check a JSON certificate", [("FILE", str)])
    sp = add("window", cmd_window, "induced subgraph on [-N, N]^2", [("R", P), ("N", N)])
    sp.add_argument("--format", choices=("json", "text", "dot"), default=None,
                    help="edge list format (default: text, or json with --json)")
    return parser


def _inputs(a) -> dict[str, Any]:
    skip = {"func", "command", "json", "quiet", "budget"}
    return {k: v for k, v in vars(a).items() if k not in skip}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    a.json = getattr(a, "json", False)
    a.quiet = getattr(a, "quiet", False)
    a.budget = getattr(a, "budget", DEFAULT_BUDGET)
    if a.command == "window" and a.format is None:
        a.format = "json" if a.json else "text"

    handler = logging.StreamHandler(stderr)
    handler.setFormatter(logging.Formatter("%(message)s"))
    log.handlers[:] = [handler]
    log.propagate = False
    log.setLevel(logging.ERROR if a.quiet else logging.INFO)

    try:
        result, lines = a.func(a)
    except LatticeIsoError as exc:
        log.error("error: %s", exc)
        return 1
    except (ValueError, OSError) as exc:
        log.error("error: %s", exc)
        return 1

    if a.json and not (a.command == "window" and a.format == "dot"):
        envelope = {
            "command": a.command,
            "inputs": _inputs(a),
            "result": result,
            "format_version": FORMAT_VERSION,
        }
        json.dump(envelope, stdout)
        stdout.write("\n")
    else:
        for line in lines:
            stdout.write(line + "\n")
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
