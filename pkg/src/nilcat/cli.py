"""``nilcat`` command line.

Inputs are JSON documents (``-`` reads stdin) validated against the bundled
schema, docs/schemas/nilcat.schema.json in the source tree:

  matrix    {"rows": n, "cols": m, "entries": [["1/2", "0"], ...]}
  object    {"dim": n, "endo": <matrix>} or {"jordan_type": [3, 1]}
  morphism  {"src": <object>, "dst": <object>, "mat": <matrix>}
  sequence  {"f": <morphism>, "g": <morphism>}

Any document may carry {"field": "Q"} or {"field": "Fp", "p": 7}; otherwise
--field applies (default from $NILCAT_FIELD, else Q).

Exit status: 0 success, 1 a mathematical check failed (the report holds the
witness), 2 bad input.  Random probes use Python's random.Random (Mersenne
Twister) seeded with --seed, so equal arguments give byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field as dc_field
from typing import Any, Optional, Sequence

from . import checks
from .abelian import cokernel, image_factorization, is_epic, is_exact_pair, is_monic, kernel
from .core import NilcatError
from .field import Field, FieldError, field_from_spec
from .functors import DivergenceReport, HomFunctorParam, TensorParam, divergence_report, homf_obj, tensor_obj
from .hom import HomSpace
from .jordan import jordan_basis, jordan_type
from .serialize import SchemaError, dumps, load

COMMANDS = ("decompose", "hom", "kernel", "cokernel", "image", "exact", "tensor",
            "homf", "adjoint", "diverge", "check", "eta")
SEED_LIMIT = 2 ** 64


class InputError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    field_spec: str = "Q"
    seed: int = 0
    output: str = "json"
    inputs: dict[str, str] = dc_field(default_factory=dict)
    options: dict[str, Any] = dc_field(default_factory=dict)


def _read(path: str) -> Any:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc.msg} at line {exc.lineno}") from exc


def _load(cfg: RunConfig, name: str, kind: str, fld: Field):
    path = cfg.inputs.get(name)
    if path is None:
        raise InputError(f"--{name} is required")
    value, _ = load(_read(path), kind, fld)
    return value


def _report_status(report: dict) -> int:
    return 1 if report["failures"] else 0


def _decompose(cfg, fld):
    a = _load(cfg, "object", "object", fld)
    return 0, {"jordan_type": list(jordan_type(a).parts), "iso": jordan_basis(a).mat}


def _hom(cfg, fld):
    space = HomSpace(_load(cfg, "src", "object", fld), _load(cfg, "dst", "object", fld))
    out: dict = {"dim": space.dim}
    if cfg.options.get("basis"):
        out["basis"] = space.basis_mats
    return 0, out


def _kernel(cfg, fld):
    obj, mono = kernel(_load(cfg, "morphism", "morphism", fld))
    return 0, {"object": obj, "jordan_type": list(jordan_type(obj).parts), "mono": mono.mat}


def _cokernel(cfg, fld):
    obj, epi = cokernel(_load(cfg, "morphism", "morphism", fld))
    return 0, {"object": obj, "jordan_type": list(jordan_type(obj).parts), "epi": epi.mat}


def _image(cfg, fld):
    img = image_factorization(_load(cfg, "morphism", "morphism", fld))
    return 0, {"object": img.obj, "jordan_type": list(jordan_type(img.obj).parts),
               "epi": img.epi.mat, "mono": img.mono.mat}


def _exact(cfg, fld):
    f, g = _load(cfg, "seq", "sequence", fld)
    exact = is_exact_pair(f, g)
    out = {"exact": exact, "f_monic": is_monic(f), "g_epic": is_epic(g),
           "short_exact": exact and is_monic(f) and is_epic(g)}
    if not exact:
        out["witness"] = {"f": f, "g": g, "gf": g.mat @ f.mat}
    return (0 if exact else 1), out


def _tensor(cfg, fld):
    x = _load(cfg, "x", "object", fld)
    t = TensorParam(_load(cfg, "b", "matrix", fld))
    obj = tensor_obj(x, t)
    return 0, {"object": obj, "jordan_type": list(jordan_type(obj).parts)}


def _homf(cfg, fld):
    h = HomFunctorParam(_load(cfg, "a", "object", fld))
    obj, basis = homf_obj(_load(cfg, "x", "object", fld), h)
    return 0, {"object": obj, "jordan_type": list(jordan_type(obj).parts),
               "basis": [b.mat for b in basis]}


def _adjoint(cfg, fld):
    kind = cfg.options.get("kind")
    dims = cfg.options.get("probe_dims", 4)
    suite = {"tensor": checks.adjoint_tensor, "hom": checks.adjoint_hom}.get(kind)
    if suite is None:
        raise InputError("--kind must be tensor or hom")
    report = suite(dims, cfg.seed, fld)
    return _report_status(report), report


def _diverge(cfg, fld) -> tuple[int, DivergenceReport]:
    h = HomFunctorParam(_load(cfg, "a", "object", fld))
    return 0, divergence_report(h, cfg.options.get("d", 2), cfg.options.get("max_dim", 8))


def _check(cfg, fld):
    name = cfg.options.get("suite")
    if name not in checks.SUITES:
        raise InputError(f"unknown suite {name!r}; choose from {', '.join(checks.SUITES)}")
    report = checks.run_suite(name, cfg.options.get("max_dim", 4), cfg.seed, fld)
    return _report_status(report), report


def _eta(cfg, fld):
    report = checks.eta(cfg.options.get("max_dim", 4), cfg.seed, fld)
    return _report_status(report), report


HANDLERS = {
    "decompose": _decompose, "hom": _hom, "kernel": _kernel, "cokernel": _cokernel,
    "image": _image, "exact": _exact, "tensor": _tensor, "homf": _homf,
    "adjoint": _adjoint, "diverge": _diverge, "check": _check, "eta": _eta,
}


def _error(kind: str, message: str) -> dict:
    return {"error": {"type": kind, "message": message}}


def _text(value: Any, indent: int = 0) -> str:
    """Aligned key/value rendering of a JSON-like report."""
    pad = " " * indent
    if isinstance(value, dict):
        if not value:
            return pad + "{}"
        width = max(len(str(k)) for k in value)
        lines = []
        for k in sorted(value):
            v = value[k]
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{str(k):<{width}} :")
                lines.append(_text(v, indent + 2))
            else:
                lines.append(f"{pad}{str(k):<{width}} : {json.dumps(v)}")
        return "\n".join(lines)
    if isinstance(value, list):
        if value and all(isinstance(r, list) and all(not isinstance(e, (dict, list)) for e in r)
                         for r in value):
            cells = [[str(e) for e in r] for r in value]
            w = max((len(c) for r in cells for c in r), default=1)
            return "\n".join(pad + " ".join(c.rjust(w) for c in r) for r in cells)
        return "\n".join(pad + "- " + _text(v, indent + 2).lstrip() if not isinstance(v, dict)
                         else pad + "-\n" + _text(v, indent + 2) for v in value)
    return pad + json.dumps(value)


def render(payload: Any, output: str) -> str:
    if output == "text":
        if isinstance(payload, DivergenceReport):
            return payload.to_text() + "\n"
        return _text(json.loads(dumps(_plainify(payload)))) + "\n"
    return dumps(_plainify(payload))


def _plainify(payload: Any) -> Any:
    if isinstance(payload, DivergenceReport):
        return payload.to_json()
    return payload


def run(config: RunConfig) -> tuple[int, str]:
    """Execute one command; returns (exit status, rendered report)."""
    try:
        if config.command not in HANDLERS:
            raise InputError(f"unknown command {config.command!r}")
        if not 0 <= config.seed < SEED_LIMIT:
            raise InputError("seed must be an unsigned 64-bit integer")
        if config.output not in ("json", "text"):
            raise InputError("output must be json or text")
        fld = field_from_spec(config.field_spec)
        code, payload = HANDLERS[config.command](config, fld)
    except (InputError, SchemaError, FieldError, NilcatError, ValueError, KeyError) as exc:
        kind = type(exc).__name__
        msg = exc.args[0] if exc.args else kind
        return 2, dumps(_error(kind, str(msg)))
    return code, render(payload, config.output)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default=os.environ.get("NILCAT_FIELD", "Q"),
                        help="Q, or Fp as F7 / Fp:7 (default: $NILCAT_FIELD or Q)")
    common.add_argument("--output", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int, default=0, help="unsigned 64-bit seed for random probes")

    parser = argparse.ArgumentParser(
        prog="nilcat", description="Exact computations in the category of nilpotent operators.",
        epilog=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[common], help="Jordan type and Jordan basis")
    p.add_argument("--object", required=True)
    p = sub.add_parser("hom", parents=[common], help="dimension (and basis) of Hom(src, dst)")
    p.add_argument("--src", required=True)
    p.add_argument("--dst", required=True)
    p.add_argument("--basis", action="store_true")
    for name in ("kernel", "cokernel", "image"):
        p = sub.add_parser(name, parents=[common], help=f"{name} of a morphism")
        p.add_argument("--morphism", required=True)
    p = sub.add_parser("exact", parents=[common], help="exactness of f then g")
    p.add_argument("--seq", required=True)
    p = sub.add_parser("tensor", parents=[common], help="x tensor (B, b) for invertible b")
    p.add_argument("--x", required=True)
    p.add_argument("--b", required=True, help="matrix document")
    p = sub.add_parser("homf", parents=[common], help="HOM((A, a), x)")
    p.add_argument("--a", required=True)
    p.add_argument("--x", required=True)
    p = sub.add_parser("adjoint", parents=[common], help="probe a self-adjunction")
    p.add_argument("--kind", choices=("tensor", "hom"), required=True)
    p.add_argument("--probe-dims", type=_positive, default=4)
    p = sub.add_parser("diverge", parents=[common], help="HOM vs tensor dimension table")
    p.add_argument("--a", required=True)
    p.add_argument("--d", type=_positive, default=2)
    p.add_argument("--max-dim", type=_positive, default=8)
    p = sub.add_parser("check", parents=[common], help="run a named check suite")
    p.add_argument("--suite", choices=sorted(checks.SUITES), required=True)
    p.add_argument("--max-dim", type=_positive, default=4)
    p = sub.add_parser("eta", parents=[common], help="eta over plain objects")
    p.add_argument("--max-dim", type=_positive, default=4)
    return parser


INPUT_FLAGS = ("object", "src", "dst", "morphism", "seq", "x", "b", "a")
OPTION_FLAGS = ("basis", "kind", "probe_dims", "d", "max_dim", "suite")


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    args = vars(ns)
    return RunConfig(
        command=ns.command, field_spec=ns.field, seed=ns.seed, output=ns.output,
        inputs={k: args[k] for k in INPUT_FLAGS if args.get(k) is not None},
        options={k: args[k] for k in OPTION_FLAGS if args.get(k) is not None},
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    code, out = run(config_from_args(ns))
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
