"""Batch command-line front end with JSON input and output.

Every numeric input is an exact string like "-3/7" (floats are rejected),
except the points of ``act-sj``, which are plain float JSON.  Subcommands
mirror the library operations; ``audit`` runs the seeded claim audit.

Exit codes: 0 success; 1 parse or validation error (bad JSON, ad-bc != 1,
a^2+b^2 != 1, unknown flags); 2 domain error (e.g. completing a triple
through a non-nilpotent element); 3 audit finished with FLAG records while
--fail-on-flag is set.  Errors are reported on stderr as a JSON object
{"error": code, "message": text}.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import complex_orbits as co
from . import real_orbits as ro
from . import sl2
from .audit import report_json, report_text, run_audit
from .errors import (
    JacobiOrbitsError,
    NotKsRealError,
    NotNilpotentError,
    NotNilpotentLabelError,
    NotOnComplexCircleError,
    NotUnimodularError,
    ZeroElementError,
)
from .jacobi import (
    AlgebraElement,
    GroupElement,
    SiegelJacobiPoint,
    adjoint,
    bracket,
    embed_algebra,
    embed_group,
    group_inv,
    group_mul,
    invariants,
    orbit_dimension,
    sj_action,
)
from .labels import Label
from .sampling import SamplerConfig
from .scalars import GaussRational, rat_str

_DOMAIN_ERRORS = (NotNilpotentError, ZeroElementError, NotKsRealError,
                  NotNilpotentLabelError)


class _ParseError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse with validation failures routed to exit code 1."""

    def error(self, message):
        raise _ParseError(message)


def _payload(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _ParseError(f"invalid JSON: {exc}") from exc
    return data


def _reject_floats(data) -> None:
    if isinstance(data, float):
        raise _ParseError("floats are not exact; pass strings like '1/3'")
    if isinstance(data, dict):
        for v in data.values():
            _reject_floats(v)
    elif isinstance(data, list):
        for v in data:
            _reject_floats(v)


def _parse_exact(text: str, builder):
    data = _payload(text)
    _reject_floats(data)
    try:
        return builder(data)
    except (NotUnimodularError, NotOnComplexCircleError):
        raise
    except (TypeError, ValueError, KeyError) as exc:
        raise _ParseError(str(exc)) from exc


def _mat_json(mat) -> list:
    return [
        [e.to_json() if isinstance(e, GaussRational) else rat_str(e) for e in row]
        for row in mat.rows
    ]


def _label_text(lab: Label) -> str:
    if lab.family in ro.REAL_FAMILIES:
        return ro.render_label(lab)
    if not lab.params:
        return lab.family
    parts = []
    for k, v in lab.params:
        if isinstance(v, GaussRational):
            parts.append(f"{k}={v.re}{'+' if v.im >= 0 else ''}{v.im}i")
        else:
            parts.append(f"{k}={v}")
    return f"{lab.family}({', '.join(parts)})"


def _emit(args, payload, text: str | None = None) -> None:
    if args.format == "text" and text is not None:
        out = text if text.endswith("\n") else text + "\n"
    else:
        out = json.dumps(payload, sort_keys=True) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _build_parser() -> _Parser:
    parser = _Parser(prog="jacobi-orbits",
                     description="Exact adjoint-orbit computations for the "
                                 "Jacobi group, with a seeded claims audit.")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--output", help="write output to a file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, *payloads, help=None):
        p = sub.add_parser(name, help=help)
        for payload_name in payloads:
            p.add_argument(payload_name)
        return p

    cmd("classify", "element", help="orbit label of an algebra element")
    cmd("invariants", "element", help="orbit invariants c1, f, I, rho")
    cmd("bracket", "element1", "element2", help="Lie bracket")
    cmd("adjoint", "group", "element", help="adjoint action g.v")
    cmd("mul", "group1", "group2", help="group product")
    cmd("inv", "group", help="group inverse")
    cmd("embed", "value", help="4x4 matrix of a group or algebra element")
    witness_p = cmd("witness", "element", help="conjugating witness from the canonical representative")
    witness_p.add_argument("--tol", type=float, default=1e-9,
                           help="max-abs residual for float witnesses")
    cmd("dim", "element", help="orbit dimension")
    cmd("classify-sl2", "element", help="orbit label of an sl2 element")
    cmd("ks-complete", "element", help="sl2-triple through a nilpotent sl2 element")
    cmd("cayley", "triple", help="Cayley transform of a real KS-triple")
    cmd("ks-map", "label", help="orbit-level correspondence on nilpotent labels")
    cmd("classify-kc", "element", help="complexified orbit label")
    cmd("same-orbit-kc", "element1", "element2", help="exact orbit-equality decision")
    cmd("act-kc", "rotation", "element", help="complexified rotation acting on an element")
    cmd("act-sj", "group", "point", help="action on the upper-half-plane model (floats)")

    audit_p = sub.add_parser("audit", help="run the seeded claims audit")
    audit_p.add_argument("--seed", type=int, default=42)
    audit_p.add_argument("--trials", type=int, default=1000)
    audit_p.add_argument("--height-bound", type=int, default=10)
    audit_p.add_argument("--fail-on-flag", action="store_true",
                         help="exit 3 when any claim is FLAG")
    return parser


def _run(args) -> int:
    command = args.command

    if command == "classify":
        lab = ro.classify(_parse_exact(args.element, AlgebraElement.from_json))
        _emit(args, lab.to_json(), _label_text(lab))
    elif command == "invariants":
        inv = invariants(_parse_exact(args.element, AlgebraElement.from_json))
        data = inv.to_json()
        _emit(args, data, ", ".join(f"{k}={v}" for k, v in data.items()))
    elif command == "bracket":
        v1 = _parse_exact(args.element1, AlgebraElement.from_json)
        v2 = _parse_exact(args.element2, AlgebraElement.from_json)
        out = bracket(v1, v2)
        _emit(args, out.to_json(), json.dumps(out.to_json()))
    elif command == "adjoint":
        g = _parse_exact(args.group, GroupElement.from_json)
        v = _parse_exact(args.element, AlgebraElement.from_json)
        out = adjoint(g, v)
        _emit(args, out.to_json(), json.dumps(out.to_json()))
    elif command == "mul":
        g1 = _parse_exact(args.group1, GroupElement.from_json)
        g2 = _parse_exact(args.group2, GroupElement.from_json)
        _emit(args, group_mul(g1, g2).to_json())
    elif command == "inv":
        _emit(args, group_inv(_parse_exact(args.group, GroupElement.from_json)).to_json())
    elif command == "embed":
        data = _payload(args.value)
        _reject_floats(data)
        if "a" in data:
            mat = embed_group(_parse_exact(args.value, GroupElement.from_json))
        else:
            mat = embed_algebra(_parse_exact(args.value, AlgebraElement.from_json))
        rows = _mat_json(mat)
        _emit(args, {"matrix": rows},
              "\n".join(" ".join(str(e) for e in row) for row in rows))
    elif command == "witness":
        v = _parse_exact(args.element, AlgebraElement.from_json)
        lab = ro.classify(v)
        w = ro.witness(v, tol=args.tol)
        payload = {
            "label": lab.to_json(),
            "representative": ro.canonical_rep(lab).to_json(),
            "witness": w.to_json(),
        }
        _emit(args, payload)
    elif command == "dim":
        v = _parse_exact(args.element, AlgebraElement.from_json)
        _emit(args, {"dimension": orbit_dimension(v)}, str(orbit_dimension(v)))
    elif command == "classify-sl2":
        lab = sl2.classify_sl2(_parse_exact(args.element, sl2.Sl2Elem.from_json))
        _emit(args, lab.to_json(), _label_text(lab))
    elif command == "ks-complete":
        elem = _parse_exact(args.element, sl2.Sl2Elem.from_json)
        triple = sl2.sl2_triple_through(elem)
        payload = {"triple": triple.to_json(), "ks": sl2.is_ks_real(triple)}
        _emit(args, payload)
    elif command == "cayley":
        triple = _parse_exact(args.triple, sl2.Triple.from_json)
        _emit(args, {"triple": sl2.cayley(triple).to_json()})
    elif command == "ks-map":
        lab = _parse_exact(args.label, Label.from_json)
        out = sl2.ks_map(lab)
        _emit(args, out.to_json(), _label_text(out))
    elif command == "classify-kc":
        lab = co.classify_kc(_parse_exact(args.element, co.PcElem.from_json))
        _emit(args, lab.to_json(), _label_text(lab))
    elif command == "same-orbit-kc":
        h1 = _parse_exact(args.element1, co.PcElem.from_json)
        h2 = _parse_exact(args.element2, co.PcElem.from_json)
        _emit(args, co.same_kc_orbit(h1, h2).to_json())
    elif command == "act-kc":
        k = _parse_exact(args.rotation, co.KcElem.from_json)
        h = _parse_exact(args.element, co.PcElem.from_json)
        _emit(args, co.kc_action(k, h).to_json())
    elif command == "act-sj":
        g = _parse_exact(args.group, GroupElement.from_json)
        try:
            pt = SiegelJacobiPoint.from_json(_payload(args.point))
        except (TypeError, ValueError, KeyError) as exc:
            raise _ParseError(str(exc)) from exc
        _emit(args, sj_action(g, pt).to_json())
    elif command == "audit":
        cfg = SamplerConfig(seed=args.seed, trials=args.trials,
                            height_bound=args.height_bound)
        records = run_audit(cfg)
        _emit(args, report_json(records, cfg), report_text(records, cfg))
        if args.fail_on_flag and any(r.status == "FLAG" for r in records):
            return 3
    else:  # pragma: no cover - argparse enforces the command set
        raise _ParseError(f"unknown command {command}")
    return 0


def _error(code: str, message: str) -> None:
    sys.stderr.write(json.dumps({"error": code, "message": message}) + "\n")


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _run(args)
    except _ParseError as exc:
        _error("parse-error", str(exc))
        return 1
    except (NotUnimodularError, NotOnComplexCircleError) as exc:
        _error("validation-error", str(exc))
        return 1
    except _DOMAIN_ERRORS as exc:
        _error("domain-error", str(exc))
        return 2
    except ZeroDivisionError as exc:
        _error("division-by-zero", str(exc) or "division by zero")
        return 2
    except JacobiOrbitsError as exc:  # pragma: no cover - internal guardrails
        _error("internal-error", str(exc))
        return 2


if __name__ == "__main__":
    sys.exit(main())
