"""Command-line surface: JSON in, JSON out, deterministic byte-for-byte.

Exit status: 0 on success, 1 when the oracle finds a mismatch, 2 on
validation or parse errors, 3 when a resource cap refuses the
computation.  stdout carries exactly one JSON document; diagnostics go
to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys as _sys

from .classify import verdict
from .constructions import a_plus_inf_a, b_max, b_min
from .equations import DioSystem, enumerate_truncated, is_member
from .errors import MissingOrderUnitError, ResourceLimitError
from .hilbert import HilbertBasis, generated_truncated
from .ranks import ASSUMPTIONS, RankMatrix, is_extended, realize_wiegand, vstar_system
from .semiring import INF, inf_supp, parse_vec, scale, vec_add, vec_to_json
from .supports import extract, generators, truncated_members

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_RESOURCE = 3


def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _load_system(path: str) -> DioSystem:
    return DioSystem.from_json(_load_json(path))


def _load_basis(path: str) -> HilbertBasis:
    obj = _load_json(path)
    if isinstance(obj, dict):
        gens = obj.get("gens", ())
        dim = obj.get("s") or obj.get("dim")
        if dim is None:
            raise ValueError("basis JSON object needs an 's' key")
    else:
        gens = obj
        if not gens:
            raise ValueError("cannot infer the dimension of an empty basis list")
        dim = len(gens[0])
    return HilbertBasis.from_generators(dim, (tuple(g) for g in gens))


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _cmd_member(args) -> int:
    sys_ = _load_system(args.system)
    _emit({"member": is_member(sys_, parse_vec(args.vector))})
    return EXIT_OK


def _cmd_supports(args) -> int:
    _emit(extract(_load_system(args.system)).to_json())
    return EXIT_OK


def _cmd_generators(args) -> int:
    gens = generators(extract(_load_system(args.system)))
    _emit({"generators": [vec_to_json(g) for g in gens]})
    return EXIT_OK


def _cmd_classify(args) -> int:
    _emit(verdict(_load_system(args.system), bound=args.bound).to_json())
    return EXIT_OK


def _cmd_aplusinfa(args) -> int:
    _emit(a_plus_inf_a(_load_basis(args.basis)).to_json())
    return EXIT_OK


def _cmd_bmin(args) -> int:
    _emit(b_min(_load_basis(args.basis)).to_json())
    return EXIT_OK


def _cmd_bmax(args) -> int:
    _emit(b_max(_load_basis(args.basis)).to_json())
    return EXIT_OK


def _cmd_lo_system(args) -> int:
    rm = RankMatrix.from_json(_load_json(args.ranks))
    _emit({"system": vstar_system(rm).to_json(), "assumptions": list(ASSUMPTIONS)})
    return EXIT_OK


def _cmd_lo_extended(args) -> int:
    rm = RankMatrix.from_json(_load_json(args.ranks))
    x = parse_vec(args.vector)
    _emit({"extended": is_extended(rm, x), "assumptions": list(ASSUMPTIONS)})
    return EXIT_OK


def _cmd_wiegand(args) -> int:
    E = _load_json(args.matrix)
    rm, sys_ = realize_wiegand(tuple(tuple(r) for r in E))
    _emit({"ranks": rm.to_json(), "system": sys_.to_json(),
           "assumptions": list(ASSUMPTIONS)})
    return EXIT_OK


def _cmd_oracle(args) -> int:
    """Re-verify the structural machinery against truncated brute force."""
    sys_ = _load_system(args.system)
    bound = args.bound
    enum = enumerate_truncated(sys_, bound)
    members = frozenset(enum)
    sos = extract(sys_)
    checks = {}

    checks["membership_equivalence"] = members == truncated_members(sos, bound)

    gens = generators(sos)
    checks["generators_regenerate"] = \
        generated_truncated(gens, bound, sys_.s) == members

    closed = True
    for x in enum:
        y = scale(INF, x)
        if all(v is INF or v <= bound for v in y) and y not in members:
            closed = False
            break
    checks["closed_under_inf_scaling"] = closed

    closed = (0,) * sys_.s in members
    for x in enum:
        if not closed:
            break
        for y in enum:
            z = vec_add(x, y)
            if all(v is INF or v <= bound for v in z) and z not in members:
                closed = False
                break
    checks["closed_under_addition"] = closed

    report = verdict(sys_, bound=max(bound, 1))
    finite = sorted(g for g in members if not inf_supp(g))
    a_plus = set()
    for a1 in finite:
        for a2 in finite:
            z = vec_add(a1, scale(INF, a2))
            if all(v is INF or v <= bound for v in z):
                a_plus.add(z)
    ok = all(w in members and w not in a_plus
             for w in report.witnesses
             if all(v is INF or v <= bound for v in w))
    if report.equals_a_plus_inf_a:
        ok = ok and a_plus == members
    checks["classification_consistent"] = ok

    _emit({"ok": all(checks.values()), "bound": bound, "checks": checks})
    return EXIT_OK if all(checks.values()) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supportmonoids",
        description="Monoids of solutions of linear equations and congruences "
                    "over the extended naturals, their systems of supports, and "
                    "decomposition verdicts.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, **flags):
        p = sub.add_parser(name, help=help_)
        for flag, kw in flags.items():
            p.add_argument(f"--{flag}", **kw)
        p.set_defaults(fn=fn)
        return p

    system = {"required": True, "help": "path to a system JSON file"}
    basis = {"required": True, "help": "path to a basis JSON file (array of vectors)"}
    ranks = {"required": True, "help": "path to a rank-matrix JSON file"}
    vector = {"required": True, "help": "comma-separated vector, e.g. '1,inf,0'"}

    add("member", _cmd_member, "test membership of a vector",
        system=system, vector=vector)
    add("supports", _cmd_supports, "extract the system of supports",
        system=system)
    add("generators", _cmd_generators, "minimal generating set of the monoid",
        system=system)
    add("classify", _cmd_classify, "full classification report",
        system=system, bound={"type": int, "default": 5,
                              "help": "verification bound (default 5)"})
    add("aplusinfa", _cmd_aplusinfa, "A + inf·A of a finite part", basis=basis)
    add("bmin", _cmd_bmin, "least almost-free monoid over a finite part", basis=basis)
    add("bmax", _cmd_bmax, "largest monoid over a finite part", basis=basis)
    add("lo-system", _cmd_lo_system, "descent equations of a rank matrix",
        ranks=ranks)
    add("lo-extended", _cmd_lo_extended, "descent test for one multiplicity vector",
        ranks=ranks, vector=vector)
    add("wiegand", _cmd_wiegand, "rank data realizing the largest monoid over E·x = 0",
        matrix={"required": True, "help": "path to an integer matrix JSON file"})
    add("oracle", _cmd_oracle, "re-verify structure against truncated brute force",
        system=system, bound={"type": int, "default": 3,
                              "help": "truncation bound (default 3)"})
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ResourceLimitError as exc:
        _emit({"error": "resource_limit", "message": str(exc)})
        print(f"error: {exc}", file=_sys.stderr)
        return EXIT_RESOURCE
    except MissingOrderUnitError as exc:
        _emit({"error": "missing_order_unit", "message": str(exc)})
        print(f"error: {exc}", file=_sys.stderr)
        return EXIT_INVALID
    except (ValueError, KeyError, TypeError, OSError, json.JSONDecodeError) as exc:
        _emit({"error": "invalid_input", "message": str(exc)})
        print(f"error: {exc}", file=_sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    raise SystemExit(main())
