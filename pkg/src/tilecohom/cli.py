"""Command-line front end: check, homology, cohomology, spectral, limit.

Exit codes: 0 success, 1 domain error (validation or precondition failure),
2 usage error.  Output is deterministic for identical inputs; --json emits
exactly one document.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import complexes, spectral, tilings
from .complexes import MODE_RIGID, MODE_RIGID_MODIFIED, MODE_TRANSLATION
from .dirlimit import DirectLimitError, direct_limit
from .exactalg import ExactAlgError, IntMatrix
from .groups import FgAbelianGroup, GroupError, GroupHom

_MODE_FLAG = {
    "translation": MODE_TRANSLATION,
    "rigid": MODE_RIGID,
    "rigid-modified": MODE_RIGID_MODIFIED,
}

_DOMAIN_ERRORS = (tilings.SpecError, complexes.ComplexError, GroupError,
                  spectral.SpectralError, DirectLimitError, ExactAlgError,
                  OSError)


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    stdout: str


class _UsageError(Exception):
    pass


def _load_target(args) -> tilings.TilingSpec:
    if args.builtin and args.path:
        raise _UsageError("give either a spec path or --builtin, not both")
    if args.builtin:
        return tilings.builtin(args.builtin)
    if args.path:
        with open(args.path, "r", encoding="utf-8") as fh:
            return tilings.load_spec(fh.read())
    raise _UsageError("a spec path or --builtin is required")


def _add_target(sub):
    sub.add_argument("path", nargs="?", help="spec file (JSON)")
    sub.add_argument("--builtin", help="name of a builtin spec")


def _render(group):
    return group.render()


def _element_json(el):
    return {"free": list(el.free_coords), "torsion": list(el.torsion_coords)}


def _element_text(el):
    free = ", ".join(str(x) for x in el.free_coords)
    tors = ", ".join(str(x) for x in el.torsion_coords)
    return "(%s; %s)" % (free, tors)


def _cmd_check(args):
    spec = _load_target(args)
    report = tilings.validate_spec(spec)
    lines = ["%s: %s" % (spec.name, "ok" if report.passed else "invalid")]
    lines.extend("  " + issue for issue in report.issues)
    return CommandResult(0 if report.passed else 1, "\n".join(lines) + "\n")


def _cmd_homology(args):
    spec = _load_target(args)
    mode = _MODE_FLAG[args.mode]
    cplx = complexes.build_chain_complex(spec, mode)
    degrees = range(cplx.top_dim + 1) if args.degree is None else [args.degree]
    for k in degrees:
        if not 0 <= k <= cplx.top_dim:
            raise complexes.ComplexError(
                "degree %d out of range 0..%d" % (k, cplx.top_dim))
    if args.limit:
        maps = complexes.substitution_homology_maps(spec, mode)
        results = {k: direct_limit(complexes.homology(cplx, k).structure, maps[k])
                   for k in degrees}
    else:
        results = {k: complexes.homology(cplx, k).structure for k in degrees}
    if args.json:
        doc = {
            "spec": spec.name,
            "mode": args.mode,
            "limit": bool(args.limit),
            "groups": {str(k): _render(results[k]) for k in degrees},
        }
        if args.limit:
            doc["status"] = {str(k): results[k].status for k in degrees}
        return CommandResult(0, json.dumps(doc, indent=2) + "\n")
    lines = ["H_%d = %s" % (k, _render(results[k])) for k in degrees]
    return CommandResult(0, "\n".join(lines) + "\n")


def _cmd_cohomology(args):
    spec = _load_target(args)
    if args.hull == "rigid":
        hc = spectral.rigid_hull_cohomology(spec)
    elif args.hull == "rotation-quotient":
        hc = spectral.hull_cohomology(spec, spectral.HULL_ROTATION_QUOTIENT)
    else:
        hc = spectral.hull_cohomology(spec, spectral.HULL_TRANSLATION)
    if args.json:
        doc = {
            "spec": spec.name,
            "hull": args.hull,
            "cech": [_render(g) for g in hc.groups],
            "flags": [list(f) for f in hc.extension_flags],
            "notes": list(hc.notes),
        }
        return CommandResult(0, json.dumps(doc, indent=2) + "\n")
    lines = ["H^%d = %s" % (i, _render(g)) for i, g in enumerate(hc.groups)]
    for i, flags in enumerate(hc.extension_flags):
        for f in flags:
            lines.append("flag H^%d: %s" % (i, f))
    lines.extend("note: " + n for n in hc.notes)
    return CommandResult(0, "\n".join(lines) + "\n")


def _cmd_spectral(args):
    spec = _load_target(args)
    page2 = spectral.e2_page(spec)
    sigma, order = spectral.d2_image(spec)
    pageinf = spectral.einf_page(spec)
    hc = spectral.rigid_hull_cohomology(spec)
    order_str = "infinite" if order is None else str(order)
    if args.json:
        doc = {
            "spec": spec.name,
            "e2": {"q1": [_render(page2.entry(p, 1)) for p in range(3)],
                   "q0": [_render(page2.entry(p, 0)) for p in range(3)]},
            "d2": {"image": _element_json(sigma),
                   "in": _render(sigma.owner),
                   "order": order_str},
            "einf": {"q1": [_render(pageinf.entry(p, 1)) for p in range(3)],
                     "q0": [_render(pageinf.entry(p, 0)) for p in range(3)]},
            "cech": [_render(g) for g in hc.groups],
            "flags": [list(f) for f in hc.extension_flags],
            "notes": list(hc.notes),
        }
        return CommandResult(0, json.dumps(doc, indent=2) + "\n")
    lines = []
    lines.append("E2  q=1: " + "  ".join(_render(page2.entry(p, 1)) for p in range(3)))
    lines.append("E2  q=0: " + "  ".join(_render(page2.entry(p, 0)) for p in range(3)))
    lines.append("d2 image = %s in %s, order %s"
                 % (_element_text(sigma), _render(sigma.owner), order_str))
    lines.append("Einf q=1: " + "  ".join(_render(pageinf.entry(p, 1)) for p in range(3)))
    lines.append("Einf q=0: " + "  ".join(_render(pageinf.entry(p, 0)) for p in range(3)))
    lines.append("Cech: " + "  ".join("H^%d = %s" % (i, _render(g))
                                      for i, g in enumerate(hc.groups)))
    for i, flags in enumerate(hc.extension_flags):
        for f in flags:
            lines.append("flag H^%d: %s" % (i, f))
    lines.extend("note: " + n for n in hc.notes)
    return CommandResult(0, "\n".join(lines) + "\n")


def parse_group(text: str) -> FgAbelianGroup:
    """Inverse of the rendering: '0', 'Z', 'Z^r' and 'Z/d' joined by ' + '."""
    text = text.strip()
    if text == "0":
        return FgAbelianGroup.trivial()
    free = 0
    torsion = []
    for token in text.split("+"):
        token = token.strip()
        if token == "Z":
            free += 1
        elif token.startswith("Z^"):
            free += int(token[2:])
        elif token.startswith("Z/"):
            torsion.append(int(token[2:]))
        else:
            raise GroupError("cannot parse group token %r" % token)
    from .groups import from_divisors

    return from_divisors(torsion, extra_free=free)


def parse_matrix(text: str) -> IntMatrix:
    """Rows separated by ';', entries by ','."""
    rows = []
    for row in text.strip().split(";"):
        row = row.strip()
        entries = [e for e in row.replace(",", " ").split() if e]
        rows.append([int(e) for e in entries])
    return IntMatrix.from_rows(rows)


def _cmd_limit(args):
    group = parse_group(args.group)
    matrix = parse_matrix(args.matrix)
    endo = GroupHom(group, group, matrix)
    lim = direct_limit(group, endo)
    if args.json:
        doc = {
            "group": group.render(),
            "limit": lim.render(),
            "status": lim.status,
            "free_summands": [[m, r] for m, r in lim.free_summands],
            "torsion": list(lim.torsion.torsion),
            "notes": list(lim.notes),
        }
        if lim.status == "undetermined":
            doc["lattice_rank"] = lim.lattice_rank
            doc["p_divisible_ranks"] = [[p, r] for p, r in lim.p_divisible_ranks]
        return CommandResult(0, json.dumps(doc, indent=2) + "\n")
    lines = ["limit = %s (status %s)" % (lim.render(), lim.status)]
    lines.extend("note: " + n for n in lim.notes)
    if lim.status == "undetermined":
        lines.append("lattice rank %d, p-divisible ranks %s"
                     % (lim.lattice_rank,
                        ", ".join("%d:%d" % pr for pr in lim.p_divisible_ranks)))
    return CommandResult(0, "\n".join(lines) + "\n")


def _cmd_builtin(args):
    if args.action != "list":
        raise _UsageError("unknown builtin action %r" % args.action)
    return CommandResult(0, "\n".join(tilings.builtin_names()) + "\n")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="tilecohom",
        description="Exact homology, direct limits and rigid-hull spectral "
                    "sequences for combinatorial tiling specs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a spec")
    _add_target(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("homology", help="pattern-equivariant homology groups")
    _add_target(p)
    p.add_argument("--mode", choices=sorted(_MODE_FLAG), required=True)
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--limit", action="store_true",
                   help="substitution direct limits instead of approximant groups")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_homology)

    p = sub.add_parser("cohomology", help="Cech cohomology of a hull")
    _add_target(p)
    p.add_argument("--hull", choices=["translation", "rotation-quotient", "rigid"],
                   required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_cohomology)

    p = sub.add_parser("spectral", help="rigid-hull spectral sequence report")
    _add_target(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_spectral)

    p = sub.add_parser("limit", help="ad-hoc stationary direct limit")
    p.add_argument("--group", required=True, help="e.g. 'Z^2 + Z/5'")
    p.add_argument("--matrix", required=True,
                   help="endomorphism on canonical coordinates, rows ';'-separated")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_limit)

    p = sub.add_parser("builtin", help="corpus utilities")
    p.add_argument("action", choices=["list"])
    p.set_defaults(func=_cmd_builtin)

    return parser


def run_command(argv) -> CommandResult:
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as e:
        return CommandResult(2 if e.code not in (0, None) else 0, "")
    try:
        return args.func(args)
    except _UsageError as e:
        print("usage error: %s" % e, file=sys.stderr)
        return CommandResult(2, "")
    except _DOMAIN_ERRORS as e:
        print("error: %s" % e, file=sys.stderr)
        return CommandResult(1, "")


def main(argv=None) -> int:
    result = run_command(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(result.stdout)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
