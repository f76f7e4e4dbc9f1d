"""Command-line interface.

Paths are written as tableaux separated by '.', ',' or whitespace, e.g.
``1111.11.2.1122.1222.1.2.22``.  Exit status: 0 on success, 1 on a usage or
domain error, 2 when ``check`` finds a violation.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import bbs, checks
from .crystal import RowElement, path_str
from .kkr import RiggedConfig, phi_classical, phi_inverse
from .led import (extract_groups_bottomup, extract_groups_topdown, local_energy_table,
                  phi_crystal, render_ascii, table_dict)

SEPARATORS = ".,"


class PathSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def parse_path(text: str) -> list[RowElement]:
    """Split ``text`` into tableaux; raises PathSyntaxError with the offending position."""
    factors: list[RowElement] = []
    start = None
    for pos, ch in enumerate(text + " "):
        if ch in "12":
            if start is None:
                start = pos
            elif ch == "1" and text[pos - 1] == "2":
                raise PathSyntaxError(f"decreasing factor {text[start:pos + 1]!r}", pos)
            continue
        if ch in SEPARATORS or ch.isspace():
            if start is not None:
                factors.append(RowElement.parse(text[start:pos]))
                start = None
            continue
        raise PathSyntaxError(f"illegal character {ch!r}", pos)
    if not factors:
        raise PathSyntaxError("empty path", 0)
    return factors


def render_path(path) -> str:
    return path_str(path)


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.replace(",", " ").split()]


def _rows(text: str) -> list[tuple[int, int]]:
    rows = []
    for item in text.replace(",", " ").split():
        try:
            m, r = item.split(":")
            rows.append((int(m), int(r)))
        except ValueError:
            raise ValueError(f"row {item!r} is not of the form LENGTH:RIGGING") from None
    return rows


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def cmd_kkr(args) -> int:
    path = parse_path(args.path)
    rc = phi_classical(path) if args.method == "classical" else phi_crystal(path)
    if args.json:
        print(_dump(rc.to_dict()))
        return 0
    print("lambda:", " ".join(map(str, rc.quantum_space)))
    print("rows:  ", " ".join(f"({m},{r})" for m, r in rc.rows) or "-")
    print("vacancy:", " ".join(f"p{m}={p}" for m, p in rc.vacancy_table().items()) or "-")
    return 0


def cmd_led(args) -> int:
    path = parse_path(args.path)
    t = local_energy_table(path)
    groups = extract_groups_bottomup(t) if args.bottomup else extract_groups_topdown(t)
    if args.json:
        print(_dump(table_dict(t, groups)))
    else:
        print(render_ascii(t, groups))
    return 0


def cmd_evolve(args) -> int:
    path = parse_path(args.path)
    print(render_path(path))
    for _ in range(args.steps):
        if args.periodic:
            path = bbs.evolve_periodic(path, args.l)
        else:
            path = bbs.evolve(path, args.l).new_path
        print(render_path(path))
    return 0


def cmd_energy(args) -> int:
    path = parse_path(args.path)
    l_max = args.lmax or sum(b.twos for b in path) + 1
    for l, e in enumerate(bbs.energies(path, l_max), 1):
        print(f"E_{l} = {e}")
    return 0


def cmd_rc_to_path(args) -> int:
    caps = _ints(args.lam)
    rc = RiggedConfig(caps, _rows(args.rows or ""))
    print(render_path(phi_inverse(rc, caps)))
    return 0


def cmd_check(args) -> int:
    exhaustive = args.exhaustive
    n_random = args.random if args.random is not None else (0 if exhaustive else 100)
    if exhaustive:
        max_f, max_c = args.max_factors or 4, args.max_capacity or 3
    else:
        max_f, max_c = args.max_factors or 40, args.max_capacity or 6
    print(f"seed {args.seed}; exhaustive={exhaustive} random={n_random} "
          f"max-factors={max_f} max-capacity={max_c}")
    t0 = time.perf_counter()
    tally = checks.full_suite(exhaustive, n_random, args.seed, max_f, max_c)
    for name in tally.names():
        ok, bad = tally.passed[name], tally.failed[name]
        line = f"{'FAIL' if bad else 'ok  '} {name:<20} {ok}/{ok + bad}"
        if bad:
            line += f"  e.g. {checks.describe(tally.examples[name])}"
        print(line)
    print(f"{tally.failures} failures ({time.perf_counter() - t0:.1f}s)")
    return 2 if tally.failures else 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rcled", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("kkr", help="rigged configuration of a path")
    p.add_argument("path")
    p.add_argument("--method", choices=("classical", "crystal"), default="classical")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_kkr)

    p = sub.add_parser("led", help="local energy distribution with soliton groups")
    p.add_argument("path")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--ascii", action="store_true", help="(default)")
    p.add_argument("--bottomup", action="store_true", help="extract groups from the bottom")
    p.set_defaults(func=cmd_led)

    p = sub.add_parser("evolve", help="box-ball time evolution T_l")
    p.add_argument("path")
    p.add_argument("--l", type=int, required=True, dest="l")
    p.add_argument("--steps", type=int, default=1)
    p.add_argument("--periodic", action="store_true")
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("energy", help="conserved energies E_1..E_M")
    p.add_argument("path")
    p.add_argument("--lmax", type=int)
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("rc-to-path", help="inverse map: rigged configuration to path")
    p.add_argument("--lambda", dest="lam", required=True,
                   help="factor capacities in path order, e.g. 1,2")
    p.add_argument("--rows", default="", help="LENGTH:RIGGING list, e.g. 2:-2,1:0")
    p.set_defaults(func=cmd_rc_to_path)

    p = sub.add_parser("check", help="run the invariant suite")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--random", type=int, metavar="N")
    p.add_argument("--seed", type=int, default=checks.DEFAULT_SEED)
    p.add_argument("--max-factors", type=int)
    p.add_argument("--max-capacity", type=int)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
