"""Command-line interface: ``centlab <command> ...``."""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import lab
from .centralizers import NotApplicable, cent_set, is_cpo
from .config import Settings
from .errors import CentlabError
from .isoclinism import Inconclusive, IsoclinismWitness, Refuted, find_isoclinism
from .spec import realize
from .structure import (
    center,
    derived_subgroup,
    frobenius_decomposition,
    is_nilpotent,
    is_solvable,
    prime_divisors,
)


def _add_common(p, suppress):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    defaults = Settings()
    p.add_argument("--table-cap", type=int, default=d(defaults.table_cap),
                   help="largest group order built as a Cayley table")
    p.add_argument("--lattice-cap", type=int, default=d(defaults.lattice_cap),
                   help="largest order for full subgroup enumeration")
    p.add_argument("--iso-cap", type=int, default=d(defaults.iso_cap),
                   help="largest central quotient / derived subgroup for isomorphism search")
    p.add_argument("--seed", type=int, default=d(defaults.seed),
                   help="seed for sampled associativity checks")
    p.add_argument("--exhaustive-assoc", action="store_true", default=d(False),
                   help="check associativity on every triple")
    p.add_argument("--strict-cpo", action="store_true", default=d(False),
                   help="quantify the Cpo condition over non-central elements")
    p.add_argument("--json", action="store_true", default=d(False), help="emit JSON")
    p.add_argument("-v", "--verbose", action="store_true", default=d(False))


def build_parser():
    parser = argparse.ArgumentParser(prog="centlab", description=__doc__)
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, help):
        p = sub.add_parser(name, help=help)
        _add_common(p, suppress=True)
        return p

    p = cmd("info", "summary invariants of a group")
    p.add_argument("spec")
    p = cmd("cent", "all centralizers of a group, as JSON")
    p.add_argument("spec")
    p = cmd("isoclinic", "decide isoclinism of two groups")
    p.add_argument("spec1")
    p.add_argument("spec2")
    for name, help in [("cpo-classify", "list the Cpo-groups of the catalog"),
                       ("search", "counterexample reports as JSON lines"),
                       ("verify", "run the theorem sweeps over the catalog")]:
        p = cmd(name, help)
        p.add_argument("--max-order", type=int, default=120)
        p.add_argument("--dedup", action="store_true", help="drop isomorphic catalog duplicates")
    p = cmd("family", "the two Cpo-groups Z_p:Z_q, Z_p:Z_r with p - 1 = q r")
    p.add_argument("p", type=int)
    p.add_argument("--relaxed-family", action="store_true",
                   help="every pair of distinct primes dividing p - 1")
    return parser


def _settings(args):
    return Settings(
        table_cap=args.table_cap,
        lattice_cap=args.lattice_cap,
        iso_cap=args.iso_cap,
        seed=args.seed,
        exhaustive_assoc=args.exhaustive_assoc,
        strict_cpo=args.strict_cpo,
    )


def _group(spec, settings):
    return realize(spec, table_cap=settings.table_cap, seed=settings.seed,
                   exhaustive_assoc=settings.exhaustive_assoc)


def _emit(obj):
    print(json.dumps(obj, sort_keys=False))


def cmd_info(args, settings):
    g = _group(args.spec, settings)
    stats = cent_set(g)
    cpo = is_cpo(g, strict=settings.strict_cpo)
    info = {
        "schema": 1,
        "label": g.label,
        "order": g.order,
        "center_order": center(g).order,
        "derived_order": derived_subgroup(g).order,
        "cent_count": stats.cent_count,
        "prime_divisors": prime_divisors(g),
        "cpo": cpo.to_json(),
        "nilpotent": is_nilpotent(g),
        "solvable": is_solvable(g),
    }
    if g.order <= settings.lattice_cap:
        fd = frobenius_decomposition(g, lattice_cap=settings.lattice_cap)
        info["frobenius"] = None if fd is None else {
            "kernel": list(fd.kernel.elements), "complement": list(fd.complement.elements)}
    else:
        info["frobenius"] = "skipped: order over lattice cap"
    if args.json:
        _emit(info)
        return 0
    print(f"group:          {g.label}")
    print(f"order:          {g.order}")
    print(f"|Z(G)|:         {info['center_order']}")
    print(f"|G'|:           {info['derived_order']}")
    print(f"|Cent(G)|:      {stats.cent_count}")
    print(f"prime divisors: {' '.join(map(str, info['prime_divisors'])) or '-'}")
    print(f"cpo:            {cpo.describe()}")
    print(f"nilpotent:      {info['nilpotent']}")
    print(f"solvable:       {info['solvable']}")
    fr = info["frobenius"]
    if isinstance(fr, dict):
        print(f"frobenius:      kernel order {len(fr['kernel'])}, complement order {len(fr['complement'])}")
    else:
        print(f"frobenius:      {'none' if fr is None else fr}")
    return 0


def cmd_cent(args, settings):
    g = _group(args.spec, settings)
    out = cent_set(g).to_json()
    out["label"] = g.label
    out["order"] = g.order
    _emit(out)
    return 0


def cmd_isoclinic(args, settings):
    g = _group(args.spec1, settings)
    h = _group(args.spec2, settings)
    verdict = find_isoclinism(g, h, iso_cap=settings.iso_cap)
    if isinstance(verdict, IsoclinismWitness):
        out = {"schema": 1, "left": g.label, "right": h.label, "verdict": "isoclinic",
               "witness": verdict.to_json()}
    else:
        kind = "refuted" if isinstance(verdict, Refuted) else "inconclusive"
        out = {"schema": 1, "left": g.label, "right": h.label, "verdict": kind, "reason": verdict.reason}
    if args.json:
        _emit(out)
    else:
        print(f"{g.label} vs {h.label}: {out['verdict'].capitalize()}"
              + (f" ({out['reason']})" if "reason" in out else ""))
        if "witness" in out:
            print(json.dumps(out["witness"]))
    return 0 if not isinstance(verdict, Inconclusive) else 3


def _catalog(args, settings):
    return lab.build_catalog(args.max_order, settings, dedup=args.dedup)


def cmd_cpo_classify(args, settings):
    for e in _catalog(args, settings):
        if not e.cpo.is_cpo:
            continue
        if args.json:
            _emit({"schema": 1, **e.summary()})
        else:
            print(f"{e.label:12s} order {e.group.order:4d}  |Cent| {e.stats.cent_count:4d}  {e.cpo.describe()}")
    return 0


def cmd_search(args, settings):
    result = lab.search_counterexamples(_catalog(args, settings), settings)
    for report in result.reports:
        _emit(report.to_json())
    for left, right, reason in result.inconclusive:
        print(f"inconclusive: {left} vs {right} ({reason})", file=sys.stderr)
    return 0


def cmd_family(args, settings):
    if args.relaxed_family:
        pairs = lab.relaxed_cpo_pair_families(args.p, settings)
    else:
        res = lab.cpo_pair_family(args.p, settings)
        if isinstance(res, NotApplicable):
            if args.json:
                _emit({"schema": 1, "p": args.p, "applicable": False, "reason": res.reason})
            else:
                print(f"not applicable: {res.reason}")
            return 0
        pairs = [res]
    for left, right in pairs:
        if args.json:
            _emit({"schema": 1, "p": args.p, "applicable": True,
                   "left": left.summary(), "right": right.summary()})
        else:
            print(f"{left.label} (order {left.group.order}) and {right.label} (order {right.group.order}): "
                  f"|Cent| = {left.stats.cent_count} = {right.stats.cent_count}, "
                  f"|G'| = {left.stats.derived_order} = {right.stats.derived_order}")
    if not pairs and not args.json:
        print("no pairs")
    return 0


def cmd_verify(args, settings):
    results = lab.verify_theorems(_catalog(args, settings), settings)
    for r in results:
        if args.json:
            _emit(r.to_json())
        else:
            status = "PASS" if r.passed else "FAIL"
            print(f"{status} {r.name}: {r.description} [{r.checked} checked, {r.skipped} skipped]")
            for f in r.failures:
                print(f"     {f}")
    return 0 if all(r.passed for r in results) else 1


COMMANDS = {
    "info": cmd_info,
    "cent": cmd_cent,
    "isoclinic": cmd_isoclinic,
    "cpo-classify": cmd_cpo_classify,
    "search": cmd_search,
    "family": cmd_family,
    "verify": cmd_verify,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args, _settings(args))
    except CentlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
