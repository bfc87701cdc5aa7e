"""Verify the space and group batteries and print a membership table.

    python scripts/run_battery.py [--seed S] [--extra N] [--jobs J] [--json PATH]
"""
import argparse
import json
import random
import time
from dataclasses import dataclass, field

from jumploci import LaurentPoly, SpaceSpec
from jumploci.loci import verify_group, verify_main
from jumploci.samplers import auto_characters, dedupe, off_locus_points


@dataclass
class BatteryConfig:
    seed: int = 0
    extra: int = 20  # random off-locus points on top of --auto
    jobs: int = 1
    spaces: list = field(
        default_factory=lambda: [
            (1, 2, ["x1 - 2"]),
            (1, 3, ["x1 - 2"]),
            (2, 2, ["x1 - 1"]),
            (2, 2, ["x1 - 2"]),
            (2, 3, ["x1*x2 - 2"]),
            (2, 2, ["x1 - 1", "x2 - 1"]),
            (3, 2, ["x1 - 1"]),
        ]
    )
    groups: list = field(
        default_factory=lambda: [(2, ["x1 - 2"]), (2, ["x1 - 1", "x2 - 1"]), (3, ["x1 - 2"]), (2, ["x1*x2 - 1"])]
    )


def run(cfg):
    rows = []
    rng = random.Random(cfg.seed)
    for n, k, raw in cfg.spaces:
        spec = SpaceSpec(n, k, tuple(LaurentPoly.parse(f, n) for f in raw))
        chars = dedupe(auto_characters(n, spec.polys, seed=cfg.seed) + off_locus_points(n, spec.polys, cfg.extra, rng))
        t0 = time.perf_counter()
        rep = verify_main(spec, chars, jobs=cfg.jobs)
        on = sum(r.on_locus for r in rep.records)
        counts = [len(rep.members(i)) for i in range(k + 1)]
        rows.append({"kind": "space", "n": n, "k": k, "polys": raw, "chars": len(chars), "on_locus": on,
                     "members": counts, "verdict": rep.verdict, "seconds": round(time.perf_counter() - t0, 3)})
    for n, raw in cfg.groups:
        polys = [LaurentPoly.parse(f, n) for f in raw]
        chars = auto_characters(n, polys, seed=cfg.seed)
        t0 = time.perf_counter()
        rep = verify_group(n, polys, chars, jobs=cfg.jobs)
        rows.append({"kind": "group", "n": n, "k": 1, "polys": raw, "chars": len(chars),
                     "on_locus": sum(r.on_locus for r in rep.records), "members": [len(rep.members(0)), len(rep.members(1))],
                     "verdict": rep.verdict, "seconds": round(time.perf_counter() - t0, 3)})
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--extra", type=int, default=20)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--json", metavar="PATH")
    args = ap.parse_args()
    rows = run(BatteryConfig(seed=args.seed, extra=args.extra, jobs=args.jobs))
    print(f"{'kind':6} {'n':>2} {'k':>2}  {'polys':24} {'chars':>5} {'on Z':>5}  {'members by degree':20} verdict")
    for r in rows:
        polys = ", ".join(r["polys"])
        print(f"{r['kind']:6} {r['n']:>2} {r['k']:>2}  {polys:24} {r['chars']:>5} {r['on_locus']:>5}  "
              f"{str(r['members']):20} {r['verdict']} ({r['seconds']}s)")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2, sort_keys=True)
    raise SystemExit(0 if all(r["verdict"] == "pass" for r in rows) else 1)


if __name__ == "__main__":
    main()
