"""Census of cyclotomic certificates over small integer polynomials.

Enumerates every nonzero polynomial of degree <= D with coefficients in
[-C, C], records whether its zero set in C* is torsion, and cross-checks
against numerical roots.

    python scripts/obstruction_census.py [--degree D] [--coeff C]
"""
import argparse
import itertools
import sys
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from jumploci import LaurentPoly
from jumploci.obstruction import cyclotomic_certificate

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))
from oracles import is_torsion_numeric  # noqa: E402


@dataclass
class CensusConfig:
    degree: int = 4
    coeff: int = 2
    tol: float = 1e-6


def census(cfg):
    total, torsion, disagree = 0, 0, []
    orders = Counter()
    for coeffs in itertools.product(range(-cfg.coeff, cfg.coeff + 1), repeat=cfg.degree + 1):
        if not any(coeffs):
            continue
        f = LaurentPoly(1, {(j,): c for j, c in enumerate(coeffs) if c})
        cert = cyclotomic_certificate(f)
        total += 1
        if cert.is_torsion:
            torsion += 1
            orders.update(d for d, _ in cert.factors)
        if cert.is_torsion != is_torsion_numeric(coeffs, cfg.tol):
            disagree.append(coeffs)
    return total, torsion, orders, disagree


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degree", type=int, default=4)
    ap.add_argument("--coeff", type=int, default=2)
    args = ap.parse_args()
    total, torsion, orders, disagree = census(CensusConfig(args.degree, args.coeff))
    print(f"polynomials: {total}  torsion zero set: {torsion}  disagreements with numeric roots: {len(disagree)}")
    print("cyclotomic factors seen among torsion cases (d: count):")
    print("  " + "  ".join(f"{d}: {c}" for d, c in sorted(orders.items())))
    for coeffs in disagree[:10]:
        print("  disagreement:", coeffs)
    raise SystemExit(1 if disagree else 0)


if __name__ == "__main__":
    main()
