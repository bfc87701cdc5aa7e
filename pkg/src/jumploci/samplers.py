"""Exact characters on and off Z = V(f_1, ..., f_r) for verification runs.

On-locus points come from two cheap sources only: rational and cyclotomic
roots of univariate polynomials, and solving for one coordinate when a
polynomial is linear in it. No general solver is attempted.
"""
import random
from fractions import Fraction

from .errors import DegenerateInput
from .laurent import LaurentPoly, to_univariate, univariate_gcd
from .obstruction import cyclotomic_certificate
from .scalars import Character, Scalar, divisors

OFF_LOCUS_VALUES = (2, -2, 3, -3, 5, -5, Fraction(1, 2), Fraction(1, 3))
FILL_VALUES = (2, -3, 5, Fraction(1, 2), -1, Scalar.zeta(3), Scalar.zeta(4))


def rational_roots(coeffs):
    """Rational roots of an integer polynomial with nonzero constant term."""
    a0, an = coeffs[0], coeffs[-1]
    if a0 == 0:
        raise ValueError("strip the factor t before searching for roots")
    roots = set()
    for p in divisors(abs(a0)):
        for q in divisors(abs(an)):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                value = Fraction(0)
                for c in reversed(coeffs):
                    value = value * cand + c
                if value == 0:
                    roots.add(cand)
    return sorted(roots)


def univariate_roots(f):
    """Rational and root-of-unity zeros in C* of a one-variable Laurent polynomial."""
    _, dense = to_univariate(f)
    if len(dense) <= 1:
        return []
    out = [Scalar.rational(q) for q in rational_roots(dense)]
    cert = cyclotomic_certificate(f)
    for d, _ in cert.factors:
        if d <= 2:
            continue  # +-1 are already rational roots
        out.extend(Scalar.zeta(d, j) for j in range(1, d) if _coprime(j, d))
    return out


def _coprime(a, b):
    while b:
        a, b = b, a % b
    return a == 1


def _only_variable(f):
    """Index j if f involves x_{j+1} alone, else None."""
    used = {j for e in f.support() for j, a in enumerate(e) if a}
    return used.pop() if len(used) == 1 else None


def _restrict(f, j):
    """f as a univariate polynomial in x_{j+1}, assuming no other variable appears."""
    return LaurentPoly(1, {(e[j],): c for e, c in f.items()})


def _linear_split(f, j):
    """(A, B, c) with f = x_j^c (A x_j + B) when f has degree one in x_j, else None."""
    low, high = f.exponent_range(j)
    if high != low + 1:
        return None
    a_terms, b_terms = {}, {}
    for e, c in f.items():
        e2 = list(e)
        e2[j] = 0
        (a_terms if e[j] == high else b_terms)[tuple(e2)] = c
    return LaurentPoly(f.n, a_terms), LaurentPoly(f.n, b_terms), low


def _solve_for(f, j, values):
    split = _linear_split(f, j)
    if split is None:
        return None
    A, B, _ = split
    rho = Character(values[:j] + [Scalar.rational(1)] + values[j + 1:])
    a, b = A.evaluate(rho), B.evaluate(rho)
    if a.is_zero() or b.is_zero():
        return None
    return -b / a


def on_locus_points(n, polys, rng, attempts=8):
    """Exact characters at which every f_i vanishes (possibly none)."""
    nonzero = [f for f in polys if not f.is_zero()]
    if not nonzero:
        return []
    if n == 1:
        try:
            g = univariate_gcd(nonzero)
        except DegenerateInput:
            return []
        return [Character([z]) for z in univariate_roots(g)]
    found = []
    for _ in range(attempts):
        values = [Scalar.coerce(rng.choice(FILL_VALUES)) for _ in range(n)]
        locked = set()
        for f in nonzero:
            if f.evaluate(Character(values)).is_zero():
                continue
            j = _only_variable(f)
            if j is not None and j not in locked:
                roots = univariate_roots(_restrict(f, j))
                if roots:
                    values[j] = rng.choice(roots)
                    locked.add(j)
                continue
            for j in rng.sample(range(n), n):
                if j in locked:
                    continue
                z = _solve_for(f, j, values)
                if z is not None:
                    values[j] = z
                    locked.add(j)
                    break
        rho = Character(values)
        if all(f.evaluate(rho).is_zero() for f in polys):
            found.append(rho)
    return found


def random_characters(n, count, rng, values=OFF_LOCUS_VALUES, exclude_trivial=True):
    out = []
    while len(out) < count:
        rho = Character([rng.choice(values) for _ in range(n)])
        if exclude_trivial and rho.is_trivial():
            continue
        out.append(rho)
    return out


def off_locus_points(n, polys, count, rng, max_tries=1000):
    """Random exact characters where some f_i does not vanish."""
    out = []
    for _ in range(max_tries):
        if len(out) == count:
            break
        rho = random_characters(n, 1, rng)[0]
        if not all(f.evaluate(rho).is_zero() for f in polys):
            out.append(rho)
    return out


def torsion_probes(n):
    """Roots of unity near the trivial character: one coordinate at -1, zeta_3 or i."""
    out = []
    for j in range(n):
        for z in (Scalar.rational(-1), Scalar.zeta(3), Scalar.zeta(4)):
            coords = [Scalar.rational(1)] * n
            coords[j] = z
            out.append(Character(coords))
    return out


def auto_characters(n, polys, seed=0, n_random=10):
    """Trivial character, on-locus points, torsion probes and random off-locus points."""
    rng = random.Random(seed)
    chars = [Character.trivial(n)]
    chars += on_locus_points(n, polys, rng)
    chars += torsion_probes(n)
    chars += off_locus_points(n, polys, n_random, rng)
    return dedupe(chars)


def dedupe(chars):
    seen = {}
    for rho in chars:
        seen.setdefault(rho.sort_key(), rho)
    return [seen[k] for k in sorted(seen)]
