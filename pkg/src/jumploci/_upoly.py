"""Dense univariate polynomials as coefficient lists, lowest degree first.

Coefficients are ints or Fractions. The zero polynomial is ``[]``.
"""
from fractions import Fraction
from math import gcd


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p):
    return len(p) - 1


def add(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def sub(p, q):
    return add(p, [-c for c in q])


def mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def divmod_field(p, q):
    """Quotient and remainder over Q. ``q`` must be nonzero."""
    q = trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in trim(p)]
    lead = Fraction(q[-1])
    dq = len(q) - 1
    quo = [Fraction(0)] * max(len(r) - dq, 0)
    while len(r) - 1 >= dq and r:
        shift = len(r) - 1 - dq
        c = r[-1] / lead
        quo[shift] = c
        for i, b in enumerate(q):
            r[shift + i] -= c * b
        r = trim(r)
    return trim(quo), r


def divmod_monic(p, q):
    """Quotient and remainder for monic integer ``q``; stays in Z[t] for integer ``p``."""
    assert q and q[-1] == 1
    r = list(p)
    dq = len(q) - 1
    quo = [0] * max(len(r) - dq, 0)
    for shift in range(len(r) - 1 - dq, -1, -1):
        c = r[shift + dq]
        if c == 0:
            continue
        quo[shift] = c
        for i, b in enumerate(q):
            r[shift + i] -= c * b
    return trim(quo), trim(r[:dq])


def reduce_mod(p, modulus):
    """Remainder of ``p`` modulo a monic polynomial; cheap path for the cyclotomic case."""
    dq = len(modulus) - 1
    if len(p) <= dq:
        return list(p)
    r = list(p)
    for shift in range(len(r) - 1 - dq, -1, -1):
        c = r[shift + dq]
        if c == 0:
            continue
        for i in range(dq + 1):
            r[shift + i] -= c * modulus[i]
    return r[:dq]


def monic(p):
    lead = Fraction(p[-1])
    return [Fraction(c) / lead for c in p]


def gcd_field(p, q):
    """Monic gcd over Q (``[]`` if both are zero)."""
    p, q = trim(p), trim(q)
    while q:
        _, r = divmod_field(p, q)
        p, q = q, r
    return monic(p) if p else []


def xgcd_field(p, q):
    """Return ``(g, s, t)`` with ``s*p + t*q == g``, g monic."""
    r0, r1 = [Fraction(c) for c in trim(p)], [Fraction(c) for c in trim(q)]
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        quo, rem = divmod_field(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, sub(s0, mul(quo, s1))
        t0, t1 = t1, sub(t0, mul(quo, t1))
    if not r0:
        return [], [], []
    lead = r0[-1]
    return ([c / lead for c in r0], [c / lead for c in s0], [c / lead for c in t0])


def content(p):
    g = 0
    for c in p:
        g = gcd(g, int(c))
    return g


def primitive_part(p):
    """Integer primitive polynomial with positive leading coefficient."""
    p = trim(p)
    if not p:
        return []
    den = 1
    for c in p:
        den = den * Fraction(c).denominator // gcd(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in p]
    g = content(ints)
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints]
