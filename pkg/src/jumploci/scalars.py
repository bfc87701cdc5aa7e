"""Exact arithmetic in Q and in cyclotomic fields Q(zeta_m), and characters of (C*)^n.

An element of Q(zeta_m) is stored in the power basis of Q[t]/Phi_m(t), so it is
a tuple of ``phi(m)`` Fractions. Conductor 1 is plain Q. A float-complex variant
exists for cross-checks; any arithmetic touching it produces a float result.

>>> z = Scalar.zeta(4)
>>> z * z
Scalar(-1 in Q(zeta_4))
>>> root_of_unity_order(Scalar.zeta(6))
6
"""
import cmath
import json
from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import _upoly
from .errors import UnsupportedRepresentation


def _lcm(a, b):
    return a // gcd(a, b) * b


@lru_cache(maxsize=None)
def divisors(d):
    small = [k for k in range(1, int(d ** 0.5) + 1) if d % k == 0]
    return tuple(sorted(set(small + [d // k for k in small])))


@lru_cache(maxsize=None)
def euler_phi(d):
    result, m, p = d, d, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _mobius(d):
    result, p = 1, 2
    while p * p <= d:
        if d % p == 0:
            d //= p
            if d % p == 0:
                return 0
            result = -result
        p += 1
    if d > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def _cyclotomic(d):
    # t^d - 1 = prod_{e | d} Phi_e
    num = [-1] + [0] * (d - 1) + [1]
    for e in divisors(d)[:-1]:
        num, rem = _upoly.divmod_monic(num, list(_cyclotomic(e)))
        assert not rem
    return tuple(num)


def cyclotomic_poly(d):
    """Integer coefficients of Phi_d, lowest degree first."""
    if not isinstance(d, int) or d < 1:
        raise ValueError(f"cyclotomic index must be a positive integer, got {d!r}")
    return list(_cyclotomic(d))


@lru_cache(maxsize=None)
def _ramanujan_sum(m, j):
    g = gcd(j, m)
    return _mobius(m // g) * euler_phi(m) // euler_phi(m // g)


def _embed(coeffs, m, target):
    """Re-express an element of Q(zeta_m) in Q(zeta_target) via t -> t^(target/m)."""
    if m == target:
        return coeffs
    step = target // m
    poly = [Fraction(0)] * ((len(coeffs) - 1) * step + 1)
    for j, c in enumerate(coeffs):
        poly[j * step] = c
    return _pad(_upoly.reduce_mod(poly, _cyclotomic(target)), euler_phi(target))


def _pad(poly, size):
    poly = list(poly)
    return tuple(poly + [Fraction(0)] * (size - len(poly)))


class Scalar:
    """Immutable field element: rational, cyclotomic, or float-complex."""

    __slots__ = ("conductor", "coeffs", "value")

    def __init__(self, x=0):
        other = Scalar.coerce(x)
        object.__setattr__(self, "conductor", other.conductor)
        object.__setattr__(self, "coeffs", other.coeffs)
        object.__setattr__(self, "value", other.value)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def __reduce__(self):
        return Scalar._make, (self.conductor, self.coeffs, self.value)

    @classmethod
    def _make(cls, conductor, coeffs, value=None):
        obj = object.__new__(cls)
        object.__setattr__(obj, "conductor", conductor)
        object.__setattr__(obj, "coeffs", coeffs)
        object.__setattr__(obj, "value", value)
        return obj

    # -- constructors --------------------------------------------------

    @classmethod
    def rational(cls, q):
        if isinstance(q, str):
            q = q.strip()
        return cls._make(1, (Fraction(q),))

    @classmethod
    def cyclotomic(cls, m, coeffs):
        """Element sum_j coeffs[j] * zeta_m^j; coeffs may have any length."""
        if m < 1:
            raise ValueError(f"conductor must be >= 1, got {m}")
        poly = [Fraction(c) for c in coeffs]
        if len(poly) > euler_phi(m):
            poly = _upoly.reduce_mod(poly, _cyclotomic(m))
        return cls._make(m, _pad(poly, euler_phi(m)))

    @classmethod
    def zeta(cls, m, power=1):
        """The root of unity zeta_m^power, zeta_m = exp(2 pi i / m)."""
        power %= m
        return cls.cyclotomic(m, [0] * power + [1])

    @classmethod
    def from_complex(cls, z):
        return cls._make(None, None, complex(z))

    @classmethod
    def coerce(cls, x):
        if isinstance(x, Scalar):
            return x
        if isinstance(x, bool):
            raise TypeError("refusing to coerce bool to Scalar")
        if isinstance(x, (int, Fraction, str)):
            return cls.rational(x)
        if isinstance(x, (float, complex)):
            return cls.from_complex(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Scalar")

    # -- predicates ----------------------------------------------------

    @property
    def kind(self):
        if self.conductor is None:
            return "float"
        return "rational" if self.conductor == 1 else "cyclotomic"

    @property
    def is_exact(self):
        return self.conductor is not None

    def is_zero(self):
        if self.conductor is None:
            return self.value == 0
        return not any(self.coeffs)

    def is_rational(self):
        return self.conductor is not None and not any(self.coeffs[1:])

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def to_complex(self):
        if self.conductor is None:
            return self.value
        m = self.conductor
        return sum(
            (complex(c) * cmath.exp(2j * cmath.pi * j / m) for j, c in enumerate(self.coeffs) if c),
            0j,
        )

    # -- arithmetic ----------------------------------------------------

    def _common(self, other):
        m = _lcm(self.conductor, other.conductor)
        return m, _embed(self.coeffs, self.conductor, m), _embed(other.coeffs, other.conductor, m)

    def __add__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if self.conductor is None or other.conductor is None:
            return Scalar.from_complex(self.to_complex() + other.to_complex())
        if self.conductor == other.conductor == 1:
            return Scalar._make(1, (self.coeffs[0] + other.coeffs[0],))
        m, a, b = self._common(other)
        return Scalar._make(m, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        if self.conductor is None:
            return Scalar.from_complex(-self.value)
        return Scalar._make(self.conductor, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Scalar.coerce(other) - self

    def __mul__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if self.conductor is None or other.conductor is None:
            return Scalar.from_complex(self.to_complex() * other.to_complex())
        if other.conductor == 1 or self.conductor == 1:
            if self.conductor == 1:
                self, other = other, self
            q = other.coeffs[0]
            return Scalar._make(self.conductor, tuple(c * q for c in self.coeffs))
        m, a, b = self._common(other)
        prod = _upoly.reduce_mod(_upoly.mul(a, b), _cyclotomic(m))
        return Scalar._make(m, _pad(prod, euler_phi(m)))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        if self.conductor is None:
            return Scalar.from_complex(1 / self.value)
        if self.conductor == 1:
            return Scalar._make(1, (1 / self.coeffs[0],))
        m = self.conductor
        g, s, _ = _upoly.xgcd_field(_upoly.trim(self.coeffs), list(_cyclotomic(m)))
        assert g == [1], "Phi_m is irreducible, so gcd must be 1"
        return Scalar._make(m, _pad(_upoly.reduce_mod(s, _cyclotomic(m)), euler_phi(m)))

    def __truediv__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        base = self
        if k < 0:
            base, k = self.inverse(), -k
        if base.conductor is None:
            return Scalar.from_complex(base.value ** k)
        result = Scalar._make(base.conductor, _pad([Fraction(1)], len(base.coeffs)))
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- comparison ----------------------------------------------------

    def __eq__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if self.conductor is None or other.conductor is None:
            return self.to_complex() == other.to_complex()
        if self.conductor == other.conductor:
            return self.coeffs == other.coeffs
        _, a, b = self._common(other)
        return a == b

    def normalized_trace(self):
        """Tr(a)/[field:Q]; independent of which cyclotomic field holds ``a``."""
        m = self.conductor
        total = sum((c * _ramanujan_sum(m, j) for j, c in enumerate(self.coeffs) if c), Fraction(0))
        return total / euler_phi(m)

    def __hash__(self):
        if self.conductor is None:
            return hash(self.value)
        if self.conductor == 1:
            return hash(self.coeffs[0])
        return hash(self.normalized_trace())

    def __bool__(self):
        return not self.is_zero()

    # -- display -------------------------------------------------------

    def __str__(self):
        if self.conductor is None:
            return str(self.value)
        if self.is_rational():
            return str(self.coeffs[0])
        parts = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if j == 0 else (f"zeta_{self.conductor}" + (f"^{j}" if j > 1 else ""))
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        if self.kind == "cyclotomic":
            return f"Scalar({self} in Q(zeta_{self.conductor}))"
        return f"Scalar({self})"


def unify_field(scalars):
    """Common conductor (lcm of members) and the members re-embedded into it."""
    scalars = [Scalar.coerce(s) for s in scalars]
    m = 1
    for s in scalars:
        if s.conductor is None:
            raise UnsupportedRepresentation("float scalars bypass field unification")
        m = _lcm(m, s.conductor)
    return m, [Scalar._make(m, _embed(s.coeffs, s.conductor, m)) for s in scalars]


def root_of_unity_order(s):
    """Least N with s^N = 1, or None if ``s`` is not a root of unity."""
    s = Scalar.coerce(s)
    if s.conductor is None:
        raise UnsupportedRepresentation("root_of_unity_order needs an exact scalar")
    if s.is_zero():
        raise ValueError("zero is not a unit")
    # every root of unity in Q(zeta_m) has order dividing lcm(2, m)
    for d in divisors(_lcm(2, s.conductor)):
        if s ** d == 1:
            return d
    return None


class Character:
    """A point of the torus (C*)^n with coordinates in one common field."""

    __slots__ = ("coords", "conductor")

    def __init__(self, coords):
        coords = [Scalar.coerce(c) for c in coords]
        if not coords:
            raise ValueError("a character needs at least one coordinate")
        if any(c.conductor is None for c in coords):
            conductor = None
            coords = [Scalar.from_complex(c.to_complex()) for c in coords]
        else:
            conductor, coords = unify_field(coords)
        for c in coords:
            if c.is_zero():
                raise ValueError("character coordinates must be nonzero")
        object.__setattr__(self, "coords", tuple(coords))
        object.__setattr__(self, "conductor", conductor)

    def __setattr__(self, name, value):
        raise AttributeError("Character is immutable")

    def __reduce__(self):
        return Character, (list(self.coords),)

    @classmethod
    def trivial(cls, n):
        return cls([1] * n)

    @property
    def n(self):
        return len(self.coords)

    @property
    def is_exact(self):
        return self.conductor is not None

    def is_trivial(self):
        return all(c == 1 for c in self.coords)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, j):
        return self.coords[j]

    def __mul__(self, other):
        if self.n != other.n:
            raise ValueError("characters live on tori of different rank")
        return Character([a * b for a, b in zip(self.coords, other.coords)])

    def __pow__(self, k):
        return Character([c ** k for c in self.coords])

    def monomial(self, exponents):
        """rho^J = prod_j rho_j^{J_j}."""
        out = Scalar.rational(1)
        for c, e in zip(self.coords, exponents):
            if e:
                out = out * c ** e
        return out

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "Character(" + ", ".join(str(c) for c in self.coords) + ")"

    def to_json(self):
        if self.conductor is None:
            return {"float": True, "coords": [[c.value.real, c.value.imag] for c in self.coords]}
        return {
            "conductor": self.conductor,
            "coords": [[str(q) for q in c.coeffs] for c in self.coords],
        }

    def sort_key(self):
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, obj):
        """Parse the JSON form; a bare list of rationals is accepted as shorthand."""
        if isinstance(obj, list):
            return cls([Scalar.rational(q) for q in obj])
        if not isinstance(obj, dict) or "coords" not in obj:
            raise ValueError(f"malformed character: {obj!r}")
        if obj.get("float"):
            return cls([Scalar.from_complex(complex(re, im)) for re, im in obj["coords"]])
        m = int(obj.get("conductor", 1))
        coords = []
        for c in obj["coords"]:
            if isinstance(c, (str, int)):
                c = [c]
            if len(c) != euler_phi(m):
                raise ValueError(f"coordinate {c!r} must have phi({m}) = {euler_phi(m)} entries")
            coords.append(Scalar.cyclotomic(m, [Fraction(q) for q in c]))
        return cls(coords)
