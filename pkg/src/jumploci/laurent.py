"""Integer Laurent polynomials in n variables: the group ring Z[Z^n].

>>> x = LaurentPoly.var(0, 1)
>>> (x - 1) * (x + 1)
LaurentPoly(1, 'x1^2 - 1')
>>> LaurentPoly.parse("x1^-2*x2^3", 2).evaluate(Character([2, 3]))
Scalar(27/4)
"""
import numbers
import re

from . import _upoly
from .errors import DegenerateInput
from .scalars import Character, Scalar


class LaurentPoly:
    """Immutable sum of a_J x^J with integer a_J, keyed by dense exponent tuples."""

    __slots__ = ("n", "_terms")

    def __init__(self, n, terms=()):
        if n < 1:
            raise ValueError(f"variable count must be positive, got {n}")
        items = terms.items() if hasattr(terms, "items") else terms
        acc = {}
        for exp, c in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != n:
                raise ValueError(f"exponent {exp} has length {len(exp)}, expected {n}")
            if isinstance(c, bool) or not isinstance(c, numbers.Integral):
                raise ValueError(f"coefficients must be integers, got {c!r}")
            acc[exp] = acc.get(exp, 0) + int(c)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_terms", tuple(sorted((e, c) for e, c in acc.items() if c)))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    def __reduce__(self):
        return LaurentPoly, (self.n, self._terms)

    @classmethod
    def const(cls, c, n):
        return cls(n, {(0,) * n: c})

    @classmethod
    def monomial(cls, exp, c=1):
        return cls(len(exp), {tuple(exp): c})

    @classmethod
    def var(cls, j, n):
        """The coordinate x_{j+1} (0-based index)."""
        exp = [0] * n
        exp[j] = 1
        return cls(n, {tuple(exp): 1})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return iter(self._terms)

    def support(self):
        return [e for e, _ in self._terms]

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return all(not any(e) for e, _ in self._terms)

    def is_unit(self):
        """True for +-x^J, the units of Z[Z^n]."""
        return len(self._terms) == 1 and abs(self._terms[0][1]) == 1

    def is_monomial(self):
        return len(self._terms) == 1

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.n != self.n:
                raise ValueError(f"variable counts differ: {self.n} vs {other.n}")
            return other
        if isinstance(other, numbers.Integral) and not isinstance(other, bool):
            return LaurentPoly.const(other, self.n)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(self.n, acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.n, [(e, -c) for e, c in self._terms])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentPoly(self.n, acc)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_unit():
                raise ValueError("only units have negative powers")
            (e, c), = self._terms
            return LaurentPoly.monomial([a * k for a in e], c ** abs(k))
        out = LaurentPoly.const(1, self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, numbers.Integral) and not isinstance(other, bool):
            other = LaurentPoly.const(other, self.n)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, self._terms))

    def evaluate(self, rho):
        """Sum of a_J rho^J, exact unless ``rho`` is a float character."""
        if not isinstance(rho, Character):
            rho = Character(rho)
        if rho.n != self.n:
            raise ValueError(f"character has {rho.n} coordinates, polynomial has {self.n} variables")
        total = Scalar.rational(0) if rho.is_exact else Scalar.from_complex(0)
        for e, c in self._terms:
            total = total + rho.monomial(e) * c
        return total

    __call__ = evaluate

    def exponent_range(self, j):
        """(min, max) exponent of x_{j+1} over the support."""
        exps = [e[j] for e, _ in self._terms]
        return min(exps), max(exps)

    # -- serialization -------------------------------------------------

    def to_json(self):
        return {"n": self.n, "terms": [{"e": list(e), "c": c} for e, c in self._terms]}

    @classmethod
    def from_json(cls, obj, n=None):
        """JSON object form, or a string such as ``"x1^-2*x2^3 - 2"`` when ``n`` is known."""
        if isinstance(obj, str):
            if n is None:
                raise ValueError("parsing a polynomial string requires the variable count")
            return cls.parse(obj, n)
        if not isinstance(obj, dict) or "n" not in obj or "terms" not in obj:
            raise ValueError(f"malformed polynomial: {obj!r}")
        if n is not None and obj["n"] != n:
            raise ValueError(f"polynomial has n={obj['n']}, expected {n}")
        return cls(obj["n"], [(t["e"], t["c"]) for t in obj["terms"]])

    _TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*((?:x\d+(?:\^-?\d+)?\s*\*?\s*)*)")
    _FACTOR = re.compile(r"x(\d+)(?:\^(-?\d+))?")

    @classmethod
    def parse(cls, text, n):
        """Parse e.g. ``"3*x1^-2*x2 - x3 + 1"``; variables are x1..xn."""
        src = text.replace(" ", "")
        if not src:
            raise ValueError("empty polynomial string")
        if src == "0":
            return cls(n)
        acc = {}
        pos = 0
        while pos < len(src):
            m = cls._TERM.match(src, pos)
            if not m or m.end() == pos or (not m.group(2) and not m.group(3)):
                raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
            sign, coeff, mono = m.groups()
            c = int(coeff) if coeff else 1
            if sign == "-":
                c = -c
            exp = [0] * n
            for var, power in cls._FACTOR.findall(mono):
                j = int(var) - 1
                if not 0 <= j < n:
                    raise ValueError(f"variable x{var} out of range for n={n}")
                exp[j] += int(power) if power else 1
            acc[tuple(exp)] = acc.get(tuple(exp), 0) + c
            pos = m.end()
        return cls(n, acc)

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for e, c in sorted(self._terms, reverse=True):
            mono = "*".join(
                f"x{j + 1}" if a == 1 else f"x{j + 1}^{a}" for j, a in enumerate(e) if a
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            pieces.append(("- " if c < 0 else "+ ") + body)
        out = " ".join(pieces)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    def __repr__(self):
        return f"LaurentPoly({self.n}, {str(self)!r})"


def evaluate(f, rho):
    return f.evaluate(rho)


def to_univariate(f):
    """Strip the unit x^m from a one-variable f; returns ``(m, dense integer coeffs)``."""
    if f.n != 1:
        raise ValueError("expected a univariate polynomial")
    if f.is_zero():
        return 0, []
    low, high = f.exponent_range(0)
    dense = [0] * (high - low + 1)
    for (e,), c in f.items():
        dense[e - low] = c
    return low, dense


def from_univariate(coeffs, shift=0):
    return LaurentPoly(1, {(shift + i,): int(c) for i, c in enumerate(coeffs) if c})


def univariate_gcd(polys):
    """Primitive integer gcd over Q of one-variable Laurent polynomials, units stripped.

    Its roots in C* are exactly the common roots of ``polys``. Raises
    ``DegenerateInput`` when every input is zero.
    """
    g = []
    for f in polys:
        _, dense = to_univariate(f)
        g = _upoly.gcd_field(g, dense) if g else _upoly.trim(dense)
    if not g:
        raise DegenerateInput("every polynomial is zero; the common zero set is all of C*")
    return from_univariate(_upoly.primitive_part(g))
