"""Free-group words, the relators f(x) . gamma_ab, and twisted H^1 via cocycles.

Letters are signed generator indices: ``2`` is g_2 and ``-2`` is g_2^{-1}.
A cocycle tau with values in C_rho is determined by its values on the
generators and extends along a word by tau(uv) = rho(u) tau(v) + tau(u).
H^1(G, C_rho) = Z^1 / B^1, where Z^1 is cut out by tau(relator) = 0 and B^1
is spanned by a -> rho(a) - 1.
"""
from dataclasses import dataclass

from .chain import matrix_rank
from .errors import InconsistentCharacter
from .scalars import Character, Scalar


class Word:
    """Freely reduced word in g_1^{+-1}, g_2^{+-1}, ..."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        stack = []
        for x in letters:
            x = int(x)
            if x == 0:
                raise ValueError("0 is not a generator letter")
            if stack and stack[-1] == -x:
                stack.pop()
            else:
                stack.append(x)
        object.__setattr__(self, "letters", tuple(stack))

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    def __reduce__(self):
        return Word, (self.letters,)

    @classmethod
    def gen(cls, j, e=1):
        return cls([j if e > 0 else -j] * abs(e))

    def __mul__(self, other):
        return Word(self.letters + other.letters)

    def inverse(self):
        return Word(-x for x in reversed(self.letters))

    def conj(self, v):
        """v u v^{-1}."""
        return v * self * v.inverse()

    def __pow__(self, m):
        base = self if m >= 0 else self.inverse()
        return Word(base.letters * abs(m))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        if not self.letters:
            return "Word(1)"
        return "Word(" + " ".join(f"g{abs(x)}" + ("^-1" if x < 0 else "") for x in self.letters) + ")"

    def exponent_sums(self, n):
        sums = [0] * n
        for x in self.letters:
            sums[abs(x) - 1] += 1 if x > 0 else -1
        return sums

    def to_json(self):
        return list(self.letters)


def gamma(a, b):
    """The commutator g_a g_b g_a^{-1} g_b^{-1}."""
    if a == b:
        raise ValueError(f"gamma needs distinct generators, got a = b = {a}")
    if a < 1 or b < 1:
        raise ValueError("generator indices start at 1")
    return Word([a, b, -a, -b])


def monomial_word(exponents):
    """w_J = g_1^{J_1} ... g_n^{J_n}, which realizes x^J acting by conjugation."""
    out = Word()
    for j, e in enumerate(exponents, start=1):
        out = out * Word.gen(j, e)
    return out


def relator_from_poly(f, a, b):
    """Product of (w_J gamma_ab w_J^{-1})^{a_J} over the support of f.

    Factors are taken in descending lexicographic order of J, so x_1 - 2 gives
    (g_1 gamma_12 g_1^{-1}) gamma_12^{-2}. Any order yields the same cocycle
    constraint, since every factor maps to 1 under a character.
    """
    if not (1 <= a <= f.n and 1 <= b <= f.n):
        raise ValueError(f"indices ({a}, {b}) out of range for n={f.n}")
    g = gamma(a, b)
    out = Word()
    for exp, c in reversed(list(f.items())):
        out = out * g.conj(monomial_word(exp)) ** c
    return out


@dataclass(frozen=True)
class Presentation:
    n: int
    relators: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "relators", tuple(self.relators))
        if self.n < 1:
            raise ValueError("a presentation needs at least one generator")
        for w in self.relators:
            if any(abs(x) > self.n for x in w):
                raise ValueError(f"relator {w!r} uses a generator beyond g_{self.n}")

    def to_json(self):
        return {"n": self.n, "relators": [w.to_json() for w in self.relators]}

    @classmethod
    def from_json(cls, obj):
        return cls(int(obj["n"]), tuple(Word(w) for w in obj["relators"]))


def build_group(n, polys):
    """<g_1..g_n | f_i . gamma_ab for all i and a < b>."""
    relators = [relator_from_poly(f, a, b) for f in polys for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    for f in polys:
        if f.n != n:
            raise ValueError(f"{f!r} is not a polynomial in {n} variables")
    return Presentation(n, tuple(relators))


def _as_character(rho):
    return rho if isinstance(rho, Character) else Character(rho)


def tau_extend(w, tau, rho):
    """Value on ``w`` of the cocycle with generator values ``tau``."""
    rho = _as_character(rho)
    tau = [Scalar.coerce(t) for t in tau]
    total = Scalar.rational(0)
    prefix = Scalar.rational(1)
    for x in w:
        j = abs(x) - 1
        if x > 0:
            total = total + prefix * tau[j]
            prefix = prefix * rho[j]
        else:
            # tau(u g^-1) = tau(u) - rho(u g^-1) tau(g)
            prefix = prefix / rho[j]
            total = total - prefix * tau[j]
    return total


def fox_row(w, rho):
    """Coefficients of tau_extend(w, ., rho) as a linear form, and rho(w)."""
    rho = _as_character(rho)
    one = Scalar.rational(1) if rho.is_exact else Scalar.from_complex(1)
    row = [one - one] * rho.n
    prefix = one
    for x in w:
        j = abs(x) - 1
        if x > 0:
            row[j] = row[j] + prefix
            prefix = prefix * rho[j]
        else:
            prefix = prefix / rho[j]
            row[j] = row[j] - prefix
    return row, prefix


@dataclass(frozen=True)
class CocycleReport:
    dim_z1: int
    dim_b1: int
    dim_h1: int

    def to_json(self):
        return {"dimZ1": self.dim_z1, "dimB1": self.dim_b1, "dimH1": self.dim_h1}


def h1_dims(P, rho):
    rho = _as_character(rho)
    if rho.n != P.n:
        raise ValueError(f"character has {rho.n} coordinates, group has {P.n} generators")
    rows = []
    for w in P.relators:
        row, value = fox_row(w, rho)
        off = value != 1 if rho.is_exact else abs(value.to_complex() - 1) > 1e-9
        if off:
            raise InconsistentCharacter(f"rho({w!r}) = {value} != 1")
        rows.append(row)
    dim_z1 = P.n - matrix_rank(rows, P.n)
    dim_b1 = 0 if rho.is_trivial() else 1
    return CocycleReport(dim_z1, dim_b1, dim_z1 - dim_b1)
