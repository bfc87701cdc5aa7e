"""Equivariant chain complex of the space M(n, k; f_1..f_r).

M is the n-torus wedged with a k-sphere, with one (k+1)-cell per polynomial.
On the Z^n-cover the torus contributes the Koszul complex on (x_j - 1), the
sphere contributes a free generator ``s`` in degree k with zero boundary, and
the i-th cell contributes a generator ``c_i`` in degree k+1 with boundary
``f_i * s``. Within each degree the Koszul generators come first, then ``s``
(degree k), then ``c_1..c_r`` (degree k+1).
"""
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .chain import EquivariantComplex, LaurentMatrix, homology_dims, specialize
from .laurent import LaurentPoly
from .scalars import Character

MAX_KOSZUL_RANK = 10


@dataclass(frozen=True)
class SpaceSpec:
    n: int
    k: int
    polys: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "polys", tuple(self.polys))
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        if not isinstance(self.k, int) or self.k < 2:
            raise ValueError(f"k must be >= 2 for the CW construction, got {self.k!r}")
        for f in self.polys:
            if not isinstance(f, LaurentPoly) or f.n != self.n:
                raise ValueError(f"{f!r} is not a Laurent polynomial in {self.n} variables")

    @property
    def r(self):
        return len(self.polys)

    def on_locus(self, rho):
        """True iff every f_i vanishes at rho (rho lies on Z)."""
        return all(f.evaluate(rho).is_zero() for f in self.polys)

    def to_json(self):
        return {"n": self.n, "k": self.k, "polys": [f.to_json() for f in self.polys]}

    @classmethod
    def from_json(cls, obj):
        n, k = obj["n"], obj["k"]
        return cls(n, k, tuple(LaurentPoly.from_json(f, n) for f in obj.get("polys", [])))


def _subsets(n, i):
    return list(combinations(range(n), i))


@lru_cache(maxsize=None)
def koszul(n):
    """Koszul complex on (x_1 - 1, ..., x_n - 1), generators e_S for sorted S."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if n > MAX_KOSZUL_RANK:
        raise ValueError(f"n={n} exceeds the supported bound {MAX_KOSZUL_RANK}")
    xm1 = [LaurentPoly.var(j, n) - 1 for j in range(n)]
    zero = LaurentPoly(n)
    bases = [_subsets(n, i) for i in range(n + 1)]
    diffs = []
    for i in range(1, n + 1):
        index = {S: r for r, S in enumerate(bases[i - 1])}
        rows = [[zero] * len(bases[i]) for _ in bases[i - 1]]
        for col, S in enumerate(bases[i]):
            for pos, j in enumerate(S):
                face = S[:pos] + S[pos + 1:]
                rows[index[face]][col] = xm1[j] if pos % 2 == 0 else -xm1[j]
        diffs.append(LaurentMatrix(n, len(bases[i - 1]), len(bases[i]), rows))
    return EquivariantComplex(n, [len(b) for b in bases], diffs)


def _pad_matrix(mat, n, nrows, ncols):
    """Embed ``mat`` in the top-left corner of a zero nrows x ncols matrix."""
    zero = LaurentPoly(n)
    rows = [[zero] * ncols for _ in range(nrows)]
    if mat is not None:
        for i, r in enumerate(mat.rows):
            for j, f in enumerate(r):
                rows[i][j] = f
    return rows


@lru_cache(maxsize=None)
def build_space(spec):
    n, k, r = spec.n, spec.k, spec.r
    K = koszul(n)
    top = max(n, k + 1) if r else max(n, k)
    base = [K.counts[i] if i <= n else 0 for i in range(top + 1)]
    extra = [0] * (top + 1)
    extra[k] += 1
    if r:
        extra[k + 1] += r
    counts = [b + e for b, e in zip(base, extra)]
    diffs = []
    for i in range(1, top + 1):
        rows = _pad_matrix(K.d(i) if i <= n else None, n, counts[i - 1], counts[i])
        if i == k + 1 and r:
            s_row = base[k]  # s is the last degree-k generator
            for c, f in enumerate(spec.polys):
                rows[s_row][base[k + 1] + c] = f
        diffs.append(LaurentMatrix(n, counts[i - 1], counts[i], rows))
    return EquivariantComplex(n, counts, diffs)


def alexander_presentation(spec):
    """1 x r matrix [f_1 ... f_r] presenting H_k of the cover as a cokernel."""
    return LaurentMatrix(spec.n, 1, spec.r, [list(spec.polys)])


def trivial_cohomology(spec):
    """Betti numbers of M with constant complex coefficients."""
    return homology_dims(specialize(build_space(spec), Character.trivial(spec.n)))
