"""Free chain complexes over Z[x_1^{+-1}, ..., x_n^{+-1}] and their specializations.

A complex lives in degrees 0..D with ``counts[i]`` generators in degree i.
``diffs[i - 1]`` is d_i, a ``counts[i-1] x counts[i]`` matrix whose column j is
the boundary of the j-th degree-i generator.

Specializing at a character rho replaces every entry f by f(rho). Homology
dimensions of the specialized complex are computed from ranks:

    h_i = c_i - rank(d_i) - rank(d_{i+1})
"""
from dataclasses import dataclass
from math import gcd

import numpy as np

from .laurent import LaurentPoly
from .scalars import Scalar, unify_field

FLOAT_RANK_TOL = 1e-9


class LaurentMatrix:
    """Immutable nrows x ncols matrix of LaurentPoly in n variables."""

    __slots__ = ("n", "nrows", "ncols", "rows")

    def __init__(self, n, nrows, ncols, rows=None):
        if rows is None:
            zero = LaurentPoly(n)
            rows = [[zero] * ncols for _ in range(nrows)]
        rows = tuple(tuple(r) for r in rows)
        if len(rows) != nrows or any(len(r) != ncols for r in rows):
            raise ValueError(f"matrix entries do not match shape {nrows}x{ncols}")
        for r in rows:
            for f in r:
                if not isinstance(f, LaurentPoly) or f.n != n:
                    raise ValueError(f"entry {f!r} is not a LaurentPoly in {n} variables")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "nrows", nrows)
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentMatrix is immutable")

    def __reduce__(self):
        return LaurentMatrix, (self.n, self.nrows, self.ncols, self.rows)

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.shape, self.rows))

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        zero = LaurentPoly(self.n)
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = zero
                for k in range(self.ncols):
                    a, b = self.rows[i][k], other.rows[k][j]
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return LaurentMatrix(self.n, self.nrows, other.ncols, out)

    def transpose(self):
        return LaurentMatrix(
            self.n, self.ncols, self.nrows, [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        )

    def is_zero(self):
        return all(f.is_zero() for r in self.rows for f in r)

    def specialize(self, rho):
        """Scalar matrix (list of rows) with every entry evaluated at ``rho``."""
        return [[f.evaluate(rho) for f in r] for r in self.rows]

    def to_json(self):
        return [[f.to_json() for f in r] for r in self.rows]

    @classmethod
    def from_json(cls, obj, n, nrows, ncols):
        rows = [[LaurentPoly.from_json(f, n) for f in r] for r in obj]
        if nrows == 0:
            rows = []
        return cls(n, nrows, ncols, rows)


@dataclass(frozen=True)
class Violation:
    """d_i o d_{i+1} has a nonzero entry at (row, col)."""

    degree: int
    row: int
    col: int
    entry: LaurentPoly

    def __str__(self):
        return f"d_{self.degree} * d_{self.degree + 1} is nonzero at ({self.row}, {self.col}): {self.entry}"


class EquivariantComplex:
    __slots__ = ("n", "counts", "diffs")

    def __init__(self, n, counts, diffs):
        counts = tuple(int(c) for c in counts)
        diffs = tuple(diffs)
        if not counts or any(c < 0 for c in counts):
            raise ValueError(f"bad generator counts {counts}")
        if len(diffs) != len(counts) - 1:
            raise ValueError(f"{len(counts)} degrees need {len(counts) - 1} differentials, got {len(diffs)}")
        for i, d in enumerate(diffs, start=1):
            if d.n != n:
                raise ValueError(f"d_{i} has {d.n} variables, expected {n}")
            if d.shape != (counts[i - 1], counts[i]):
                raise ValueError(f"d_{i} has shape {d.shape}, expected {(counts[i - 1], counts[i])}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "counts", counts)
        object.__setattr__(self, "diffs", diffs)

    def __setattr__(self, name, value):
        raise AttributeError("EquivariantComplex is immutable")

    def __reduce__(self):
        return EquivariantComplex, (self.n, self.counts, self.diffs)

    @property
    def top_degree(self):
        return len(self.counts) - 1

    def d(self, i):
        """The differential out of degree i (d_0 is not stored)."""
        return self.diffs[i - 1]

    def __eq__(self, other):
        if not isinstance(other, EquivariantComplex):
            return NotImplemented
        return (self.n, self.counts, self.diffs) == (other.n, other.counts, other.diffs)

    def __hash__(self):
        return hash((self.n, self.counts, self.diffs))

    def to_json(self):
        return {"n": self.n, "counts": list(self.counts), "diffs": [d.to_json() for d in self.diffs]}

    @classmethod
    def from_json(cls, obj):
        try:
            n, counts = int(obj["n"]), [int(c) for c in obj["counts"]]
            raw = obj["diffs"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed complex JSON: {exc}") from None
        if len(raw) != len(counts) - 1:
            raise ValueError("diffs and counts disagree on the degree range")
        diffs = [LaurentMatrix.from_json(m, n, counts[i], counts[i + 1]) for i, m in enumerate(raw)]
        return cls(n, counts, diffs)


def validate(C):
    """None if every d_i o d_{i+1} vanishes, else the first offending entry."""
    for i in range(1, C.top_degree):
        prod = C.d(i) @ C.d(i + 1)
        for r, row in enumerate(prod.rows):
            for c, f in enumerate(row):
                if not f.is_zero():
                    return Violation(i, r, c, f)
    return None


@dataclass(frozen=True)
class SpecializedComplex:
    counts: tuple
    diffs: tuple  # d_i as list of Scalar rows; shapes follow counts

    @property
    def top_degree(self):
        return len(self.counts) - 1

    def d(self, i):
        return self.diffs[i - 1]

    def dual(self):
        """Reversed complex of transposes; same homology dimensions in reverse order."""
        counts = self.counts[::-1]
        diffs = []
        for i in range(1, len(counts)):
            # new d_i goes from degree i to i-1, i.e. old degree D-i to D-i+1
            old = self.diffs[len(counts) - 1 - i]
            nrows, ncols = counts[i - 1], counts[i]
            diffs.append([[old[j][i2] for j in range(ncols)] for i2 in range(nrows)])
        return SpecializedComplex(counts, tuple(diffs))


def specialize(C, rho):
    if rho.n != C.n:
        raise ValueError(f"character has {rho.n} coordinates, complex has {C.n} variables")
    return SpecializedComplex(C.counts, tuple(d.specialize(rho) for d in C.diffs))


def matrix_rank(rows, ncols=None):
    """Rank of a matrix of Scalars given as a list of rows.

    Exact entries use fraction-free (Bareiss) elimination over Z when all
    entries are rational, and Gaussian elimination over Q(zeta_m) otherwise.
    Float entries count pivots above ``FLOAT_RANK_TOL`` times the largest
    initial magnitude.
    """
    rows = [[Scalar.coerce(x) for x in r] for r in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows or ncols == 0:
        return 0
    flat = [x for r in rows for x in r]
    kinds = {x.is_exact for x in flat}
    if len(kinds) > 1:
        raise ValueError("matrix mixes exact and float entries")
    if not flat[0].is_exact:
        return _float_rank(rows)
    m, unified = unify_field(flat)
    if m == 1:
        return _bareiss_rank(_integer_rows(rows))
    it = iter(unified)
    return _field_rank([[next(it) for _ in r] for r in rows], ncols)


def _integer_rows(rows):
    out = []
    for r in rows:
        fr = [x.as_fraction() for x in r]
        den = 1
        for q in fr:
            den = den * q.denominator // gcd(den, q.denominator)
        out.append([int(q * den) for q in fr])
    return out


def _bareiss_rank(A):
    """Fraction-free elimination; each divide by the previous pivot is exact."""
    A = [list(r) for r in A]
    nrows, ncols = len(A), len(A[0])
    rank, prev = 0, 1
    for col in range(ncols):
        if rank == nrows:
            break
        candidates = [i for i in range(rank, nrows) if A[i][col]]
        if not candidates:
            continue
        piv = min(candidates, key=lambda i: abs(A[i][col]))
        A[rank], A[piv] = A[piv], A[rank]
        p = A[rank][col]
        prow = A[rank]
        for i in range(rank + 1, nrows):
            row = A[i]
            a = row[col]
            for j in range(col + 1, ncols):
                row[j] = (p * row[j] - a * prow[j]) // prev
            row[col] = 0
        prev = p
        rank += 1
    return rank


def _field_rank(A, ncols):
    A = [list(r) for r in A]
    nrows = len(A)
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((i for i in range(rank, nrows) if not A[i][col].is_zero()), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        inv = A[rank][col].inverse()
        prow = [x * inv for x in A[rank]]
        for i in range(rank + 1, nrows):
            a = A[i][col]
            if a.is_zero():
                continue
            A[i] = [x - a * y for x, y in zip(A[i], prow)]
        rank += 1
    return rank


def _float_rank(rows):
    A = np.array([[x.to_complex() for x in r] for r in rows], dtype=complex)
    scale = np.abs(A).max()
    if scale == 0:
        return 0
    cutoff = FLOAT_RANK_TOL * scale
    nrows, ncols = A.shape
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        piv = rank + int(np.argmax(np.abs(A[rank:, col])))
        if abs(A[piv, col]) <= cutoff:
            continue
        A[[rank, piv]] = A[[piv, rank]]
        factors = A[rank + 1:, col] / A[rank, col]
        A[rank + 1:, :] -= np.outer(factors, A[rank, :])
        rank += 1
    return rank


def homology_dims(S):
    """Betti vector (h_0, ..., h_D) of a specialized complex."""
    D = S.top_degree
    ranks = [0] * (D + 2)
    for i in range(1, D + 1):
        ranks[i] = matrix_rank(S.d(i), S.counts[i])
    return tuple(S.counts[i] - ranks[i] - ranks[i + 1] for i in range(D + 1))


def euler_characteristic(values):
    return sum((-1) ** i * v for i, v in enumerate(values))

