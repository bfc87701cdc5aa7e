"""Jump-locus queries and pointwise verifiers of the predicted loci.

Membership of rho in Sigma^i_r means dim H^i(target, L_rho) >= r, where for a
space the dimension is read off the chain complex specialized by x_j -> rho_j
(no inversion). For a presented group only degrees 0 and 1 are available.
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .chain import EquivariantComplex, homology_dims, matrix_rank, specialize, validate
from .construction import SpaceSpec, build_space
from .errors import InvariantViolation, UnsupportedDegree, UnsupportedRepresentation
from .groups import Presentation, build_group, h1_dims
from .scalars import Character


def _complex_for(target):
    if isinstance(target, SpaceSpec):
        return build_space(target)
    if isinstance(target, EquivariantComplex):
        return target
    raise TypeError(f"not a space target: {type(target).__name__}")


def space_dims(target, rho):
    """All dim H^i(M, L_rho) for a SpaceSpec or an explicit complex."""
    return homology_dims(specialize(_complex_for(target), rho))


def sigma_dim(target, rho, i):
    if isinstance(target, Presentation):
        if i == 0:
            return 1 if rho.is_trivial() else 0
        if i == 1:
            return h1_dims(target, rho).dim_h1
        raise UnsupportedDegree(f"group targets only support degrees 0 and 1, got {i}")
    dims = space_dims(target, rho)
    if not 0 <= i < len(dims):
        raise UnsupportedDegree(f"degree {i} outside 0..{len(dims) - 1}")
    return dims[i]


def sigma_member(target, rho, i, r=1):
    if r < 1:
        raise ValueError(f"rank threshold must be >= 1, got {r}")
    return sigma_dim(target, rho, i) >= r


def v_support_member(A, rho):
    """True iff the cokernel of the presentation matrix A is nonzero at rho."""
    return matrix_rank(A.specialize(rho), A.ncols) < A.nrows


def ps_check(spec, rho, l, complex_=None):
    """Pointwise union identity: some Sigma^i, i <= l, holds rho iff some V^i does."""
    if l > spec.k:
        raise UnsupportedDegree(f"l = {l} > k = {spec.k}: the support V^{spec.k + 1} is not known")
    if l < 0:
        raise ValueError("l must be non-negative")
    dims = space_dims(complex_ or spec, rho)
    sigma_side = any(dims[i] > 0 for i in range(l + 1))
    v_side = rho.is_trivial() or (l == spec.k and spec.on_locus(rho))
    return sigma_side == v_side


@dataclass(frozen=True)
class Record:
    character: Character
    dims: tuple
    on_locus: bool
    expected: tuple
    observed: tuple

    @property
    def passed(self):
        return self.expected == self.observed

    def to_json(self):
        return {
            "character": self.character.to_json(),
            "dims": list(self.dims),
            "on_locus": self.on_locus,
            "expected": list(self.expected),
            "observed": list(self.observed),
            "pass": self.passed,
        }


@dataclass(frozen=True)
class VerificationReport:
    kind: str
    target: dict
    records: tuple = field(default=())

    @property
    def passed(self):
        return all(r.passed for r in self.records)

    @property
    def verdict(self):
        return "pass" if self.passed else "fail"

    def failures(self):
        return [r for r in self.records if not r.passed]

    def members(self, degree):
        """Characters observed in Sigma^degree."""
        return [r.character for r in self.records if r.observed[degree]]

    def to_json(self):
        failed = len(self.failures())
        return {
            "verdict": self.verdict,
            "kind": self.kind,
            "target": self.target,
            "summary": {"total": len(self.records), "passed": len(self.records) - failed, "failed": failed},
            "records": [r.to_json() for r in self.records],
        }


def expected_space_membership(spec, rho):
    """Predicted Sigma^i membership for i = 0..k: {1} below k (empty above n), Z plus {1}-if-k<=n at k."""
    trivial = rho.is_trivial()
    out = [trivial]
    for i in range(1, spec.k):
        out.append(trivial and i <= spec.n)
    out.append(spec.on_locus(rho) or (trivial and spec.k <= spec.n))
    return tuple(out)


def _check_exact(characters):
    chars = list(characters)
    for rho in chars:
        if not rho.is_exact:
            raise UnsupportedRepresentation(f"verification is exact-only; got float character {rho!r}")
    return chars


def _space_record(args):
    spec, C, rho = args
    dims = homology_dims(specialize(C, rho))
    observed = tuple(dims[i] > 0 for i in range(spec.k + 1))
    return Record(rho, dims, spec.on_locus(rho), expected_space_membership(spec, rho), observed)


def _group_record(args):
    P, polys, rho = args
    report = h1_dims(P, rho)
    trivial = rho.is_trivial()
    on_locus = all(f.evaluate(rho).is_zero() for f in polys)
    dims = (1 if trivial else 0, report.dim_h1)
    # n = 1 has no commutators, so G is Z whatever the f_i are
    expected = (trivial, trivial or (on_locus and P.n >= 2))
    return Record(rho, dims, on_locus, expected, (dims[0] > 0, dims[1] > 0))


def _run(fn, jobs, items):
    if jobs and jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(fn, items))
    else:
        records = [fn(x) for x in items]
    return tuple(sorted(records, key=lambda r: r.character.sort_key()))


def verify_main(spec, characters, complex_=None, jobs=1):
    """Check Sigma^0..Sigma^k at each character against Z = V(f_1..f_r).

    ``complex_`` substitutes an explicit complex for the built one (the
    expected loci still come from ``spec``); it must satisfy d o d = 0.
    """
    chars = _check_exact(characters)
    C = build_space(spec) if complex_ is None else complex_
    bad = validate(C)
    if bad is not None:
        raise InvariantViolation(str(bad))
    records = _run(_space_record, jobs, [(spec, C, rho) for rho in chars])
    return VerificationReport("space", spec.to_json(), records)


def verify_group(n, polys, characters, jobs=1):
    """Check Sigma^1 of <g_1..g_n | f_i . gamma_ab> equals Z plus the trivial character.

    For n = 1 there are no relators and the prediction is the trivial character alone.
    """
    chars = _check_exact(characters)
    polys = tuple(polys)
    P = build_group(n, polys)
    records = _run(_group_record, jobs, [(P, polys, rho) for rho in chars])
    target = {"n": n, "k": 1, "polys": [f.to_json() for f in polys]}
    return VerificationReport("group", target, records)
