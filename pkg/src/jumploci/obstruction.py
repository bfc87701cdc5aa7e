"""Is Z a finite union of torsion translates of subtori?

In C* a Z-defined subvariety has that shape iff it is empty, all of C*, or a
finite set of roots of unity. So for n = 1 the question reduces to whether the
gcd of the defining polynomials factors, up to a unit and content, into
cyclotomic polynomials. For n >= 2 only the trivial cases are decided.
"""
from dataclasses import dataclass

from . import _upoly
from .errors import DegenerateInput, UnsupportedRepresentation
from .laurent import from_univariate, to_univariate, univariate_gcd
from .scalars import cyclotomic_poly, euler_phi, root_of_unity_order

NOT_OBSTRUCTED = "not_obstructed"
OBSTRUCTED = "obstructed"
UNDECIDED = "undecided"
CONDITIONALLY_NOT_OBSTRUCTED = "conditionally_not_obstructed"


@dataclass(frozen=True)
class CyclotomicCertificate:
    """f = sign * content * x^unit_exponent * prod Phi_d^mult * residual."""

    unit_exponent: int
    sign: int
    content: int
    factors: tuple  # ((d, multiplicity), ...)
    residual: tuple  # primitive integer coefficients, lowest degree first

    @property
    def is_torsion(self):
        """True when Z(f) in C* consists of roots of unity only."""
        return len(self.residual) == 1

    def expand(self):
        poly = [self.sign * self.content]
        for d, mult in self.factors:
            for _ in range(mult):
                poly = _upoly.mul(poly, cyclotomic_poly(d))
        poly = _upoly.mul(poly, list(self.residual))
        return from_univariate(poly, self.unit_exponent)

    def to_json(self):
        return {
            "unit_exponent": self.unit_exponent,
            "sign": self.sign,
            "content": self.content,
            "factors": [list(f) for f in self.factors],
            "residual": list(self.residual),
            "torsion": self.is_torsion,
        }


def cyclotomic_certificate(f):
    if f.n != 1:
        raise ValueError("cyclotomic certificates are univariate only")
    if f.is_zero():
        raise DegenerateInput("f = 0 vanishes on all of C*")
    shift, dense = to_univariate(f)
    content = _upoly.content(dense)
    sign = 1 if dense[-1] > 0 else -1
    residual = [c // (sign * content) for c in dense]
    deg = len(residual) - 1
    factors = []
    # phi(d) >= sqrt(d/2), so phi(d) <= deg forces d <= 2 deg^2
    for d in range(1, 2 * deg * deg + 1):
        if euler_phi(d) > len(residual) - 1:
            continue
        phi_d = cyclotomic_poly(d)
        mult = 0
        while len(residual) - 1 >= len(phi_d) - 1:
            quo, rem = _upoly.divmod_monic(residual, phi_d)
            if rem:
                break
            residual, mult = quo, mult + 1
        if mult:
            factors.append((d, mult))
    cert = CyclotomicCertificate(shift, sign, content, tuple(factors), tuple(residual))
    assert cert.expand() == f, "certificate does not re-expand to the input"
    return cert


def torsion_character(rho):
    """Per-coordinate orders if every coordinate of rho is a root of unity, else None."""
    if not rho.is_exact:
        raise UnsupportedRepresentation("torsion detection needs an exact character")
    orders = []
    for c in rho:
        order = root_of_unity_order(c)
        if order is None:
            return None
        orders.append(order)
    return orders


@dataclass(frozen=True)
class ObstructionVerdict:
    verdict: str
    certificate: object = None
    evidence: str = ""

    def to_json(self):
        cert = self.certificate.to_json() if self.certificate is not None else None
        return {"verdict": self.verdict, "certificate": cert, "evidence": self.evidence}


def obstruction_verdict(n, polys, claimed_points=None):
    """Decide the torsion-translate question for Z = V(polys) in (C*)^n.

    ``claimed_points``, for n >= 2, is an optional list of characters that the
    caller asserts exhausts Z; if they all lie on Z and are torsion, the result
    is conditionally not obstructed.
    """
    polys = list(polys)
    for f in polys:
        if f.n != n:
            raise ValueError(f"{f!r} is not a polynomial in {n} variables")
    nonzero = [f for f in polys if not f.is_zero()]
    if not nonzero:
        return ObstructionVerdict(NOT_OBSTRUCTED, None, "all polynomials vanish, so Z is the whole torus")
    if n == 1:
        g = univariate_gcd(nonzero)
        cert = cyclotomic_certificate(g)
        if cert.is_torsion:
            roots = ", ".join(f"roots of Phi_{d}" for d, _ in cert.factors) or "no points"
            return ObstructionVerdict(NOT_OBSTRUCTED, cert, f"Z = zeros of {g}: {roots}")
        return ObstructionVerdict(
            OBSTRUCTED, cert, f"Z = zeros of {g} contains a point that is not a root of unity (factor {from_univariate(cert.residual)})"
        )
    units = [f for f in nonzero if f.is_monomial()]
    if units:
        return ObstructionVerdict(NOT_OBSTRUCTED, None, f"{units[0]} never vanishes on the torus, so Z is empty")
    if claimed_points:
        bad = [p for p in claimed_points if not all(f.evaluate(p).is_zero() for f in polys)]
        if bad:
            return ObstructionVerdict(UNDECIDED, None, f"claimed point {bad[0]!r} is not on Z")
        non_torsion = [p for p in claimed_points if torsion_character(p) is None]
        if non_torsion:
            return ObstructionVerdict(
                UNDECIDED, None, f"claimed point {non_torsion[0]!r} is not torsion; the claim cannot certify Z"
            )
        return ObstructionVerdict(
            CONDITIONALLY_NOT_OBSTRUCTED, None, "every claimed point of Z is torsion; valid only if the claim exhausts Z"
        )
    return ObstructionVerdict(UNDECIDED, None, "positive-dimensional or multivariate Z is outside the decidable cases")
