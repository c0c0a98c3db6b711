import logging

from models.algebra import AlgebraParams, LaurentPoly
from models.divisor import ORIGIN, CurveDescriptor, FormalDivisor, PointModel, SectionSpaceDim
from services.errors import DegreeTooLarge, HilbertError, KindMismatch, PointNotInSupport

logger = logging.getLogger(__name__)


def degree(d: FormalDivisor) -> int:
    return sum(m for _, _, m in d.terms)


def group_sum(d: FormalDivisor) -> PointModel:
    total = ORIGIN
    for point, mult in d.support().items():
        total = total + point.scaled(mult)
    return total


def lin_equiv(d1: FormalDivisor, d2: FormalDivisor) -> bool:
    """Divisors on E are linearly equivalent iff they have equal degree and equal sum."""
    return degree(d1) == degree(d2) and group_sum(d1) == group_sum(d2)


def sigma_shift(d: FormalDivisor, n: int) -> FormalDivisor:
    """Translate every point by n * xi; Div(M(n)) = sigma^n Div(M)."""
    return FormalDivisor.from_points({p.translated(n): m for p, m in d.support().items()})


def divisor_add(d1: FormalDivisor, d2: FormalDivisor) -> FormalDivisor:
    return FormalDivisor(terms=d1.terms + d2.terms)


def is_effective(d: FormalDivisor) -> bool:
    return all(m > 0 for _, _, m in d.terms)


def is_multiplicity_free(d: FormalDivisor) -> bool:
    return all(m == 1 for _, _, m in d.terms)


def exact_sequence_add(m1: CurveDescriptor, m2: CurveDescriptor) -> CurveDescriptor:
    """Descriptor of the middle term of 0 -> M1 -> M -> M2 -> 0."""
    if m1.params != m2.params:
        raise KindMismatch(
            f"cannot add a {m1.params.kind.value} descriptor to a {m2.params.kind.value} one"
        )
    return CurveDescriptor(
        params=m1.params,
        epsilon=m1.epsilon + m2.epsilon,
        div=divisor_add(m1.div, m2.div),
    )


def point_quotient(m: CurveDescriptor, p: PointModel) -> CurveDescriptor:
    """Div(K) = Div(M) - (p) + (p translated by -central_degree * xi) for the kernel K of M -> P."""
    if m.div.multiplicity(p) < 1:
        raise PointNotInSupport(f"({p.x}, {p.y}) is not in the support of the divisor")
    replaced = p.translated(-m.params.central_degree)
    div = divisor_add(m.div, FormalDivisor(terms=[(p.x, p.y, -1), (replaced.x, replaced.y, 1)]))
    return CurveDescriptor(params=m.params, epsilon=m.epsilon, div=div)


def section_space_dim(params: AlgebraParams, n: int, deg_d: int) -> SectionSpaceDim:
    """Dimension of the forms in B_n vanishing on a divisor of degree deg_d."""
    full = params.r_a * n
    if deg_d > full:
        raise DegreeTooLarge(f"deg D = {deg_d} exceeds r_A * n = {full}")
    if deg_d == full:
        return SectionSpaceDim.at_most_one()
    return SectionSpaceDim.exact(full - deg_d)


def completing_point(d: FormalDivisor, reference: FormalDivisor) -> PointModel:
    """The unique q with D + (q) linearly equivalent to the reference divisor."""
    if degree(d) != degree(reference) - 1:
        raise HilbertError(
            f"deg D = {degree(d)} must be one less than deg of the reference ({degree(reference)})",
            code="degree-mismatch",
        )
    target, current = group_sum(reference), group_sum(d)
    return PointModel(x=target.x - current.x, y=target.y - current.y)


def section_bundle_degree(params: AlgebraParams, p: LaurentPoly) -> int:
    """Degree r_A p(1) of the line bundle whose section cuts out Div(M)."""
    return params.r_a * p.at_one()
