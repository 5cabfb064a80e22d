"""Group of fractions: reduced left fractions and parabolic subgroups.

A group element is stored as the reduced fraction ``p^-1 q`` with
``left_gcd(p, q) = 1``. Reduced fractions are unique, so equality of
:class:`GroupFraction` objects is equality in the group.
"""

from __future__ import annotations

import dataclasses

from .errors import NotConjugate
from .monoid import Element, GarsideMonoid
from .parabolic import (
    StandardParabolic,
    delta_element,
    format_parabolic,
    head_and_tail,
    in_parabolic,
)
from .ribbon import Ribbon, make_ribbon, ribbon_paths, ribbon_prefix


@dataclasses.dataclass(frozen=True)
class GroupFraction:
    den: Element      # p
    num: Element      # q

    @property
    def is_positive(self) -> bool:
        return not self.den

    @property
    def is_identity(self) -> bool:
        return not self.den and not self.num


ONE = GroupFraction((), ())


def positive(g: Element) -> GroupFraction:
    return GroupFraction((), g)


def negative(g: Element) -> GroupFraction:
    return GroupFraction(g, ())


def reduce_fraction(M: GarsideMonoid, p: Element, q: Element) -> GroupFraction:
    """Cancel ``d = left_gcd(p, q)`` from ``p^-1 q``."""
    d = M.left_gcd(p, q)
    if not d:
        return GroupFraction(p, q)
    return GroupFraction(M.left_divide_exact(d, p), M.left_divide_exact(d, q))


def group_multiply(M: GarsideMonoid, x: GroupFraction, y: GroupFraction) -> GroupFraction:
    cache = M.__dict__.setdefault("_group_mul_cache", {})
    key = (x, y)
    out = cache.get(key)
    if out is None:
        out = cache[key] = _group_multiply(M, x, y)
    return out


def _group_multiply(M: GarsideMonoid, x: GroupFraction, y: GroupFraction) -> GroupFraction:
    # p^-1 q r^-1 s with q r^-1 = r'^-1 q' where r' q = q' r = left_lcm(q, r)
    if not x.num and not y.den:
        return reduce_fraction(M, x.den, y.num) if x.den and y.num else GroupFraction(x.den, y.num)
    lcm = M.left_lcm(x.num, y.den)
    r1 = M.right_divide_exact(x.num, lcm)
    q1 = M.right_divide_exact(y.den, lcm)
    return reduce_fraction(M, M.multiply(r1, x.den), M.multiply(q1, y.num))


def group_inverse(M: GarsideMonoid, x: GroupFraction) -> GroupFraction:
    return GroupFraction(x.num, x.den)


def group_product(M: GarsideMonoid, *xs: GroupFraction) -> GroupFraction:
    out = ONE
    for x in xs:
        out = group_multiply(M, out, x)
    return out


def group_conjugate(M: GarsideMonoid, b: GroupFraction, g: GroupFraction) -> GroupFraction:
    """``g^-1 b g``."""
    return group_product(M, group_inverse(M, g), b, g)


def in_parabolic_group(M: GarsideMonoid, P: StandardParabolic, x: GroupFraction) -> bool:
    return in_parabolic(M, P, x.den) and in_parabolic(M, P, x.num)


def conjugates_into(M: GarsideMonoid, P: StandardParabolic, Q: StandardParabolic,
                    g: GroupFraction) -> bool:
    """Whether ``G_P^g`` is contained in ``G_Q``, tested on the atoms of P."""
    return all(in_parabolic_group(M, Q, group_conjugate(M, positive((a,)), g))
               for a in P.atoms)


def conjugates_onto(M: GarsideMonoid, P: StandardParabolic, Q: StandardParabolic,
                    g: GroupFraction) -> bool:
    """Whether ``G_P^g = G_Q``."""
    return (conjugates_into(M, P, Q, g)
            and conjugates_into(M, Q, P, group_inverse(M, g)))


@dataclasses.dataclass(frozen=True)
class ParabolicSubgroup:
    """The subgroup ``G_P^g = g^-1 G_P g``."""

    base: StandardParabolic
    conjugator: GroupFraction


def z_element(M: GarsideMonoid, P: StandardParabolic, g: GroupFraction) -> GroupFraction:
    """``(Delta_P^k)^g`` with ``k`` the central exponent of P."""
    return group_conjugate(M, positive(delta_element(M, P, P.central_exponent)), g)


def z_of(M: GarsideMonoid, K: ParabolicSubgroup) -> GroupFraction:
    return z_element(M, K.base, K.conjugator)


def same_subgroup(M: GarsideMonoid, K1: ParabolicSubgroup, K2: ParabolicSubgroup) -> bool:
    return z_of(M, K1) == z_of(M, K2)


@dataclasses.dataclass(frozen=True)
class Standardizer:
    head: Element                   # H_P(b)
    ribbon: Element                 # R_P(T_P(b))
    minimal: Element                # b'
    target: StandardParabolic       # Q = P^{R_P(T_P(b))}
    z: GroupFraction                # b'^-1 Delta_Q^k b'


def minimal_standardizer(M: GarsideMonoid, P: StandardParabolic, b: Element) -> Standardizer:
    """Split ``b = H_P(b) . R_P(T_P(b)) . b'`` for ``K = G_P^b``.

    ``b'`` conjugates ``K`` onto the standard subgroup ``G_Q`` and
    ``b'^-1 Delta_Q^k b'`` is the reduced fraction of ``z_K``.
    """
    head, tail = head_and_tail(M, P, b)
    R, rest, Q = ribbon_prefix(M, P, tail)
    z = GroupFraction(rest, M.multiply(delta_element(M, Q, Q.central_exponent), rest))
    return Standardizer(head, R, rest, Q, z)


def is_standard_subgroup(M: GarsideMonoid, K: ParabolicSubgroup) -> bool:
    """``K`` is standard iff the reduced fraction of ``z_K`` is positive."""
    return z_of(M, K).is_positive


def conjugate_parabolics(M: GarsideMonoid, P: StandardParabolic, Q: StandardParabolic) -> Ribbon:
    """A ribbon from P onto Q, found by BFS in the ribbon category."""
    if P.rank != Q.rank:
        raise NotConjugate(f"{format_parabolic(M, P)} and {format_parabolic(M, Q)} differ in rank")
    paths = ribbon_paths(M, P)
    if Q not in paths:
        raise NotConjugate(f"{format_parabolic(M, Q)} is not reachable from {format_parabolic(M, P)}")
    return make_ribbon(M, P, paths[Q])


def conjugacy_classes(M: GarsideMonoid, parabolics) -> list[list[StandardParabolic]]:
    """Partition standard parabolics into conjugacy classes."""
    remaining = list(parabolics)
    out = []
    while remaining:
        P = remaining[0]
        reach = ribbon_paths(M, P)
        cls = [Q for Q in remaining if Q in reach]
        out.append(cls)
        remaining = [Q for Q in remaining if Q not in reach]
    return out
