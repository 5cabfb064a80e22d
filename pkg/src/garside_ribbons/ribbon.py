"""Ribbons between standard parabolic submonoids.

A P-ribbon is a P-reduced element ``g`` such that ``p^g = g^-1 p g`` is a
positive element for every ``p`` in P. Ribbons compose into a category whose
objects are the standard parabolics; its generating morphisms are the
elements ``v(s, P)`` defined by ``Delta_{P+s} = Delta_P . v(s, P)``.
"""

from __future__ import annotations

import dataclasses
from collections import deque
from typing import Iterable

from .errors import AtomInP, ConjugateUndefined, InternalError, NotARibbon, NotReduced, SourceMismatch
from .monoid import Element, GarsideMonoid
from .parabolic import (
    StandardParabolic,
    format_parabolic,
    is_P_reduced,
    parabolic_closure,
)


@dataclasses.dataclass(frozen=True)
class Ribbon:
    source: StandardParabolic
    word: Element
    target: StandardParabolic
    atom_map: tuple[tuple[int, int], ...]     # (atom of source, its conjugate)

    def image(self, atom: int) -> int:
        return dict(self.atom_map)[atom]


def conjugate_if_defined(M: GarsideMonoid, b: Element, g: Element) -> Element | None:
    """``g^-1 b g`` if ``g`` left-divides ``b g``, else None."""
    if not g:
        return b
    return M._left_quotient(g, M.multiply(b, g))


def v_s_P(M: GarsideMonoid, P: StandardParabolic, s: int) -> Element:
    """The element ``v`` with ``Delta_{P+s} = Delta_P . v``."""
    if s in P.atoms:
        raise AtomInP(f"atom {M.lattice.atom_name(s)} lies in {format_parabolic(M, P)}")
    cache = M.__dict__.setdefault("_vsp_cache", {})
    key = (P.atoms, s)
    if key not in cache:
        Ps = parabolic_closure(M, P.atoms | {s})
        cache[key] = M.left_divide_exact(M.simple(P.delta), M.simple(Ps.delta))
    return cache[key]


def ribbon_failure(M: GarsideMonoid, P: StandardParabolic, g: Element) -> str | None:
    """Reason ``g`` is not a P-ribbon, or None when it is one."""
    if not is_P_reduced(M, P, g):
        return "not_reduced"
    for a in P.atoms:
        if conjugate_if_defined(M, (a,), g) is None:
            return f"conjugate_undefined:{M.lattice.atom_name(a)}"
    return None


def is_ribbon(M: GarsideMonoid, P: StandardParabolic, g: Element) -> bool:
    return ribbon_failure(M, P, g) is None


def make_ribbon(M: GarsideMonoid, P: StandardParabolic, g: Element) -> Ribbon:
    """Certify ``(P, g)`` as a ribbon and compute its target ``P^g``.

    Raises NotReduced or ConjugateUndefined when ``g`` is not a P-ribbon, and
    InternalError if a certified ribbon breaks one of the structural
    invariants (atoms map bijectively onto the atoms of a standard
    parabolic, and ``Delta_P^g = Delta_{P^g}``).
    """
    cache = M.__dict__.setdefault("_ribbon_cache", {})
    key = (P.atoms, g)
    if key in cache:
        return cache[key]
    if not is_P_reduced(M, P, g):
        raise NotReduced(f"{M.format(g)} is not {format_parabolic(M, P)}-reduced")
    pairs = []
    for a in sorted(P.atoms):
        c = conjugate_if_defined(M, (a,), g)
        if c is None:
            raise ConjugateUndefined(
                f"conjugate of {M.lattice.atom_name(a)} by {M.format(g)} is not positive",
                atom=M.lattice.atom_name(a))
        if len(c) != 1 or not M.lattice.is_atom(c[0]):
            raise InternalError("ribbon conjugates an atom to a non-atom",
                                atom=M.lattice.atom_name(a), word=M.format(g))
        pairs.append((a, c[0]))
    images = frozenset(b for _, b in pairs)
    if len(images) != len(pairs):
        raise InternalError("ribbon conjugation is not injective on atoms", word=M.format(g))
    Q = parabolic_closure(M, images)
    if Q.atoms != images:
        raise InternalError("conjugated atoms do not form a standard parabolic", word=M.format(g))
    if conjugate_if_defined(M, M.simple(P.delta), g) != M.simple(Q.delta):
        raise InternalError("Delta_P^g differs from Delta_{P^g}", word=M.format(g))
    r = Ribbon(P, g, Q, tuple(pairs))
    cache[key] = r
    return r


def transport(M: GarsideMonoid, P: StandardParabolic, g: Element) -> StandardParabolic:
    return make_ribbon(M, P, g).target


def identity_ribbon(M: GarsideMonoid, P: StandardParabolic) -> Ribbon:
    return make_ribbon(M, P, ())


def ribbon_compose(M: GarsideMonoid, r1: Ribbon, r2: Ribbon) -> Ribbon:
    if r1.target != r2.source:
        raise SourceMismatch(
            f"target {format_parabolic(M, r1.target)} != source {format_parabolic(M, r2.source)}")
    r = make_ribbon(M, r1.source, M.multiply(r1.word, r2.word))
    composed = tuple((a, r2.image(b)) for a, b in r1.atom_map)
    if composed != r.atom_map:
        raise InternalError("composed atom maps disagree")
    return r


def _require(M, P, g) -> None:
    reason = ribbon_failure(M, P, g)
    if reason is not None:
        raise NotARibbon(f"{M.format(g)} is not a {format_parabolic(M, P)}-ribbon ({reason})")


def ribbon_gcd(M: GarsideMonoid, P: StandardParabolic, g: Element, h: Element) -> Ribbon:
    _require(M, P, g)
    _require(M, P, h)
    return make_ribbon(M, P, M.left_gcd(g, h))


def ribbon_lcm(M: GarsideMonoid, P: StandardParabolic, g: Element, h: Element) -> Ribbon:
    _require(M, P, g)
    _require(M, P, h)
    return make_ribbon(M, P, M.right_lcm(g, h))


def normal_form_ribbon_split(M: GarsideMonoid, r: Ribbon) -> list[Ribbon]:
    """One ribbon per normal-form factor of ``r.word``, chained source to target."""
    out = []
    P = r.source
    for x in r.word:
        piece = make_ribbon(M, P, (x,))
        out.append(piece)
        P = piece.target
    if P != r.target:
        raise InternalError("normal-form split does not end at the ribbon target")
    return out


def ribbon_prefix(M: GarsideMonoid, P: StandardParabolic,
                  g: Element) -> tuple[Element, Element, StandardParabolic]:
    """Maximal ribbon left-divisor ``R`` of a P-reduced ``g``.

    Returns ``(R, R^-1 g, P^R)``. Greedy: while some ``v(s, P_cur)`` divides
    the remainder, strip the right-lcm of all of them and transport P.
    """
    if not is_P_reduced(M, P, g):
        raise NotReduced(f"{M.format(g)} is not {format_parabolic(M, P)}-reduced")
    R: Element = ()
    cur = P
    rem = g
    while rem:
        vs = [v for s in M.atoms if s not in cur.atoms
              for v in (v_s_P(M, cur, s),) if M.left_divides(v, rem)]
        if not vs:
            break
        step = M.right_lcm_all(vs)
        cur = transport(M, cur, step)
        R = M.multiply(R, step)
        rem = M.left_divide_exact(step, rem)
    return R, rem, cur


def ribbon_factorization(M: GarsideMonoid, P: StandardParabolic, g: Element) -> list[Ribbon]:
    """Write a ribbon as a chain of ``v(s, P')`` ribbons.

    Raises NotARibbon if stripping stops before reaching the identity.
    """
    out = []
    cur, rem = P, g
    while rem:
        step = next((v for s in M.atoms if s not in cur.atoms
                     for v in (v_s_P(M, cur, s),) if M.left_divides(v, rem)), None)
        if step is None:
            raise NotARibbon(f"{M.format(g)} does not factor into v-ribbons")
        r = make_ribbon(M, cur, step)
        out.append(r)
        cur, rem = r.target, M.left_divide_exact(step, rem)
    return out


# -- the ribbon category graph -----------------------------------------------------


@dataclasses.dataclass(frozen=True)
class RibbonEdge:
    source: StandardParabolic
    atoms: tuple[int, ...]       # atoms s giving this v(s, source)
    word: Element
    target: StandardParabolic


@dataclasses.dataclass
class RibbonGraph:
    vertices: list[StandardParabolic]
    edges: list[RibbonEdge]

    def out_edges(self, P: StandardParabolic) -> list[RibbonEdge]:
        return [e for e in self.edges if e.source == P]

    def to_dot(self, M: GarsideMonoid) -> str:
        ids = {P: i for i, P in enumerate(self.vertices)}
        lines = ["digraph ribbons {"]
        for P, i in ids.items():
            lines.append(f'  v{i} [label="{format_parabolic(M, P)}"];')
        for e in self.edges:
            atoms = ",".join(M.lattice.atom_name(a) for a in e.atoms)
            lines.append(f'  v{ids[e.source]} -> v{ids[e.target]} '
                         f'[label="{M.format(e.word)}", atoms="{atoms}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def out_v_edges(M: GarsideMonoid, P: StandardParabolic, atoms_only: bool = False) -> list[RibbonEdge]:
    by_word: dict[Element, list[int]] = {}
    for s in M.atoms:
        if s not in P.atoms:
            by_word.setdefault(v_s_P(M, P, s), []).append(s)
    edges = [RibbonEdge(P, tuple(ss), v, transport(M, P, v)) for v, ss in by_word.items()]
    if atoms_only:
        words = [e.word for e in edges]
        edges = [e for e in edges
                 if not any(w != e.word and M.left_divides(w, e.word) for w in words)]
    edges.sort(key=lambda e: (M.atom_length(e.word), M.word(e.word)))
    return edges


def ribbon_category_graph(M: GarsideMonoid, P: StandardParabolic,
                          atom_morphisms_only: bool = False) -> RibbonGraph:
    """Breadth-first closure of P under the ``v(s, P')`` morphisms."""
    vertices = [P]
    seen = {P}
    edges: list[RibbonEdge] = []
    queue = deque([P])
    while queue:
        cur = queue.popleft()
        for e in out_v_edges(M, cur, atom_morphisms_only):
            edges.append(e)
            if e.target not in seen:
                seen.add(e.target)
                vertices.append(e.target)
                queue.append(e.target)
    return RibbonGraph(vertices, edges)


def ribbon_paths(M: GarsideMonoid, P: StandardParabolic) -> dict[StandardParabolic, Element]:
    """For every parabolic reachable from P, a ribbon word reaching it (BFS order)."""
    paths = {P: ()}
    queue = deque([P])
    while queue:
        cur = queue.popleft()
        for e in out_v_edges(M, cur):
            if e.target not in paths:
                paths[e.target] = M.multiply(paths[cur], e.word)
                queue.append(e.target)
    return paths


def iter_ribbons(M: GarsideMonoid, P: StandardParabolic,
                 candidates: Iterable[Element]) -> Iterable[Ribbon]:
    for g in candidates:
        if is_ribbon(M, P, g):
            yield make_ribbon(M, P, g)
