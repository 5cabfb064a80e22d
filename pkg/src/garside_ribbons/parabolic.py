"""Standard parabolic submonoids.

A standard parabolic submonoid is identified by its (closed) set of atoms;
its Garside element ``delta`` is the right-lcm of those atoms.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable

from .errors import InternalError
from .lattice import permutation_order
from .monoid import Element, GarsideMonoid


@dataclasses.dataclass(frozen=True)
class StandardParabolic:
    atoms: frozenset[int]        # simple ids
    delta: int                   # simple id of Delta_P
    central_exponent: int

    @property
    def rank(self) -> int:
        return len(self.atoms)

    def __contains__(self, atom: int) -> bool:
        return atom in self.atoms

    def __le__(self, other: "StandardParabolic") -> bool:
        return self.atoms <= other.atoms

    def __lt__(self, other: "StandardParabolic") -> bool:
        return self.atoms < other.atoms


def _join_atoms(M: GarsideMonoid, atoms: Iterable[int]) -> int:
    join = M.lattice.join
    d = 0
    for a in atoms:
        d = join[d][a]
    return d


def atoms_below(M: GarsideMonoid, x: int) -> frozenset[int]:
    ldiv = M.lattice.ldiv
    return frozenset(a for a in M.atoms if ldiv[a][x])


def central_exponent(M: GarsideMonoid, atoms: frozenset[int], delta: int) -> int:
    """Smallest ``k >= 1`` with conjugation by ``Delta_P^k`` fixing the atoms of P."""
    if not atoms:
        return 1
    under = M.lattice.under
    # Delta_P^-1 x Delta_P = c(c(x)) with c(x) = x \ Delta_P
    image = {a: under[under[a][delta]][delta] for a in atoms}
    if set(image.values()) != set(atoms):
        raise InternalError("conjugation by Delta_P does not permute the atoms of P")
    order = sorted(atoms)
    pos = {a: i for i, a in enumerate(order)}
    return permutation_order([pos[image[a]] for a in order])


def parabolic_closure(M: GarsideMonoid, atoms: Iterable[int]) -> StandardParabolic:
    """Smallest standard parabolic containing ``atoms``: iterate
    ``S -> {atoms dividing right_lcm(S)}`` to a fixpoint."""
    cache = _cache(M, "closure")
    S = frozenset(atoms)
    if S in cache:
        return cache[S]
    cur = S
    while True:
        d = _join_atoms(M, cur)
        nxt = atoms_below(M, d)
        if nxt == cur:
            break
        cur = nxt
    P = StandardParabolic(cur, d, central_exponent(M, cur, d))
    cache[S] = P
    return P


def _cache(M: GarsideMonoid, name: str) -> dict:
    caches = M.__dict__.setdefault("_parabolic_caches", {})
    return caches.setdefault(name, {})


def full_parabolic(M: GarsideMonoid) -> StandardParabolic:
    return parabolic_closure(M, M.atoms)


def empty_parabolic(M: GarsideMonoid) -> StandardParabolic:
    return parabolic_closure(M, ())


def all_parabolics(M: GarsideMonoid) -> list[StandardParabolic]:
    """Every standard parabolic, sorted by rank then atom numbers.

    A closed atom set is determined by its Delta, so it suffices to scan
    simples ``x`` and keep those equal to the join of the atoms below them.
    """
    cache = _cache(M, "all")
    if "all" not in cache:
        out = []
        for x in range(M.n):
            below = atoms_below(M, x)
            if _join_atoms(M, below) == x:
                out.append(parabolic_closure(M, below))
        idx = M.lattice.atom_index
        out.sort(key=lambda P: (P.rank, sorted(idx[a] for a in P.atoms)))
        cache["all"] = out
    return cache["all"]


def delta_element(M: GarsideMonoid, P: StandardParabolic, k: int = 1) -> Element:
    return M.power(M.simple(P.delta), k)


def in_parabolic(M: GarsideMonoid, P: StandardParabolic, g: Element) -> bool:
    """``g`` lies in P iff every normal-form factor divides Delta_P."""
    ldiv = M.lattice.ldiv
    return all(ldiv[x][P.delta] for x in g)


def head_and_tail(M: GarsideMonoid, P: StandardParabolic, g: Element) -> tuple[Element, Element]:
    """Left P-head and P-tail of ``g``, with ``g = head . tail``."""
    meet = M.lattice.meet
    head: Element = ()
    while g:
        d = meet[g[0]][P.delta]
        if d == 0:
            break
        head = M.multiply(head, (d,))
        g = M.left_divide_exact((d,), g)
    return head, g


def head_P(M: GarsideMonoid, P: StandardParabolic, g: Element) -> Element:
    return head_and_tail(M, P, g)[0]


def tail_P(M: GarsideMonoid, P: StandardParabolic, g: Element) -> Element:
    return head_and_tail(M, P, g)[1]


def is_P_reduced(M: GarsideMonoid, P: StandardParabolic, g: Element) -> bool:
    return not g or M.lattice.meet[g[0]][P.delta] == 0


def right_delta(M: GarsideMonoid, P: StandardParabolic) -> int:
    """Left-lcm of the atoms of P (the Garside element seen from the right)."""
    rjoin = M.lattice.rjoin
    d = 0
    for a in P.atoms:
        d = rjoin[d][a]
    return d


def right_head_and_tail(M: GarsideMonoid, P: StandardParabolic,
                        g: Element) -> tuple[Element, Element]:
    """Right P-head ``h`` and the rest ``t`` with ``g = t . h``."""
    op = M.op
    d_right = right_delta(M, P)
    meet = op.lattice.meet
    h_op: Element = ()
    g_op = M._to_op(g)
    while g_op:
        d = meet[g_op[0]][d_right]
        if d == 0:
            break
        h_op = op.multiply(h_op, (d,))
        g_op = op.left_divide_exact((d,), g_op)
    return M._from_op(h_op), M._from_op(g_op)


def right_head_P(M: GarsideMonoid, P: StandardParabolic, g: Element) -> Element:
    return right_head_and_tail(M, P, g)[0]


def intersect(M: GarsideMonoid, P: StandardParabolic, Q: StandardParabolic) -> StandardParabolic:
    S = P.atoms & Q.atoms
    R = parabolic_closure(M, S)
    if R.atoms != S:
        raise InternalError("intersection of standard parabolics is not closed",
                            atoms=sorted(S))
    return R


def factor_atoms(M: GarsideMonoid, b: Element) -> frozenset[int]:
    """Atoms that are factors of ``b``: atoms left-dividing some right-divisor.

    Right-divisors are reached by repeatedly stripping a leading atom.
    """
    cache = _cache(M, "factor_atoms")
    if b in cache:
        return cache[b]
    ldiv = M.lattice.ldiv
    found: set[int] = set()
    seen = {b}
    stack = [b]
    while stack:
        e = stack.pop()
        if not e:
            continue
        for a in M.atoms:
            if ldiv[a][e[0]]:
                found.add(a)
                r = M.left_divide_exact((a,), e)
                if r not in seen:
                    seen.add(r)
                    stack.append(r)
    out = frozenset(found)
    cache[b] = out
    return out


def smallest_parabolic_containing(M: GarsideMonoid, b: Element) -> StandardParabolic:
    return parabolic_closure(M, factor_atoms(M, b))


def format_parabolic(M: GarsideMonoid, P: StandardParabolic) -> str:
    idx = M.lattice.atom_index
    names = M.lattice.atom_names
    return "[" + ", ".join(names[i] for i in sorted(idx[a] for a in P.atoms)) + "]"


def parabolic_names(M: GarsideMonoid, P: StandardParabolic) -> list[str]:
    idx = M.lattice.atom_index
    names = M.lattice.atom_names
    return [names[i] for i in sorted(idx[a] for a in P.atoms)]
