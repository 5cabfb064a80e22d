"""Finite lattice of simples underlying a Garside monoid.

A :class:`SimpleLattice` stores the divisors of the Garside element as
integer ids together with every table the normal-form machinery needs:
left/right divisibility, the partial quotient tables, meets and joins for
both orders, complements, the Delta-conjugation permutation and the
renormalisation table for pairs of simples.

Id 0 is always the unit and id ``n - 1`` is always Delta. Hot tables are
kept as nested Python lists, since scalar numpy indexing is slower than
list indexing for the one-lookup-at-a-time access pattern of normal forms.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Callable, Hashable, Sequence

import numpy as np

UNDEF = -1


@dataclasses.dataclass(eq=False)
class SimpleLattice:
    """Tables of a Garside structure on ``n`` simples.

    Only ``under`` and ``over`` are primary: ``under[a][b]`` is the simple
    ``c`` with ``a.c = b`` (or -1), ``over[b][a]`` the simple ``c`` with
    ``c.a = b`` (or -1). Everything else is derived in ``__post_init__``.
    """

    atom_names: list[str]
    atoms: list[int]                # simple id of atom number i
    length: list[int]               # atom length of each simple
    under: list[list[int]]
    over: list[list[int]]
    words: list[tuple[int, ...]]    # canonical atom word of each simple
    name: str = ""

    def __post_init__(self):
        n = len(self.length)
        self.n = n
        self.unit = 0
        self.delta = n - 1
        self.atom_index = {s: i for i, s in enumerate(self.atoms)}
        under = np.asarray(self.under, dtype=np.int64)
        over = np.asarray(self.over, dtype=np.int64)
        ldiv = under >= 0
        rdiv = (over >= 0).T        # rdiv[a, b]: a right-divides b
        length = np.asarray(self.length, dtype=np.int64)

        product = np.full((n, n), UNDEF, dtype=np.int64)
        xs, zs = np.nonzero(ldiv)
        product[xs, under[xs, zs]] = zs

        self.ldiv = ldiv.tolist()
        self.rdiv = rdiv.tolist()
        self.product = product.tolist()
        self.meet = _meet_table(ldiv, length).tolist()
        self.join = _join_table(ldiv, length).tolist()
        self.rmeet = _meet_table(rdiv, length).tolist()
        self.rjoin = _join_table(rdiv, length).tolist()
        d = self.delta
        # x . right_comp[x] = Delta ; left_comp[x] . x = Delta
        self.right_comp = [int(under[x, d]) for x in range(n)]
        self.left_comp = [int(over[d, x]) for x in range(n)]
        # Delta^-1 x Delta = right_comp(right_comp(x))
        self.delta_conj = [self.right_comp[self.right_comp[x]] for x in range(n)]
        self.delta_conj_inv = [0] * n
        for x, y in enumerate(self.delta_conj):
            self.delta_conj_inv[y] = x
        self._build_renorm()

    def _build_renorm(self):
        n = self.n
        rl = [[0] * n for _ in range(n)]
        rr = [[0] * n for _ in range(n)]
        for x in range(n):
            cx = self.right_comp[x]
            meet_cx = self.meet[cx]
            prod_x = self.product[x]
            for y in range(n):
                m = meet_cx[y]
                rl[x][y] = prod_x[m]
                rr[x][y] = self.under[m][y]
        self.renorm_left = rl
        self.renorm_right = rr

    # -- small queries -------------------------------------------------

    def atom_name(self, simple: int) -> str:
        return self.atom_names[self.atom_index[simple]]

    def simple_name(self, x: int) -> str:
        if x == self.unit:
            return "1"
        return ".".join(self.atom_names[i] for i in self.words[x])

    def is_atom(self, x: int) -> bool:
        return x in self.atom_index

    def opposite(self) -> "SimpleLattice":
        """The lattice of the opposite monoid (products read right to left)."""
        return SimpleLattice(
            atom_names=list(self.atom_names),
            atoms=list(self.atoms),
            length=list(self.length),
            under=np.asarray(self.over).T.tolist(),
            over=np.asarray(self.under).T.tolist(),
            words=[tuple(reversed(w)) for w in self.words],
            name=f"{self.name}^op",
        )

    def copy(self) -> "SimpleLattice":
        """Deep copy; used for fault injection in tests."""
        new = SimpleLattice(
            atom_names=list(self.atom_names), atoms=list(self.atoms),
            length=list(self.length), under=[list(r) for r in self.under],
            over=[list(r) for r in self.over], words=list(self.words), name=self.name,
        )
        return new


def _meet_table(div: np.ndarray, length: np.ndarray) -> np.ndarray:
    """Greatest common lower bound for the order ``div`` (max-length candidate)."""
    n = len(length)
    out = np.empty((n, n), dtype=np.int64)
    score_base = length[:, None]
    for x in range(n):
        mask = div[:, x][:, None] & div            # rows z: z <= x and z <= y
        out[x] = np.argmax(np.where(mask, score_base, -1), axis=0)
    return out


def _join_table(div: np.ndarray, length: np.ndarray) -> np.ndarray:
    """Least common upper bound for the order ``div`` (min-length candidate)."""
    n = len(length)
    out = np.empty((n, n), dtype=np.int64)
    big = int(length.max()) + 1
    score_base = length[:, None]
    for x in range(n):
        mask = div[x, :][:, None] & div.T          # rows z: x <= z and y <= z
        out[x] = np.argmin(np.where(mask, score_base, big), axis=0)
    return out


def interval_lattice(
    simples: Sequence[Hashable],
    mul: Callable,
    inv: Callable,
    length: Callable,
    atoms: Sequence[Hashable],
    atom_names: Sequence[str],
    name: str = "",
) -> SimpleLattice:
    """Build the lattice of an interval ``[1, Delta]`` of a group with a length.

    ``simples`` must contain every divisor of Delta; ``u`` left-divides ``w``
    iff ``length(u) + length(u^-1 w) == length(w)`` and both are simples.
    """
    elems = sorted(set(simples), key=lambda w: (length(w), w))
    idx = {w: i for i, w in enumerate(elems)}
    n = len(elems)
    lens = [length(w) for w in elems]
    under = [[UNDEF] * n for _ in range(n)]
    over = [[UNDEF] * n for _ in range(n)]
    invs = [inv(w) for w in elems]
    for i, a in enumerate(elems):
        la = lens[i]
        for j, b in enumerate(elems):
            lb = lens[j]
            if la > lb:
                continue
            c = mul(invs[i], b)
            k = idx.get(c)
            if k is not None and la + lens[k] == lb:
                under[i][j] = k
            c = mul(b, invs[i])
            k = idx.get(c)
            if k is not None and la + lens[k] == lb:
                over[j][i] = k
    atom_ids = [idx[a] for a in atoms]
    words = _canonical_words(n, under, atom_ids)
    return SimpleLattice(
        atom_names=list(atom_names), atoms=atom_ids, length=lens,
        under=under, over=over, words=words, name=name,
    )


def _canonical_words(n, under, atom_ids) -> list[tuple[int, ...]]:
    """Lexicographically least atom word of each simple (simples sorted by length)."""
    words: list[tuple[int, ...] | None] = [None] * n
    words[0] = ()
    for x in range(1, n):
        best = None
        for i, a in enumerate(atom_ids):
            r = under[a][x]
            if r != UNDEF and words[r] is not None:
                w = (i,) + words[r]
                if best is None or w < best:
                    best = w
        words[x] = best
    return words


# -- validation ---------------------------------------------------------------


@dataclasses.dataclass
class ValidationReport:
    ok: bool
    checks: list[str]
    axiom: str | None = None
    witness: tuple | None = None

    def to_dict(self) -> dict:
        return {
            "ok": self.ok, "checks": self.checks, "axiom": self.axiom,
            "witness": list(self.witness) if self.witness is not None else None,
        }


class _Violation(Exception):
    def __init__(self, axiom, witness):
        self.axiom, self.witness = axiom, witness


def _first(mask: np.ndarray):
    hit = np.argwhere(mask)
    return tuple(int(v) for v in hit[0])


def validate_garside(lat: SimpleLattice) -> ValidationReport:
    """Check the Garside axioms on the tables of ``lat``.

    Returns a report; the first violated axiom is named together with a
    witness tuple of simple ids.
    """
    checks: list[str] = []

    def check(name: str, bad: np.ndarray | bool, witness=None):
        if isinstance(bad, np.ndarray):
            if bad.any():
                raise _Violation(name, _first(bad))
        elif bad:
            raise _Violation(name, witness)
        checks.append(name)

    try:
        n = lat.n
        under = np.asarray(lat.under)
        over = np.asarray(lat.over)
        L = under >= 0
        R = (over >= 0).T
        length = np.asarray(lat.length)
        product = np.asarray(lat.product)
        eye = np.eye(n, dtype=bool)
        Li = L.astype(np.int64)

        check("unit_is_zero", length[0] != 0, (0,))
        check("reflexive", ~np.diag(L))
        check("antisymmetric", L & L.T & ~eye)
        check("transitive", ((Li @ Li) > 0) & ~L)
        check("unit_is_minimum", ~L[0, :])
        check("delta_is_maximum", ~L[:, lat.delta])
        check("left_divisors_of_delta_are_right_divisors", ~R[:, lat.delta])
        check("right_transitive", ((R.astype(np.int64) @ R.astype(np.int64)) > 0) & ~R)

        a_idx, b_idx = np.nonzero(L)
        c = under[a_idx, b_idx]
        bad = product[a_idx, c] != b_idx
        check("complement_consistency", bad.any(),
              (int(a_idx[bad.argmax()]), int(b_idx[bad.argmax()])) if bad.any() else None)
        bad = length[a_idx] + length[c] != length[b_idx]
        check("length_additive", bad.any(),
              (int(a_idx[bad.argmax()]), int(b_idx[bad.argmax()])) if bad.any() else None)
        b_idx, a_idx = np.nonzero(over >= 0)
        c = over[b_idx, a_idx]
        bad = product[c, a_idx] != b_idx
        check("right_complement_consistency", bad.any(),
              (int(b_idx[bad.argmax()]), int(a_idx[bad.argmax()])) if bad.any() else None)

        for label, div, meet, join in (
            ("left", L, np.asarray(lat.meet), np.asarray(lat.join)),
            ("right", R, np.asarray(lat.rmeet), np.asarray(lat.rjoin)),
        ):
            for x in range(n):
                lower = div[:, x][:, None] & div          # z <= x, z <= y
                m = meet[x]
                if not (div[m, x].all() and div[m, np.arange(n)].all()):
                    y = int(np.argmax(~(div[m, x] & div[m, np.arange(n)])))
                    raise _Violation(f"{label}_meet", (x, y))
                below_m = div[:, m]                        # [z, y]: z <= meet(x,y)
                bad = lower & ~below_m
                if bad.any():
                    z, y = _first(bad)
                    raise _Violation(f"{label}_meet", (x, y))
                upper = div[x, :][:, None] & div.T         # x <= z, y <= z
                j = join[x]
                if not (div[x, j].all() and div[np.arange(n), j].all()):
                    y = int(np.argmax(~(div[x, j] & div[np.arange(n), j])))
                    raise _Violation(f"{label}_join", (x, y))
                above_j = div[j, :].T                      # [z, y]: join(x,y) <= z
                bad = upper & ~above_j
                if bad.any():
                    z, y = _first(bad)
                    raise _Violation(f"{label}_join", (x, y))
            checks.append(f"{label}_meets_and_joins")

        # atoms: exactly the simples with no proper nontrivial left divisor
        nontrivial = L.sum(axis=0) == 2
        nontrivial[0] = False
        atoms = set(lat.atoms)
        for x in range(n):
            if bool(nontrivial[x]) != (x in atoms):
                raise _Violation("atoms_are_minimal", (x,))
        checks.append("atoms_are_minimal")
        for x in range(1, n):
            if not any(L[a, x] for a in lat.atoms):
                raise _Violation("atoms_generate", (x,))
        checks.append("atoms_generate")

        phi = np.asarray(lat.delta_conj)
        check("delta_conj_is_permutation", len(set(phi.tolist())) != n, (0,))
        check("delta_conj_preserves_order", L[np.ix_(phi, phi)] != L)
        defined = product >= 0
        pp = np.where(defined, phi[np.where(defined, product, 0)], -1)
        check("delta_conj_preserves_products", product[np.ix_(phi, phi)] != pp)
    except _Violation as v:
        return ValidationReport(False, checks, v.axiom, v.witness)
    return ValidationReport(True, checks)


def permutation_order(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    order = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        k, j = 0, i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            k += 1
        order = order * k // math.gcd(order, k)
    return order


def delta_automorphism_order(lat: SimpleLattice) -> int:
    """Smallest ``d >= 1`` such that conjugation by Delta^d fixes every simple."""
    return permutation_order(lat.delta_conj)
