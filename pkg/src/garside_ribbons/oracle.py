"""Brute-force reference implementations.

Nothing here uses meets, joins, heads or complements. The oracle works on a
:class:`Ball`: all elements of atom length at most ``bound``, generated by
multiplying atoms, together with the list of ways each element splits off an
atom on the left and on the right. Divisors, gcds, lcms, heads and ribbon
prefixes are then found by exhaustive scans.

Normal forms themselves are checked separately against word rewriting
(:func:`atom_word_classes`), which never touches the normal-form code.
"""

from __future__ import annotations

import dataclasses
import itertools

import numpy as np

from .errors import BoundExceeded, InternalError
from .lattice import SimpleLattice
from .monoid import Element, GarsideMonoid
from .parabolic import StandardParabolic

DEFAULT_BOUND = 4


class Ball:
    """Elements of atom length ``<= bound`` with their atom splittings."""

    def __init__(self, M: GarsideMonoid, bound: int = DEFAULT_BOUND):
        self.M = M
        self.bound = bound
        self.levels: list[list[Element]] = [[()]]
        self.rsplit: dict[Element, list[tuple[Element, int]]] = {(): []}   # h = x.a
        self.lsplit: dict[Element, list[tuple[int, Element]]] = {(): []}   # h = a.x
        for _ in range(bound):
            layer: dict[Element, None] = {}
            for x in self.levels[-1]:
                for a in M.atoms:
                    h = M.multiply(x, (a,))
                    self.rsplit.setdefault(h, []).append((x, a))
                    layer[h] = None
                    h2 = M.multiply((a,), x)
                    self.lsplit.setdefault(h2, []).append((a, x))
                    layer[h2] = None
            self.levels.append(list(layer))
        self._ldivs: dict[Element, frozenset[Element]] = {}
        self._rdivs: dict[Element, frozenset[Element]] = {}
        self._rmult: dict[Element, set[Element]] | None = None
        self._lmult: dict[Element, set[Element]] | None = None

    def __contains__(self, g: Element) -> bool:
        return g in self.rsplit

    @property
    def elements(self) -> list[Element]:
        return [g for level in self.levels for g in level]

    def elements_up_to(self, k: int) -> list[Element]:
        return [g for level in self.levels[:k + 1] for g in level]

    def _need(self, g: Element):
        if g not in self.rsplit:
            raise BoundExceeded(f"element {self.M.format(g)} is outside the oracle ball "
                                f"(atom length bound {self.bound})")

    def left_divisors(self, h: Element) -> frozenset[Element]:
        self._need(h)
        out = self._ldivs.get(h)
        if out is None:
            acc = {h}
            for x, _ in self.rsplit[h]:
                acc |= self.left_divisors(x)
            out = self._ldivs[h] = frozenset(acc)
        return out

    def right_divisors(self, h: Element) -> frozenset[Element]:
        self._need(h)
        out = self._rdivs.get(h)
        if out is None:
            acc = {h}
            for _, x in self.lsplit[h]:
                acc |= self.right_divisors(x)
            out = self._rdivs[h] = frozenset(acc)
        return out

    def right_multiples(self, g: Element) -> set[Element]:
        """Elements of the ball that ``g`` left-divides."""
        if self._rmult is None:
            self._rmult = {}
            for h in self.elements:
                for d in self.left_divisors(h):
                    self._rmult.setdefault(d, set()).add(h)
        return self._rmult.get(g, set())

    def left_multiples(self, g: Element) -> set[Element]:
        if self._lmult is None:
            self._lmult = {}
            for h in self.elements:
                for d in self.right_divisors(h):
                    self._lmult.setdefault(d, set()).add(h)
        return self._lmult.get(g, set())

    def in_submonoid(self, h: Element, atoms: frozenset[int]) -> bool:
        """``h`` is a product of atoms from ``atoms``."""
        return _in_sub(self, h, atoms)


def _in_sub(ball: Ball, h: Element, atoms: frozenset[int]) -> bool:
    memo = ball.__dict__.setdefault("_sub_memo", {})
    key = (h, atoms)
    if key in memo:
        return memo[key]
    ball._need(h)
    res = not h or any(a in atoms and _in_sub(ball, x, atoms) for x, a in ball.rsplit[h])
    memo[key] = res
    return res


def _maximum(cands, divisors_of) -> Element:
    """The element of ``cands`` divisible by all others (unique if it exists)."""
    cands = list(cands)
    for m in cands:
        divs = divisors_of(m)
        if all(c in divs for c in cands):
            return m
    raise InternalError("no maximum among candidates", count=len(cands))


def _minimum(cands, divisors_of) -> Element:
    cands = list(cands)
    for m in cands:
        if all(m in divisors_of(c) for c in cands):
            return m
    raise InternalError("no minimum among candidates", count=len(cands))


def enumerate_left_divisors(ball: Ball, g: Element) -> frozenset[Element]:
    return ball.left_divisors(g)


def brute_left_gcd(ball: Ball, g: Element, h: Element) -> Element:
    common = ball.left_divisors(g) & ball.left_divisors(h)
    return _maximum(common, ball.left_divisors)


def brute_right_gcd(ball: Ball, g: Element, h: Element) -> Element:
    common = ball.right_divisors(g) & ball.right_divisors(h)
    return _maximum(common, ball.right_divisors)


def brute_right_lcm(ball: Ball, g: Element, h: Element) -> Element | None:
    """Right-lcm if some common right multiple lies in the ball, else None."""
    common = ball.right_multiples(g) & ball.right_multiples(h)
    if not common:
        return None
    return _minimum(common, ball.left_divisors)


def brute_left_lcm(ball: Ball, g: Element, h: Element) -> Element | None:
    common = ball.left_multiples(g) & ball.left_multiples(h)
    if not common:
        return None
    return _minimum(common, ball.right_divisors)


def brute_head_P(ball: Ball, P: StandardParabolic, g: Element) -> Element:
    cands = [d for d in ball.left_divisors(g) if ball.in_submonoid(d, P.atoms)]
    return _maximum(cands, ball.left_divisors)


def brute_is_ribbon(ball: Ball, P: StandardParabolic, g: Element) -> bool:
    """Reduced (no atom of P left-divides ``g``) and ``g`` left-divides ``a.g`` for atoms a of P."""
    M = ball.M
    divs = ball.left_divisors(g)
    if any((a,) in divs for a in P.atoms):
        return False
    for a in P.atoms:
        ag = M.multiply((a,), g)
        if g not in ball.left_divisors(ag):
            return False
    return True


def brute_ribbon_prefix(ball: Ball, P: StandardParabolic, g: Element) -> Element:
    cands = [d for d in ball.left_divisors(g) if brute_is_ribbon(ball, P, d)]
    return _maximum(cands, ball.left_divisors)


def brute_factor_atoms(ball: Ball, b: Element) -> frozenset[int]:
    factors = set()
    for r in ball.right_divisors(b):
        factors |= ball.left_divisors(r)
    return frozenset(f[0] for f in factors if len(f) == 1 and ball.M.lattice.is_atom(f[0]))


def brute_smallest_parabolic(ball: Ball, b: Element) -> frozenset[int]:
    atoms = brute_factor_atoms(ball, b)
    standard = standard_atom_sets_by_definition(ball.M.lattice)
    containing = [T for T in standard if atoms <= T]
    smallest = min(containing, key=len)
    if any(not smallest <= T for T in containing):
        raise InternalError("no smallest standard parabolic", atoms=sorted(atoms))
    return smallest


# -- standard parabolics straight from the definition ---------------------------------

_STANDARD_CACHE: dict[int, tuple[SimpleLattice, dict[frozenset[int], int]]] = {}


def standard_atom_sets_by_definition(lat: SimpleLattice,
                                     max_atoms: int = 16) -> dict[frozenset[int], int]:
    """Map each standard parabolic atom set to its Delta (the left head of Delta).

    An atom set T qualifies when the simples it generates are closed under
    taking factors and every simple has a maximal left-divisor and a maximal
    right-divisor among them; checking simples suffices for heads.
    """
    key = id(lat)
    if key in _STANDARD_CACHE and _STANDARD_CACHE[key][0] is lat:
        return _STANDARD_CACHE[key][1]
    k = len(lat.atoms)
    if k > max_atoms:
        raise BoundExceeded(f"{k} atoms: too many subsets to enumerate")
    n = lat.n
    L = np.asarray(lat.ldiv)
    R = np.asarray(lat.rdiv)
    length = np.asarray(lat.length)[:, None]
    factor = (L.astype(np.int64) @ R.astype(np.int64)) > 0      # [y, x]: y factor of x
    under = lat.under
    out: dict[frozenset[int], int] = {}
    for r in range(k + 1):
        for combo in itertools.combinations(lat.atoms, r):
            T = frozenset(combo)
            gen = np.zeros(n, dtype=bool)
            gen[0] = True
            for x in range(1, n):
                gen[x] = any(L[a, x] and gen[under[a][x]] for a in T)
            if (factor[:, gen] & ~gen[:, None]).any():
                continue
            ok = True
            heads = None
            for div in (L, R):
                C = div & gen[:, None]
                m = np.argmax(np.where(C, length, -1), axis=0)
                if (C & ~div[:, m]).any():
                    ok = False
                    break
                if heads is None:
                    heads = m
            if ok:
                out[T] = int(heads[lat.delta])
    _STANDARD_CACHE[key] = (lat, out)
    return out


# -- normal forms against word rewriting -----------------------------------------------


def simple_atom_words(lat: SimpleLattice) -> list[set[tuple[int, ...]]]:
    """All atom words (atom numbers) of each simple."""
    words: list[set[tuple[int, ...]]] = [set() for _ in range(lat.n)]
    words[0].add(())
    for x in range(1, lat.n):       # ids are sorted by length
        for i, a in enumerate(lat.atoms):
            r = lat.under[a][x]
            if r >= 0:
                words[x].update((i,) + w for w in words[r])
    return words


def atom_word_classes(lat: SimpleLattice, max_len: int) -> list[list[tuple[int, ...]]]:
    """Partition all atom words of length ``<= max_len`` into equivalence
    classes under the relations ``u = v`` for any two atom words of one simple.
    """
    words_of = simple_atom_words(lat)
    rel: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for ws in words_of:
        if len(ws) > 1:
            for w in ws:
                rel[w] = [v for v in ws if v != w]
    max_rel = max((len(w) for w in rel), default=0)
    k = len(lat.atoms)
    classes = []
    seen: set[tuple[int, ...]] = set()
    for length in range(max_len + 1):
        for word in itertools.product(range(k), repeat=length):
            if word in seen:
                continue
            cls = {word}
            stack = [word]
            while stack:
                w = stack.pop()
                for i in range(len(w)):
                    for j in range(i + 2, min(len(w), i + max_rel) + 1):
                        for v in rel.get(w[i:j], ()):
                            nw = w[:i] + v + w[j:]
                            if nw not in cls:
                                cls.add(nw)
                                stack.append(nw)
            seen |= cls
            classes.append(sorted(cls))
    return classes


@dataclasses.dataclass
class EquivalenceResult:
    name: str
    cases: int
    failures: int = 0
    out_of_bound: int = 0
    witness: object = None

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict:
        d = dataclasses.asdict(self)
        d["ok"] = self.ok
        return d


def _record(res: EquivalenceResult, ok: bool, *witness) -> None:
    res.cases += 1
    if not ok:
        res.failures += 1
        if res.witness is None:
            res.witness = list(witness)


def oracle_equivalence(M: GarsideMonoid, bound: int = DEFAULT_BOUND,
                       pair_bound: int | None = None) -> list[EquivalenceResult]:
    """Compare the optimized operations with the brute-force scans.

    Pairs range over elements of atom length ``<= pair_bound`` (default
    ``bound // 2``, so that products stay inside the ball); heads and smallest
    parabolics over the whole ball; ribbon prefixes over atom length
    ``< bound``. An lcm whose common multiples all lie outside the ball counts
    as out of bound, and is a failure only if the optimized lcm is short
    enough that the ball should have contained it.
    """
    from .parabolic import all_parabolics, head_P, is_P_reduced, smallest_parabolic_containing
    from .ribbon import ribbon_prefix

    ball = Ball(M, bound)
    pair_bound = bound // 2 if pair_bound is None else pair_bound
    pairs = ball.elements_up_to(pair_bound)
    fmt = M.format
    names = ["left_gcd", "right_gcd", "right_lcm", "left_lcm", "left_divides",
             "right_divides", "head_P", "ribbon_prefix", "smallest_parabolic"]
    out = {n: EquivalenceResult(n, 0) for n in names}

    for g in pairs:
        for h in pairs:
            w = (fmt(g), fmt(h))
            _record(out["left_gcd"], M.left_gcd(g, h) == brute_left_gcd(ball, g, h), *w)
            _record(out["right_gcd"], M.right_gcd(g, h) == brute_right_gcd(ball, g, h), *w)
            for name, fast, brute in (("right_lcm", M.right_lcm, brute_right_lcm),
                                      ("left_lcm", M.left_lcm, brute_left_lcm)):
                expect = brute(ball, g, h)
                got = fast(g, h)
                if expect is None:
                    out[name].out_of_bound += 1
                    _record(out[name], M.atom_length(got) > bound, *w)
                else:
                    _record(out[name], got == expect, *w)
            _record(out["left_divides"], M.left_divides(g, h) == (g in ball.left_divisors(h)), *w)
            _record(out["right_divides"], M.right_divides(g, h) == (g in ball.right_divisors(h)), *w)

    for P in all_parabolics(M):
        for g in ball.elements:
            _record(out["head_P"], head_P(M, P, g) == brute_head_P(ball, P, g), sorted(P.atoms), fmt(g))
        for g in ball.elements_up_to(bound - 1):
            if is_P_reduced(M, P, g):
                _record(out["ribbon_prefix"],
                        ribbon_prefix(M, P, g)[0] == brute_ribbon_prefix(ball, P, g),
                        sorted(P.atoms), fmt(g))
    for b in ball.elements:
        _record(out["smallest_parabolic"],
                smallest_parabolic_containing(M, b).atoms == brute_smallest_parabolic(ball, b), fmt(b))
    return list(out.values())


def normal_form_equivalence(M: GarsideMonoid, max_len: int) -> EquivalenceResult:
    """Words equal under the defining relations get equal normal forms, and
    words in different classes get different ones."""
    lat = M.lattice
    res = EquivalenceResult("normal_form", 0)
    seen: dict[Element, tuple[int, ...]] = {}
    for cls in atom_word_classes(lat, max_len):
        forms = {M.from_atoms(w) for w in cls}
        _record(res, len(forms) == 1, [lat.atom_names[i] for i in cls[0]])
        g = next(iter(forms))
        _record(res, g not in seen, [lat.atom_names[i] for i in cls[0]])
        seen[g] = cls[0]
    return res
