"""Positive elements of a Garside monoid in left-greedy normal form.

An element is a tuple of simple ids ``(x1, ..., xm)`` with no unit factor
and every consecutive pair left-weighted; the empty tuple is the identity.
Delta factors are kept as ordinary factors (no separate infimum).

Right-hand operations (right division, right gcd, left lcm) are computed in
the opposite monoid, whose simples are the same but whose products are read
backwards: an element ``g`` of ``M`` corresponds to ``reversed(g)`` in
``M^op``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from .errors import NotADivisor
from .lattice import SimpleLattice, delta_automorphism_order

Element = tuple[int, ...]

IDENTITY: Element = ()


class GarsideMonoid:
    """Element-level operations over a :class:`SimpleLattice`."""

    def __init__(self, lattice: SimpleLattice, _op: "GarsideMonoid | None" = None):
        self.lattice = lattice
        self.n = lattice.n
        self.delta = lattice.delta
        self._op = _op
        self._cache_tables()
        # bound caches; elements are tuples so they hash cheaply
        self._nf = lru_cache(maxsize=None)(self._normal_form)
        self.multiply = lru_cache(maxsize=1 << 18)(self._multiply)
        self.left_gcd = lru_cache(maxsize=1 << 18)(self._left_gcd)
        self.right_lcm = lru_cache(maxsize=1 << 18)(self._right_lcm)
        self._left_quotient = lru_cache(maxsize=1 << 18)(self._left_quotient_impl)

    def _cache_tables(self):
        lat = self.lattice
        self._rl = lat.renorm_left
        self._rr = lat.renorm_right
        self._ldiv = lat.ldiv
        self._under = lat.under
        self._meet = lat.meet
        self._join = lat.join

    @property
    def op(self) -> "GarsideMonoid":
        """The opposite monoid (built lazily, linked back to ``self``)."""
        if self._op is None:
            self._op = GarsideMonoid(self.lattice.opposite(), _op=self)
        return self._op

    @property
    def atoms(self) -> list[int]:
        return self.lattice.atoms

    # -- conversions -------------------------------------------------------

    def simple(self, x: int) -> Element:
        return () if x == 0 else (x,)

    def delta_power(self, k: int) -> Element:
        if k < 0:
            raise ValueError("only non-negative powers of Delta are positive")
        return (self.delta,) * k

    def from_atoms(self, atom_numbers: Iterable[int]) -> Element:
        """Element given by a word of atom numbers (indices into ``atom_names``)."""
        return self.normal_form(tuple(self.lattice.atoms[i] for i in atom_numbers))

    def atom_length(self, g: Element) -> int:
        length = self.lattice.length
        return sum(length[x] for x in g)

    def word(self, g: Element) -> tuple[int, ...]:
        """A canonical atom word (atom numbers) representing ``g``."""
        words = self.lattice.words
        return tuple(a for x in g for a in words[x])

    def format(self, g: Element) -> str:
        if not g:
            return "1"
        names = self.lattice.atom_names
        return ".".join(names[a] for a in self.word(g))

    def _to_op(self, g: Element) -> Element:
        return self.op.normal_form(tuple(reversed(g)))

    def _from_op(self, g: Element) -> Element:
        return self.normal_form(tuple(reversed(g)))

    # -- normal forms ------------------------------------------------------

    def is_normal(self, g: Sequence[int]) -> bool:
        if any(x == 0 for x in g):
            return False
        rl = self._rl
        return all(rl[g[i]][g[i + 1]] == g[i] for i in range(len(g) - 1))

    def _append_simple(self, out: list[int], y: int) -> None:
        """Right-multiply the normal form ``out`` (in place) by the simple ``y``."""
        if y == 0:
            return
        rl, rr = self._rl, self._rr
        out.append(y)
        i = len(out) - 2
        while i >= 0:
            a, b = out[i], out[i + 1]
            na = rl[a][b]
            if na == a:
                break
            out[i] = na
            out[i + 1] = rr[a][b]
            i -= 1
        while out and out[-1] == 0:
            out.pop()

    def normal_form(self, word: Iterable[int]) -> Element:
        """Left-greedy normal form of a word of simples."""
        return self._nf(tuple(word))

    def _normal_form(self, word: tuple[int, ...]) -> Element:
        out: list[int] = []
        for y in word:
            self._append_simple(out, y)
        return tuple(out)

    def _multiply(self, g: Element, h: Element) -> Element:
        if not h:
            return g
        if not g:
            return h
        out = list(g)
        for y in h:
            self._append_simple(out, y)
        return tuple(out)

    def product(self, *elements: Element) -> Element:
        out: Element = ()
        for e in elements:
            out = self.multiply(out, e)
        return out

    def power(self, g: Element, k: int) -> Element:
        out: Element = ()
        for _ in range(k):
            out = self.multiply(out, g)
        return out

    # -- heads ---------------------------------------------------------------

    def head(self, g: Element) -> int:
        """First factor of the normal form, i.e. ``left_gcd(g, Delta)``."""
        return g[0] if g else 0

    def tail(self, g: Element) -> Element:
        return g[1:]

    # -- divisibility ------------------------------------------------------

    def _left_quotient_impl(self, g: Element, h: Element) -> Element | None:
        under = self._under
        for x in g:
            if not h:
                return None
            c = under[x][h[0]]
            if c < 0:
                return None
            h = self.normal_form((c,) + h[1:])
        return h

    def left_divides(self, g: Element, h: Element) -> bool:
        """``g`` left-divides ``h``: ``h = g.x`` for some positive ``x``."""
        return self._left_quotient(g, h) is not None

    def left_divide_exact(self, g: Element, h: Element) -> Element:
        """The unique ``x`` with ``h = g.x``."""
        x = self._left_quotient(g, h)
        if x is None:
            raise NotADivisor(f"{self.format(g)} does not left-divide {self.format(h)}")
        return x

    def right_divides(self, g: Element, h: Element) -> bool:
        """``g`` right-divides ``h``: ``h = x.g`` for some positive ``x``."""
        return self.op.left_divides(self._to_op(g), self._to_op(h))

    def right_divide_exact(self, g: Element, h: Element) -> Element:
        """The unique ``x`` with ``h = x.g``."""
        x = self.op._left_quotient(self._to_op(g), self._to_op(h))
        if x is None:
            raise NotADivisor(f"{self.format(g)} does not right-divide {self.format(h)}")
        return self._from_op(x)

    # -- gcd / lcm ---------------------------------------------------------

    def _left_gcd(self, g: Element, h: Element) -> Element:
        meet = self._meet
        out: list[int] = []
        while g and h:
            d = meet[g[0]][h[0]]
            if d == 0:
                break
            self._append_simple(out, d)
            g = self._left_quotient((d,), g)
            h = self._left_quotient((d,), h)
        return tuple(out)

    def _lcm_with_simple(self, s: int, h: Element) -> int:
        """The simple ``b`` with ``right_lcm(s, h) = h.b``.

        Uses ``lcm(s, x.h') = x.lcm(b, h')`` where ``lcm(s, x) = x.b``.
        """
        join, under = self._join, self._under
        b = s
        for x in h:
            if b == 0:
                break
            b = under[x][join[b][x]]
        return b

    def _right_lcm(self, g: Element, h: Element) -> Element:
        # lcm(s.g', h) = s.lcm(g', s\lcm(s, h))
        out: list[int] = []
        while g and h:
            s, g = g[0], g[1:]
            b = self._lcm_with_simple(s, h)
            h = self._left_quotient((s,), self.multiply(h, self.simple(b)))
            self._append_simple(out, s)
        for y in g or h:
            self._append_simple(out, y)
        return tuple(out)

    def right_gcd(self, g: Element, h: Element) -> Element:
        return self._from_op(self.op.left_gcd(self._to_op(g), self._to_op(h)))

    def left_lcm(self, g: Element, h: Element) -> Element:
        return self._from_op(self.op.right_lcm(self._to_op(g), self._to_op(h)))

    def left_gcd_all(self, elements: Iterable[Element]) -> Element:
        it = iter(elements)
        out = next(it)
        for e in it:
            out = self.left_gcd(out, e)
        return out

    def right_lcm_all(self, elements: Iterable[Element]) -> Element:
        out: Element = ()
        for e in elements:
            out = self.right_lcm(out, e)
        return out

    # -- Delta conjugation -------------------------------------------------

    def delta_conjugate(self, g: Element, power: int = 1) -> Element:
        """``Delta^-power . g . Delta^power`` applied factor-wise."""
        order = self.delta_order
        k = power % order
        if k == 0 or not g:
            return g
        phi = self.lattice.delta_conj
        out = g
        for _ in range(k):
            out = tuple(phi[x] for x in out)
        return out

    @property
    def delta_order(self) -> int:
        if not hasattr(self, "_delta_order"):
            self._delta_order = delta_automorphism_order(self.lattice)
        return self._delta_order

    # -- enumeration -------------------------------------------------------

    def followers(self, x: int) -> list[int]:
        """Non-unit simples ``y`` such that ``(x, y)`` is left-weighted."""
        if not hasattr(self, "_followers"):
            rl = self._rl
            self._followers = [
                [y for y in range(1, self.n) if rl[a][y] == a] for a in range(self.n)
            ]
        return self._followers[x]

    def elements_up_to(self, garside_length: int) -> list[Element]:
        """All elements whose normal form has at most ``garside_length`` factors."""
        out: list[Element] = [()]
        layer: list[Element] = [()]
        for _ in range(garside_length):
            nxt = []
            for g in layer:
                cands = range(1, self.n) if not g else self.followers(g[-1])
                nxt.extend(g + (y,) for y in cands)
            out.extend(nxt)
            layer = nxt
        return out
