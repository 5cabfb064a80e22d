"""Exhaustive replay of the ribbon and parabolic-subgroup invariants.

Each check is a function registered under a descriptive name. It receives a
:class:`SuiteContext` (a monoid plus the bounded sets of elements to range
over) and a :class:`Recorder` counting cases, failures and the first
counterexample. :func:`lemma_suite` runs them all and returns a
:class:`SuiteReport`.
"""

from __future__ import annotations

import dataclasses
import itertools
import time
from functools import cached_property
from typing import Callable

from .errors import GarsideError, NotConjugate
from .groups import (
    GroupFraction,
    conjugate_parabolics,
    group_conjugate,
    group_inverse,
    group_multiply,
    group_product,
    group_product,
    in_parabolic_group,
    minimal_standardizer,
    negative,
    positive,
    reduce_fraction,
    z_element,
)
from .monoid import Element, GarsideMonoid
from .parabolic import (
    StandardParabolic,
    all_parabolics,
    delta_element,
    factor_atoms,
    format_parabolic,
    head_and_tail,
    in_parabolic,
    is_P_reduced,
    parabolic_closure,
    right_head_P,
)
from .ribbon import (
    conjugate_if_defined,
    is_ribbon,
    make_ribbon,
    normal_form_ribbon_split,
    ribbon_factorization,
    ribbon_paths,
    ribbon_prefix,
    v_s_P,
)


@dataclasses.dataclass
class LemmaResult:
    name: str
    cases: int = 0
    failures: int = 0
    witness: object = None
    seconds: float = 0.0
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.failures == 0 and self.error is None

    def to_dict(self) -> dict:
        d = dataclasses.asdict(self)
        d["ok"] = self.ok
        d["seconds"] = round(self.seconds, 3)
        return d


@dataclasses.dataclass
class SuiteReport:
    instance: str
    bound: int
    results: list[LemmaResult]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def to_dict(self) -> dict:
        return {"instance": self.instance, "bound": self.bound, "ok": self.ok,
                "lemmas": [r.to_dict() for r in self.results]}


class Recorder:
    def __init__(self, result: LemmaResult, fmt: Callable):
        self.result = result
        self.fmt = fmt

    def check(self, condition: bool, *witness) -> None:
        self.result.cases += 1
        if not condition:
            self.result.failures += 1
            if self.result.witness is None:
                self.result.witness = [self.fmt(w) for w in witness]


class SuiteContext:
    """Monoid plus the bounded element sets the checks range over.

    ``bound`` caps the Garside length of ribbons and conjugators; quadratic
    checks range over ``pair_bound`` (defaults to ``min(bound, 2)``).
    """

    def __init__(self, M: GarsideMonoid, bound: int, pair_bound: int | None = None):
        self.M = M
        self.bound = bound
        self.pair_bound = min(bound, 2) if pair_bound is None else pair_bound
        self.parabolics = all_parabolics(M)

    @cached_property
    def elements(self) -> list[Element]:
        return self.M.elements_up_to(self.bound)

    @cached_property
    def small(self) -> list[Element]:
        return self.M.elements_up_to(self.pair_bound)

    @cached_property
    def simples(self) -> list[Element]:
        return self.M.elements_up_to(1)

    @cached_property
    def ribbons(self) -> dict[StandardParabolic, list[Element]]:
        return {P: [g for g in self.elements if is_ribbon(self.M, P, g)] for P in self.parabolics}

    @cached_property
    def reduced(self) -> dict[StandardParabolic, list[Element]]:
        return {P: [g for g in self.elements if is_P_reduced(self.M, P, g)]
                for P in self.parabolics}

    def p_elements(self, P: StandardParabolic, max_atoms: int = 2) -> list[Element]:
        """Products of at most ``max_atoms`` atoms of P."""
        out = {()}
        layer = {()}
        for _ in range(max_atoms):
            layer = {self.M.multiply(x, (a,)) for x in layer for a in P.atoms}
            out |= layer
        return sorted(out, key=lambda e: (len(e), e))

    def p_simples(self, P: StandardParabolic) -> list[Element]:
        ldiv = self.M.lattice.ldiv
        return [self.M.simple(x) for x in range(self.M.n) if ldiv[x][P.delta]]

    def fmt(self, obj):
        M = self.M
        if isinstance(obj, StandardParabolic):
            return format_parabolic(M, obj)
        if isinstance(obj, GroupFraction):
            return f"inv({M.format(obj.den)}).{M.format(obj.num)}"
        if isinstance(obj, tuple) and all(isinstance(v, int) for v in obj):
            return M.format(obj)
        if isinstance(obj, int):
            return M.lattice.atom_name(obj) if M.lattice.is_atom(obj) else obj
        return repr(obj)


LEMMAS: dict[str, Callable[[SuiteContext, Recorder], None]] = {}


def lemma(name: str):
    def register(fn):
        LEMMAS[name] = fn
        return fn
    return register


# -- parabolic submonoids ----------------------------------------------------------


@lemma("garside_element_of_parabolic")
def _garside_element(ctx: SuiteContext, rec: Recorder):
    M = ctx.M
    lat = M.lattice
    Delta = M.simple(M.delta)
    for P in ctx.parabolics:
        dP = M.simple(P.delta)
        rec.check(head_and_tail(M, P, Delta)[0] == dP, P, "left head of Delta")
        rec.check(right_head_P(M, P, Delta) == dP, P, "right head of Delta")
        for x in range(lat.n):
            if in_parabolic(M, P, M.simple(x)):
                rec.check(lat.ldiv[x][P.delta] == lat.rdiv[x][P.delta], P, M.simple(x))


@lemma("parabolic_head_left_multiplication")
def _head_mult(ctx: SuiteContext, rec: Recorder):
    M = ctx.M
    for P in ctx.parabolics:
        for g in ctx.small:
            h = head_and_tail(M, P, g)[0]
            for a in P.atoms:
                rec.check(head_and_tail(M, P, M.multiply((a,), g))[0] == M.multiply((a,), h),
                          P, a, g)


@lemma("closure_idempotent_monotone")
def _closure(ctx: SuiteContext, rec: Recorder):
    M = ctx.M
    for P in ctx.parabolics:
        rec.check(parabolic_closure(M, P.atoms) == P, P)
        for s in M.atoms:
            rec.check(P.atoms <= parabolic_closure(M, P.atoms | {s}).atoms, P, s)


# -- ribbons --------------------------------------------------------------------------


@lemma("v_is_ribbon")
def _v_ribbon(ctx: SuiteContext, rec: Recorder):
    M = ctx.M
    for P in ctx.parabolics:
        for s in M.atoms:
            if s not in P.atoms:
                rec.check(is_ribbon(M, P, v_s_P(M, P, s)), P, s)


@lemma("atoms_of_ribbon_category")
def _atoms_of_category(ctx: SuiteContext, rec: Recorder):
    """An atom dividing a P-ribbon g forces v(s, P) to divide g."""
    M = ctx.M
    ldiv = M.lattice.ldiv
    for P, rs in ctx.ribbons.items():
        for g in rs:
            for s in M.atoms:
                if g and ldiv[s][g[0]]:
                    rec.check(M.left_divides(v_s_P(M, P, s), g), P, g, s)


@lemma("lcm_of_atom_and_ribbon")
def _lcm_atom_ribbon(ctx: SuiteContext, rec: Recorder):
    M = ctx.M
    for P, rs in ctx.ribbons.items():
        for g in rs:
            for s in P.atoms:
                rec.check(M.right_lcm((s,), g) == M.multiply((s,), g), P, g, s)


@lemma("ribbon_divides_past_P")
def _divides_past_P(ctx: SuiteContext, rec: Recorder):
    """For a P-ribbon g and x in P: g divides x.y iff g divides y."""
    M = ctx.M
    for P, rs in ctx.ribbons.items():
        xs = ctx.p_elements(P, 2)
        for g in rs:
            ys = ctx.simples + [M.multiply(g, z) for z in ctx.simples]
            for y in ys:
                base = M.left_divides(g, y)
                for x in xs:
                    rec.check(M.left_divides(g, M.multiply(x, y)) == base, P, g, x, y)


@lemma("head_preserved_by_ribbon")
def _head_preserved(ctx: SuiteContext, rec: Recorder):
    """T_P(g.h) = g.T_{P^g}(h) and H_P(g.h)^g = H_{P^g}(h)."""
    M = ctx.M
    split: dict = {}
    for P, rs in ctx.ribbons.items():
        for g in rs:
            Q = make_ribbon(M, P, g).target
            for h in ctx.small:
                key = (Q.atoms, h)
                if key not in split:
                    split[key] = (*head_and_tail(M, Q, h), is_ribbon(M, Q, h))
                H2, T2, h_ribbon = split[key]
                H1, T1 = head_and_tail(M, P, M.multiply(g, h))
                rec.check(T1 == M.multiply(g, T2), P, g, h, "tail")
                rec.check(conjugate_if_defined(M, H1, g) == H2, P, g, h, "head")
                if h_ribbon:
                    rec.check(is_ribbon(M, P, M.multiply(g, h)), P, g, h, "composition")


@lemma("gcd_lcm_conjugate_defined")
def _gcd_lcm_defined(ctx: SuiteContext, rec: Recorder):
    M = ctx.M
    for b in ctx.simples:
        if not b:
            continue
        ok = [g for g in ctx.small if conjugate_if_defined(M, b, g) is not None]
        for g, h in itertools.combinations(ok, 2):
            rec.check(conjugate_if_defined(M, b, M.left_gcd(g, h)) is not None, b, g, h, "gcd")
            rec.check(conjugate_if_defined(M, b, M.right_lcm(g, h)) is not None, b, g, h, "lcm")


@lemma("ribbon_target_is_parabolic")
def _category(ctx: SuiteContext, rec: Recorder):
    """P^g is standard parabolic, atoms go to atoms, Delta_P^g = Delta_{P^g},
    and conjugation by g is multiplicative on P."""
    M = ctx.M
    for P, rs in ctx.ribbons.items():
        ps = ctx.p_simples(P)
        for g in rs:
            try:
                r = make_ribbon(M, P, g)
            except GarsideError as exc:
                rec.check(False, P, g, str(exc))
                continue
            rec.check(True)
            for x in ps[1:]:
                cx = conjugate_if_defined(M, x, g)
                rec.check(cx is not None and in_parabolic(M, r.target, cx), P, g, x)
            for x, y in itertools.product(ps[1:4], repeat=2):
                lhs = conjugate_if_defined(M, M.multiply(x, y), g)
                rhs = M.multiply(conjugate_if_defined(M, x, g), conjugate_if_defined(M, y, g))
                rec.check(lhs == rhs, P, g, x, y)


@lemma("ribbon_is_product_of_v")
def _v_factorization(ctx: SuiteContext, rec: Recorder):
    M = ctx.M
    for P, rs in ctx.ribbons.items():
        for g in rs:
            try:
                steps = ribbon_factorization(M, P, g)
            except GarsideError as exc:
                rec.check(False, P, g, str(exc))
                continue
            word: Element = ()
            src = P
            ok = True
            for r in steps:
                ok &= r.source == src and r.word == v_s_P(M, src, _atom_for(M, src, r.word))
                word = M.multiply(word, r.word)
                src = r.target
            rec.check(ok and word == g, P, g)


def _atom_for(M, P, v) -> int:
    for s in M.atoms:
        if s not in P.atoms and v_s_P(M, P, s) == v:
            return s
    return -1


@lemma("normal_form_terms_are_ribbons")
def _nf_split(ctx: SuiteContext, rec: Recorder):
    M = ctx.M
    for P, rs in ctx.ribbons.items():
        for g in rs:
            try:
                pieces = normal_form_ribbon_split(M, make_ribbon(M, P, g))
            except GarsideError as exc:
                rec.check(False, P, g, str(exc))
                continue
            rec.check(M.product(*(p.word for p in pieces)) == g, P, g)


@lemma("ribbon_gcd_closure")
def _gcd_closure(ctx: SuiteContext, rec: Recorder):
    M = ctx.M
    for P, rs in ctx.ribbons.items():
        rs = [g for g in rs if len(g) <= ctx.pair_bound]
        for g, h in itertools.combinations(rs, 2):
            rec.check(is_ribbon(M, P, M.left_gcd(g, h)), P, g, h)


@lemma("ribbon_lcm_closure")
def _lcm_closure(ctx: SuiteContext, rec: Recorder):
    M = ctx.M
    for P, rs in ctx.ribbons.items():
        rs = [g for g in rs if len(g) <= ctx.pair_bound]
        for g, h in itertools.combinations(rs, 2):
            rec.check(is_ribbon(M, P, M.right_lcm(g, h)), P, g, h)


@lemma("ribbon_prefix")
def _ribbon_prefix(ctx: SuiteContext, rec: Recorder):
    """R_P(g) is a ribbon, the rest is P^R-reduced, and R_P(g) = 1 iff every
    atom dividing Delta_P.g lies in P."""
    M = ctx.M
    ldiv = M.lattice.ldiv
    for P, gs in ctx.reduced.items():
        dP = M.simple(P.delta)
        for g in gs:
            R, rest, Q = ribbon_prefix(M, P, g)
            rec.check(is_ribbon(M, P, R) and M.multiply(R, rest) == g, P, g, "ribbon")
            rec.check(is_P_reduced(M, Q, rest), P, g, "rest reduced")
            dg = M.multiply(dP, g)
            only_P = all(a in P.atoms for a in M.atoms if ldiv[a][dg[0]]) if dg else True
            rec.check((R == ()) == only_P, P, g, "trivial criterion")


def _delta_powers_dividing(M, P, b, max_power=3) -> bool:
    dP = M.simple(P.delta)
    return any(M.left_divides(dP, M.power(b, i)) for i in range(1, max_power + 1))


@lemma("positive_conjugacy")
def _positive_conjugacy(ctx: SuiteContext, rec: Recorder):
    """b in P with Delta_P | b^i, g P-reduced, b^g defined => g is a P-ribbon."""
    M = ctx.M
    for P, gs in ctx.reduced.items():
        bs = [b for b in ctx.p_simples(P)[1:] if _delta_powers_dividing(M, P, b)]
        for g in gs:
            for b in bs:
                if conjugate_if_defined(M, b, g) is not None:
                    rec.check(is_ribbon(M, P, g), P, b, g)


@lemma("tail_is_ribbon")
def _tail_ribbon(ctx: SuiteContext, rec: Recorder):
    """Same hypotheses without reducedness => T_P(g) is a P-ribbon."""
    M = ctx.M
    for P in ctx.parabolics:
        bs = [b for b in ctx.p_simples(P)[1:] if _delta_powers_dividing(M, P, b)]
        for g in ctx.elements:
            for b in bs:
                if conjugate_if_defined(M, b, g) is not None:
                    rec.check(is_ribbon(M, P, head_and_tail(M, P, g)[1]), P, b, g)


@lemma("conjugating_delta_power")
def _delta_power(ctx: SuiteContext, rec: Recorder):
    """(Delta_P^k)^g in Q => T_P(g) is a ribbon into Q; onto Q if it equals Delta_Q^k."""
    M = ctx.M
    for P in ctx.parabolics:
        for k in sorted({1, P.central_exponent}):
            dk = delta_element(M, P, k)
            for g in ctx.elements:
                u = conjugate_if_defined(M, dk, g)
                if u is None:
                    continue
                T = head_and_tail(M, P, g)[1]
                for Q in ctx.parabolics:
                    if not in_parabolic(M, Q, u):
                        continue
                    ok = is_ribbon(M, P, T)
                    target = make_ribbon(M, P, T).target if ok else None
                    rec.check(ok and target.atoms <= Q.atoms, P, Q, g, k, "into")
                    if u == delta_element(M, Q, k):
                        rec.check(ok and target == Q, P, Q, g, k, "onto")


# -- group of fractions --------------------------------------------------------------


def _fraction_samples(ctx: SuiteContext, P: StandardParabolic) -> list[GroupFraction]:
    M = ctx.M
    atoms = sorted(P.atoms)
    out = set()
    for a in atoms:
        out.add(positive((a,)))
        out.add(negative((a,)))
    for a, b in itertools.permutations(atoms[:3], 2):
        out.add(reduce_fraction(M, (a,), (b,)))
    out.add(positive(M.simple(P.delta)))
    return sorted(out, key=lambda f: (f.den, f.num))


@lemma("group_axioms")
def _group_axioms(ctx: SuiteContext, rec: Recorder):
    M = ctx.M
    xs = [positive(g) for g in ctx.simples] + [negative(g) for g in ctx.simples[1:]]
    for x in xs:
        rec.check(group_multiply(M, x, group_inverse(M, x)).is_identity, x)
    for x, y, z in itertools.islice(itertools.product(xs, repeat=3), 4000):
        lhs = group_multiply(M, group_multiply(M, x, y), z)
        rhs = group_multiply(M, x, group_multiply(M, y, z))
        rec.check(lhs == rhs, x, y, z)


@lemma("reduced_fraction_in_parabolic")
def _fraction_components(ctx: SuiteContext, rec: Recorder):
    """G_P meets M in P, and reduced fractions of elements of G_P have components in P."""
    M = ctx.M
    for P in ctx.parabolics:
        samples = _fraction_samples(ctx, P)
        for x, y in itertools.product(samples, repeat=2):
            rec.check(in_parabolic_group(M, P, group_multiply(M, x, y)), P, x, y)


@lemma("head_in_P")
def _head_in_P(ctx: SuiteContext, rec: Recorder):
    """b in G_P, g in M with b^g in M => b^{H_P(g)} in P."""
    M = ctx.M
    for P in ctx.parabolics:
        samples = _fraction_samples(ctx, P)
        for g in ctx.small:
            H = positive(head_and_tail(M, P, g)[0])
            for b in samples:
                if group_conjugate(M, b, positive(g)).is_positive:
                    c = group_conjugate(M, b, H)
                    rec.check(c.is_positive and in_parabolic(M, P, c.num), P, b, g)


class _ConjugationTable:
    """Atom images ``a^g`` per (P, g), computed once."""

    def __init__(self, ctx: SuiteContext):
        self.ctx = ctx
        self._images: dict = {}

    def images(self, P: StandardParabolic, g: GroupFraction) -> list[GroupFraction]:
        key = (P.atoms, g)
        if key not in self._images:
            M = self.ctx.M
            self._images[key] = [group_conjugate(M, positive((a,)), g) for a in sorted(P.atoms)]
        return self._images[key]

    def into(self, P, Q, g) -> bool:
        M = self.ctx.M
        return all(in_parabolic_group(M, Q, x) for x in self.images(P, g))

    def onto(self, P, Q, g) -> bool:
        return (P.rank == Q.rank and self.into(P, Q, g)
                and self.into(Q, P, group_inverse(self.ctx.M, g)))


def _conjugators(ctx: SuiteContext, negatives: list[Element] | None = None) -> list[GroupFraction]:
    """Positive elements of length <= pair_bound, plus inverses of ``negatives``."""
    pos = [positive(g) for g in ctx.small]
    return pos + [negative(g) for g in (negatives or []) if g]


def _central_positive(M: GarsideMonoid, x: GroupFraction) -> tuple[Element, int]:
    """``(x . Delta^i, i)`` with ``Delta^i`` central and the product positive."""
    order = M.delta_order
    i = order * -(-len(x.den) // order) if x.den else 0
    return group_multiply(M, x, positive(M.delta_power(i))).num, i


def _ribbon_witness(M: GarsideMonoid, P: StandardParabolic, Q: StandardParabolic,
                    g: GroupFraction) -> tuple[Element, Element, int, Element]:
    """Follow the constructive proof from ``(Delta_P^k)^g`` in G_Q to a P-ribbon.

    Returns ``(p, e, q, r)`` with ``r = p^-1 . Delta^e . g . q``, p in P,
    q in Q and ``Delta^e`` central (``e`` may be negative).
    """
    h, i = _central_positive(M, group_inverse(M, g))           # h = g^-1 Delta^i
    q, tq = head_and_tail(M, Q, h)
    m, j = _central_positive(M, negative(tq))                   # m = T_Q(h)^-1 Delta^j
    p, r = head_and_tail(M, P, m)
    return p, j - i, q, r


def _delta_shift(M: GarsideMonoid, e: int) -> GroupFraction:
    return positive(M.delta_power(e)) if e >= 0 else negative(M.delta_power(-e))


def _simple_conjugators(ctx: SuiteContext) -> list[GroupFraction]:
    return [positive(g) for g in ctx.simples] + [negative(g) for g in ctx.simples if g]


@lemma("conjugate_into_parabolic")
def _conjugate_into(ctx: SuiteContext, rec: Recorder):
    """G_P^g in G_Q  <=>  (Delta_P^k)^g in G_Q for some k  =>  a P-ribbon in
    G_P . g . G_Q . Delta^e (Delta^e central) lands inside Q."""
    M = ctx.M
    table = _ConjugationTable(ctx)
    for P in ctx.parabolics:
        if not P.atoms:
            continue
        powers = [positive(delta_element(M, P, P.central_exponent * j)) for j in (1, 2, 3)]
        for g in _simple_conjugators(ctx):
            zs = [group_conjugate(M, d, g) for d in powers]
            for Q in ctx.parabolics:
                into = table.into(P, Q, g)
                some_power = any(in_parabolic_group(M, Q, z) for z in zs)
                rec.check(into == some_power, P, Q, g, "(i)<=>(ii)")
                if not into:
                    continue
                p, e, q, r = _ribbon_witness(M, P, Q, g)
                ok = is_ribbon(M, P, r) and make_ribbon(M, P, r).target.atoms <= Q.atoms
                rebuilt = group_product(M, negative(p), _delta_shift(M, e), g, positive(q))
                rec.check(ok and rebuilt == positive(r) and in_parabolic(M, P, p)
                          and in_parabolic(M, Q, q), P, Q, g, "(ii)=>(iii)")


@lemma("conjugation_criterion")
def _conjequiv(ctx: SuiteContext, rec: Recorder):
    """g conjugates G_P onto G_Q iff it conjugates Delta_P^k to Delta_Q^k; for
    P-reduced positive g, conjugating Delta_P to Delta_Q is conjugating P to Q."""
    M = ctx.M
    table = _ConjugationTable(ctx)
    for P in ctx.parabolics:
        k = P.central_exponent
        dPk = positive(delta_element(M, P, k))
        for g in _conjugators(ctx):
            z = group_conjugate(M, dPk, g)
            reduced = g.is_positive and is_P_reduced(M, P, g.num)
            if reduced:
                d1 = conjugate_if_defined(M, M.simple(P.delta), g.num)
                target = make_ribbon(M, P, g.num).target if is_ribbon(M, P, g.num) else None
            for Q in ctx.parabolics:
                if Q.rank != P.rank:
                    continue
                onto = table.onto(P, Q, g)
                rec.check(onto == (z == positive(delta_element(M, Q, k))), P, Q, g, "subgroup")
                if onto:
                    rec.check(Q.central_exponent == k, P, Q, g, "central exponent")
                if reduced:
                    rec.check((d1 == M.simple(Q.delta)) == (target == Q), P, Q, g, "monoid")


@lemma("z_well_defined")
def _z_well_defined(ctx: SuiteContext, rec: Recorder):
    """z_K does not depend on the presentation K = G_P^g = G_{P'}^{r^-1 g}."""
    M = ctx.M
    conj = _conjugators(ctx, negatives=ctx.simples)[:60]
    for P in ctx.parabolics:
        paths = ribbon_paths(M, P)
        for g in conj:
            z = z_element(M, P, g)
            for P2, r in paths.items():
                g2 = group_multiply(M, negative(r), g)
                rec.check(z_element(M, P2, g2) == z, P, P2, g)


@lemma("z_detects_conjugacy")
def _z_conjugacy(ctx: SuiteContext, rec: Recorder):
    """K^x = K'  <=>  z_K^x = z_{K'}."""
    M = ctx.M
    table = _ConjugationTable(ctx)
    xs = [positive(g) for g in ctx.simples] + [negative(g) for g in ctx.simples[1:]]
    for P, Q in itertools.product(ctx.parabolics, repeat=2):
        if P.rank != Q.rank:
            continue
        for x in xs:
            # K = G_P, K' = G_Q
            lhs = table.onto(P, Q, x)
            rhs = group_conjugate(M, z_element(M, P, positive(())), x) == z_element(M, Q, positive(()))
            rec.check(lhs == rhs, P, Q, x)


@lemma("conjugate_parabolics_chain")
def _conjugate_chain(ctx: SuiteContext, rec: Recorder):
    M = ctx.M
    table = _ConjugationTable(ctx)
    for P, Q in itertools.product(ctx.parabolics, repeat=2):
        k = P.central_exponent
        try:
            r = conjugate_parabolics(M, P, Q)
        except NotConjugate:
            r = None
        if r is not None:
            g = positive(r.word)
            rec.check(r.target == Q, P, Q, "target")
            rec.check(table.onto(P, Q, g), P, Q, r.word, "(ii)")
            rec.check(z_element(M, P, g) == positive(delta_element(M, Q, k)), P, Q, r.word, "(iii)")
        else:
            for g in _conjugators(ctx, negatives=ctx.simples):
                if P.rank == Q.rank:
                    rec.check(z_element(M, P, g) != positive(delta_element(M, Q, k)), P, Q, g)


@lemma("standardizer_reduced_fraction")
def _standardizer(ctx: SuiteContext, rec: Recorder):
    M = ctx.M
    ldiv = M.lattice.ldiv
    for P in ctx.parabolics:
        for b in ctx.small:
            st = minimal_standardizer(M, P, b)
            Q = st.target
            dq = M.multiply(delta_element(M, Q, Q.central_exponent), st.minimal)
            atoms_ok = all(a in Q.atoms for a in M.atoms if dq and ldiv[a][dq[0]])
            rec.check(atoms_ok, P, b, "atoms of Delta_Q^k b'")
            rec.check(M.left_gcd(st.minimal, dq) == (), P, b, "reduced")
            rec.check(st.z == z_element(M, P, positive(b)), P, b, "z")
            rec.check(M.product(st.head, st.ribbon, st.minimal) == b, P, b, "factorisation")
            rec.check(st.z.is_positive == (st.minimal == ()), P, b, "z in M iff standard")


def lemma_suite(M: GarsideMonoid, bound: int, pair_bound: int | None = None,
                only: list[str] | None = None) -> SuiteReport:
    """Run every registered check with elements of Garside length ``<= bound``."""
    ctx = SuiteContext(M, bound, pair_bound)
    results = []
    for name, fn in LEMMAS.items():
        if only is not None and name not in only:
            continue
        res = LemmaResult(name)
        t0 = time.perf_counter()
        try:
            fn(ctx, Recorder(res, ctx.fmt))
        except GarsideError as exc:
            res.error = f"{exc.code}: {exc}"
        res.seconds = time.perf_counter() - t0
        results.append(res)
    return SuiteReport(M.lattice.name, bound, results)



def _standard_by_atoms(M: GarsideMonoid, P: StandardParabolic, x: GroupFraction) -> bool:
    """Whether ``G_P^x`` is a standard parabolic subgroup, decided on atoms only.

    ``Q`` = closure of the atoms occurring in the ``a^x`` (a in P) is the only
    candidate; ``G_P^x = G_Q`` iff every atom of Q conjugates back into G_P.
    """
    images = [group_conjugate(M, positive((a,)), x) for a in sorted(P.atoms)]
    occurring = set()
    for f in images:
        occurring |= factor_atoms(M, f.den) | factor_atoms(M, f.num)
    Q = parabolic_closure(M, occurring)
    if Q.rank != P.rank:
        return False
    back = group_inverse(M, x)
    return all(in_parabolic_group(M, P, group_conjugate(M, positive((c,)), back)) for c in Q.atoms)


def standardizer_minimality(M: GarsideMonoid, b_bound: int = 2,
                            u_bound: int = 2) -> list[LemmaResult]:
    """For K = G_P^b: every u in M (Garside length <= u_bound) with ``uKu^-1``
    standard is a left multiple of the minimal standardizer b', b' itself
    standardizes K, and ``z_K in M`` iff K is standard."""
    minimal = LemmaResult("standardizer_minimality")
    zstd = LemmaResult("z_in_M_iff_standard")
    fmt = SuiteContext(M, 1).fmt
    rec_min = Recorder(minimal, fmt)
    rec_z = Recorder(zstd, fmt)
    t0 = time.perf_counter()
    bs = M.elements_up_to(b_bound)
    us = M.elements_up_to(u_bound)
    for P in all_parabolics(M):
        for b in bs:
            st = minimal_standardizer(M, P, b)
            x = positive(b)
            standard = _standard_by_atoms(M, P, x)
            rec_z.check(standard == st.z.is_positive, P, b)
            rec_min.check(_standard_by_atoms(M, P, group_multiply(M, x, negative(st.minimal))),
                          P, b, st.minimal, "b' standardizes")
            for u in us:
                if _standard_by_atoms(M, P, group_multiply(M, x, negative(u))):
                    rec_min.check(M.right_divides(st.minimal, u), P, b, u)
    minimal.seconds = zstd.seconds = time.perf_counter() - t0
    return [minimal, zstd]


def conjugacy_coherence(M: GarsideMonoid, sample_bound: int = 2) -> LemmaResult:
    """For all pairs (P, Q): the ribbon search succeeds iff some sampled
    conjugator sends the smallest central power of Delta_P to that of Delta_Q,
    and a found ribbon does so itself."""
    res = LemmaResult("conjugacy_coherence")
    ctx = SuiteContext(M, sample_bound, sample_bound)
    rec = Recorder(res, ctx.fmt)
    t0 = time.perf_counter()
    samples = _conjugators(ctx, negatives=ctx.small)
    for P, Q in itertools.product(ctx.parabolics, repeat=2):
        k = P.central_exponent
        target = positive(delta_element(M, Q, k))
        try:
            r = conjugate_parabolics(M, P, Q)
        except NotConjugate:
            r = None
        if r is not None:
            rec.check(z_element(M, P, positive(r.word)) == target, P, Q, r.word, "ribbon")
            rec.check(Q.central_exponent == k, P, Q, "central exponent")
        for g in samples:
            if P.rank == Q.rank and z_element(M, P, g) == target:
                rec.check(r is not None, P, Q, g, "sampled conjugator without ribbon")
    res.seconds = time.perf_counter() - t0
    return res


@dataclasses.dataclass
class ConjectureWitness:
    parabolic: list[str]
    b: str
    g: str
    reason: str


@dataclasses.dataclass
class ConjectureScan:
    bound: int
    triples: int
    witnesses: list[ConjectureWitness]

    def to_dict(self) -> dict:
        return {"bound": self.bound, "triples": self.triples,
                "counterexamples": len(self.witnesses),
                "witnesses": [dataclasses.asdict(w) for w in self.witnesses]}


def conjecture_scan(M: GarsideMonoid, bound: int = 2) -> ConjectureScan:
    """Search for ``(P, b, g)`` with P the smallest standard parabolic containing
    ``b``, g P-reduced and ``b^g`` defined, but g not a P-ribbon."""
    from .parabolic import parabolic_names, smallest_parabolic_containing
    from .ribbon import ribbon_failure

    elements = M.elements_up_to(bound)
    witnesses = []
    triples = 0
    for b in elements[1:]:
        P = smallest_parabolic_containing(M, b)
        for g in elements:
            if not is_P_reduced(M, P, g) or conjugate_if_defined(M, b, g) is None:
                continue
            triples += 1
            reason = ribbon_failure(M, P, g)
            if reason is not None:
                witnesses.append(ConjectureWitness(parabolic_names(M, P), M.format(b),
                                                   M.format(g), reason))
    return ConjectureScan(bound, triples, witnesses)
