"""Concrete Garside monoids: spherical Artin monoids and dual braid monoids of S_n.

Artin monoids are built from a Coxeter matrix. The Coxeter group is realised
as a permutation group on its root system: the roots are found once from the
geometric representation (floating point, rounded for identification) and
from then on every computation is exact on permutations.

Dual monoids are built for the symmetric group only. Permutations are tuples
``p`` with ``p[i]`` the image of ``i`` and compose left to right:
``(x.y)[i] = y[x[i]]``.
"""

from __future__ import annotations

import dataclasses
import itertools
import json
import math
import random
from collections import deque
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import AssumptionViolated, GroupNotFinite, InvalidCoxeterElement, InvalidSpec
from .lattice import interval_lattice
from .monoid import GarsideMonoid

GROUP_CAP = 10_000
ROOT_CAP = 4_000


# -- Coxeter matrices ---------------------------------------------------------


def coxeter_matrix(type_name: str) -> list[list[int]]:
    """Coxeter matrix of a named finite type: A_n, B_n, C_n, D_n, E_n, F4, G2, H3, H4, I2(m)."""
    t = type_name.strip().replace("_", "")
    if t.upper().startswith("I2(") and t.endswith(")"):
        m = int(t[3:-1])
        if m < 2:
            raise InvalidSpec(f"bad dihedral order in {type_name!r}")
        return [[1, m], [m, 1]]
    family, rank = t[0].upper(), t[1:]
    if not rank.isdigit():
        raise InvalidSpec(f"unknown Coxeter type {type_name!r}")
    n = int(rank)
    if n < 1:
        raise InvalidSpec(f"rank must be positive in {type_name!r}")
    m = [[2] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = 1

    def edge(i, j, v=3):
        m[i][j] = m[j][i] = v

    if family == "A":
        for i in range(n - 1):
            edge(i, i + 1)
    elif family in "BC":
        if n < 2:
            raise InvalidSpec("B_n needs n >= 2")
        edge(0, 1, 4)
        for i in range(1, n - 1):
            edge(i, i + 1)
    elif family == "D":
        if n < 4:
            raise InvalidSpec("D_n needs n >= 4")
        for i in range(n - 2):
            edge(i, i + 1)
        edge(n - 3, n - 1)
    elif family == "E":
        if n not in (6, 7, 8):
            raise InvalidSpec("E_n needs n in 6, 7, 8")
        # Bourbaki labelling: 1-3-4-5-6-7-8 with 2 attached to 4
        edge(0, 2)
        edge(1, 3)
        for i in range(2, n - 1):
            edge(i, i + 1)
    elif family == "F" and n == 4:
        edge(0, 1)
        edge(1, 2, 4)
        edge(2, 3)
    elif family == "G" and n == 2:
        edge(0, 1, 6)
    elif family == "H" and n in (3, 4):
        edge(0, 1, 5)
        for i in range(1, n - 1):
            edge(i, i + 1)
    else:
        raise InvalidSpec(f"unknown Coxeter type {type_name!r}")
    return m


def _check_matrix(m: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(m)
    if n == 0 or any(len(row) != n for row in m):
        raise InvalidSpec("Coxeter matrix must be square and non-empty")
    out = [[int(v) for v in row] for row in m]
    for i in range(n):
        if out[i][i] != 1:
            raise InvalidSpec("Coxeter matrix needs m(i,i) = 1")
        for j in range(n):
            if out[i][j] != out[j][i]:
                raise InvalidSpec("Coxeter matrix must be symmetric")
            if i != j and out[i][j] < 2:
                raise InvalidSpec("Coxeter matrix needs m(i,j) >= 2 off the diagonal")
    return out


@dataclasses.dataclass
class RootPermutationGroup:
    """A finite Coxeter group acting on its roots."""

    generators: list[tuple[int, ...]]
    positive: list[bool]

    def mul(self, x, y):
        # s_x s_y acts as x(y(r))
        return tuple(x[i] for i in y)

    def inv(self, x):
        out = [0] * len(x)
        for i, v in enumerate(x):
            out[v] = i
        return tuple(out)

    def length(self, x) -> int:
        pos = self.positive
        return sum(1 for r, img in enumerate(x) if pos[r] and not pos[img])


def root_permutation_group(m: Sequence[Sequence[int]]) -> RootPermutationGroup:
    m = _check_matrix(m)
    n = len(m)
    B = np.array([[-math.cos(math.pi / m[i][j]) for j in range(n)] for i in range(n)])
    roots: list[np.ndarray] = []
    index: dict[tuple, int] = {}

    def key(v):
        return tuple(np.round(v, 8) + 0.0)

    def add(v):
        k = key(v)
        if k not in index:
            index[k] = len(roots)
            roots.append(v)
            queue.append(len(roots) - 1)
        return index[k]

    def reflect(i, v):
        return v - 2.0 * (B[i] @ v) * np.eye(n)[i]

    queue: deque[int] = deque()
    for i in range(n):
        add(np.eye(n)[i])
    while queue:
        r = queue.popleft()
        for i in range(n):
            add(reflect(i, roots[r]))
        if len(roots) > ROOT_CAP:
            raise GroupNotFinite(f"root system exceeds {ROOT_CAP} roots")
    gens = [tuple(index[key(reflect(i, v))] for v in roots) for i in range(n)]
    positive = [bool(v.sum() > 0) for v in roots]
    return RootPermutationGroup(gens, positive)


def enumerate_group(gens, mul, identity, cap: int = GROUP_CAP) -> list:
    seen = {identity}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = mul(x, s)
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise GroupNotFinite(f"group order exceeds cap {cap}")
                queue.append(y)
    return list(seen)


def build_artin(spec: str | Sequence[Sequence[int]], cap: int = GROUP_CAP) -> GarsideMonoid:
    """Spherical Artin monoid of a named type (``"A3"``) or a Coxeter matrix.

    Simples are the elements of ``W``; ``u`` left-divides ``w`` iff lengths add.
    Atoms are named ``s1 .. sn``.
    """
    matrix = coxeter_matrix(spec) if isinstance(spec, str) else _check_matrix(spec)
    G = root_permutation_group(matrix)
    identity = tuple(range(len(G.positive)))
    elements = enumerate_group(G.generators, G.mul, identity, cap)
    names = [f"s{i + 1}" for i in range(len(matrix))]
    label = spec if isinstance(spec, str) else "matrix"
    lat = interval_lattice(elements, G.mul, G.inv, G.length, G.generators, names,
                           name=f"artin {label}")
    return GarsideMonoid(lat)


# -- dual braid monoids of symmetric groups --------------------------------------


def perm_mul(x, y):
    return tuple(y[i] for i in x)


def perm_inv(x):
    out = [0] * len(x)
    for i, v in enumerate(x):
        out[v] = i
    return tuple(out)


def reflection_length(p) -> int:
    n = len(p)
    seen = [False] * n
    cycles = 0
    for i in range(n):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = p[j]
    return n - cycles


def transposition(n: int, i: int, j: int) -> tuple[int, ...]:
    """The transposition of the 1-based letters ``i`` and ``j``."""
    p = list(range(n))
    p[i - 1], p[j - 1] = p[j - 1], p[i - 1]
    return tuple(p)


def dual_transpositions(n: int) -> list[tuple[int, int]]:
    """Transpositions ordered by gap, then by first letter: (1,2),(2,3),...,(1,3),..."""
    return [(i, i + d) for d in range(1, n) for i in range(1, n - d + 1)]


def build_dual(n: int, coxeter_word: Sequence[str] | None = None,
               coxeter_cycle: Sequence[int] | None = None) -> GarsideMonoid:
    """Dual braid monoid of ``S_n`` for a Coxeter element ``c``.

    ``c`` is given either as a word in the standard generators ``s_i = (i, i+1)``
    (default ``s1 s2 ... s_{n-1}``) or as an explicit cycle of 1-based letters.
    Atoms are all transpositions, named ``s1, s2, ...`` in the order of
    :func:`dual_transpositions`.
    """
    if n < 2:
        raise InvalidSpec("dual monoid needs n >= 2")
    if coxeter_cycle is not None:
        cyc = [int(v) for v in coxeter_cycle]
        if sorted(cyc) != list(range(1, n + 1)):
            raise InvalidCoxeterElement(f"cycle {cyc} is not an {n}-cycle on 1..{n}")
        img = list(range(n))
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a - 1] = b - 1
        c = tuple(img)
    else:
        if coxeter_word is None:
            coxeter_word = [f"s{i}" for i in range(1, n)]
        c = tuple(range(n))
        for tok in coxeter_word:
            tok = str(tok)
            if not (tok.startswith("s") and tok[1:].isdigit() and 1 <= int(tok[1:]) < n):
                raise InvalidCoxeterElement(f"unknown standard generator {tok!r}")
            i = int(tok[1:])
            c = perm_mul(c, transposition(n, i, i + 1))
    if reflection_length(c) != n - 1:
        raise InvalidCoxeterElement("Coxeter element must be a single n-cycle")

    pairs = dual_transpositions(n)
    ts = [transposition(n, i, j) for i, j in pairs]
    top = n - 1

    def below_c(w):
        return reflection_length(w) + reflection_length(perm_mul(perm_inv(w), c)) == top

    identity = tuple(range(n))
    seen = {identity}
    queue = deque([identity])
    while queue:
        w = queue.popleft()
        lw = reflection_length(w)
        for t in ts:
            v = perm_mul(w, t)
            if v not in seen and reflection_length(v) == lw + 1 and below_c(v):
                seen.add(v)
                queue.append(v)
    names = [f"s{k + 1}" for k in range(len(pairs))]
    lat = interval_lattice(sorted(seen), perm_mul, perm_inv, reflection_length, ts, names,
                           name=f"dual S{n}")
    lat.transpositions = pairs
    lat.coxeter_element = c
    return GarsideMonoid(lat)


# -- spec files -----------------------------------------------------------------


def build_from_spec(spec: dict) -> GarsideMonoid:
    """Build from a spec dict: ``{"kind": "artin", "type": "A3"}``,
    ``{"kind": "artin", "type": {"matrix": [[1, 3], [3, 1]]}}`` or
    ``{"kind": "dual", "n": 5, "coxeter_word": ["s1", "s2", "s3", "s4"]}``."""
    if not isinstance(spec, dict):
        raise InvalidSpec("spec must be a JSON object")
    kind = spec.get("kind")
    if kind == "artin":
        t = spec.get("type")
        if isinstance(t, dict) and "matrix" in t:
            return build_artin(t["matrix"])
        if isinstance(t, str):
            return build_artin(t)
        raise InvalidSpec("artin spec needs 'type' as a name or {'matrix': ...}")
    if kind == "dual":
        if "n" not in spec:
            raise InvalidSpec("dual spec needs 'n'")
        return build_dual(int(spec["n"]), spec.get("coxeter_word"), spec.get("coxeter_cycle"))
    raise InvalidSpec(f"unknown kind {kind!r}")


def load_spec(path: str | Path) -> GarsideMonoid:
    try:
        spec = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InvalidSpec(f"spec file is not valid JSON: {exc}") from exc
    return build_from_spec(spec)


# -- assumption checks -----------------------------------------------------------


@dataclasses.dataclass
class CheckReport:
    name: str
    ok: bool
    cases: int
    exhaustive: bool = True
    witness: object = None

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    def raise_if_failed(self):
        if not self.ok:
            raise AssumptionViolated(f"{self.name} fails", witness=self.witness)
        return self


def _atom_subsets(k: int, exhaustive_limit: int, samples: int, seed: int):
    if 2 ** k <= exhaustive_limit:
        return (frozenset(c) for r in range(k + 1) for c in itertools.combinations(range(k), r)), True
    rng = random.Random(seed)
    return (frozenset(i for i in range(k) if rng.random() < 0.5) for _ in range(samples)), False


def check_assumption_1(M: GarsideMonoid, exhaustive_limit: int = 1 << 12,
                       samples: int = 4096, seed: int = 0) -> CheckReport:
    """For every atom subset, its right-lcm must be Delta of the smallest
    standard parabolic submonoid containing it.

    The standard parabolics are found from the definition (factor-closed
    submonoids with left and right heads), not from the closure operator.
    """
    from .oracle import standard_atom_sets_by_definition

    lat = M.lattice
    standard = standard_atom_sets_by_definition(lat)
    subsets, exhaustive = _atom_subsets(len(lat.atoms), exhaustive_limit, samples, seed)
    cases = 0
    for sub in subsets:
        cases += 1
        atoms = frozenset(lat.atoms[i] for i in sub)
        lcm = M.right_lcm_all(M.simple(a) for a in atoms)
        containing = [T for T in standard if atoms <= T]
        smallest = min(containing, key=len)
        if any(not smallest <= T for T in containing):
            return CheckReport("assumption_1", False, cases, exhaustive,
                               {"subset": _names(lat, atoms), "reason": "no smallest parabolic"})
        delta_T = standard[smallest]
        if lcm != M.simple(delta_T):
            return CheckReport("assumption_1", False, cases, exhaustive,
                               {"subset": _names(lat, atoms), "lcm": M.format(lcm),
                                "delta_P": lat.simple_name(delta_T)})
    return CheckReport("assumption_1", True, cases, exhaustive)


def check_square_free(M: GarsideMonoid) -> CheckReport:
    """No atom has its square as a factor of Delta (equivalently, as a simple)."""
    lat = M.lattice
    for a in lat.atoms:
        if lat.product[a][a] >= 0:
            return CheckReport("square_free", False, len(lat.atoms), True,
                               {"atom": lat.atom_name(a)})
    return CheckReport("square_free", True, len(lat.atoms), True)


def check_factors_are_left_divisors(M: GarsideMonoid) -> CheckReport:
    """Every factor of a simple ``w`` left-divides ``w``."""
    lat = M.lattice
    L = np.asarray(lat.ldiv)
    R = np.asarray(lat.rdiv)
    factor = (L.astype(np.int64) @ R.astype(np.int64)) > 0   # [y, w]: y <= r, r right-divides w
    bad = factor & ~L
    if bad.any():
        y, w = (int(v) for v in np.argwhere(bad)[0])
        return CheckReport("factors_are_left_divisors", False, lat.n, True,
                           {"factor": lat.simple_name(y), "simple": lat.simple_name(w)})
    return CheckReport("factors_are_left_divisors", True, lat.n, True)


def _names(lat, atoms) -> list[str]:
    return sorted((lat.atom_name(a) for a in atoms), key=_atom_sort_key)


def _atom_sort_key(name: str):
    digits = "".join(ch for ch in name if ch.isdigit())
    return (int(digits) if digits else 0, name)
