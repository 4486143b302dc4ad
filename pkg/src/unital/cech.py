"""Finite combinatorial sites and cocycle calculus on truncated Cech nerves.

A cover is a finite list of named parts plus a table saying which
intersections are nonempty and how many connected components each has.  Its
Cech nerve has, at level n, one cell per (n+1)-tuple of part indices (with
repetition) and per connected component of the corresponding intersection;
face maps drop indices.  Levels 0..3 are kept, which is exactly enough to
state the degree-0 and degree-1 cocycle conditions.

Sections of an abelian group over a level are plain functions from cells to
group elements.  The double complex of a coefficient complex X has
K^(p,q) = X^p(V_q); the total differential used throughout is

    D = d_X + (-1)^(p+1) * cech

chosen so that for a 2-term complex the component equations of a total
0-cocycle (a, b) read literally

    d0*(a) + d2*(a) = d1*(a)      and      d0*(b) = d1*(b) + lambda(a),

and the coboundary of alpha in A(V_0) acts by a += d0*alpha - d1*alpha,
b += lambda(alpha).  Classification groups are computed as homology of the
packed total complex in exact arithmetic; unit-cocycle classes are also
enumerated exhaustively and quotiented, which is how the contractibility
statements are checked at sheaf level.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import NamedTuple

from .abelian import (
    CapExceeded,
    FgAbGroup,
    FinitenessError,
    GroupElem,
    GroupHom,
    direct_sum,
    direct_sum_many,
    kernel,
    solve,
)
from .complexes import Complex2, Complex3, homology, unit_complex_2
from .point_models import JKUnit, PicardModel1, PicardModel2, SaavedraUnit

TOP_LEVEL = 3
MAX_CELLS_PER_LEVEL = 64


class CocycleError(ValueError):
    """A cocycle relation failed; ``relation`` names the violated equation."""

    def __init__(self, relation, where=None):
        self.relation = relation
        self.where = where
        msg = f"violated relation: {relation}"
        if where is not None:
            msg += f" at {where}"
        super().__init__(msg)


# --------------------------------------------------------------------------
# covers and nerves


@dataclass(frozen=True)
class Cover:
    """Named parts with an intersection table.

    ``components`` maps a frozenset of part indices to the tuple of its
    connected component names; missing non-singleton sets are empty
    intersections.  ``containments`` resolves which component of a larger
    intersection a component lands in, where that is ambiguous.
    """

    parts: tuple[str, ...]
    components: dict = field(default_factory=dict)
    containments: dict = field(default_factory=dict)

    def __post_init__(self):
        comps = {}
        for key, names in self.components.items():
            key = frozenset(int(i) for i in key)
            if not key or not (key <= set(range(len(self.parts)))):
                raise ValueError(f"bad intersection key {set(key)}")
            names = tuple(names)
            if not names:
                raise ValueError("declare at least one component or omit the set")
            comps[key] = names
        for i in range(len(self.parts)):
            comps.setdefault(frozenset([i]), ("*",))
        # closure under subsets: a nonempty intersection forces every
        # sub-intersection nonempty
        for key in comps:
            for r in range(1, len(key)):
                for sub in itertools.combinations(sorted(key), r):
                    if frozenset(sub) not in comps:
                        raise ValueError(
                            f"inconsistent table: {sorted(key)} is nonempty "
                            f"but {list(sub)} is not declared")
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "containments", dict(self.containments))

    def component_in(self, source_set, comp, target_set):
        """Component of the larger intersection containing (source_set, comp)."""
        if target_set == source_set:
            return comp
        names = self.components[target_set]
        if len(names) == 1:
            return names[0]
        key = (source_set, comp, target_set)
        if key in self.containments:
            return self.containments[key]
        raise ValueError(
            f"ambiguous component containment {sorted(source_set)}:{comp} -> "
            f"{sorted(target_set)}; declare it explicitly")


def point_cover():
    return Cover(("U",))


def cover_of_parts(parts, intersections, containments=None):
    """Build a cover from name-based data.

    ``intersections``: iterable of (part name tuple, component names).
    ``containments``: iterable of (parts, component, subparts, subcomponent).
    """
    parts = tuple(parts)
    idx = {p: i for i, p in enumerate(parts)}
    comps = {frozenset(idx[p] for p in key): tuple(names)
             for key, names in intersections}
    cont = {}
    for key, comp, sub, subcomp in (containments or ()):
        cont[(frozenset(idx[p] for p in key), comp,
              frozenset(idx[p] for p in sub))] = subcomp
    return Cover(parts, comps, cont)


class Nerve:
    """Truncated simplicial set of a cover, levels 0..3.

    Cells are (index tuple, component name) pairs, sorted; ``face(n, i, c)``
    drops index i.  The simplicial identities d_i d_j = d_(j-1) d_i for
    i < j are verified exhaustively at construction.
    """

    def __init__(self, cover: Cover):
        self.cover = cover
        nparts = len(cover.parts)
        self._cells = []
        for n in range(TOP_LEVEL + 1):
            level = []
            for tup in itertools.product(range(nparts), repeat=n + 1):
                key = frozenset(tup)
                for comp in cover.components.get(key, ()):
                    level.append((tup, comp))
            level.sort()
            if len(level) > MAX_CELLS_PER_LEVEL:
                raise CapExceeded(
                    f"level {n} has {len(level)} cells (cap "
                    f"{MAX_CELLS_PER_LEVEL})")
            self._cells.append(tuple(level))
        self._faces = {}
        for n in range(1, TOP_LEVEL + 1):
            for i in range(n + 1):
                fm = {}
                for tup, comp in self._cells[n]:
                    sub = tup[:i] + tup[i + 1:]
                    sub_comp = cover.component_in(frozenset(tup), comp,
                                                  frozenset(sub))
                    fm[(tup, comp)] = (sub, sub_comp)
                self._faces[(n, i)] = fm
        self._verify_simplicial_identities()

    def level(self, n):
        return self._cells[n]

    def face(self, n, i, cell):
        """i-th face of a level-n cell (a cell at level n-1)."""
        return self._faces[(n, i)][cell]

    def _verify_simplicial_identities(self):
        for n in range(2, TOP_LEVEL + 1):
            for j in range(n + 1):
                for i in range(j):
                    for cell in self._cells[n]:
                        left = self.face(n - 1, i, self.face(n, j, cell))
                        right = self.face(n - 1, j - 1, self.face(n, i, cell))
                        if left != right:
                            raise ValueError(
                                f"simplicial identity d_{i} d_{j} = "
                                f"d_{j - 1} d_{i} fails at {cell}")

    @property
    def total_cells(self):
        return sum(len(lv) for lv in self._cells)

    def __str__(self):
        sizes = ", ".join(str(len(lv)) for lv in self._cells)
        return f"Nerve(levels [{sizes}] of cover {list(self.cover.parts)})"


def cech_nerve(cover: Cover) -> Nerve:
    return Nerve(cover)


# --------------------------------------------------------------------------
# sections


@dataclass(frozen=True)
class SheafSections:
    """A function from the cells of one nerve level to a fixed group."""

    group: FgAbGroup
    level: int
    data: dict

    def __post_init__(self):
        for cell, val in self.data.items():
            if val.group != self.group:
                raise ValueError(f"value at {cell} lies in the wrong group")

    @classmethod
    def zero(cls, group, nerve, level):
        return cls(group, level,
                   {c: group.zero() for c in nerve.level(level)})

    @classmethod
    def constant(cls, value, nerve, level):
        return cls(value.group, level,
                   {c: value for c in nerve.level(level)})

    def __call__(self, cell):
        return self.data[cell]

    def pullback(self, nerve, i):
        """d_i^*: sections one level up, value at c is the value at d_i(c)."""
        n = self.level + 1
        return SheafSections(
            self.group, n,
            {c: self.data[nerve.face(n, i, c)] for c in nerve.level(n)})

    def map_values(self, hom: GroupHom):
        return SheafSections(hom.target, self.level,
                             {c: hom(v) for c, v in self.data.items()})

    def _binary(self, other, op):
        if self.group != other.group or self.level != other.level or \
                set(self.data) != set(other.data):
            raise ValueError("sections are not compatible")
        return SheafSections(self.group, self.level,
                             {c: op(self.data[c], other.data[c])
                              for c in self.data})

    def __add__(self, other):
        return self._binary(other, lambda x, y: x + y)

    def __sub__(self, other):
        return self._binary(other, lambda x, y: x - y)

    def __neg__(self):
        return SheafSections(self.group, self.level,
                             {c: -v for c, v in self.data.items()})

    @property
    def is_zero(self):
        return all(v.is_zero for v in self.data.values())

    def key(self):
        return tuple(self.data[c].coords for c in sorted(self.data))


def cech_differential(nerve, s: SheafSections) -> SheafSections:
    """Alternating sum of face pullbacks, one level up."""
    out = SheafSections.zero(s.group, nerve, s.level + 1)
    for i in range(s.level + 2):
        pulled = s.pullback(nerve, i)
        out = out + pulled if i % 2 == 0 else out - pulled
    return out


def _all_sections(group, nerve, level):
    cells = nerve.level(level)
    for values in itertools.product(group.elements(), repeat=len(cells)):
        yield SheafSections(group, level, dict(zip(cells, values)))


def _count_sections(group, nerve, level):
    return group.order() ** len(nerve.level(level))


# --------------------------------------------------------------------------
# torsor cocycles (a, b)


class TorsorClasses(NamedTuple):
    count: int
    representatives: list


def _torsor_relations_hold(nerve, X, a, b):
    lam_a = a.map_values(X.lam)
    if not (a.pullback(nerve, 0) + a.pullback(nerve, 2)
            - a.pullback(nerve, 1)).is_zero:
        return False
    if not (b.pullback(nerve, 0) - b.pullback(nerve, 1) - lam_a).is_zero:
        return False
    return True


def _coboundary_action(nerve, X, a, b, alpha):
    """Re-choose the local section by alpha in A(V_0)."""
    new_a = a + alpha.pullback(nerve, 0) - alpha.pullback(nerve, 1)
    new_b = b + alpha.map_values(X.lam)
    return new_a, new_b


def torsor_classes(nerve: Nerve, X: Complex2, max_states=10 ** 7):
    """Classes of torsor cocycles (a, b) modulo re-choice of sections.

    Exhaustive: enumerates every pair, filters by the two cocycle relations,
    and quotients by the full coboundary action.  Representatives are the
    lexicographically smallest members of their classes.
    """
    if not (X.A.is_finite and X.B.is_finite):
        raise FinitenessError("torsor enumeration needs finite groups")
    states = _count_sections(X.A, nerve, 1) * _count_sections(X.B, nerve, 0)
    if states > max_states:
        raise CapExceeded(f"{states} candidate cocycles exceed {max_states}")
    cocycles = {}
    for a in _all_sections(X.A, nerve, 1):
        for b in _all_sections(X.B, nerve, 0):
            if _torsor_relations_hold(nerve, X, a, b):
                cocycles[(a.key(), b.key())] = (a, b)
    alphas = list(_all_sections(X.A, nerve, 0))
    if len(cocycles) * len(alphas) > max_states:
        raise CapExceeded("coboundary quotient exceeds the state cap")
    reps = []
    seen = set()
    for key in sorted(cocycles):
        if key in seen:
            continue
        a, b = cocycles[key]
        orbit = set()
        for alpha in alphas:
            na, nb = _coboundary_action(nerve, X, a, b, alpha)
            orbit.add((na.key(), nb.key()))
        seen |= orbit
        rep_key = min(orbit)
        reps.append(cocycles[rep_key])
    return TorsorClasses(len(reps), reps)


# --------------------------------------------------------------------------
# unit cocycles (a, a_phi, b)


@dataclass(frozen=True)
class UnitCocycle1:
    """The descent datum of a unit: a in A(V_1), a_phi in A(V_0), b in B(V_0)."""

    a: SheafSections
    a_phi: SheafSections
    b: SheafSections

    def validate(self, nerve, X):
        """Check all four relations pointwise; raise CocycleError naming the
        first violated one."""
        a, a_phi, b = self.a, self.a_phi, self.b
        bad = a.pullback(nerve, 0) + a.pullback(nerve, 2) - a.pullback(nerve, 1)
        if not bad.is_zero:
            raise CocycleError("d0*(a) + d2*(a) = d1*(a)",
                               _first_nonzero(bad))
        bad = b.pullback(nerve, 0) - b.pullback(nerve, 1) \
            - a.map_values(X.lam)
        if not bad.is_zero:
            raise CocycleError("d0*(b) = d1*(b) + lambda(a)",
                               _first_nonzero(bad))
        bad = a - (a_phi.pullback(nerve, 0) - a_phi.pullback(nerve, 1))
        if not bad.is_zero:
            raise CocycleError("a = d0*(a_phi) - d1*(a_phi)",
                               _first_nonzero(bad))
        bad = a_phi.map_values(X.lam) - b
        if not bad.is_zero:
            raise CocycleError("lambda(a_phi) = b", _first_nonzero(bad))

    def key(self):
        return (self.a.key(), self.a_phi.key(), self.b.key())

    def shifted(self, nerve, X, alpha):
        """The cohomologous cocycle after re-choosing sections by alpha."""
        new_a, new_b = _coboundary_action(nerve, X, self.a, self.b, alpha)
        return UnitCocycle1(new_a, self.a_phi + alpha, new_b)


def _first_nonzero(section):
    for c in sorted(section.data):
        if not section.data[c].is_zero:
            return c
    return None


def unit_cocycle_from_phi(nerve, X, a_phi: SheafSections) -> UnitCocycle1:
    """The unit cocycle determined by a choice of a_phi in A(V_0)."""
    a = a_phi.pullback(nerve, 0) - a_phi.pullback(nerve, 1)
    b = a_phi.map_values(X.lam)
    c = UnitCocycle1(a, a_phi, b)
    c.validate(nerve, X)
    return c


def unit_cocycles(nerve: Nerve, X: Complex2, max_states=10 ** 7):
    """All unit cocycles modulo coboundaries.

    The defining relations make a and b functions of a_phi, so the cocycle
    set is scanned through a_phi; the quotient is by the full coboundary
    action.  Returns ``(classes, group)`` where ``group`` is the abelian
    group the classes form under tensor (expected: one class, trivial).
    """
    if not (X.A.is_finite and X.B.is_finite):
        raise FinitenessError("unit-cocycle enumeration needs finite groups")
    states = _count_sections(X.A, nerve, 0)
    if states > max_states:
        raise CapExceeded(f"{states} states exceed {max_states}")
    cocycles = {}
    for a_phi in _all_sections(X.A, nerve, 0):
        c = unit_cocycle_from_phi(nerve, X, a_phi)
        cocycles[c.key()] = c
    alphas = list(_all_sections(X.A, nerve, 0))
    reps = []
    seen = set()
    rep_of = {}
    work = 0
    for key in sorted(cocycles):
        if key in seen:
            continue
        work += len(alphas)  # one full orbit sweep per new class
        if work > max_states:
            raise CapExceeded("coboundary quotient exceeds the state cap")
        c = cocycles[key]
        orbit = {c.shifted(nerve, X, alpha).key() for alpha in alphas}
        seen |= orbit
        rep_key = min(orbit)
        for k in orbit:
            rep_of[k] = rep_key
        reps.append(cocycles[rep_key])
    group = _class_group(nerve, X, cocycles, rep_of)
    return reps, group


def _class_group(nerve, X, cocycles, rep_of):
    """Structure of the class group under pointwise tensor, from the orders
    of its elements."""
    reps = sorted({k for k in rep_of.values()})
    zero_key = unit_cocycle_from_phi(
        nerve, X, SheafSections.zero(X.A, nerve, 0)).key()
    zero_rep = rep_of[zero_key]

    def tensor_key(k1, k2):
        c1, c2 = cocycles[k1], cocycles[k2]
        summed = unit_cocycle_from_phi(nerve, X, c1.a_phi + c2.a_phi)
        return rep_of[summed.key()]

    orders = []
    for r in reps:
        acc = r
        n = 1
        while acc != zero_rep:
            acc = tensor_key(acc, r)
            n += 1
        orders.append(n)
    return _group_from_orders(orders)


def _group_from_orders(orders):
    """Invariant factors of a finite abelian group from its element orders."""
    primes = set()
    for o in orders:
        d, p = o, 2
        while p * p <= d:
            if d % p == 0:
                primes.add(p)
                while d % p == 0:
                    d //= p
            p += 1
        if d > 1:
            primes.add(d)
    per_prime = {}
    for p in sorted(primes):
        exps = []
        j = 1
        while True:
            n_j = sum(1 for o in orders if (p ** j) % o == 0)
            n_prev = sum(1 for o in orders if (p ** (j - 1)) % o == 0)
            ratio, r_j = n_j // n_prev, 0
            while ratio > 1:
                ratio //= p
                r_j += 1
            if r_j == 0:
                break
            exps.append(r_j)
            j += 1
        factor_exps = []
        for jj, r in enumerate(exps, start=1):
            higher = exps[jj] if jj < len(exps) else 0
            factor_exps += [jj] * (r - higher)
        per_prime[p] = sorted((p ** e for e in factor_exps), reverse=True)
    width = max((len(v) for v in per_prime.values()), default=0)
    divisors = []
    for i in range(width):
        divisors.append(
            __import__("math").prod(v[i] for v in per_prime.values()
                                    if i < len(v)))
    return FgAbGroup.from_divisors(*divisors)


# --------------------------------------------------------------------------
# total complex of a coefficient complex over the nerve


class _TotalLayout:
    """Packing of the total-degree-n part of the double complex X^p(V_q)
    into a single canonical group, block by block."""

    def __init__(self, X, nerve, total_degree):
        self.X = X
        self.nerve = nerve
        self.blocks = []  # (p, q, cell)
        for p in X.degrees:
            q = total_degree - p
            if 0 <= q <= TOP_LEVEL:
                for cell in nerve.level(q):
                    self.blocks.append((p, q, cell))
        ds = direct_sum_many([X.group_at(p) for p, _, _ in self.blocks])
        self.group = ds.group
        self._inj = ds.injections
        self._proj = ds.projections

    def pack(self, components) -> GroupElem:
        """components: {(p, q): SheafSections}"""
        out = self.group.zero()
        for (p, q, cell), inj in zip(self.blocks, self._inj):
            out = out + inj(components[(p, q)](cell))
        return out

    def unpack(self, elem) -> dict:
        comps = {}
        for (p, q, cell), proj in zip(self.blocks, self._proj):
            sec = comps.setdefault(
                (p, q), {"group": self.X.group_at(p), "data": {}})
            sec["data"][cell] = proj(elem)
        return {pq: SheafSections(v["group"], pq[1], v["data"])
                for pq, v in comps.items()}


def _total_differential_hom(X, nerve, layout_n, layout_n1) -> GroupHom:
    """D = d_X + (-1)^(p+1) cech, as one hom between the packed groups."""
    images = []
    for g in range(layout_n.group.ngens):
        gen = layout_n.group.generator(g)
        comps = layout_n.unpack(gen)
        out = layout_n1.group.zero()
        for (p, q, cell), inj in zip(layout_n1.blocks, layout_n1._inj):
            val = X.group_at(p).zero()
            if (p - 1, q) in comps:
                val = val + X.differential(p - 1)(comps[(p - 1, q)](cell))
            if (p, q - 1) in comps:
                sign = -1 if p % 2 == 0 else 1  # (-1)^(p+1)
                acc = X.group_at(p).zero()
                for i in range(q + 1):
                    face_val = comps[(p, q - 1)](nerve.face(q, i, cell))
                    acc = acc + face_val if i % 2 == 0 else acc - face_val
                val = val + (acc if sign == 1 else -acc)
            out = out + inj(val)
        images.append(out)
    return GroupHom.from_images(layout_n.group, layout_n1.group, images)


def total_complex_piece(X, nerve):
    """The packed three-term complex T^-1 -> T^0 -> T^1 with its layouts."""
    lm1 = _TotalLayout(X, nerve, -1)
    l0 = _TotalLayout(X, nerve, 0)
    l1 = _TotalLayout(X, nerve, 1)
    d_low = _total_differential_hom(X, nerve, lm1, l0)
    d_high = _total_differential_hom(X, nerve, l0, l1)
    return Complex3(lm1.group, l0.group, l1.group, d_low, d_high), (lm1, l0, l1)


def classify_h0(nerve: Nerve, X) -> FgAbGroup:
    """Total-degree-0 cocycles modulo coboundaries, as a canonical group.

    For the unit complex of any coefficient complex this is the trivial
    group; that is the classification form of contractibility.
    """
    for d in X.degrees:
        if not X.group_at(d).is_finite:
            raise FinitenessError("classification needs finite groups")
    total, _ = total_complex_piece(X, nerve)
    return homology(total, -1)


@dataclass(frozen=True)
class TotalCocycle:
    """A total-degree-0 cocycle with coefficients in a 2- or 3-term complex.

    ``components`` maps (complex degree, nerve level) with p + q = 0 to
    sections.  ``convention`` records the sign normalization of the stored
    components ("total": the library's total differential vanishes on them).
    """

    complex: object
    components: dict
    convention: str = "total"

    def validate(self, nerve):
        X = self.complex
        for p in X.degrees:
            q = -p
            if 0 <= q <= TOP_LEVEL and (p, q) not in self.components:
                raise CocycleError(f"missing component at bidegree ({p}, {q})")
        if self.convention != "total":
            raise CocycleError(f"unknown normalization {self.convention!r}")
        for p_t in X.degrees:
            for q_t in range(TOP_LEVEL + 1):
                if p_t + q_t != 1:
                    continue
                total = SheafSections.zero(X.group_at(p_t), nerve, q_t)
                if (p_t - 1, q_t) in self.components:
                    total = total + self.components[(p_t - 1, q_t)].map_values(
                        X.differential(p_t - 1))
                if (p_t, q_t - 1) in self.components:
                    ch = cech_differential(nerve, self.components[(p_t, q_t - 1)])
                    total = total + ch if p_t % 2 else total - ch
                if not total.is_zero:
                    raise CocycleError(
                        f"total differential nonzero at bidegree "
                        f"({p_t}, {q_t})", _first_nonzero(total))

    def key(self):
        return tuple((pq, self.components[pq].key())
                     for pq in sorted(self.components))


# --------------------------------------------------------------------------
# units <-> cocycles


def cocycle_of_unit(unit, nerve: Nerve):
    """The constant cocycle of a point-model unit over a nerve."""
    if isinstance(unit, SaavedraUnit):
        X = unit.model.base
        c = UnitCocycle1(SheafSections.zero(X.A, nerve, 1),
                         SheafSections.constant(unit.a_phi, nerve, 0),
                         SheafSections.constant(unit.e, nerve, 0))
        c.validate(nerve, X)
        return c
    if isinstance(unit, JKUnit):
        X = unit.model.base
        U = unit_complex_2(X)
        _, jnj_b, jnj_c, qroj_b, qroj_c = direct_sum(X.B, X.C)
        emb_target = jnj_b(unit.phi) + jnj_c(unit.e)
        _, emb = kernel(X.lam.compose(qroj_b) - qroj_c)
        k0 = solve(emb, emb_target)
        if k0 is None:
            raise ValueError("unit does not define a kernel element")
        comps = {
            (-2, 2): SheafSections.zero(U.A, nerve, 2),
            (-1, 1): SheafSections.zero(U.B, nerve, 1),
            (0, 0): SheafSections.constant(k0, nerve, 0),
        }
        c = TotalCocycle(U, comps)
        c.validate(nerve)
        return c
    raise TypeError("expected a point-model unit")


def unit_of_cocycle(cocycle, nerve: Nerve, X):
    """Decode a unit from a cocycle, with the trivializing cochain.

    For a descent datum (a, a_phi, b) the re-choice alpha = const - a_phi
    makes it the constant cocycle of the returned unit.  For a total cocycle
    with coefficients in the unit complex of X, a total degree -1 cochain w
    with D(w) = cocycle - constant is solved for exactly.
    """
    if isinstance(cocycle, UnitCocycle1):
        cocycle.validate(nerve, X)
        base_cell = nerve.level(0)[0]
        c0 = cocycle.a_phi(base_cell)
        unit = SaavedraUnit(PicardModel1(X), X.lam(c0), c0)
        alpha = SheafSections.constant(c0, nerve, 0) - cocycle.a_phi
        return unit, alpha
    if isinstance(cocycle, TotalCocycle):
        cocycle.validate(nerve)
        U = cocycle.complex
        if U.degrees != (-2, -1, 0):
            raise ValueError("expected a 3-term coefficient complex")
        base_cell = nerve.level(0)[0]
        k0 = cocycle.components[(0, 0)](base_cell)
        _, jnj_b, jnj_c, qroj_b, qroj_c = direct_sum(X.B, X.C)
        _, emb = kernel(X.lam.compose(qroj_b) - qroj_c)
        bc = emb(k0)
        phi, e = qroj_b(bc), qroj_c(bc)
        unit = JKUnit(PicardModel2(X), e, phi)
        constant = cocycle_of_unit(unit, nerve)
        total, (lm1, l0, _) = total_complex_piece(U, nerve)
        target = l0.pack(cocycle.components) - l0.pack(constant.components)
        w = solve(total.delta, target)
        if w is None:
            raise CocycleError("cocycle is not cohomologous to a constant")
        return unit, lm1.unpack(w)
    raise TypeError("expected a unit cocycle")
