"""Two- and three-term complexes of finitely generated abelian groups.

Complexes sit in nonpositive cohomological degrees: a 2-term complex is
A -> B in degrees (-1, 0), a 3-term complex is A -> B -> C in degrees
(-2, -1, 0).  The module provides homology with deterministic cycle
representatives, strict morphisms, mapping cones, soft truncation, and the
complexes that represent the groupoid of units of the structure presented by
a complex:

* ``unit_complex_1``: A -> ker(lam - id_B), with ker taken inside A (+) B;
* ``unit_complex_2``: A -> B (+) A -> ker(lam - id_C);

together with explicit comparison morphisms to the smaller models built from
id_A and id_ker(lam), and a constructed isomorphism
truncate_shift(cone(id)) ~ unit_complex_1.

Sign convention for the cone of f: X -> Y: in degree n the term is
X^(n+1) (+) Y^n and the differential is (x, y) |-> (-d x, f(x) + d y).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

from .abelian import (
    CapExceeded,
    FgAbGroup,
    GroupElem,
    GroupHom,
    LinearSolver,
    cokernel,
    direct_sum,
    is_isomorphism,
    kernel,
    lift_through,
    solve,
)

_TRIVIAL = FgAbGroup.trivial()


@dataclass(frozen=True)
class Complex2:
    """A -> B in degrees -1, 0."""

    A: FgAbGroup
    B: FgAbGroup
    lam: GroupHom

    def __post_init__(self):
        if self.lam.source != self.A or self.lam.target != self.B:
            raise ValueError("differential endpoints do not match the terms")

    @property
    def degrees(self):
        return (-1, 0)

    def group_at(self, degree):
        if degree == -1:
            return self.A
        if degree == 0:
            return self.B
        raise ValueError(f"degree {degree} out of range")

    def differential(self, degree):
        """The map leaving the given degree (zero map out of degree 0)."""
        if degree == -1:
            return self.lam
        if degree == 0:
            return GroupHom.zero(self.B, _TRIVIAL)
        raise ValueError(f"degree {degree} out of range")

    def __str__(self):
        return f"[{self.A} -> {self.B}]"


@dataclass(frozen=True)
class Complex3:
    """A -> B -> C in degrees -2, -1, 0 with lam . delta = 0."""

    A: FgAbGroup
    B: FgAbGroup
    C: FgAbGroup
    delta: GroupHom
    lam: GroupHom

    def __post_init__(self):
        if self.delta.source != self.A or self.delta.target != self.B:
            raise ValueError("delta endpoints do not match the terms")
        if self.lam.source != self.B or self.lam.target != self.C:
            raise ValueError("lam endpoints do not match the terms")
        if not self.lam.compose(self.delta).is_zero_hom:
            raise ValueError("not a complex: lam . delta != 0")

    @property
    def degrees(self):
        return (-2, -1, 0)

    def group_at(self, degree):
        if degree == -2:
            return self.A
        if degree == -1:
            return self.B
        if degree == 0:
            return self.C
        raise ValueError(f"degree {degree} out of range")

    def differential(self, degree):
        if degree == -2:
            return self.delta
        if degree == -1:
            return self.lam
        if degree == 0:
            return GroupHom.zero(self.C, _TRIVIAL)
        raise ValueError(f"degree {degree} out of range")

    def __str__(self):
        return f"[{self.A} -> {self.B} -> {self.C}]"


def _incoming(X, degree):
    if degree == X.degrees[0]:
        return GroupHom.zero(_TRIVIAL, X.group_at(degree))
    return X.differential(degree - 1)


@dataclass(frozen=True)
class StrictMorphism:
    """Degreewise maps between complexes of the same length.

    Every square is required to commute; this is checked at construction.
    """

    source: Complex2 | Complex3
    target: Complex2 | Complex3
    maps: tuple[GroupHom, ...]  # ascending degree

    def __post_init__(self):
        if self.source.degrees != self.target.degrees:
            raise ValueError("complexes have different lengths")
        if len(self.maps) != len(self.source.degrees):
            raise ValueError("need one map per degree")
        object.__setattr__(self, "maps", tuple(self.maps))
        for deg, f in zip(self.source.degrees, self.maps):
            if f.source != self.source.group_at(deg) or \
                    f.target != self.target.group_at(deg):
                raise ValueError(f"map at degree {deg} has wrong endpoints")
        for deg in self.source.degrees[:-1]:
            left = self.target.differential(deg).compose(self.map_at(deg))
            right = self.map_at(deg + 1).compose(self.source.differential(deg))
            if left != right:
                raise ValueError(f"square at degree {deg} does not commute")

    def map_at(self, degree):
        return self.maps[degree - self.source.degrees[0]]

    def compose(self, other):
        """self after other."""
        if other.target is not self.source and other.target != self.source:
            raise ValueError("strict morphisms not composable")
        return StrictMorphism(
            other.source, self.target,
            tuple(self.map_at(d).compose(other.map_at(d))
                  for d in self.source.degrees))

    @classmethod
    def identity(cls, X):
        return cls(X, X, tuple(GroupHom.identity(X.group_at(d))
                               for d in X.degrees))


def is_complex_isomorphism(f):
    return all(is_isomorphism(f.map_at(d)) for d in f.source.degrees)


# --------------------------------------------------------------------------
# homology


class HomologyData:
    """Homology at one degree with a deterministic cycle chooser.

    ``classify`` sends a cycle to its class; ``representative`` picks the
    lexicographically smallest reduced cycle in a class whenever the ambient
    data is finite and small enough to scan, and an arbitrary section
    otherwise.
    """

    _SCAN_CAP = 4096

    def __init__(self, X, degree):
        out_hom = X.differential(degree)
        in_hom = _incoming(X, degree)
        self._cycles, self._incl = kernel(out_hom)
        self._in_lift = lift_through(self._incl, in_hom)
        self.group, self._proj = cokernel(self._in_lift)
        self.degree = degree
        self.ambient = X.group_at(degree)
        self._incl_solver = LinearSolver(self._incl)
        self._proj_solver = LinearSolver(self._proj)

    def classify(self, x: GroupElem) -> GroupElem:
        z = self._incl_solver.solve(x)
        if z is None:
            raise ValueError("element is not a cycle")
        return self._proj(z)

    def representative(self, h: GroupElem) -> GroupElem:
        z0 = self._proj_solver.solve(h)
        if z0 is None:
            raise ValueError("class not in the homology group")
        boundary_src = self._in_lift.source
        if boundary_src.is_finite and boundary_src.order() <= self._SCAN_CAP:
            return min((self._incl(z0 + self._in_lift(t))
                        for t in boundary_src.elements()),
                       key=lambda e: e.coords)
        return self._incl(z0)


def homology_data(X, degree) -> HomologyData:
    return HomologyData(X, degree)


def homology(X, degree) -> FgAbGroup:
    """ker(outgoing differential) / im(incoming differential), canonical."""
    return HomologyData(X, degree).group


def is_acyclic(X) -> bool:
    return all(homology(X, d).is_trivial for d in X.degrees)


class QuasiIsoResult(NamedTuple):
    is_qiso: bool
    induced: dict


def induced_on_homology(f: StrictMorphism, degree) -> GroupHom:
    hs = HomologyData(f.source, degree)
    ht = HomologyData(f.target, degree)
    images = [ht.classify(f.map_at(degree)(hs.representative(g)))
              for g in (hs.group.generator(i) for i in range(hs.group.ngens))]
    return GroupHom.from_images(hs.group, ht.group, images)


def is_quasi_isomorphism(f: StrictMorphism) -> QuasiIsoResult:
    """True iff the induced maps on homology are all isomorphisms."""
    induced = {d: induced_on_homology(f, d) for d in f.source.degrees}
    return QuasiIsoResult(all(is_isomorphism(g) for g in induced.values()),
                          induced)


# --------------------------------------------------------------------------
# unit complexes and their comparisons


def unit_complex_1(X: Complex2):
    """The 2-term complex A -> ker(lam - id_B) presenting the units.

    Returns ``(U, embedding)`` where the degree-0 term is realized as the
    kernel of (a, b) |-> lam(a) - b on A (+) B and ``embedding`` is its
    inclusion into A (+) B, kept for cocycle coordinates downstream.
    """
    A, B, lam = X.A, X.B, X.lam
    _, inj_a, inj_b, proj_a, proj_b = direct_sum(A, B)
    K, incl = kernel(lam.compose(proj_a) - proj_b)
    graph = inj_a + inj_b.compose(lam)  # a |-> (a, lam a)
    d = lift_through(incl, graph)
    return Complex2(A, K, d), incl


def unit_complex_2(X: Complex3) -> Complex3:
    """The 3-term complex A -> B (+) A -> ker(lam - id_C) for 2-level units."""
    A, B, C, delta, lam = X.A, X.B, X.C, X.delta, X.lam
    _, inj_b, inj_a, proj_b, proj_a = direct_sum(B, A)
    _, jnj_b, jnj_c, qroj_b, qroj_c = direct_sum(B, C)
    K, incl = kernel(lam.compose(qroj_b) - qroj_c)
    d1 = inj_b.compose(delta) + inj_a  # a |-> (delta a, a)
    # (b, a) |-> (b - delta a, lam b), landing in the kernel
    to_bc = jnj_b.compose(proj_b - delta.compose(proj_a)) \
        + jnj_c.compose(lam.compose(proj_b))
    d2 = lift_through(incl, to_bc)
    return Complex3(A, d1.target, K, d1, d2)


def _unit_complex_2_embedding(X: Complex3) -> GroupHom:
    _, jnj_b, jnj_c, qroj_b, qroj_c = direct_sum(X.B, X.C)
    _, incl = kernel(X.lam.compose(qroj_b) - qroj_c)
    return incl


def cone(f: StrictMorphism) -> Complex3:
    """Mapping cone of a morphism of 2-term complexes.

    Degree n is X^(n+1) (+) Y^n with differential
    (x, y) |-> (-d x, f(x) + d y); the cone of an identity is acyclic.
    """
    X, Y = f.source, f.target
    if X.degrees != (-1, 0):
        raise ValueError("cone is implemented for 2-term complexes")
    _, inj_b, inj_a, proj_b, proj_a = direct_sum(X.B, Y.A)
    d_low = inj_b.compose(-X.lam) + inj_a.compose(f.map_at(-1))
    d_high = f.map_at(0).compose(proj_b) + Y.lam.compose(proj_a)
    return Complex3(X.A, d_low.target, Y.B, d_low, d_high)


def truncate_shift(X: Complex3) -> Complex2:
    """Soft truncation below degree 0, shifted back into degrees (-1, 0).

    The degree-0 term becomes ker(B -> C) and the differential is induced.
    """
    K, incl = kernel(X.lam)
    return Complex2(X.A, K, lift_through(incl, X.delta))


def cone_comparison(X: Complex2) -> StrictMorphism:
    """Isomorphism truncate_shift(cone(id_X)) -> unit_complex_1(X).

    The cone's kernel consists of pairs (b, a) with b = -lam(a); the unit
    complex kernel of pairs (a, b) with lam(a) = b; the comparison swaps the
    coordinates and flips the sign of b.
    """
    C = cone(StrictMorphism.identity(X))
    ts = truncate_shift(C)
    _, incl_t = kernel(C.lam)  # same kernel truncate_shift used
    U, emb = unit_complex_1(X)
    _, inj_a, inj_b, _, _ = direct_sum(X.A, X.B)
    _, _, _, proj_b2, proj_a2 = direct_sum(X.B, X.A)
    swap = inj_a.compose(proj_a2) - inj_b.compose(proj_b2)
    deg0 = lift_through(emb, swap.compose(incl_t))
    return StrictMorphism(ts, U, (GroupHom.identity(X.A), deg0))


def forgetful_morphism_1(X: Complex2) -> StrictMorphism:
    """unit_complex_1(X) -> X by (id_A, projection to B)."""
    U, emb = unit_complex_1(X)
    _, _, _, _, proj_b = direct_sum(X.A, X.B)
    return StrictMorphism(U, X,
                          (GroupHom.identity(X.A), proj_b.compose(emb)))


def forgetful_morphism_2(X: Complex3) -> StrictMorphism:
    """unit_complex_2(X) -> X by (id_A, projection to B, projection to C)."""
    U = unit_complex_2(X)
    emb = _unit_complex_2_embedding(X)
    _, _, _, proj_b, _ = direct_sum(X.B, X.A)
    _, _, _, _, qroj_c = direct_sum(X.B, X.C)
    return StrictMorphism(U, X, (GroupHom.identity(X.A), proj_b,
                                 qroj_c.compose(emb)))


# ---- smaller models of the unit complex, with explicit comparison maps ----


def identity_model(X: Complex2):
    """(A -> A, morphism into unit_complex_1) with a |-> (a, (a, lam a))."""
    U, _ = unit_complex_1(X)
    idA = Complex2(X.A, X.A, GroupHom.identity(X.A))
    return idA, StrictMorphism(idA, U, (GroupHom.identity(X.A), U.lam))


def identity_model_projection(X: Complex2) -> StrictMorphism:
    """unit_complex_1(X) -> (A -> A), forgetting the B-coordinate."""
    U, emb = unit_complex_1(X)
    idA = Complex2(X.A, X.A, GroupHom.identity(X.A))
    _, _, _, proj_a, _ = direct_sum(X.A, X.B)
    return StrictMorphism(U, idA,
                          (GroupHom.identity(X.A), proj_a.compose(emb)))


def kernel_model(X: Complex2):
    """(ker lam -> ker lam, morphism into unit_complex_1)."""
    U, emb = unit_complex_1(X)
    Kl, kincl = kernel(X.lam)
    idK = Complex2(Kl, Kl, GroupHom.identity(Kl))
    _, inj_a, _, _, _ = direct_sum(X.A, X.B)
    deg0 = lift_through(emb, inj_a.compose(kincl))
    return idK, StrictMorphism(idK, U, (kincl, deg0))


def sum_model(X: Complex3):
    """Alternate 3-term model A -> B (+) A -> B with its map into
    unit_complex_2(X); second differential is (b, a) |-> b - delta(a)."""
    U = unit_complex_2(X)
    emb = _unit_complex_2_embedding(X)
    _, inj_b, inj_a, proj_b, proj_a = direct_sum(X.B, X.A)
    d1 = inj_b.compose(X.delta) + inj_a
    d2 = proj_b - X.delta.compose(proj_a)
    alt = Complex3(X.A, d1.target, X.B, d1, d2)
    _, jnj_b, jnj_c, _, _ = direct_sum(X.B, X.C)
    deg0 = lift_through(emb, jnj_b + jnj_c.compose(X.lam))  # b |-> (b, lam b)
    mor = StrictMorphism(alt, U, (GroupHom.identity(X.A),
                                  GroupHom.identity(d1.target), deg0))
    return alt, mor


def kernel_sum_model(X: Complex3):
    """Alternate 3-term model A -> ker(lam) (+) A -> ker(lam) with its map
    into unit_complex_2(X)."""
    U = unit_complex_2(X)
    emb = _unit_complex_2_embedding(X)
    Kl, kincl = kernel(X.lam)
    delta_k = lift_through(kincl, X.delta)
    _, inj_k, inj_a, proj_k, proj_a = direct_sum(Kl, X.A)
    d1 = inj_k.compose(delta_k) + inj_a
    d2 = proj_k - delta_k.compose(proj_a)
    alt = Complex3(X.A, d1.target, Kl, d1, d2)
    _, jnj_b, jnj_c, _, _ = direct_sum(X.B, X.C)
    _, binj_b, binj_a, _, _ = direct_sum(X.B, X.A)
    mid = binj_b.compose(kincl.compose(proj_k)) + binj_a.compose(proj_a)
    deg0 = lift_through(emb, jnj_b.compose(kincl))  # k |-> (k, 0)
    mor = StrictMorphism(alt, U, (GroupHom.identity(X.A), mid, deg0))
    return alt, mor
