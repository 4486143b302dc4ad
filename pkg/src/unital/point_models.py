"""Strict Picard groupoids and 2-groupoids over a point, and their units.

A 2-term complex A -> B presents a strict Picard groupoid: objects are the
elements of B, a morphism b -> b' is an element a of A with lam(a) = b - b',
and both composition and tensor are addition.  A Saavedra unit is an object
e together with a morphism e + e -> e, i.e. a pair (e, a_phi) with
lam(a_phi) = e.

A 3-term complex A -> B -> C presents a strict Picard 2-groupoid the same
way one level up: objects C, 1-morphisms {b : lam(b) = c - c'}, 2-morphisms
{alpha : delta(alpha) = b - b'}.  A unit is a pair (e, phi) with
lam(phi) = e; morphisms of units carry a filling 2-cell.

Orientation of the filling 2-cell: theta runs from the path
(f tensor f) ; phi_target to the path phi_source ; f, so membership reads
delta(theta) = f + phi_target - phi_source.  Both pastings are re-evaluated
independently wherever a 2-cell equation is used, which pins this sign.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .abelian import CapExceeded, FgAbGroup, FinitenessError, GroupElem, kernel
from .complexes import Complex2, Complex3
from .verification import VerificationReport


@dataclass(frozen=True)
class PicardModel1:
    """The strict Picard groupoid over a point presented by a 2-term complex."""

    base: Complex2

    def _require_finite(self):
        if not (self.base.A.is_finite and self.base.B.is_finite):
            raise FinitenessError("point-model enumeration needs finite groups")

    def morphisms(self, b, b2):
        """All morphisms b -> b2, i.e. {a : lam(a) = b - b2}."""
        self._require_finite()
        want = b - b2
        return [a for a in self.base.A.elements() if self.base.lam(a) == want]


@dataclass(frozen=True)
class SaavedraUnit:
    model: PicardModel1
    e: GroupElem
    a_phi: GroupElem

    def __post_init__(self):
        if self.model.base.lam(self.a_phi) != self.e:
            raise ValueError("not a unit: lam(a_phi) != e")

    def key(self):
        return (self.e.coords, self.a_phi.coords)


@dataclass(frozen=True)
class UnitMorphism1:
    """A morphism of units: u with lam(u) = e_src - e_tgt making the
    tensor-compatibility square commute."""

    source: SaavedraUnit
    target: SaavedraUnit
    u: GroupElem

    def __post_init__(self):
        lam = self.source.model.base.lam
        if lam(self.u) != self.source.e - self.target.e:
            raise ValueError("u is not a morphism e_src -> e_tgt")
        if _square_paths_1(self.source, self.target, self.u) is False:
            raise ValueError("unit-morphism square does not commute")


def _square_paths_1(s, t, u):
    """Evaluate both composites of the unit-morphism square and compare."""
    through_source = s.a_phi + u        # phi_src then u
    through_target = u + u + t.a_phi    # u tensor u, then phi_tgt
    return through_source == through_target


def canonical_unit(model):
    """The unit (0, 0); it exists in every model."""
    if isinstance(model, PicardModel1):
        return SaavedraUnit(model, model.base.B.zero(), model.base.A.zero())
    return JKUnit(model, model.base.C.zero(), model.base.B.zero())


def enumerate_units_1(model: PicardModel1):
    """All units in lexicographic (e, a_phi) order; exactly |A| of them."""
    model._require_finite()
    lam = model.base.lam
    units = [SaavedraUnit(model, e, a)
             for e in model.base.B.elements()
             for a in model.base.A.elements()
             if lam(a) == e]
    assert len(units) == model.base.A.order()  # a |-> (lam a, a) is a bijection
    return units


def unit_morphisms_1(s: SaavedraUnit, t: SaavedraUnit):
    """The morphisms s -> t; always exactly one, u = a_phi(s) - a_phi(t)."""
    if s.model != t.model:
        raise ValueError("units live in different models")
    m = UnitMorphism1(s, t, s.a_phi - t.a_phi)
    return [m]


def compose_unit_morphisms_1(m1: UnitMorphism1, m2: UnitMorphism1):
    if m1.target.key() != m2.source.key():
        raise ValueError("morphisms not composable")
    return UnitMorphism1(m1.source, m2.target, m1.u + m2.u)


def tensor_units_1(s: SaavedraUnit, t: SaavedraUnit) -> SaavedraUnit:
    """Tensor of units; the structure morphism is the five-arrow composite,
    which collapses to a_phi(s) + a_phi(t) in the strict model."""
    if s.model != t.model:
        raise ValueError("units live in different models")
    phi = s.a_phi + t.a_phi
    assert phi == _tensor_phi_composite(s, t)
    return SaavedraUnit(s.model, s.e + t.e, phi)


def _tensor_phi_composite(s, t):
    """Reference form: associator, (associator, braiding, associator),
    associator, then phi_s tensor phi_t.  All constraints of the strict
    commutative model are zero morphisms."""
    zero = s.model.base.A.zero()
    assoc1, assoc2, braid, assoc3, assoc4 = zero, zero, zero, zero, zero
    phi_tensor = s.a_phi + t.a_phi
    return assoc1 + (assoc2 + braid + assoc3) + assoc4 + phi_tensor


def tensor_unit_morphisms_1(m1: UnitMorphism1, m2: UnitMorphism1):
    return UnitMorphism1(tensor_units_1(m1.source, m2.source),
                         tensor_units_1(m1.target, m2.target),
                         m1.u + m2.u)


def verify_contractible_1(model: PicardModel1) -> VerificationReport:
    """Check that the unit groupoid is contractible, exhaustively.

    (i) units exist, (ii) every ordered pair of units carries exactly one
    unit morphism (scanning all of A), (iii) the unique morphisms compose
    coherently.
    """
    report = VerificationReport("contractibility of the unit groupoid")
    units = enumerate_units_1(model)
    report.add("unit set nonempty", len(units) > 0, f"{len(units)} units")
    lam = model.base.lam
    elems_a = list(model.base.A.elements())
    lam_of = [(a, lam(a)) for a in elems_a]
    unique = {}
    pair_failures = []
    for s in units:
        for t in units:
            want = s.e - t.e
            found = [a for a, la in lam_of
                     if la == want and _square_paths_1(s, t, a)]
            if len(found) != 1:
                pair_failures.append((s.key(), t.key(), len(found)))
            else:
                unique[(s.key(), t.key())] = found[0]
    report.add("exactly one unit morphism per ordered pair",
               not pair_failures,
               pair_failures[:3] if pair_failures else
               f"{len(unique)} morphisms")
    coherence_failures = []
    for s in units:
        for t in units:
            for w in units:
                lhs = unique[(s.key(), t.key())] + unique[(t.key(), w.key())]
                if lhs != unique[(s.key(), w.key())]:
                    coherence_failures.append((s.key(), t.key(), w.key()))
    report.add("composition of unique morphisms is coherent",
               not coherence_failures, coherence_failures[:3] or None)
    report.stats["units"] = len(units)
    report.stats["morphisms"] = len(unique)
    return report


# --------------------------------------------------------------------------
# one level up


@dataclass(frozen=True)
class PicardModel2:
    """The strict Picard 2-groupoid over a point presented by a 3-term
    complex."""

    base: Complex3

    def _require_finite(self):
        if not (self.base.A.is_finite and self.base.B.is_finite
                and self.base.C.is_finite):
            raise FinitenessError("point-model enumeration needs finite groups")


@dataclass(frozen=True)
class JKUnit:
    model: PicardModel2
    e: GroupElem
    phi: GroupElem

    def __post_init__(self):
        if self.model.base.lam(self.phi) != self.e:
            raise ValueError("not a unit: lam(phi) != e")

    def key(self):
        return (self.e.coords, self.phi.coords)


@dataclass(frozen=True)
class UnitMorphism2:
    """A unit 1-morphism (f, theta): f underlies it, theta fills the square."""

    source: JKUnit
    target: JKUnit
    f: GroupElem
    theta: GroupElem

    def __post_init__(self):
        base = self.source.model.base
        if base.lam(self.f) != self.source.e - self.target.e:
            raise ValueError("f is not a 1-morphism e_src -> e_tgt")
        if base.delta(self.theta) != _theta_boundary(self):
            raise ValueError("theta does not fill the unit square")

    def key(self):
        return (self.source.key(), self.target.key(),
                self.f.coords, self.theta.coords)


def _theta_boundary(m: UnitMorphism2):
    """Difference of the two square paths that theta must bound."""
    top = m.f + m.f + m.target.phi   # (f tensor f) then phi_tgt
    bottom = m.source.phi + m.f      # phi_src then f
    return top - bottom


@dataclass(frozen=True)
class Unit2Morphism:
    source: UnitMorphism2
    target: UnitMorphism2
    gamma: GroupElem

    def __post_init__(self):
        m1, m2 = self.source, self.target
        if m1.source.key() != m2.source.key() or \
                m1.target.key() != m2.target.key():
            raise ValueError("unit 1-morphisms are not parallel")
        base = m1.source.model.base
        if base.delta(self.gamma) != m1.f - m2.f:
            raise ValueError("gamma is not a 2-morphism f1 => f2")
        left, right = _pastings(m1, m2, self.gamma)
        if left != right:
            raise ValueError("the two pastings disagree")


def _pastings(m1, m2, gamma):
    """Both pasted composites of the 2-cell equation, evaluated separately:
    (gamma tensor gamma) whiskered into theta_2 versus theta_1 whiskered
    into gamma."""
    left = (gamma + gamma) + m2.theta
    right = m1.theta + gamma
    return left, right


def enumerate_units_2(model: PicardModel2):
    """All units in lexicographic (e, phi) order; exactly |B| of them."""
    model._require_finite()
    lam = model.base.lam
    units = [JKUnit(model, e, phi)
             for e in model.base.C.elements()
             for phi in model.base.B.elements()
             if lam(phi) == e]
    assert len(units) == model.base.B.order()
    return units


def unit_1morphisms(s: JKUnit, t: JKUnit):
    """All unit 1-morphisms s -> t; nonempty, since (phi_s - phi_t, 0) works."""
    if s.model != t.model:
        raise ValueError("units live in different models")
    base = s.model.base
    want_f = s.e - t.e
    theta_fibers = {}
    for theta in base.A.elements():
        theta_fibers.setdefault(base.delta(theta).coords, []).append(theta)
    out = []
    for f in base.B.elements():
        if base.lam(f) != want_f:
            continue
        bound = f + t.phi - s.phi
        for theta in theta_fibers.get(bound.coords, ()):
            out.append(UnitMorphism2(s, t, f, theta))
    witness = UnitMorphism2(s, t, s.phi - t.phi, base.A.zero())
    assert any(m.f == witness.f and m.theta == witness.theta for m in out)
    return out


def unit_2morphisms(m1: UnitMorphism2, m2: UnitMorphism2):
    """The unit 2-morphisms m1 => m2; exactly one, gamma = theta_1 - theta_2."""
    gamma = m1.theta - m2.theta
    return [Unit2Morphism(m1, m2, gamma)]


def compose_unit_2morphisms(g1: Unit2Morphism, g2: Unit2Morphism):
    if g1.target.key() != g2.source.key():
        raise ValueError("2-morphisms not composable")
    return Unit2Morphism(g1.source, g2.target, g1.gamma + g2.gamma)


def tensor_units_2(s: JKUnit, t: JKUnit) -> JKUnit:
    if s.model != t.model:
        raise ValueError("units live in different models")
    return JKUnit(s.model, s.e + t.e, s.phi + t.phi)


def verify_contractible_2(model: PicardModel2, max_states=10 ** 7,
                          coherence_bound=12):
    """Check that the unit 2-groupoid is contractible, exhaustively.

    Units exist; every ordered pair of units is connected by at least one
    unit 1-morphism; every ordered pair of parallel unit 1-morphisms carries
    exactly one unit 2-morphism.  The 2-cell scan runs over the whole delta
    fiber once per distinct difference class of parallel pairs, which covers
    every pair: translating a parallel pair leaves its pasting equation
    literally unchanged.  Vertical-composition coherence is checked on all
    triples when a morphism set is small, and on the first
    ``coherence_bound`` morphisms otherwise.
    """
    report = VerificationReport("contractibility of the unit 2-groupoid")
    units = enumerate_units_2(model)
    report.add("unit set nonempty", len(units) > 0, f"{len(units)} units")
    base = model.base
    ker_delta, kd_incl = kernel(base.delta)
    if not ker_delta.is_finite:
        raise FinitenessError("2-cell fibers must be finite")
    fiber = [kd_incl(k) for k in ker_delta.elements()]

    connected_failures = []
    onemors = {}
    budget = 0
    for s in units:
        for t in units:
            ms = unit_1morphisms(s, t)
            budget += len(ms) ** 2 + len(ms) * len(fiber)
            if budget > max_states:
                raise CapExceeded(
                    f"2-cell verification needs more than {max_states} states")
            if not ms:
                connected_failures.append((s.key(), t.key()))
            onemors[(s.key(), t.key())] = ms
    report.add("every unit pair is connected by a unit 1-morphism",
               not connected_failures, connected_failures[:3] or None)

    pair_failures = []
    total_pairs = 0
    for ms in onemors.values():
        verified_diffs = {}
        for m1 in ms:
            for m2 in ms:
                total_pairs += 1
                gamma0 = m1.theta - m2.theta
                df = m1.f - m2.f
                diff = (df.coords, gamma0.coords)
                if diff not in verified_diffs:
                    found = [g for g in (gamma0 + k for k in fiber)
                             if base.delta(g) == df
                             and _pastings(m1, m2, g)[0]
                             == _pastings(m1, m2, g)[1]]
                    verified_diffs[diff] = (len(found) == 1
                                            and found[0] == gamma0)
                if not verified_diffs[diff]:
                    pair_failures.append((m1.key(), m2.key()))
    report.add("exactly one unit 2-morphism per parallel pair",
               not pair_failures,
               pair_failures[:3] if pair_failures else
               f"{total_pairs} parallel pairs")

    coherence_failures = []
    for ms in onemors.values():
        sample = ms if len(ms) <= coherence_bound else ms[:coherence_bound]
        for m1, m2, m3 in itertools.product(sample, repeat=3):
            g12 = m1.theta - m2.theta
            g23 = m2.theta - m3.theta
            if g12 + g23 != m1.theta - m3.theta:
                coherence_failures.append((m1.key(), m2.key(), m3.key()))
    report.add("vertical composition of unique 2-morphisms is coherent",
               not coherence_failures, coherence_failures[:3] or None)
    report.stats["units"] = len(units)
    report.stats["unit 1-morphisms"] = sum(len(v) for v in onemors.values())
    return report
