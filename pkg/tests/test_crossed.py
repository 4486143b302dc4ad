import itertools
import random

import pytest

from unital.cech import cech_nerve, point_cover
from unital.crossed import (
    CrossedModule,
    FiniteGroup,
    NonabelianUnit,
    enumerate_unit_triples,
    enumerate_units_nonabelian,
    h0_group_law,
    identity_triple,
    pi0_order,
    pi1_order,
    triple_inverse_by_search,
    triple_of_unit,
    unique_unit_morphism,
    unit_crossed_module,
    unit_triple_from_gprime,
    verify_crossed_module,
)

from test_cech import circle_cover


def point_nerve():
    return cech_nerve(point_cover())


def conjugation_module(G, name=None):
    """(id: G -> G) with right conjugation action g^h = h^-1 g h."""
    boundary = tuple(G.elements())
    action = tuple(tuple(G.conj(g, h) for h in G.elements())
                   for g in G.elements())
    return CrossedModule(G, G, boundary, action)


def inversion_module():
    """(trivial: Z/3 -> Z/2) with the nonidentity element acting by inversion."""
    G = FiniteGroup.cyclic(3)
    H = FiniteGroup.cyclic(2)
    boundary = (0, 0, 0)
    action = tuple((g, (-g) % 3) for g in range(3))
    return CrossedModule(G, H, boundary, action)


def inclusion_module(big, subset):
    """(N -> G) for a normal subgroup N, with conjugation action."""
    sub, elems = FiniteGroup.subgroup(big, subset)
    pos = {g: k for k, g in enumerate(elems)}
    boundary = elems
    action = tuple(tuple(pos[big.conj(g, h)] for h in big.elements())
                   for g in elems)
    return CrossedModule(sub, big, boundary, action)


def module_action_module(n, m, u):
    """(trivial: Z/n -> Z/m) with h acting by multiplication by u^h."""
    assert pow(u, m, n) == 1 % n
    G = FiniteGroup.cyclic(n)
    H = FiniteGroup.cyclic(m)
    boundary = (0,) * n
    action = tuple(tuple((g * pow(u, h, n)) % n for h in range(m))
                   for g in range(n))
    return CrossedModule(G, H, boundary, action)


GROUP_POOL = [
    FiniteGroup.cyclic(2), FiniteGroup.cyclic(3), FiniteGroup.cyclic(4),
    FiniteGroup.cyclic(5), FiniteGroup.cyclic(6), FiniteGroup.cyclic(8),
    FiniteGroup.cyclic(12), FiniteGroup.symmetric(3),
    FiniteGroup.dihedral(4), FiniteGroup.dihedral(6),
    FiniteGroup.direct_product(FiniteGroup.cyclic(2), FiniteGroup.cyclic(2)),
    FiniteGroup.direct_product(FiniteGroup.cyclic(2), FiniteGroup.cyclic(6)),
]

MODULE_ACTION_CASES = [(3, 2, 2), (5, 2, 4), (5, 4, 2), (7, 3, 2),
                       (8, 2, 3), (9, 3, 4), (12, 2, 5), (4, 2, 3)]


def random_crossed_module(rng, max_order=12):
    while True:
        kind = rng.choice(["conjugation", "inclusion", "module", "trivial"])
        if kind == "conjugation":
            G = rng.choice([g for g in GROUP_POOL if g.order <= max_order])
            return conjugation_module(G)
        if kind == "inclusion":
            G = rng.choice([g for g in GROUP_POOL if g.order <= max_order])
            gens = [rng.randrange(G.order) for _ in range(rng.randint(1, 2))]
            subset = G.closure(gens)
            if G.is_normal(subset):
                return inclusion_module(G, subset)
            continue
        if kind == "module":
            n, m, u = rng.choice(MODULE_ACTION_CASES)
            if n <= max_order and m <= max_order:
                return module_action_module(n, m, u)
            continue
        G = rng.choice([g for g in GROUP_POOL
                        if g.order <= max_order and g.is_abelian])
        H = rng.choice([g for g in GROUP_POOL if g.order <= max_order])
        boundary = (0,) * G.order  # wrong unless identity index is 0
        if H.identity != 0:
            continue
        action = tuple(tuple(g for _ in H.elements()) for g in G.elements())
        return CrossedModule(G, H, boundary, action)


class TestFiniteGroup:
    def test_s3(self):
        S3 = FiniteGroup.symmetric(3)
        assert S3.order == 6 and not S3.is_abelian

    def test_dihedral(self):
        D4 = FiniteGroup.dihedral(4)
        assert D4.order == 8 and not D4.is_abelian

    def test_table_validation(self):
        with pytest.raises(ValueError):
            FiniteGroup(((0, 1), (1, 1)))

    def test_closure_and_normality(self):
        S3 = FiniteGroup.symmetric(3)
        three_cycles = [g for g in S3.elements()
                        if g != S3.identity and
                        S3.mul(g, S3.mul(g, g)) == S3.identity]
        A3 = S3.closure(three_cycles[:1])
        assert len(A3) == 3 and S3.is_normal(A3)


class TestVerify:
    def test_conjugation_passes(self):
        rep = verify_crossed_module(conjugation_module(
            FiniteGroup.symmetric(3)))
        assert rep.passed

    def test_inversion_passes(self):
        assert verify_crossed_module(inversion_module()).passed

    def test_transposition_with_trivial_action_fails_equivariance(self):
        S3 = FiniteGroup.symmetric(3)
        transpositions = [g for g in S3.elements()
                          if g != S3.identity
                          and S3.mul(g, g) == S3.identity]
        Z2 = FiniteGroup.cyclic(2)
        boundary = (S3.identity, transpositions[0])
        action = tuple(tuple(g for _ in S3.elements()) for g in range(2))
        X = CrossedModule(Z2, S3, boundary, action)
        rep = verify_crossed_module(X)
        assert not rep.passed
        failed = [c.name for c in rep.failures]
        assert "equivariance: bnd(g^h) = h^-1 bnd(g) h" in failed

    def test_random_families_pass(self):
        rng = random.Random(211)
        for _ in range(15):
            assert verify_crossed_module(random_crossed_module(rng)).passed


class TestUnitCrossedModule:
    def test_s3_identity(self):
        X = conjugation_module(FiniteGroup.symmetric(3))
        U = unit_crossed_module(X)
        assert U.H.order == 6
        assert pi0_order(U) == 1 and pi1_order(U) == 1
        # boundary is injective and surjective, an isomorphism onto K
        assert len({U.bnd(g) for g in U.G.elements()}) == U.G.order == U.H.order

    def test_inversion_module(self):
        U = unit_crossed_module(inversion_module())
        assert U.H.order == 3
        assert pi0_order(U) == 1 and pi1_order(U) == 1

    def test_trivial(self):
        X = conjugation_module(FiniteGroup.trivial())
        U = unit_crossed_module(X)
        assert U.G.order == 1 and U.H.order == 1

    def test_random(self):
        rng = random.Random(223)
        for _ in range(12):
            U = unit_crossed_module(random_crossed_module(rng))
            assert verify_crossed_module(U).passed
            assert pi0_order(U) == 1 and pi1_order(U) == 1


class TestNonabelianUnits:
    def test_inversion_units(self):
        units, rep = enumerate_units_nonabelian(inversion_module())
        assert len(units) == 3
        assert all(u.e == 0 for u in units)
        assert rep.passed

    def test_s3_units(self):
        units, rep = enumerate_units_nonabelian(
            conjugation_module(FiniteGroup.symmetric(3)))
        assert len(units) == 6
        assert rep.passed

    def test_trivial(self):
        units, rep = enumerate_units_nonabelian(
            conjugation_module(FiniteGroup.trivial()))
        assert len(units) == 1 and rep.passed

    def test_kernel_parametrizes_identity_units(self):
        rng = random.Random(227)
        for _ in range(10):
            X = random_crossed_module(rng)
            units, _ = enumerate_units_nonabelian(X, with_report=False)
            with_e1 = sorted(u.g_phi for u in units if u.e == X.H.identity)
            ker = sorted(g for g in X.G.elements()
                         if X.bnd(g) == X.H.identity)
            assert with_e1 == ker

    def test_random_contractible(self):
        rng = random.Random(229)
        for _ in range(8):
            _, rep = enumerate_units_nonabelian(random_crossed_module(rng, 8))
            assert rep.passed


class TestH0GroupLaw:
    def test_formula_example(self):
        # raw product formula on the inversion module, additive notation
        X = inversion_module()
        act, mul_g, mul_h = X.act, X.G.mul, X.H.mul
        g = mul_g(act(1, 1), 2)       # g1^(h2) * g2 with g1=1, g2=2, h2=1
        gp = mul_g(act(2, 1), 2)      # g1'^(h2) * g2' with g1'=g2'=2
        h = mul_h(1, 1)
        assert (g, gp, h) == (1, 0, 0)

    def test_identity_and_validation(self):
        X = inversion_module()
        N = point_nerve()
        ident = identity_triple(X, N)
        for t in enumerate_unit_triples(X, N):
            assert h0_group_law(t, ident, N).key() == t.key()
            assert h0_group_law(ident, t, N).key() == t.key()

    def test_inverses_by_search(self):
        X = inversion_module()
        N = point_nerve()
        ident = identity_triple(X, N).key()
        for t in enumerate_unit_triples(X, N):
            inv = triple_inverse_by_search(t, N)
            assert h0_group_law(t, inv, N).key() == ident

    def test_associative_exhaustive_point(self):
        rng = random.Random(233)
        for _ in range(6):
            X = random_crossed_module(rng, 8)
            N = point_nerve()
            triples = enumerate_unit_triples(X, N)
            for t1, t2, t3 in itertools.product(triples[:6], repeat=3):
                left = h0_group_law(h0_group_law(t1, t2, N), t3, N)
                right = h0_group_law(t1, h0_group_law(t2, t3, N), N)
                assert left.key() == right.key()

    def test_associative_on_circle(self):
        X = inversion_module()
        N = cech_nerve(circle_cover())
        triples = enumerate_unit_triples(X, N)
        assert len(triples) == 27
        rng = random.Random(239)
        sample = rng.sample(triples, 6)
        for t1, t2, t3 in itertools.product(sample, repeat=3):
            left = h0_group_law(h0_group_law(t1, t2, N), t3, N)
            right = h0_group_law(t1, h0_group_law(t2, t3, N), N)
            assert left.key() == right.key()

    def test_matches_unit_morphism_composition(self):
        # over e = identity the twist is trivial: triple products multiply
        # g' plainly, exactly as the unique unit morphisms compose
        rng = random.Random(241)
        N = point_nerve()
        for _ in range(8):
            X = random_crossed_module(rng)
            ker = [g for g in X.G.elements() if X.bnd(g) == X.H.identity]
            units = {a: NonabelianUnit(X, X.H.identity, a) for a in ker}
            for a, b in itertools.product(ker, repeat=2):
                u = unique_unit_morphism(units[a], units[b])
                assert u == X.G.mul(X.G.inv(b), a)
                prod = h0_group_law(
                    triple_inverse_by_search(triple_of_unit(units[b], N), N),
                    triple_of_unit(units[a], N), N)
                assert prod.gp_at()[N.level(0)[0]] == u

    def test_invalid_triple_rejected(self):
        X = inversion_module()
        N = point_nerve()
        cell0 = N.level(0)[0]
        cell1 = N.level(1)[0]
        bad = triple_of_unit(
            NonabelianUnit(X, 0, 1), N)
        tampered = bad.__class__(X, ((cell1, 1),), bad.g_prime, bad.h)
        with pytest.raises(ValueError, match="level-1 condition"):
            tampered.validate(N)
