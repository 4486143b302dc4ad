"""Finite crossed modules and the units of the group-like groupoids they
present.

A crossed module is a boundary map lam: G -> H between finite groups with a
right action of H on G, written act(g, h) for g^h, satisfying

    equivariance   lam(g^h) = h^-1 * lam(g) * h
    Peiffer        g^(lam(g')) = g'^-1 * g * g'

Groups are multiplication tables (order capped at 64); every axiom is
checked exhaustively.

The point model of the presented groupoid has objects H and morphisms
g: h -> h' whenever lam(g) = h'^-1 * h; composition of g then g' is the
product g' * g, and the tensor of morphisms twists the left factor by the
target of the right one: g1 (x) g2 = g1^(tgt g2) * g2.  With these
conventions a unit is a pair (e, g_phi) with lam(g_phi) = e, the unique
unit morphism (e1, g1) -> (e2, g2) is

    u = (g2^(e2^-1))^-1 * (g1^(e1^-1)),

and units with e = 1 are exactly the kernel of lam.

The unit crossed module lives on K = {(g, h) : lam(g) * h = 1} inside the
right-action semidirect product (g1, h1)(g2, h2) = (g1^h2 * g2, h1 h2), with
boundary g |-> (g^-1, lam g) and K acting through its H-coordinate.  This is
the unique sign reading under which K is closed, the boundary is a
homomorphism, and the crossed-module axioms hold for noncommutative H; the
cocycle-level group law

    (g1, g1', h1) * (g2, g2', h2) = (g1^(d0* h2) g2, g1'^(h2) g2', h1 h2)

is then closed on valid descent triples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .abelian import CapExceeded, FinitenessError
from .verification import VerificationReport

MAX_GROUP_ORDER = 64


class FiniteGroup:
    """A finite group as a multiplication table on 0..n-1.

    Closure, identity, inverses and associativity are all verified at
    construction; the order is capped so exhaustive checks stay cheap.
    """

    def __init__(self, table, name="G"):
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        self.name = name
        n = len(self.table)
        if n > MAX_GROUP_ORDER:
            raise CapExceeded(f"group order {n} exceeds {MAX_GROUP_ORDER}")
        if any(len(row) != n for row in self.table):
            raise ValueError("multiplication table must be square")
        if any(x < 0 or x >= n for row in self.table for x in row):
            raise ValueError("table entries must be element indices")
        self.order = n
        e = None
        for a in range(n):
            if all(self.table[a][b] == b == self.table[b][a] for b in range(n)):
                e = a
                break
        if e is None:
            raise ValueError("no identity element")
        self.identity = e
        self._inv = [None] * n
        for a in range(n):
            for b in range(n):
                if self.table[a][b] == e and self.table[b][a] == e:
                    self._inv[a] = b
            if self._inv[a] is None:
                raise ValueError(f"element {a} has no inverse")
        for a in range(n):
            for b in range(n):
                ab = self.table[a][b]
                for c in range(n):
                    if self.table[ab][c] != self.table[a][self.table[b][c]]:
                        raise ValueError("table is not associative")

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self._inv[a]

    def conj(self, a, b):
        """b^-1 * a * b."""
        return self.mul(self.mul(self.inv(b), a), b)

    def elements(self):
        return range(self.order)

    @property
    def is_abelian(self):
        return all(self.table[a][b] == self.table[b][a]
                   for a in range(self.order) for b in range(self.order))

    def closure(self, gens):
        out = {self.identity}
        frontier = set(gens) | {self.identity}
        while frontier:
            new = set()
            for a in frontier:
                for b in list(out) + list(gens):
                    for c in (self.mul(a, b), self.mul(b, a), self.inv(a)):
                        if c not in out and c not in frontier:
                            new.add(c)
            out |= frontier
            frontier = new
        return tuple(sorted(out))

    def is_normal(self, subset):
        sub = set(subset)
        return all(self.conj(a, b) in sub
                   for a in sub for b in range(self.order))

    def __str__(self):
        return f"{self.name} (order {self.order})"

    # ---- constructors ----

    @classmethod
    def trivial(cls):
        return cls(((0,),), "1")

    @classmethod
    def cyclic(cls, n):
        return cls([[(a + b) % n for b in range(n)] for a in range(n)],
                   f"Z/{n}")

    @classmethod
    def dihedral(cls, n):
        """Order 2n: (i, f) with (i1,f1)(i2,f2) = (i1 + (-1)^f1 i2, f1+f2)."""
        elems = [(i, f) for f in range(2) for i in range(n)]
        index = {e: k for k, e in enumerate(elems)}

        def mul(x, y):
            i1, f1 = x
            i2, f2 = y
            return ((i1 + (i2 if f1 == 0 else -i2)) % n, (f1 + f2) % 2)

        table = [[index[mul(x, y)] for y in elems] for x in elems]
        return cls(table, f"D{n}")

    @classmethod
    def symmetric(cls, n):
        if n > 4:
            raise CapExceeded("symmetric(n) supported for n <= 4")
        elems = sorted(itertools.permutations(range(n)))
        index = {p: k for k, p in enumerate(elems)}

        def mul(p, q):  # apply p first, then q
            return tuple(q[p[i]] for i in range(n))

        table = [[index[mul(p, q)] for q in elems] for p in elems]
        return cls(table, f"S{n}")

    @classmethod
    def direct_product(cls, a, b):
        elems = [(x, y) for x in a.elements() for y in b.elements()]
        index = {e: k for k, e in enumerate(elems)}
        table = [[index[(a.mul(x1, x2), b.mul(y1, y2))]
                  for (x2, y2) in elems] for (x1, y1) in elems]
        return cls(table, f"{a.name} x {b.name}")

    @classmethod
    def subgroup(cls, big, subset, name=None):
        """The subgroup on the given closed subset, with its inclusion map."""
        subset = tuple(sorted(subset))
        pos = {g: k for k, g in enumerate(subset)}
        table = [[pos[big.mul(x, y)] for y in subset] for x in subset]
        return cls(table, name or f"sub({big.name})"), subset


@dataclass(frozen=True)
class CrossedModule:
    G: FiniteGroup
    H: FiniteGroup
    boundary: tuple  # boundary[g] in H
    action: tuple    # action[g][h] = g^h, an element of G

    def __post_init__(self):
        object.__setattr__(self, "boundary", tuple(self.boundary))
        object.__setattr__(self, "action",
                           tuple(tuple(r) for r in self.action))
        if len(self.boundary) != self.G.order or \
                any(len(r) != self.H.order for r in self.action) or \
                len(self.action) != self.G.order:
            raise ValueError("boundary/action tables have wrong shapes")

    def bnd(self, g):
        return self.boundary[g]

    def act(self, g, h):
        return self.action[g][h]

    def __str__(self):
        return f"[{self.G} -> {self.H}]"


def verify_crossed_module(X: CrossedModule) -> VerificationReport:
    """Exhaustive axiom check; each failed check carries its first violation."""
    G, H = X.G, X.H
    report = VerificationReport(f"crossed module axioms for {X}")

    def first(pred, space):
        for w in space:
            if not pred(*w):
                return w
        return None

    w = first(lambda g1, g2: X.bnd(G.mul(g1, g2)) ==
              H.mul(X.bnd(g1), X.bnd(g2)),
              itertools.product(G.elements(), repeat=2))
    report.add("boundary is a homomorphism", w is None, w)
    w = first(lambda g: X.act(g, H.identity) == g,
              ((g,) for g in G.elements()))
    report.add("identity acts trivially", w is None, w)
    w = first(lambda g, h1, h2: X.act(g, H.mul(h1, h2)) ==
              X.act(X.act(g, h1), h2),
              itertools.product(G.elements(), H.elements(), H.elements()))
    report.add("action composes as a right action", w is None, w)
    w = first(lambda g1, g2, h: X.act(G.mul(g1, g2), h) ==
              G.mul(X.act(g1, h), X.act(g2, h)),
              itertools.product(G.elements(), G.elements(), H.elements()))
    report.add("each element acts by an endomorphism", w is None, w)
    w = first(lambda h: len({X.act(g, h) for g in G.elements()}) == G.order,
              ((h,) for h in H.elements()))
    report.add("each element acts bijectively", w is None, w)
    w = first(lambda g, h: X.bnd(X.act(g, h)) == H.conj(X.bnd(g), h),
              itertools.product(G.elements(), H.elements()))
    report.add("equivariance: bnd(g^h) = h^-1 bnd(g) h", w is None, w)
    w = first(lambda g, g2: X.act(g, X.bnd(g2)) == G.conj(g, g2),
              itertools.product(G.elements(), repeat=2))
    report.add("Peiffer identity: g^(bnd g') = g'^-1 g g'", w is None, w)
    report.stats["|G|"] = G.order
    report.stats["|H|"] = H.order
    return report


def pi1_order(X: CrossedModule):
    return sum(1 for g in X.G.elements() if X.bnd(g) == X.H.identity)


def pi0_order(X: CrossedModule):
    image = {X.bnd(g) for g in X.G.elements()}
    return X.H.order // len(image)


def unit_crossed_module(X: CrossedModule) -> CrossedModule:
    """The crossed module presenting the unit groupoid of X.

    Carried by K = {(g, h) : bnd(g) h = 1} with the semidirect product law
    (g1, h1)(g2, h2) = (g1^h2 g2, h1 h2), boundary g |-> (g^-1, bnd g), and
    K acting on G through its H-coordinate.  The boundary is bijective, so
    both homotopy groups of the result are trivial.
    """
    if not verify_crossed_module(X).passed:
        raise ValueError("not a crossed module")
    G, H = X.G, X.H
    pairs = [(g, h) for g in G.elements() for h in H.elements()
             if H.mul(X.bnd(g), h) == H.identity]
    index = {p: k for k, p in enumerate(pairs)}

    def mul(p, q):
        (g1, h1), (g2, h2) = p, q
        return (G.mul(X.act(g1, h2), g2), H.mul(h1, h2))

    table = [[index[mul(p, q)] for q in pairs] for p in pairs]
    K = FiniteGroup(table, f"ker({X.G.name} semidirect {X.H.name} -> {X.H.name})")
    boundary = tuple(index[(G.inv(g), X.bnd(g))] for g in G.elements())
    action = tuple(tuple(X.act(g, pairs[k][1]) for k in range(len(pairs)))
                   for g in G.elements())
    out = CrossedModule(G, K, boundary, action)
    rep = verify_crossed_module(out)
    if not rep.passed:
        raise AssertionError(f"unit crossed module failed its axioms: "
                             f"{[c.name for c in rep.failures]}")
    return out


# --------------------------------------------------------------------------
# point-model units


@dataclass(frozen=True)
class NonabelianUnit:
    module: CrossedModule
    e: int       # object of the point model, an element of H
    g_phi: int   # morphism e*e -> e, an element of G

    def __post_init__(self):
        if self.module.bnd(self.g_phi) != self.e:
            raise ValueError("not a unit: bnd(g_phi) != e")

    def key(self):
        return (self.e, self.g_phi)


def tensor_morphisms(X: CrossedModule, g1, tgt2, g2):
    """g1 (x) g2 where tgt2 is the target object of g2."""
    return X.G.mul(X.act(g1, tgt2), g2)


def _unit_square_holds(X, s, t, u):
    """phi_s then u  ==  (u (x) u) then phi_t, evaluated in G."""
    left = X.G.mul(u, s.g_phi)
    u_tensor_u = tensor_morphisms(X, u, t.e, u)
    right = X.G.mul(t.g_phi, u_tensor_u)
    return left == right


def unique_unit_morphism(s: NonabelianUnit, t: NonabelianUnit):
    """The only morphism s -> t: (g_t^(e_t^-1))^-1 * (g_s^(e_s^-1))."""
    X = s.module
    G, H = X.G, X.H
    u = G.mul(G.inv(X.act(t.g_phi, H.inv(t.e))),
              X.act(s.g_phi, H.inv(s.e)))
    if not _unit_square_holds(X, s, t, u):
        raise AssertionError("unit-morphism square failed")
    return u


def enumerate_units_nonabelian(X: CrossedModule, with_report=True):
    """All units (e, g_phi), plus the contractibility report.

    Units are lam(g) |-> (lam(g), g) for g in G; those with e = 1 are the
    kernel of the boundary; between every ordered pair there is exactly one
    unit morphism (verified by scanning all of G) and the unique morphisms
    compose coherently.
    """
    units = sorted((NonabelianUnit(X, X.bnd(g), g) for g in X.G.elements()),
                   key=lambda u: u.key())
    if not with_report:
        return units, None
    G, H = X.G, X.H
    report = VerificationReport("contractibility of the nonabelian unit groupoid")
    report.add("unit set nonempty", len(units) == G.order,
               f"{len(units)} units")
    kernel = sorted(g for g in G.elements() if X.bnd(g) == H.identity)
    trivial_e = sorted(u.g_phi for u in units if u.e == H.identity)
    report.add("units over the identity are the kernel of the boundary",
               trivial_e == kernel, (trivial_e, kernel))
    unique = {}
    failures = []
    for s in units:
        for t in units:
            want = H.mul(H.inv(t.e), s.e)
            sols = [u for u in G.elements()
                    if X.bnd(u) == want and _unit_square_holds(X, s, t, u)]
            formula = unique_unit_morphism(s, t)
            if len(sols) != 1 or sols[0] != formula:
                failures.append((s.key(), t.key(), sols))
            unique[(s.key(), t.key())] = formula
    report.add("exactly one unit morphism per ordered pair", not failures,
               failures[:3] or f"{len(unique)} morphisms")
    coh = []
    for s in units:
        for t in units:
            for w in units:
                composite = G.mul(unique[(t.key(), w.key())],
                                  unique[(s.key(), t.key())])
                if composite != unique[(s.key(), w.key())]:
                    coh.append((s.key(), t.key(), w.key()))
    report.add("composition of unique morphisms is coherent", not coh,
               coh[:3] or None)
    report.stats["units"] = len(units)
    return units, report


# --------------------------------------------------------------------------
# descent triples and their group law


@dataclass(frozen=True)
class UnitTriple:
    """(g, g', h): g on level-1 cells, g' and h on level-0 cells.

    Valid when, pointwise, bnd(g') h = 1 and g = d0*(g') * (d1* g')^-1.
    These are the conditions obtained by mirroring the abelian descent
    calculus multiplicatively; on non-point nerves they are an assumption
    recorded by the validator, not a statement from a reference.
    """

    module: CrossedModule
    g: tuple       # ((cell, value), ...) over level-1 cells
    g_prime: tuple  # over level-0 cells
    h: tuple        # over level-0 cells

    @classmethod
    def build(cls, module, nerve, g, g_prime, h):
        return cls(module,
                   tuple(sorted((c, g[c]) for c in nerve.level(1))),
                   tuple(sorted((c, g_prime[c]) for c in nerve.level(0))),
                   tuple(sorted((c, h[c]) for c in nerve.level(0))))

    def g_at(self):
        return dict(self.g)

    def gp_at(self):
        return dict(self.g_prime)

    def h_at(self):
        return dict(self.h)

    def validate(self, nerve):
        X = self.module
        gp, hh = self.gp_at(), self.h_at()
        for c in nerve.level(0):
            if X.H.mul(X.bnd(gp[c]), hh[c]) != X.H.identity:
                raise ValueError(f"membership bnd(g') h = 1 fails at {c}")
        g = self.g_at()
        for c in nerve.level(1):
            want = X.G.mul(gp[nerve.face(1, 0, c)],
                           X.G.inv(gp[nerve.face(1, 1, c)]))
            if g[c] != want:
                raise ValueError(
                    f"level-1 condition g = d0*(g') (d1*(g'))^-1 fails at {c}")

    def key(self):
        return (self.g, self.g_prime, self.h)


def unit_triple_from_gprime(X, nerve, g_prime) -> UnitTriple:
    """The valid triple determined by a level-0 choice of g'."""
    h = {c: X.H.inv(X.bnd(g_prime[c])) for c in nerve.level(0)}
    g = {c: X.G.mul(g_prime[nerve.face(1, 0, c)],
                    X.G.inv(g_prime[nerve.face(1, 1, c)]))
         for c in nerve.level(1)}
    t = UnitTriple.build(X, nerve, g, g_prime, h)
    t.validate(nerve)
    return t


def triple_of_unit(unit: NonabelianUnit, nerve) -> UnitTriple:
    return unit_triple_from_gprime(
        unit.module, nerve,
        {c: unit.g_phi for c in nerve.level(0)})


def enumerate_unit_triples(X, nerve, max_states=10 ** 7):
    cells = nerve.level(0)
    if X.G.order ** len(cells) > max_states:
        raise CapExceeded("triple enumeration exceeds the state cap")
    out = []
    for values in itertools.product(X.G.elements(), repeat=len(cells)):
        out.append(unit_triple_from_gprime(X, nerve, dict(zip(cells, values))))
    return out


def h0_group_law(t1: UnitTriple, t2: UnitTriple, nerve) -> UnitTriple:
    """(g1, g1', h1)(g2, g2', h2) =
    (g1^(d0* h2) g2, g1'^(h2) g2', h1 h2), validated on the nerve."""
    if t1.module is not t2.module and t1.module != t2.module:
        raise ValueError("triples over different crossed modules")
    X = t1.module
    t1.validate(nerve)
    t2.validate(nerve)
    g1, gp1, h1 = t1.g_at(), t1.gp_at(), t1.h_at()
    g2, gp2, h2 = t2.g_at(), t2.gp_at(), t2.h_at()
    g = {c: X.G.mul(X.act(g1[c], h2[nerve.face(1, 0, c)]), g2[c])
         for c in nerve.level(1)}
    gp = {c: X.G.mul(X.act(gp1[c], h2[c]), gp2[c]) for c in nerve.level(0)}
    h = {c: X.H.mul(h1[c], h2[c]) for c in nerve.level(0)}
    out = UnitTriple.build(X, nerve, g, gp, h)
    out.validate(nerve)
    return out


def identity_triple(X, nerve) -> UnitTriple:
    return unit_triple_from_gprime(
        X, nerve, {c: X.G.identity for c in nerve.level(0)})


def triple_inverse_by_search(t: UnitTriple, nerve) -> UnitTriple:
    ident = identity_triple(t.module, nerve).key()
    for cand in enumerate_unit_triples(t.module, nerve):
        if h0_group_law(t, cand, nerve).key() == ident and \
                h0_group_law(cand, t, nerve).key() == ident:
            return cand
    raise ValueError("no inverse found")
