"""Exact arithmetic for finitely generated abelian groups.

A group is stored in invariant-factor canonical form

    Z/d_1 (+) ... (+) Z/d_k (+) Z^r        with  2 <= d_1 | d_2 | ... | d_k,

elements are integer coordinate vectors (torsion coordinates reduced into
[0, d_i)), and homomorphisms are integer matrices acting on coordinates:
columns are indexed by source generators, rows by target generators, and
composition is the matrix product.

Everything is computed with exact integer arithmetic via the Smith normal
form; no floating point, no fixed-width overflow.

>>> G = FgAbGroup.from_divisors(2, 3)
>>> str(G)
'Z/6'
>>> f = GroupHom(FgAbGroup.cyclic(2), FgAbGroup.cyclic(4), [[2]])
>>> K, incl = kernel(f)
>>> str(K)
'0'
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd, lcm, prod


class FinitenessError(ValueError):
    """An operation that enumerates elements was given an infinite group."""


class CapExceeded(RuntimeError):
    """An exhaustive search would exceed the configured state cap."""


# --------------------------------------------------------------------------
# Integer matrices as lists of rows.  Dimensions are always passed explicitly
# where a matrix may have zero rows or columns, since [] cannot remember its
# width.

def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _matmul(A, B, m, k, n):
    """Product of an m-by-k and a k-by-n matrix."""
    return [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(n)]
            for i in range(m)]


def _matvec(A, v, m, k):
    return [sum(A[i][t] * v[t] for t in range(k)) for i in range(m)]


def _freeze(A):
    return tuple(tuple(row) for row in A)


def smith_normal_form(M):
    """Diagonalize an integer matrix.

    Returns ``(U, D, V)`` with ``U * M * V == D``, ``U`` and ``V`` unimodular
    and ``D`` diagonal with each diagonal entry nonnegative and dividing the
    next.  Total on integer matrices, including empty shapes.

    >>> U, D, V = smith_normal_form([[2, 4], [-2, 6]])
    >>> [D[0][0], D[1][1]]
    [2, 10]
    """
    U, _, D, V, _ = _snf_full(M, want_ui=False, want_vi=False)
    return _freeze(U), _freeze(D), _freeze(V)


def _snf_full(M, want_u=True, want_ui=True, want_v=True, want_vi=True):
    """Smith normal form with optionally tracked transforms.

    Returns ``(U, Ui, D, V, Vi)``; transforms not asked for come back None.
    """
    A = [[int(x) for x in row] for row in M]
    m = len(A)
    n = len(A[0]) if A else 0
    if any(len(row) != n for row in A):
        raise ValueError("ragged matrix")
    U = _identity(m) if want_u else None
    Ui = _identity(m) if want_ui else None
    V = _identity(n) if want_v else None
    Vi = _identity(n) if want_vi else None

    def row_add(i, j, c):  # row_i += c * row_j
        Ai, Aj = A[i], A[j]
        for t in range(n):
            Ai[t] += c * Aj[t]
        if U is not None:
            Uii, Uj = U[i], U[j]
            for t in range(m):
                Uii[t] += c * Uj[t]
        if Ui is not None:
            for r in Ui:  # inverse update: col_j -= c * col_i
                r[j] -= c * r[i]

    def col_add(j, i, c):  # col_j += c * col_i
        for r in A:
            r[j] += c * r[i]
        if V is not None:
            for r in V:
                r[j] += c * r[i]
        if Vi is not None:
            Vij, Vii = Vi[j], Vi[i]
            for t in range(n):  # inverse update: row_i -= c * row_j
                Vii[t] -= c * Vij[t]

    def row_swap(i, j):
        if i == j:
            return
        A[i], A[j] = A[j], A[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]
        if Ui is not None:
            for r in Ui:
                r[i], r[j] = r[j], r[i]

    def col_swap(i, j):
        if i == j:
            return
        for r in A:
            r[i], r[j] = r[j], r[i]
        if V is not None:
            for r in V:
                r[i], r[j] = r[j], r[i]
        if Vi is not None:
            Vi[i], Vi[j] = Vi[j], Vi[i]

    def row_negate(i):
        A[i] = [-x for x in A[i]]
        if U is not None:
            U[i] = [-x for x in U[i]]
        if Ui is not None:
            for r in Ui:
                r[i] = -r[i]

    def row_gcd_op(t, i, x, y, u, v):
        # (row_t, row_i) <- (x row_t + y row_i, u row_t + v row_i),
        # with x v - y u = 1
        At, Ai = A[t], A[i]
        for s in range(n):
            a, b = At[s], Ai[s]
            At[s] = x * a + y * b
            Ai[s] = u * a + v * b
        if U is not None:
            Ut, Uu = U[t], U[i]
            for s in range(m):
                a, b = Ut[s], Uu[s]
                Ut[s] = x * a + y * b
                Uu[s] = u * a + v * b
        if Ui is not None:
            for r in Ui:  # right-multiply by the inverse block
                a, b = r[t], r[i]
                r[t] = v * a - u * b
                r[i] = -y * a + x * b

    def col_gcd_op(t, j, x, y, u, v):
        # (col_t, col_j) <- (x col_t + y col_j, u col_t + v col_j)
        for r in A:
            a, b = r[t], r[j]
            r[t] = x * a + y * b
            r[j] = u * a + v * b
        if V is not None:
            for r in V:
                a, b = r[t], r[j]
                r[t] = x * a + y * b
                r[j] = u * a + v * b
        if Vi is not None:
            Vt, Vj = Vi[t], Vi[j]
            for s in range(n):
                a, b = Vt[s], Vj[s]
                Vt[s] = v * a - u * b
                Vj[s] = -y * a + x * b

    t = 0
    while t < m and t < n:
        piv = None
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                v = row[j]
                if v:
                    v = -v if v < 0 else v
                    if best is None or v < best:
                        piv, best = (i, j), v
                        if v == 1:
                            break
            if best == 1:
                break
        if piv is None:
            break
        row_swap(t, piv[0])
        col_swap(t, piv[1])
        while True:
            for i in range(t + 1, m):
                b = A[i][t]
                if b:
                    a = A[t][t]
                    if b % a == 0:
                        row_add(i, t, -(b // a))
                    else:  # one unimodular step leaves (gcd, 0)
                        g, x, y = _xgcd(a, b)
                        row_gcd_op(t, i, x, y, -(b // g), a // g)
            for j in range(t + 1, n):
                b = A[t][j]
                if b:
                    a = A[t][t]
                    if b % a == 0:
                        col_add(j, t, -(b // a))
                    else:
                        g, x, y = _xgcd(a, b)
                        col_gcd_op(t, j, x, y, -(b // g), a // g)
            if all(A[i][t] == 0 for i in range(t + 1, m)):
                break
        if A[t][t] < 0:
            row_negate(t)
        d = A[t][t]
        bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                    if A[i][j] % d), None)
        if bad is not None:
            # pull the offending row up so the next pass replaces the pivot
            # with a proper divisor; pivot gcd strictly decreases.
            row_add(t, bad[0], 1)
            continue
        t += 1
    return U, Ui, A, V, Vi


def _xgcd(a, b):
    """g = gcd(a, b) > 0 with x*a + y*b = g."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def _canonicalize_presentation(ngens, rel_cols, exponent=None):
    """Quotient of Z^ngens by the columns of a relation matrix.

    Returns ``(group, to_can, from_can)`` where ``to_can`` maps ambient
    coordinates to canonical generators and ``from_can`` sends each canonical
    generator to an ambient representative.

    When ``exponent`` is given it must be a certified annihilator of the
    quotient, i.e. exponent * Z^ngens lies inside the relation lattice.
    The quotient is then computed as Z^ngens / (lattice + exponent * Z^ngens)
    -- the same group -- with every working entry held below the exponent:
    exponent-sized sublattices are invariant under the row transforms, so
    the order of canonical coordinate i is gcd(d_i, exponent), and the
    coordinate transforms only matter modulo the generator orders, which
    divide the exponent.
    """
    k = len(rel_cols)
    R = [[rel_cols[j][i] for j in range(k)] for i in range(ngens)]
    if exponent is not None:
        U, Ui, D = _snf_presentation(R, exponent)
        orders = [gcd(D[i][i], exponent) if i < k else exponent
                  for i in range(ngens)]
        free = []
    else:
        U, Ui, D, _, _ = _snf_full(R, want_v=False, want_vi=False)
        orders = [abs(D[i][i]) if i < k else 0 for i in range(ngens)]
        free = [i for i, o in enumerate(orders) if o == 0]
    torsion = [i for i, o in enumerate(orders) if o >= 2]
    group = FgAbGroup(tuple(orders[i] for i in torsion), len(free))
    sel = torsion + free
    to_can = [U[i] for i in sel]
    from_can = [[Ui[i][j] for j in sel] for i in range(ngens)]
    return group, to_can, from_can


def _snf_presentation(R, exponent):
    """Elimination for relation lattices taken together with exponent * Z^m.

    Entry reductions below the exponent amount to adjoining vectors of that
    sublattice, which the result accounts for; the row transforms are kept
    reduced as well, which their use tolerates.  Returns ``(U, Ui, D)``.
    """
    e = exponent
    A = [[x % e for x in row] for row in R]
    m = len(A)
    n = len(A[0]) if A else 0
    U, Ui = _identity(m), _identity(m)

    def row_add(i, j, c):
        Ai, Aj = A[i], A[j]
        for t in range(n):
            Ai[t] = (Ai[t] + c * Aj[t]) % e
        Uii, Uj = U[i], U[j]
        for t in range(m):
            Uii[t] = (Uii[t] + c * Uj[t]) % e
        for r in Ui:
            r[j] = (r[j] - c * r[i]) % e

    def row_gcd_op(t, i, x, y, u, v):
        At, Ai = A[t], A[i]
        for s in range(n):
            a, b = At[s], Ai[s]
            At[s] = (x * a + y * b) % e
            Ai[s] = (u * a + v * b) % e
        Ut, Uu = U[t], U[i]
        for s in range(m):
            a, b = Ut[s], Uu[s]
            Ut[s] = (x * a + y * b) % e
            Uu[s] = (u * a + v * b) % e
        for r in Ui:
            a, b = r[t], r[i]
            r[t] = (v * a - u * b) % e
            r[i] = (x * b - y * a) % e

    def col_gcd_op(t, j, x, y, u, v):
        for r in A:
            a, b = r[t], r[j]
            r[t] = (x * a + y * b) % e
            r[j] = (u * a + v * b) % e

    def col_add(j, i, c):
        for r in A:
            r[j] = (r[j] + c * r[i]) % e

    def col_swap(i, j):
        if i == j:
            return
        for r in A:
            r[i], r[j] = r[j], r[i]

    def row_swap(i, j):
        if i == j:
            return
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]
        for r in Ui:
            r[i], r[j] = r[j], r[i]

    t = 0
    while t < m and t < n:
        # entries live in [0, e); a zero entry may still represent the
        # relation e, which the appended exponent columns keep available
        piv = None
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                v = row[j]
                if v:
                    if best is None or v < best:
                        piv, best = (i, j), v
                        if v == 1:
                            break
            if best == 1:
                break
        if piv is None:
            break
        row_swap(t, piv[0])
        col_swap(t, piv[1])
        while True:
            for i in range(t + 1, m):
                b = A[i][t]
                if b:
                    a = A[t][t]
                    if b % a == 0:
                        row_add(i, t, -(b // a))
                    else:
                        g, x, y = _xgcd(a, b)
                        row_gcd_op(t, i, x, y, -(b // g), a // g)
            for j in range(t + 1, n):
                b = A[t][j]
                if b:
                    a = A[t][t]
                    if b % a == 0:
                        col_add(j, t, -(b // a))
                    else:
                        g, x, y = _xgcd(a, b)
                        col_gcd_op(t, j, x, y, -(b // g), a // g)
            if all(A[i][t] == 0 for i in range(t + 1, m)):
                break
        d = A[t][t]
        bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                    if A[i][j] % d), None)
        if bad is not None:
            row_add(t, bad[0], 1)
            continue
        t += 1
    return U, Ui, A


# --------------------------------------------------------------------------


@dataclass(frozen=True)
class FgAbGroup:
    """A finitely generated abelian group in invariant-factor form."""

    invariant_factors: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        inv = tuple(int(d) for d in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", inv)
        if any(d < 2 for d in inv):
            raise ValueError("invariant factors must be >= 2")
        if any(inv[i + 1] % inv[i] for i in range(len(inv) - 1)):
            raise ValueError("invariant factors must form a divisibility chain")
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")

    @classmethod
    def trivial(cls):
        return cls((), 0)

    @classmethod
    def cyclic(cls, n):
        if n < 1:
            raise ValueError("cyclic(n) needs n >= 1")
        return cls((), 0) if n == 1 else cls((n,), 0)

    @classmethod
    def free(cls, rank):
        return cls((), rank)

    @classmethod
    def from_divisors(cls, *divisors):
        """Canonicalize an arbitrary list of cyclic orders (0 means Z).

        >>> FgAbGroup.from_divisors(2, 3).invariant_factors
        (6,)
        """
        cols = []
        for i, d in enumerate(divisors):
            if d:
                col = [0] * len(divisors)
                col[i] = int(d)
                cols.append(col)
        group, _, _ = _canonicalize_presentation(len(divisors), cols)
        return group

    @property
    def ngens(self):
        return len(self.invariant_factors) + self.free_rank

    @property
    def is_finite(self):
        return self.free_rank == 0

    @property
    def is_trivial(self):
        return self.ngens == 0

    def order(self):
        if not self.is_finite:
            raise FinitenessError(f"{self} is infinite")
        return prod(self.invariant_factors)

    def reduce(self, coords):
        coords = [int(c) for c in coords]
        if len(coords) != self.ngens:
            raise ValueError("coordinate length mismatch")
        for i, d in enumerate(self.invariant_factors):
            coords[i] %= d
        return tuple(coords)

    def element(self, coords):
        return GroupElem(self, self.reduce(coords))

    def zero(self):
        return GroupElem(self, (0,) * self.ngens)

    def generator(self, i):
        coords = [0] * self.ngens
        coords[i] = 1
        return self.element(coords)

    def elements(self):
        """All elements in lexicographic coordinate order (finite only)."""
        if not self.is_finite:
            raise FinitenessError(f"cannot enumerate {self}")
        ranges = [range(d) for d in self.invariant_factors]
        for coords in itertools.product(*ranges):
            yield GroupElem(self, coords)

    def relation_columns(self):
        cols = []
        for i, d in enumerate(self.invariant_factors):
            col = [0] * self.ngens
            col[i] = d
            cols.append(col)
        return cols

    def __str__(self):
        parts = [f"Z/{d}" for d in self.invariant_factors]
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        return " x ".join(parts) if parts else "0"

    def __repr__(self):
        return f"FgAbGroup({list(self.invariant_factors)}, {self.free_rank})"


@dataclass(frozen=True)
class GroupElem:
    group: FgAbGroup
    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", self.group.reduce(self.coords))

    def _check(self, other):
        if self.group != other.group:
            raise ValueError(f"group mismatch: {self.group} vs {other.group}")

    def __add__(self, other):
        self._check(other)
        return GroupElem(self.group,
                         tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return GroupElem(self.group, tuple(-a for a in self.coords))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, n):
        return GroupElem(self.group, tuple(n * a for a in self.coords))

    @property
    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def __str__(self):
        return f"({', '.join(map(str, self.coords))})"


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism given by an integer matrix on canonical generators.

    Well-definedness (each torsion relation maps to zero) is checked
    eagerly; every downstream computation assumes it.
    """

    source: FgAbGroup
    target: FgAbGroup
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = [[int(x) for x in row] for row in self.matrix]
        if len(rows) != self.target.ngens or \
                any(len(r) != self.source.ngens for r in rows):
            raise ValueError(
                f"matrix shape must be {self.target.ngens} x {self.source.ngens}")
        # reduce columns into canonical target coordinates
        for i, d in enumerate(self.target.invariant_factors):
            rows[i] = [x % d for x in rows[i]]
        object.__setattr__(self, "matrix", _freeze(rows))
        for j, d in enumerate(self.source.invariant_factors):
            img = self.target.reduce(d * row[j] for row in self.matrix)
            if any(img):
                raise ValueError(
                    f"not a homomorphism: generator {j} has order {d} but its "
                    f"image does not")

    @classmethod
    def identity(cls, group):
        return cls(group, group, _identity(group.ngens))

    @classmethod
    def zero(cls, source, target):
        return cls(source, target,
                   [[0] * source.ngens for _ in range(target.ngens)])

    @classmethod
    def from_images(cls, source, target, images):
        """Homomorphism sending generator i of the source to images[i]."""
        if len(images) != source.ngens:
            raise ValueError("need one image per source generator")
        for y in images:
            if y.group != target:
                raise ValueError("image in wrong group")
        rows = [[y.coords[i] for y in images] for i in range(target.ngens)]
        return cls(source, target, rows)

    def __call__(self, x):
        if x.group != self.source:
            raise ValueError("element not in the source group")
        return self.target.element(
            _matvec(self.matrix, x.coords, self.target.ngens, self.source.ngens))

    def compose(self, other):
        """self after other (matrix product)."""
        if other.target != self.source:
            raise ValueError("homomorphisms not composable")
        prod_rows = _matmul(self.matrix, other.matrix,
                            self.target.ngens, self.source.ngens,
                            other.source.ngens)
        return GroupHom(other.source, self.target, prod_rows)

    def _check_parallel(self, other):
        if self.source != other.source or self.target != other.target:
            raise ValueError("homomorphisms have different endpoints")

    def __add__(self, other):
        self._check_parallel(other)
        rows = [[a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.matrix, other.matrix)]
        return GroupHom(self.source, self.target, rows)

    def __neg__(self):
        return GroupHom(self.source, self.target,
                        [[-a for a in row] for row in self.matrix])

    def __sub__(self, other):
        return self + (-other)

    @property
    def is_zero_hom(self):
        return all(all(x == 0 for x in row) for row in self.matrix)

    def __str__(self):
        return f"{self.source} -> {self.target}"


# --------------------------------------------------------------------------
# element-level conveniences mirroring the operation surface

def add(x, y):
    return x + y


def neg(x):
    return -x


def apply(f, x):
    return f(x)


def normalize(x):
    return x.group.element(x.coords)


# --------------------------------------------------------------------------
# kernels, cokernels, sums, solving


def _int_kernel_columns(cols, nrows):
    """Basis columns of the integer kernel of the matrix with given columns."""
    N = len(cols)
    if nrows == 0:  # 0 x N matrix: the kernel is everything
        return [[int(i == j) for i in range(N)] for j in range(N)]
    M = [[cols[j][i] for j in range(N)] for i in range(nrows)]
    _, _, D, V, _ = _snf_full(M, want_u=False, want_ui=False, want_vi=False)
    rank = sum(1 for i in range(min(nrows, N)) if D[i][i])
    return [[V[i][j] for i in range(N)] for j in range(rank, N)]


def kernel(f):
    """Kernel subgroup with its inclusion.

    Returns ``(K, incl)`` where ``incl`` is injective, ``f . incl = 0`` and
    every element killed by ``f`` factors through ``incl``.

    Lattice generators are reduced modulo the source relations between
    elimination stages; the kernel lattice contains those relations, so this
    changes nothing but keeps the integers small.
    """
    n = f.source.ngens
    m = f.target.ngens
    cols = [[f.matrix[i][j] for i in range(m)] for j in range(n)]
    cols += f.target.relation_columns()
    # x-parts of solutions of  f(x) + relation = 0  generate the kernel lattice
    lattice = []
    seen = set()
    for col in _int_kernel_columns(cols, m):
        v = list(f.source.reduce(col[:n]))
        if any(v) and tuple(v) not in seen:
            seen.add(tuple(v))
            lattice.append(v)
    s = len(lattice)
    cols2 = [list(b) for b in lattice] + f.source.relation_columns()
    rel = [col[:s] for col in _int_kernel_columns(cols2, n)]
    # the source exponent annihilates every generator class, certifying the
    # entry-bounded elimination
    exponent = _group_exponent(f.source)
    K, _, from_can = _canonicalize_presentation(s, rel, exponent)
    B = [[lattice[j][i] for j in range(s)] for i in range(n)]  # n x s
    incl_rows = _matmul(B, from_can, n, s, K.ngens)
    return K, GroupHom(K, f.source, incl_rows)


def _group_exponent(G):
    """Annihilator of a finite group; None when there is a free part."""
    if G.free_rank or not G.invariant_factors:
        return None
    return G.invariant_factors[-1]


def cokernel(f):
    """Cokernel quotient with its projection.  Returns ``(Q, proj)``."""
    m = f.target.ngens
    cols = [[f.matrix[i][j] for i in range(m)] for j in range(f.source.ngens)]
    cols += f.target.relation_columns()
    Q, to_can, _ = _canonicalize_presentation(m, cols,
                                              _group_exponent(f.target))
    return Q, GroupHom(f.target, Q, to_can)


class LinearSolver:
    """Repeated preimage queries against one homomorphism.

    The Smith form of the augmented matrix (map columns next to the target
    relations) is computed once; each query is then two matrix-vector
    products and a divisibility pass.
    """

    def __init__(self, f):
        self.f = f
        n = f.source.ngens
        m = f.target.ngens
        self._n, self._m = n, m
        if m == 0:
            return
        cols = [[f.matrix[i][j] for i in range(m)] for j in range(n)]
        cols += f.target.relation_columns()
        N = len(cols)
        M = [[cols[j][i] for j in range(N)] for i in range(m)]
        self._N = N
        self._U, _, self._D, self._V, _ = _snf_full(M, want_ui=False,
                                                    want_vi=False)

    def solve(self, y):
        """One preimage of y, or None if y is not in the image."""
        if y.group != self.f.target:
            raise ValueError("element not in the target group")
        if self._m == 0:
            return self.f.source.zero()
        m, N = self._m, self._N
        w = _matvec(self._U, list(y.coords), m, m)
        zp = [0] * N
        for i in range(m):
            d = self._D[i][i] if i < N else 0
            if d:
                if w[i] % d:
                    return None
                zp[i] = w[i] // d
            elif w[i]:
                return None
        z = _matvec(self._V, zp, N, N)
        return self.f.source.element(z[:self._n])


def solve(f, y):
    """One preimage of y under f, or None if y is not in the image."""
    return LinearSolver(f).solve(y)


def is_isomorphism(f):
    K, _ = kernel(f)
    Q, _ = cokernel(f)
    return K.is_trivial and Q.is_trivial


def lift_through(incl, f):
    """Factor f through an injective hom: h with incl . h == f."""
    solver = LinearSolver(incl)
    images = []
    for j in range(f.source.ngens):
        x = solver.solve(f.target.element(row[j] for row in f.matrix))
        if x is None:
            raise ValueError("homomorphism does not factor through the inclusion")
        images.append(x)
    return GroupHom.from_images(f.source, incl.source, images)


@dataclass(frozen=True)
class DirectSum:
    group: FgAbGroup
    injections: tuple[GroupHom, ...]
    projections: tuple[GroupHom, ...]


def direct_sum_many(groups):
    """Canonical-form direct sum with all injections and projections."""
    groups = list(groups)
    ngens = sum(G.ngens for G in groups)
    offsets = list(itertools.accumulate([0] + [G.ngens for G in groups]))
    cols = []
    for G, off in zip(groups, offsets):
        for c in G.relation_columns():
            col = [0] * ngens
            col[off:off + G.ngens] = c
            cols.append(col)
    exponent = None
    if all(G.free_rank == 0 for G in groups) and any(G.ngens for G in groups):
        exponent = lcm(*(d for G in groups for d in G.invariant_factors),
                       1)
    S, to_can, from_can = _canonicalize_presentation(ngens, cols, exponent)
    injections = []
    projections = []
    for G, off in zip(groups, offsets):
        inj_rows = [[to_can[i][off + j] for j in range(G.ngens)]
                    for i in range(S.ngens)]
        proj_rows = [[from_can[off + i][j] for j in range(S.ngens)]
                     for i in range(G.ngens)]
        injections.append(GroupHom(G, S, inj_rows))
        projections.append(GroupHom(S, G, proj_rows))
    return DirectSum(S, tuple(injections), tuple(projections))


def direct_sum(G, H):
    """Binary direct sum: returns (S, inj_G, inj_H, proj_G, proj_H)."""
    ds = direct_sum_many([G, H])
    return (ds.group, ds.injections[0], ds.injections[1],
            ds.projections[0], ds.projections[1])
