"""Exact root systems, Weyl groups, and isometry search.

Everything is computed in the simple-root basis with integer root
coordinates; the W-invariant bilinear form is carried as the doubled Gram
matrix 2*(a_i, a_j) of the Bourbaki ambient realizations, which is integral
for every type.  Weyl elements are integer matrices acting on root
coordinates (columns = images of the simple roots).

One deliberate deviation from Bourbaki: following the source conventions of
the reports this engine produces, G2 is numbered with node 1 long (the
adjoint node) and node 2 short.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import kernels
from .cyclo import CycScalar, common_conductor

DEFAULT_WEYL_BOUND = 3_000_000

_LEGAL = {"A": lambda n: n >= 1, "B": lambda n: n >= 2, "C": lambda n: n >= 2,
          "D": lambda n: n >= 3, "E": lambda n: n in (6, 7, 8),
          "F": lambda n: n == 4, "G": lambda n: n == 2}


class IllegalLieType(ValueError):
    pass


class MismatchedRootSystems(ValueError):
    pass


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _LEGAL or not _LEGAL[self.family](self.rank):
            raise IllegalLieType(f"illegal type {self.family}{self.rank}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @staticmethod
    def parse(s: str) -> "LieType":
        s = s.strip()
        if len(s) < 2 or s[0].upper() not in _LEGAL or not s[1:].isdigit():
            raise IllegalLieType(f"cannot parse Lie type {s!r}")
        return LieType(s[0].upper(), int(s[1:]))

    @property
    def simply_laced(self) -> bool:
        return self.family in ("A", "D", "E")


def _frac_rows(rows) -> tuple:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def _simple_roots_ambient(t: LieType) -> tuple:
    n = t.rank
    if t.family == "A":
        rows = [[0] * (n + 1) for _ in range(n)]
        for i in range(n):
            rows[i][i], rows[i][i + 1] = 1, -1
        return _frac_rows(rows)
    if t.family in ("B", "C", "D"):
        rows = [[0] * n for _ in range(n)]
        for i in range(n - 1):
            rows[i][i], rows[i][i + 1] = 1, -1
        if t.family == "B":
            rows[n - 1][n - 1] = 1
        elif t.family == "C":
            rows[n - 1][n - 1] = 2
        else:
            rows[n - 1][n - 2] = rows[n - 1][n - 1] = 1
        return _frac_rows(rows)
    if t.family == "E":
        rows = [[0] * 8 for _ in range(n)]
        rows[0] = [Fraction(1, 2), *([Fraction(-1, 2)] * 6), Fraction(1, 2)]
        rows[1] = [1, 1, 0, 0, 0, 0, 0, 0]
        for i in range(2, n):
            rows[i][i - 2], rows[i][i - 1] = -1, 1
        return _frac_rows(rows)
    if t.family == "F":
        return _frac_rows([
            [0, 1, -1, 0],
            [0, 0, 1, -1],
            [0, 0, 0, 1],
            [Fraction(1, 2), Fraction(-1, 2), Fraction(-1, 2), Fraction(-1, 2)],
        ])
    # G2, paper numbering: node 1 long, node 2 short.
    return _frac_rows([[-2, 1, 1], [1, -1, 0]])


class RootSystem:
    """Immutable exact data of one simple root system."""

    def __init__(self, t: LieType):
        self.lie_type = t
        self.rank = t.rank
        self.simple_roots_ambient = _simple_roots_ambient(t)
        n = t.rank
        g2 = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                v = 2 * sum(a * b for a, b in
                            zip(self.simple_roots_ambient[i], self.simple_roots_ambient[j]))
                assert v.denominator == 1
                g2[i][j] = int(v)
        self.gram2 = tuple(map(tuple, g2))
        self.cartan = tuple(
            tuple(2 * g2[i][j] // g2[j][j] for j in range(n)) for i in range(n)
        )
        self._build_roots()
        self._build_weights()
        self._gram2_roots = None
        self._degrees = None

    # -- construction --------------------------------------------------------

    def _reflect_root(self, v: tuple, j: int) -> tuple:
        # s_j(v) in root coordinates; <v, a_j^vee> = sum_i v_i c[i][j].
        c = sum(v[i] * self.cartan[i][j] for i in range(self.rank))
        out = list(v)
        out[j] -= c
        return tuple(out)

    def _build_roots(self):
        n = self.rank
        simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for v in frontier:
                for j in range(n):
                    w = self._reflect_root(v, j)
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        pos = sorted((v for v in seen if sum(v) > 0),
                     key=lambda v: (sum(v), v))
        self.positive_roots = tuple(pos)
        self.roots = tuple(pos) + tuple(tuple(-x for x in v) for v in pos)
        self.nroots = len(self.roots)
        self.npos = len(pos)
        self.root_index = {v: i for i, v in enumerate(self.roots)}
        norms = sorted({self.norm2(v) for v in self.roots})
        long_norm = norms[-1]
        self.is_long = tuple(self.norm2(v) == long_norm for v in self.roots)

    def _build_weights(self):
        n = self.rank
        # omega_i in root coordinates: the rows of the inverse of the Cartan
        # matrix read as <a_i, a_j^vee>.
        c = [[Fraction(self.cartan[i][j]) for j in range(n)] for i in range(n)]
        inv = _invert_fraction_matrix(c)
        # weight vector m (coords in omega-basis) has root coords m . inv
        self._weight_to_root = tuple(map(tuple, inv))
        self.rho_weight = tuple(Fraction(1) for _ in range(n))
        self.rho_root = self.weight_to_root(self.rho_weight)
        self.fundamental_weights = tuple(
            tuple(inv[i][j] for j in range(n)) for i in range(n)
        )
        # a^vee in the simple-coroot basis, for each root: a^vee has
        # coefficients k_j * (a_j,a_j)/(a,a) when a = sum k_j a_j.
        cor = []
        for v in self.roots:
            nv = self.norm2(v)
            cor.append(tuple(Fraction(v[j] * self.gram2[j][j], nv) for j in range(self.rank)))
        assert all(all(x.denominator == 1 for x in row) for row in cor)
        self.coroot_coords = tuple(tuple(int(x) for x in row) for row in cor)

    # -- exact linear algebra over the root lattice ---------------------------

    def norm2(self, v: Sequence) -> int:
        return self.pairing2(v, v)

    def pairing2(self, v: Sequence, w: Sequence):
        """2*(v, w) for vectors in root coordinates (ints or Fractions)."""
        total = 0
        for i, vi in enumerate(v):
            if vi:
                row = self.gram2[i]
                total += vi * sum(wj * row[j] for j, wj in enumerate(w) if wj)
        return total

    def weight_to_root(self, m: Sequence) -> tuple:
        n = self.rank
        return tuple(
            sum(m[i] * self._weight_to_root[i][j] for i in range(n))
            for j in range(n)
        )

    def root_to_weight(self, v: Sequence) -> tuple:
        n = self.rank
        return tuple(sum(v[i] * self.cartan[i][j] for i in range(n)) for j in range(n))

    def pair_coroot(self, weight_coords: Sequence, root_idx: int):
        """<v, a^vee> for v in fundamental-weight coordinates."""
        k = self.coroot_coords[root_idx]
        return sum(m * kj for m, kj in zip(weight_coords, k) if kj)

    # -- diagram data ----------------------------------------------------------

    @property
    def dynkin_adjacency(self) -> tuple:
        n = self.rank
        return tuple(
            tuple(1 if i != j and self.cartan[i][j] != 0 else 0 for j in range(n))
            for i in range(n)
        )

    @lru_cache(maxsize=None)
    def diagram_automorphisms(self) -> tuple:
        """All node permutations preserving the Cartan matrix (includes id)."""
        n = self.rank
        perms = []
        for p in itertools.permutations(range(n)):
            if all(self.cartan[p[i]][p[j]] == self.cartan[i][j]
                   for i in range(n) for j in range(n)):
                perms.append(p)
        return tuple(sorted(perms))

    # -- degrees and exponents ---------------------------------------------------

    def degrees_exponents(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        if self._degrees is None:
            heights = [sum(v) for v in self.positive_roots]
            counts = {}
            for h in heights:
                counts[h] = counts.get(h, 0) + 1
            maxh = max(heights)
            dist = [counts.get(h, 0) for h in range(1, maxh + 1)]
            exps = []
            for i in range(1, self.rank + 1):
                exps.append(sum(1 for c in dist if c >= i))
            exps.sort()
            self._exponents = tuple(exps)
            self._degrees = tuple(e + 1 for e in exps)
        return self._degrees, self._exponents

    @property
    def weyl_order(self) -> int:
        degs, _ = self.degrees_exponents()
        out = 1
        for d in degs:
            out *= d
        return out

    # -- Weyl elements -------------------------------------------------------------

    def simple_reflection_matrix(self, j: int) -> tuple:
        n = self.rank
        rows = [[1 if i == k else 0 for k in range(n)] for i in range(n)]
        for i in range(n):
            rows[j][i] -= self.cartan[i][j]
        return tuple(map(tuple, rows))

    def gram2_roots(self) -> np.ndarray:
        if self._gram2_roots is None:
            tab = np.empty((self.nroots, self.nroots), dtype=np.int32)
            for i, v in enumerate(self.roots):
                for j, w in enumerate(self.roots):
                    tab[i, j] = self.pairing2(v, w)
            self._gram2_roots = tab
        return self._gram2_roots

    def __repr__(self):
        return f"RootSystem({self.lie_type})"


def _invert_fraction_matrix(a):
    n = len(a)
    a = [row[:] for row in a]
    inv = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col])
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        inv[col] = [x / p for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    # rows of inv give omega_i since we inverted the transpose-pairing matrix
    return inv


@lru_cache(maxsize=None)
def build_root_system(t: LieType) -> RootSystem:
    """The exact root system of ``t`` (cached; deterministic)."""
    return RootSystem(t)


def root_system(name: str) -> RootSystem:
    return build_root_system(LieType.parse(name))


class OrthAut:
    """An isometry of the Cartan space mapping roots onto roots.

    Stored as an integer matrix on root coordinates whose columns are the
    images of the simple roots.  Elements of W have trivial diagram part;
    ``is_outer`` flags a nontrivial one (an element of W*Gamma \\ W).
    """

    __slots__ = ("rs", "mat", "_hash", "_gamma")

    def __init__(self, rs: RootSystem, mat) -> None:
        self.rs = rs
        self.mat = tuple(tuple(int(x) for x in row) for row in mat)
        self._hash = None
        self._gamma = None

    @staticmethod
    def identity(rs: RootSystem) -> "OrthAut":
        n = rs.rank
        return OrthAut(rs, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def from_images(rs: RootSystem, images: Sequence[Sequence[int]]) -> "OrthAut":
        n = rs.rank
        mat = [[int(images[j][i]) for j in range(n)] for i in range(n)]
        return OrthAut(rs, mat)

    @staticmethod
    def simple_reflection(rs: RootSystem, j: int) -> "OrthAut":
        return OrthAut(rs, rs.simple_reflection_matrix(j))

    @staticmethod
    def minus_identity(rs: RootSystem) -> "OrthAut":
        n = rs.rank
        return OrthAut(rs, [[-1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def images(self) -> tuple:
        n = self.rs.rank
        return tuple(tuple(self.mat[i][j] for i in range(n)) for j in range(n))

    def apply_root(self, v: Sequence[int]) -> tuple:
        n = self.rs.rank
        return tuple(sum(self.mat[i][j] * v[j] for j in range(n)) for i in range(n))

    def __mul__(self, other: "OrthAut") -> "OrthAut":
        if self.rs is not other.rs:
            raise MismatchedRootSystems("composition across root systems")
        n = self.rs.rank
        a, b = self.mat, other.mat
        return OrthAut(self.rs, [
            [sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)
        ])

    def inverse(self) -> "OrthAut":
        n = self.rs.rank
        frac = [[Fraction(self.mat[i][j]) for j in range(n)] for i in range(n)]
        inv = _invert_fraction_matrix([list(r) for r in zip(*frac)])
        # _invert_fraction_matrix inverts the matrix it is given; undo the zip
        inv_t = [[inv[j][i] for j in range(n)] for i in range(n)]
        return OrthAut(self.rs, [[int(x) for x in row] for row in inv_t])

    def order(self) -> int:
        e = OrthAut.identity(self.rs)
        g = self
        k = 1
        while g != e:
            g = g * self
            k += 1
            if k > 1000:
                raise RuntimeError("runaway order computation")
        return k

    def gamma_part(self) -> tuple:
        """Node permutation of the induced diagram automorphism (id for W)."""
        if self._gamma is not None:
            return self._gamma
        rs = self.rs
        n = rs.rank
        v = [sum(Fraction(self.mat[i][j]) * rs.rho_root[j] for j in range(n))
             for i in range(n)]
        m = [sum(v[i] * rs.cartan[i][j] for i in range(n)) for j in range(n)]
        word = []
        guard = 0
        while True:
            neg = next((j for j in range(n) if m[j] < 0), None)
            if neg is None:
                break
            word.append(neg)
            mn = m[neg]
            m = [m[j] - mn * rs.cartan[neg][j] for j in range(n)]
            guard += 1
            if guard > rs.npos + 1:
                raise RuntimeError("dominant reduction failed")
        g = self
        for j in word:
            g = OrthAut.simple_reflection(rs, j) * g
        perm = []
        for i in range(n):
            img = tuple(g.mat[k][i] for k in range(n))
            ones = [k for k, x in enumerate(img) if x]
            if len(ones) != 1 or img[ones[0]] != 1:
                raise RuntimeError("not a root-system isometry")
            perm.append(ones[0])
        self._gamma = tuple(perm)
        return self._gamma

    @property
    def is_outer(self) -> bool:
        return self.gamma_part() != tuple(range(self.rs.rank))

    def __eq__(self, other):
        return isinstance(other, OrthAut) and self.rs is other.rs and self.mat == other.mat

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.mat)
        return self._hash

    def __repr__(self):
        return f"OrthAut({self.rs.lie_type}, {self.mat})"


class CartanVector:
    """Exact vector in the Cartan space over a cyclotomic field.

    Coordinates are CycScalars in a declared basis: the simple-root basis or
    the fundamental-weight basis.  Conversions are exact inverses.
    """

    __slots__ = ("rs", "coords", "basis")

    def __init__(self, rs: RootSystem, coords, basis: str = "root") -> None:
        if basis not in ("root", "weight"):
            raise ValueError("basis must be 'root' or 'weight'")
        self.rs = rs
        self.coords = tuple(
            c if isinstance(c, CycScalar) else CycScalar.from_rational(c)
            for c in coords
        )
        if len(self.coords) != rs.rank:
            raise ValueError("wrong number of coordinates")
        self.basis = basis

    def in_basis(self, basis: str) -> "CartanVector":
        if basis == self.basis:
            return self
        n = self.rs.rank
        if basis == "root":
            mat = self.rs._weight_to_root  # rows: omega_i in root coords
            out = [sum((self.coords[i] * mat[i][j] for i in range(n)),
                       CycScalar.from_rational(0)) for j in range(n)]
        else:
            out = [sum((self.coords[i] * Fraction(self.rs.cartan[i][j]) for i in range(n)),
                       CycScalar.from_rational(0)) for j in range(n)]
        return CartanVector(self.rs, out, basis)

    def root_coords(self) -> tuple:
        return self.in_basis("root").coords

    def pairing2_root(self, root_idx: int) -> CycScalar:
        """2*(x, a) for the root with the given index."""
        rc = self.root_coords()
        root = self.rs.roots[root_idx]
        y = CycScalar.from_rational(0)
        for i, ri in enumerate(root):
            if ri:
                row = self.rs.gram2[i]
                y = y + sum((rc[j] * (ri * row[j]) for j in range(self.rs.rank)
                             if row[j]), CycScalar.from_rational(0))
        return y

    def inner(self, other: "CartanVector") -> CycScalar:
        if self.rs is not other.rs:
            raise MismatchedRootSystems("inner product across root systems")
        a, b = self.root_coords(), other.root_coords()
        total = CycScalar.from_rational(0)
        for i in range(self.rs.rank):
            row = self.rs.gram2[i]
            for j in range(self.rs.rank):
                if row[j]:
                    total = total + a[i] * b[j] * Fraction(row[j], 2)
        return total

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def vanishing_roots(self) -> list[int]:
        """Indices of positive roots a with (x, a) = 0."""
        out = []
        for i in range(self.rs.npos):
            if self.pairing2_root(i).is_zero():
                out.append(i)
        return out

    def is_regular(self) -> bool:
        return not self.vanishing_roots()

    def scale(self, c) -> "CartanVector":
        return CartanVector(self.rs, [x * c for x in self.coords], self.basis)

    def __eq__(self, other):
        if not isinstance(other, CartanVector):
            return NotImplemented
        return (self.rs is other.rs
                and self.root_coords() == other.root_coords())

    def __repr__(self):
        return f"CartanVector({self.rs.lie_type}, {self.basis}, {self.coords})"


def apply(g: OrthAut, v: CartanVector) -> CartanVector:
    """Exact image of a Cartan vector under an isometry; preserves the form."""
    if g.rs is not v.rs:
        raise MismatchedRootSystems("isometry and vector over different systems")
    rc = v.root_coords()
    n = g.rs.rank
    out = [sum((rc[j] * g.mat[i][j] for j in range(n) if g.mat[i][j]),
               CycScalar.from_rational(0)) for i in range(n)]
    res = CartanVector(g.rs, out, "root")
    return res if v.basis == "root" else res.in_basis(v.basis)


def degrees_and_exponents(rs: RootSystem) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(exponents, degrees), both ascending; degrees from the height partition."""
    degs, exps = rs.degrees_exponents()
    return exps, degs


def _outer_matrices(rs: RootSystem) -> list[OrthAut]:
    out = []
    n = rs.rank
    for p in rs.diagram_automorphisms():
        mat = [[1 if i == p[j] else 0 for j in range(n)] for i in range(n)]
        out.append(OrthAut(rs, mat))
    return out


def enumerate_weyl(rs: RootSystem, include_outer: bool = False,
                   max_size: int = DEFAULT_WEYL_BOUND) -> Iterator[OrthAut]:
    """Every element of W (or W x Gamma), each exactly once, deterministically."""
    total = rs.weyl_order * (len(rs.diagram_automorphisms()) if include_outer else 1)
    if total > max_size:
        raise kernels.EnumerationBound(
            f"|group| = {total} exceeds bound {max_size}; "
            "use search_line_isometries instead")
    mats = weyl_matrices(rs, max_size)
    n = rs.rank
    if not include_outer:
        for m in mats:
            yield OrthAut(rs, m.tolist())
        return
    gammas = _outer_matrices(rs)
    for g in gammas:
        for m in mats:
            yield OrthAut(rs, m.tolist()) * g


@lru_cache(maxsize=8)
def _weyl_matrices_cached(t: LieType, max_size: int) -> np.ndarray:
    rs = build_root_system(t)
    gens = np.array([rs.simple_reflection_matrix(j) for j in range(rs.rank)],
                    dtype=np.int8)
    mats = kernels.weyl_enumerate(gens, max_size)
    if len(mats) != rs.weyl_order:
        raise AssertionError("enumeration does not match product of degrees")
    return mats


def weyl_matrices(rs: RootSystem, max_size: int = DEFAULT_WEYL_BOUND) -> np.ndarray:
    """All Weyl elements as an (|W|, n, n) int8 array (cached per type)."""
    if rs.weyl_order > max_size:
        raise kernels.EnumerationBound(
            f"|W| = {rs.weyl_order} exceeds bound {max_size}")
    return _weyl_matrices_cached(rs.lie_type, max(rs.weyl_order, 2))


def longest_element(rs: RootSystem) -> OrthAut:
    g = OrthAut.identity(rs)
    m = list(rs.rho_weight)
    n = rs.rank
    while True:
        pos = next((j for j in range(n) if m[j] > 0), None)
        if pos is None:
            return g
        mj = m[pos]
        m = [m[j] - mj * Fraction(rs.cartan[pos][j]) for j in range(n)]
        g = OrthAut.simple_reflection(rs, pos) * g


def minus_one_in_weyl(rs: RootSystem) -> bool:
    w0 = longest_element(rs)
    return w0 == OrthAut.minus_identity(rs)


def search_line_isometries(rs: RootSystem, x: CartanVector, xi: CycScalar,
                           include_outer: bool = False) -> list[OrthAut]:
    """All isometries g with g(x) = xi * x, by Gram-constrained backtracking.

    Backtracks over images of the simple roots; a candidate image r for slot i
    must satisfy the per-image eigen constraint xi*(x, r) = (x, a_i) (which is
    equivalent to g x = xi x once the Gram matrix matches) and the pairwise
    Gram constraints with images already placed.  Works for every type,
    including E8, without enumerating W.
    """
    if x.rs is not rs:
        raise MismatchedRootSystems("vector over a different root system")
    if x.is_zero():
        raise ValueError("x must be nonzero")
    if not isinstance(xi, CycScalar):
        xi = CycScalar.from_rational(xi)
    n = rs.rank
    big_n = common_conductor([xi, *x.coords])
    pair2 = [x.pairing2_root(i).promote(big_n) for i in range(rs.nroots)]
    xi_p = xi.promote(big_n)
    # slot order: descending number of Dynkin neighbours, then node index
    adj = rs.dynkin_adjacency
    order = sorted(range(n), key=lambda i: (-sum(adj[i]), i))
    gtab = rs.gram2_roots()
    cands = []
    for i in order:
        t = pair2[rs.root_index[tuple(1 if k == i else 0 for k in range(n))]]
        norm = rs.gram2[i][i]
        ok = [r for r in range(rs.nroots)
              if int(gtab[r, r]) == norm and (xi_p * pair2[r]) == t]
        if not ok:
            return []
        cands.append(ok)
    target = [[rs.gram2[order[i]][order[j]] for j in range(n)] for i in range(n)]
    hits = kernels.gram_backtrack(cands, rs.gram2_roots(), target)
    out = []
    for assignment in hits:
        images = [None] * n
        for slot, r in enumerate(assignment):
            images[order[slot]] = rs.roots[r]
        g = OrthAut.from_images(rs, images)
        if not include_outer and g.is_outer:
            continue
        gx = apply(g, x).root_coords()
        xr = x.root_coords()
        if any(not (gx[i] - xi * xr[i]).is_zero() for i in range(n)):
            raise AssertionError("backtracking produced a non-solution")
        out.append(g)
    out.sort(key=lambda g: g.mat)
    return out


def weyl_membership_filter(rs: RootSystem, elements: Iterable[OrthAut]) -> list[OrthAut]:
    return [g for g in elements if not g.is_outer]
