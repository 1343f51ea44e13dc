"""Hyperplane sections of adjoint varieties: smoothness via the long-root
product, the six-case classification of the defining element, the
perpendicular root system, the connected automorphism group's shape, the
outer contributions B_x / C_x, and the assembled report.

Nilpotent parts are symbolic tags (the six normal forms make the actual Lie
algebra element unnecessary for the report).  Type C is excluded (its
hyperplane sections are quadrics); type A is served with the caveat that only
the subgroup extending to the ambient automorphisms is reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cyclo import CycScalar
from .rootsys import (CartanVector, LieType, OrthAut, RootSystem, apply,
                      build_root_system, enumerate_weyl, search_line_isometries)
from . import springer


class NotSmooth(ValueError):
    pass


class ExcludedType(ValueError):
    pass


class InconsistentTag(ValueError):
    pass


@dataclass(frozen=True)
class NilpotentTag:
    kind: str                      # none | single_root | a2_single | a2_sum
    roots: tuple = ()              # positive-root coordinate tuples

    NONE = None  # set below

    @staticmethod
    def none() -> "NilpotentTag":
        return NilpotentTag("none")

    @staticmethod
    def single_root(beta) -> "NilpotentTag":
        return NilpotentTag("single_root", (tuple(beta),))

    @staticmethod
    def a2_single(beta) -> "NilpotentTag":
        return NilpotentTag("a2_single", (tuple(beta),))

    @staticmethod
    def a2_sum(beta, beta2) -> "NilpotentTag":
        return NilpotentTag("a2_sum", (tuple(beta), tuple(beta2)))


@dataclass
class AdjointElement:
    rs: RootSystem
    x_s: CartanVector
    nilpotent: NilpotentTag = field(default_factory=NilpotentTag.none)

    def __post_init__(self):
        t = self.rs.lie_type
        if t.family == "C":
            raise ExcludedType("type C is excluded: the hyperplane section is a quadric")
        if t.family == "A" and t.rank == 1:
            raise ExcludedType("A1 has no smooth hyperplane-section geometry to report")


def tevelev_eval(rs: RootSystem, x_s: CartanVector) -> CycScalar:
    """Product of a(x_s) over all long roots: the dual-variety equation.

    Nonzero iff H_x is smooth (the nilpotent part never matters since the
    polynomial is invariant)."""
    out = CycScalar.from_rational(1)
    for i in range(rs.nroots):
        if rs.is_long[i]:
            v = x_s.pairing2_root(i)
            if v.is_zero():
                return CycScalar.from_rational(0)
            out = out * v * Fraction(1, 2)
    return out


def vanishing_short_positive(rs: RootSystem, x_s: CartanVector) -> list[int]:
    return [i for i in x_s.vanishing_roots() if not rs.is_long[i]]


def classify_case(e: AdjointElement) -> int:
    """The case label 1..6, or a rejection explaining the violated condition."""
    rs = e.rs
    if tevelev_eval(rs, e.x_s).is_zero():
        raise NotSmooth("a long root vanishes on x_s: H_x is singular")
    z = e.x_s.vanishing_roots()
    if any(rs.is_long[i] for i in z):
        raise NotSmooth("a long root vanishes on x_s: H_x is singular")
    tag = e.nilpotent
    if not z:
        if tag.kind != "none":
            raise InconsistentTag("x_s regular but a nilpotent tag is set")
        return 1
    for beta in tag.roots:
        j = rs.root_index.get(tuple(beta))
        if j is None or j >= rs.npos or rs.is_long[j]:
            raise InconsistentTag("tag root is not a short positive root")
        if j not in z:
            raise InconsistentTag("tag root does not vanish on x_s")
    if len(z) == 1:
        if tag.kind == "none":
            return 2
        if tag.kind == "single_root":
            return 3
        raise InconsistentTag("A2 tag but only one short root vanishes")
    if len(z) == 3:
        roots = [rs.roots[i] for i in z]
        sums = {tuple(a + b for a, b in zip(u, v)) for u in roots for v in roots if u != v}
        if not any(tuple(r) in sums for r in roots):
            raise NotSmooth("vanishing short roots do not span an A2 subsystem")
        if tag.kind == "none":
            return 4
        if tag.kind == "a2_single":
            return 5
        if tag.kind == "a2_sum":
            b1, b2 = tag.roots
            if tuple(a + b for a, b in zip(b1, b2)) not in {tuple(r) for r in roots}:
                raise InconsistentTag("the two tag roots must generate the vanishing A2")
            return 6
        raise InconsistentTag("single-root tag but an A2 of short roots vanishes")
    raise NotSmooth(f"{len(z)} short positive roots vanish: not one of the six shapes")


@dataclass
class PerpData:
    perp_type: LieType
    concrete_simple_roots: tuple   # root-coordinate tuples in the ambient system
    root_indices: tuple            # indices into rs.roots lying in R-perp
    is_full: bool


def perp_root_system(e: AdjointElement) -> PerpData:
    """R-perp = the roots orthogonal to every root vanishing on x_s, with its
    abstract type identified by Cartan-matrix matching."""
    rs = e.rs
    case = classify_case(e)
    if case == 1:
        simples = tuple(tuple(1 if k == i else 0 for k in range(rs.rank))
                        for i in range(rs.rank))
        return PerpData(rs.lie_type, simples, tuple(range(rs.nroots)), True)
    z = e.x_s.vanishing_roots()
    zroots = [rs.roots[i] for i in z]
    perp = [i for i in range(rs.nroots)
            if all(rs.pairing2(rs.roots[i], zr) == 0 for zr in zroots)]
    pos = [i for i in perp if i < rs.npos]
    # indecomposable positives form the simple system
    posroots = [rs.roots[i] for i in pos]
    posset = {tuple(r) for r in posroots}
    simples = []
    for r in posroots:
        decomposable = any(
            tuple(x - y for x, y in zip(r, s)) in posset
            for s in posroots if s != r
        )
        if not decomposable:
            simples.append(r)
    from .diagrams import classify_cartan

    cartan = [[2 * rs.pairing2(a, b) // rs.pairing2(b, b) for b in simples]
              for a in simples]
    sub_t, perm = classify_cartan(cartan)
    ordered = [None] * len(simples)
    for i, s in enumerate(simples):
        ordered[perm[i]] = tuple(s)
    return PerpData(sub_t, tuple(ordered), tuple(perp), False)


_SHAPES = {
    1: ("T", 0, 0),
    2: ("T_{{{a}^perp}} x A2", 3, 2),
    3: ("T_{{{a}^perp}} x Ga", 1, 0),
    4: ("T_{{<{a},{b}>^perp}} x A3", 8, 6),
    5: ("T_{{({a}+{b})^perp}} x U3", 3, 2),
    6: ("T_{{<{a},{b}>^perp}} x U2", 2, 0),
}


@dataclass
class Aut0Shape:
    label: str
    torus_dim: int
    factor_dim: int
    epsilon: int

    @property
    def dim(self) -> int:
        return self.torus_dim + self.factor_dim


def aut0_shape(e: AdjointElement) -> Aut0Shape:
    """Symbolic shape of the connected automorphism group and its epsilon."""
    rs = e.rs
    case = classify_case(e)
    tmpl, fdim, eps = _SHAPES[case]
    names = {"B": f"alpha_{rs.rank}", "G": "alpha_2", "F": "alpha_4"}
    a = names.get(rs.lie_type.family, "alpha")
    if case in (4, 5, 6):
        label = tmpl.format(a="alpha_3", b="alpha_4")
        torus = rs.rank - (1 if case == 5 else 2)
    elif case in (2, 3):
        label = tmpl.format(a=a)
        torus = rs.rank - 1
    else:
        label = tmpl
        torus = rs.rank
    shape = Aut0Shape(label, torus, fdim, eps)
    assert shape.dim == rs.rank + eps
    return shape


# ---------------------------------------------------------------------------
# outer contributions
# ---------------------------------------------------------------------------

def _pair_value(rs: RootSystem, x: CartanVector, root) -> CycScalar:
    return x.pairing2_root(rs.root_index[tuple(root)])


def b_x_group(e: AdjointElement) -> tuple[str, dict]:
    """B_x for the F4 cases 4-6: Z2 iff (x,a) = (x,b) for some ordered pair of
    R-perp roots forming a base of the A2 (the W-perp orbit of the simple pair)."""
    case = classify_case(e)
    if case not in (4, 5, 6):
        return "1", {}
    rs = e.rs
    perp = perp_root_system(e)
    roots = [rs.roots[i] for i in perp.root_indices]
    hits = []
    for a in roots:
        for b in roots:
            if a == b:
                continue
            if 2 * rs.pairing2(a, b) // rs.pairing2(b, b) != -1:
                continue
            if (_pair_value(rs, e.x_s, a) - _pair_value(rs, e.x_s, b)).is_zero():
                hits.append((a, b))
    if hits:
        return "Z2", {"witness_pair": hits[0]}
    return "1", {}


def _orthogonal_complement_type(rs: RootSystem, pair) -> list:
    from .diagrams import classify_cartan

    perp = [i for i in range(rs.npos)
            if all(rs.pairing2(rs.roots[i], p) == 0 for p in pair)]
    posroots = [rs.roots[i] for i in perp]
    posset = {tuple(r) for r in posroots}
    simples = [r for r in posroots
               if not any(tuple(x - y for x, y in zip(r, s)) in posset
                          for s in posroots if s != r)]
    if not simples:
        return []
    comps = []
    remaining = list(simples)
    while remaining:
        comp = [remaining.pop()]
        changed = True
        while changed:
            changed = False
            for s in remaining[:]:
                if any(rs.pairing2(s, c) != 0 for c in comp):
                    comp.append(s)
                    remaining.remove(s)
                    changed = True
        cartan = [[2 * rs.pairing2(a, b) // rs.pairing2(b, b) for b in comp]
                  for a in comp]
        comps.append(classify_cartan(cartan)[0])
    return comps


def c_x_group(e: AdjointElement, cross_check: bool = True) -> tuple[str, dict]:
    """C_x (case 1, simply laced with outer symmetry), by the condition list,
    optionally cross-checked against the outer line-isometry search."""
    rs = e.rs
    t = rs.lie_type
    case = classify_case(e)
    detail: dict = {}
    if case != 1 or not t.simply_laced or len(rs.diagram_automorphisms()) == 1:
        return "1", detail
    x = e.x_s
    verdict = "1"
    if (t.family == "E" and t.rank == 6) or (t.family == "D" and t.rank % 2 == 1):
        verdict = "Z2"
        detail["reason"] = "Gamma o w0 = -id fixes every line"
    elif t.family == "A":
        verdict = "Z2" if _a_type_palindrome(rs, x) else "1"
        detail["reason"] = "symmetric-spectrum condition over W-conjugate simple systems"
    elif t.family == "D" and t.rank == 4:
        trip = _d4_triple(rs, x)
        if trip:
            verdict = "S3"
            detail["witness_triple"] = trip
        else:
            pair = _d_pair(rs, x, require_type=None)
            verdict = "Z2" if pair else "1"
            if pair:
                detail["witness_pair"] = pair
    elif t.family == "D":
        pair = _d_pair(rs, x, require_type=LieType("D", t.rank - 2))
        verdict = "Z2" if pair else "1"
        if pair:
            detail["witness_pair"] = pair
    if cross_check:
        order = _outer_stab_order(rs, x)
        expected = {"1": 1, "Z2": 2, "S3": 6}[verdict]
        detail["outer_search_order"] = order
        if order != expected:
            detail["cross_check_mismatch"] = (
                f"condition list gives {verdict} but the outer search finds a "
                f"component of order {order}")
    return verdict, detail


def _a_type_palindrome(rs: RootSystem, x: CartanVector) -> bool:
    n = rs.rank
    if rs.weyl_order > 50_000:
        return _outer_stab_order(rs, x) > 1
    vals = {i: x.pairing2_root(i) for i in range(rs.nroots)}
    for w in enumerate_weyl(rs):
        winv = w.inverse()
        idx = [rs.root_index[winv.apply_root(
            tuple(1 if k == i else 0 for k in range(n)))] for i in range(n)]
        seq = [vals[i] for i in idx]
        if all((seq[i] - seq[n - 1 - i]).is_zero() for i in range(n // 2 + 1)):
            return True
    return False


def _d_pair(rs: RootSystem, x: CartanVector, require_type):
    for i in range(rs.nroots):
        for j in range(i + 1, rs.nroots):
            a, b = rs.roots[i], rs.roots[j]
            if tuple(-u for u in a) == b or rs.pairing2(a, b) != 0:
                continue
            if not (x.pairing2_root(i) - x.pairing2_root(j)).is_zero():
                continue
            if require_type is not None:
                comps = _orthogonal_complement_type(rs, [a, b])
                if comps != [require_type]:
                    continue
            return (a, b)
    return None


def _d4_triple(rs: RootSystem, x: CartanVector):
    n = rs.nroots
    vals = [x.pairing2_root(i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rs.pairing2(rs.roots[i], rs.roots[j]) != 0:
                continue
            if tuple(-u for u in rs.roots[i]) == rs.roots[j]:
                continue
            if not (vals[i] - vals[j]).is_zero():
                continue
            for k in range(j + 1, n):
                if rs.pairing2(rs.roots[i], rs.roots[k]) != 0:
                    continue
                if rs.pairing2(rs.roots[j], rs.roots[k]) != 0:
                    continue
                if tuple(-u for u in rs.roots[i]) == rs.roots[k]:
                    continue
                if tuple(-u for u in rs.roots[j]) == rs.roots[k]:
                    continue
                if (vals[i] - vals[k]).is_zero():
                    return (rs.roots[i], rs.roots[j], rs.roots[k])
    return None


def _outer_stab_order(rs: RootSystem, x: CartanVector) -> int:
    """Order of the image of Stab_{W x Gamma}([x]) in Gamma."""
    rep = springer.line_stabilizer(rs, x, include_outer=True)
    gammas = {g.gamma_part() for g in rep.outer_elements}
    gammas.add(tuple(range(rs.rank)))
    return len(gammas)


# ---------------------------------------------------------------------------
# the assembled report
# ---------------------------------------------------------------------------

@dataclass
class AutHxReport:
    lie_type: LieType
    smooth: bool
    case_label: int
    aut0: Aut0Shape
    perp_type: LieType
    stab_order: int
    b_x: str
    c_x: str
    d_x: str
    decomposition: str
    caveat: str | None
    discrepancies: list
    stab_report: object = None

    def to_json(self):
        return {
            "type": str(self.lie_type),
            "case": self.case_label,
            "smooth": self.smooth,
            "aut0": {"torus_dim": self.aut0.torus_dim,
                     "factor": self.aut0.label,
                     "epsilon": self.aut0.epsilon},
            "perp_type": str(self.perp_type),
            "d": self.stab_order,
            "B_x": self.b_x,
            "C_x": self.c_x,
            "decomposition": self.decomposition,
            "caveat": self.caveat,
            "discrepancies": list(self.discrepancies),
        }


def stabilizer_in_perp(e: AdjointElement) -> tuple:
    """Stab_{W-perp}([x_s]): delegated to the abstract R-perp root system."""
    rs = e.rs
    perp = perp_root_system(e)
    if perp.is_full:
        return springer.line_stabilizer(rs, e.x_s), perp
    abstract = build_root_system(perp.perp_type)
    coords = []
    for s in perp.concrete_simple_roots:
        idx = rs.root_index[s]
        norm = rs.pairing2(s, s)
        val = e.x_s.pairing2_root(idx) * Fraction(2, norm) * Fraction(1, 2)
        coords.append(val)
    x_abs = CartanVector(abstract, coords, "weight")
    if not x_abs.is_regular():
        raise NotSmooth("x_s is not regular within R-perp")
    return springer.line_stabilizer(abstract, x_abs), perp


def aut_report(e: AdjointElement) -> AutHxReport:
    """Full automorphism report for the hyperplane section defined by e."""
    from . import tables

    rs = e.rs
    t = rs.lie_type
    smooth = not tevelev_eval(rs, e.x_s).is_zero()
    if not smooth:
        raise NotSmooth("tevelev product vanishes: H_x is singular")
    case = classify_case(e)
    shape = aut0_shape(e)
    stab, perp = stabilizer_in_perp(e)
    b_x, bdet = b_x_group(e)
    c_x, cdet = c_x_group(e)
    if b_x != "1" and c_x != "1":
        raise AssertionError("B_x and C_x cannot both be nontrivial")
    d_x = c_x if c_x != "1" else b_x
    discrepancies = []
    if "cross_check_mismatch" in cdet:
        discrepancies.append(cdet["cross_check_mismatch"])
    rows = [r for r in tables.table5_rows(t) if r["case"] == case]
    if rows:
        row = rows[0]
        # the printed d-columns list the possible NONtrivial stabilizers, so a
        # trivial stabilizer (generic line, -1 not in W-perp) is always admissible
        if stab.order != 1 and stab.order not in row["d_set"]:
            discrepancies.append(
                f"measured stabilizer order {stab.order} is not among the "
                f"table-5 row values {sorted(row['d_set'])} ({row['citation']})")
        if d_x not in row["dx"]:
            discrepancies.append(
                f"computed D_x = {d_x} not among the row options {row['dx']}")
        if row["epsilon"] != shape.epsilon:
            discrepancies.append("epsilon mismatch against the shipped row")
    caveat = None
    if t.family == "A":
        caveat = ("type A: only the subgroup extending to the ambient "
                  "automorphisms is reported")
    decomposition = f"Aut(H_x) = Aut0 x| Z_{stab.order}" + (
        f" x| {d_x}" if d_x != "1" else "")
    return AutHxReport(t, smooth, case, shape, perp.perp_type, stab.order,
                       b_x, c_x, d_x, decomposition, caveat, discrepancies,
                       stab_report=stab)


# ---------------------------------------------------------------------------
# constructing test elements
# ---------------------------------------------------------------------------

def generic_in_kernel(rs: RootSystem, kernel_root_indices, seed: int = 0,
                      forbid=()) -> CartanVector:
    """A rational vector vanishing exactly on the given positive roots (and on
    no other root), found by seeded deterministic search."""
    import random

    rng = random.Random(f"kernel|{rs.lie_type}|{sorted(kernel_root_indices)}|{seed}")
    target = set(kernel_root_indices)
    n = rs.rank
    # basis of the kernel of the vanishing-root pairings, over Q
    rows = [[Fraction(rs.pairing2(rs.roots[i], tuple(1 if k == j else 0 for k in range(n))))
             for j in range(n)] for i in sorted(target)]
    basis = _nullspace(rows, n)
    for _ in range(4000):
        coeffs = [Fraction(rng.randint(-9, 9)) for _ in basis]
        vec = [sum(c * b[j] for c, b in zip(coeffs, basis)) for j in range(n)]
        x = CartanVector(rs, vec, "root")
        if x.is_zero():
            continue
        if set(x.vanishing_roots()) == target:
            return x
    raise RuntimeError("no generic kernel vector found")


def _nullspace(rows, n):
    if not rows:
        return [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    m = [row[:] for row in rows]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        m[r] = [x / m[r][c] for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(n) if c not in pivots]
    out = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        out.append(v)
    return out


def case_element(t: LieType, case: int, seed: int = 0,
                 eigen_d: int | None = None) -> AdjointElement:
    """A canonical element of the requested case (for reports and tests).

    For case 1, eigen_d selects the regular line stabilizer (default: the
    largest achievable order listed in the shipped row, so the report exhibits
    a nontrivial admissible d); for the F4 A2-cases the semisimple part is
    taken on the eigenline of an order-3 rotation of R-perp when that line
    stays inside the exact-vanishing stratum, else generic.
    """
    rs = build_root_system(t)
    if case == 1:
        if eigen_d is None:
            from . import tables

            rows = [r for r in tables.table5_rows(t) if r["case"] == 1]
            achievable = springer.regular_data(t).maximal_orders
            cands = sorted(rows[0]["d_set"] & achievable) if rows else []
            eigen_d = cands[-1] if cands else None
        if eigen_d is not None:
            x = springer.regular_witness(t, eigen_d, seed=seed)
        else:
            x = generic_in_kernel(rs, [], seed=seed)
        return AdjointElement(rs, x, NilpotentTag.none())
    if t.family not in ("B", "G", "F"):
        raise ExcludedType("cases 2-6 need a non-simply-laced type")
    if case in (2, 3):
        beta_name = {"B": t.rank, "G": 2, "F": 4}[t.family]
        beta = tuple(1 if k == beta_name - 1 else 0 for k in range(t.rank))
        j = rs.root_index[beta]
        x = generic_in_kernel(rs, [j], seed=seed)
        tag = NilpotentTag.none() if case == 2 else NilpotentTag.single_root(beta)
        return AdjointElement(rs, x, tag)
    if t.family != "F":
        raise ExcludedType("cases 4-6 occur only in type F4")
    a3 = (0, 0, 1, 0)
    a4 = (0, 0, 0, 1)
    a34 = (0, 0, 1, 1)
    idxs = [rs.root_index[a3], rs.root_index[a4], rs.root_index[a34]]
    x = _a2_case_semisimple(rs, idxs, seed)
    if case == 4:
        tag = NilpotentTag.none()
    elif case == 5:
        tag = NilpotentTag.a2_single(a34)
    else:
        tag = NilpotentTag.a2_sum(a3, a4)
    return AdjointElement(rs, x, tag)


def _a2_case_semisimple(rs: RootSystem, vanishing_idxs, seed: int) -> CartanVector:
    """x_s vanishing exactly on the short A2, with an order-3 R-perp
    stabilizer when the rotation eigenline avoids every other root."""
    target = set(vanishing_idxs)
    perp_simples = _f4_perp_a2_simples(rs)
    s1 = _root_reflection(rs, perp_simples[0])
    s2 = _root_reflection(rs, perp_simples[1])
    rot = s1 * s2
    z3 = CycScalar.zeta(3)
    for u in ([1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0], [2, 1, 0, 0]):
        coords = [CycScalar.from_rational(0)] * rs.rank
        v = tuple(u)
        for j in range(3):
            zz = z3 ** ((3 - j) % 3)
            coords = [coords[i] + zz * v[i] for i in range(rs.rank)]
            v = rot.apply_root(v)
        x = CartanVector(rs, coords, "root")
        if not x.is_zero() and set(x.vanishing_roots()) == target:
            return x
    return generic_in_kernel(rs, vanishing_idxs, seed=seed)


def _f4_perp_a2_simples(rs: RootSystem):
    # the long A2 orthogonal to <alpha_3, alpha_4>: alpha_1 and
    # alpha_1 + 3 alpha_2 + 4 alpha_3 + 2 alpha_4
    return ((1, 0, 0, 0), (1, 3, 4, 2))


def _root_reflection(rs: RootSystem, root) -> OrthAut:
    n = rs.rank
    cols = []
    for i in range(n):
        e = tuple(1 if k == i else 0 for k in range(n))
        c = 2 * rs.pairing2(e, root) // rs.pairing2(root, root)
        cols.append(tuple(e[j] - c * root[j] for j in range(n)))
    return OrthAut.from_images(rs, cols)
