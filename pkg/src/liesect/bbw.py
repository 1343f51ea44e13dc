"""Bott-Borel-Weil acyclicity and the Koszul / Eagon-Northcott
non-emptiness drivers.

A weight lambda (integer fundamental-weight coordinates) is acyclic iff
lambda+rho is orthogonal to some positive coroot; otherwise the cohomology
sits in the single degree l(w) = #{alpha > 0 : <lambda+rho, alpha^vee> < 0},
with dominant representative w.(lambda) = w(lambda+rho) - rho.

The per-case weight lists follow the proofs: chain-reflection recipe for the
long rows (reproducing the printed G(k,2k+1) and E7/P3 lists verbatim), the
symplectic wedge decomposition for IG(k,3k), and the printed rank-10 bundle
on E6/P6 for the Eagon-Northcott case.  The chase needs H^q of the q-th term
to vanish; full acyclicity (what the printed cases exhibit) is checked first
and any term that is merely degree-shifted is reported, never silently
ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rootsys import LieType, OrthAut, RootSystem, build_root_system


@dataclass(frozen=True)
class WeightVec:
    """Integer vector in the fundamental-weight basis (dominance not required)."""
    rs: RootSystem
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        if len(self.coords) != self.rs.rank:
            raise ValueError("wrong number of coordinates")

    def __add__(self, other):
        return WeightVec(self.rs, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return WeightVec(self.rs, tuple(-a for a in self.coords))

    def pretty(self) -> str:
        parts = []
        for i, c in enumerate(self.coords, 1):
            if c == 0:
                continue
            if c == 1:
                parts.append(f"+w{i}")
            elif c == -1:
                parts.append(f"-w{i}")
            else:
                parts.append(f"{c:+d}w{i}")
        return "".join(parts) or "0"


def weight(rs: RootSystem, coords) -> WeightVec:
    return WeightVec(rs, tuple(coords))


def fundamental(rs: RootSystem, i: int) -> WeightVec:
    """omega_i (1-based); i = 0 or rank+1 gives the zero weight."""
    coords = [0] * rs.rank
    if 1 <= i <= rs.rank:
        coords[i - 1] = 1
    return WeightVec(rs, coords)


@dataclass
class AcyclicityVerdict:
    acyclic: bool
    degree: int | None = None
    dominant: tuple | None = None

    def __repr__(self):
        if self.acyclic:
            return "acyclic"
        return f"cohomology in degree {self.degree} at weight {self.dominant}"


def _pairings(lam: WeightVec):
    rs = lam.rs
    shifted = tuple(c + 1 for c in lam.coords)  # lambda + rho
    return [rs.pair_coroot(shifted, i) for i in range(rs.npos)]


def is_acyclic(lam: WeightVec) -> AcyclicityVerdict:
    """Exact BBW verdict; non-acyclic weights carry degree and dominant rep."""
    rs = lam.rs
    pair = _pairings(lam)
    if any(p == 0 for p in pair):
        return AcyclicityVerdict(True)
    degree = sum(1 for p in pair if p < 0)
    m = [c + 1 for c in lam.coords]
    guard = 0
    while True:
        j = next((i for i in range(rs.rank) if m[i] < 0), None)
        if j is None:
            break
        mj = m[j]
        m = [m[i] - mj * rs.cartan[j][i] for i in range(rs.rank)]
        guard += 1
        if guard > rs.npos + 1:
            raise RuntimeError("dominant reduction failed")
    dominant = tuple(mi - 1 for mi in m)
    return AcyclicityVerdict(False, degree, dominant)


def weyl_dimension(rs: RootSystem, dominant: tuple) -> Fraction:
    """Weyl dimension formula at a dominant weight (positive for dominant)."""
    num = Fraction(1)
    den = Fraction(1)
    shifted = tuple(c + 1 for c in dominant)
    rho = (1,) * rs.rank
    for i in range(rs.npos):
        num *= rs.pair_coroot(shifted, i)
        den *= rs.pair_coroot(rho, i)
    return num / den


# ---------------------------------------------------------------------------
# Koszul weight lists
# ---------------------------------------------------------------------------

def koszul_weights_long(t: LieType, marked: int, component: int = 0) -> list[WeightVec]:
    """Highest weights of wedge^q E, q = 1..m+1, for a long-type Table-1 row.

    The weights of E^vee are generated from omega_marked by reflecting along
    the maximal chain in path order; the highest weight of wedge^q E is minus
    the sum of the last q of them.
    """
    from .diagrams import MarkedDiagram, hilb_linear, max_linear_dim

    rs = build_root_system(t)
    x = MarkedDiagram.grassmannian(t, marked)
    m = max_linear_dim(x)
    comp = hilb_linear(x, m)[component]
    chain = comp.subdiagram_nodes  # path order, marked first
    w = list(fundamental(rs, marked).coords)
    dual_weights = [tuple(w)]
    for node in chain:
        j = node - 1
        mj = w[j]
        w = [w[i] - mj * rs.cartan[j][i] for i in range(rs.rank)]
        dual_weights.append(tuple(w))
    out = []
    acc = [0] * rs.rank
    for q in range(1, len(dual_weights) + 1):
        acc = [a + b for a, b in zip(acc, dual_weights[-q])]
        out.append(WeightVec(rs, tuple(-a for a in acc)))
    return out


def symplectic_wedge_weights(k: int, q: int) -> list[WeightVec]:
    """Highest weights of the summands of wedge^q E for IG(k,3k), k = 2h even.

    E = (U_perp/U)(-1) on IG(k-1,3k); wedge^q E decomposes into the primitive
    wedge powers of the symplectic form, with highest weights
    omega_{k+q-2p-1} - (q+1) omega_{k-1} for q <= h+1 (the trivial primitive
    factor contributing -q omega_{k-1}) and omega_{2k+1-q-2p} - (q+1) omega_{k-1}
    beyond.
    """
    if k % 2 or k < 4:
        raise ValueError("k must be even and >= 4")
    h = k // 2
    if not 1 <= q <= k + 2:
        raise ValueError("q out of range")
    n = 3 * h
    rs = build_root_system(LieType("C", n))
    js = range(q, -1, -2) if q <= h + 1 else range(k + 2 - q, -1, -2)
    out = []
    for j in js:
        if j == 0:
            coords = [0] * n
            coords[k - 2] = -q
        else:
            coords = [0] * n
            coords[k + j - 1 - 1] += 1
            coords[k - 2] += -(q + 1)
        out.append(WeightVec(rs, tuple(coords)))
    return out


def _ig_3km2_weights(k: int) -> list[WeightVec]:
    """wedge^q E for IG(k,3k-2), E = wedge^k U on IG(k+1,3k-2):
    lambda_q = omega_{k+1-q} + (q-1) omega_{k+1}, q = 1..k+1."""
    if 3 * k % 2 == 1:
        raise ValueError("k must be even for IG(k,3k-2) to exist")
    n = (3 * k - 2) // 2
    rs = build_root_system(LieType("C", n))
    out = []
    for q in range(1, k + 2):
        coords = [0] * n
        if k + 1 - q >= 1:
            coords[k - q] += 1
        coords[k] += q - 1
        out.append(WeightVec(rs, tuple(coords)))
    return out


def eagon_northcott_terms() -> list[tuple[int, int, WeightVec]]:
    """(i, multiplicity, BBW weight of each wedge^i S summand) for i = 2..10.

    S is the rank-10 span bundle of the maximal quadrics on the Cayley plane,
    a subbundle of the trivial V_{omega_1} bundle over E6/P6 whose fiber
    weights are the shipped list; the Eagon-Northcott complex of the
    evaluation S -> O^2 of two general hyperplanes has terms (wedge^i S)^(i-1)
    in homological position i-1.  The BBW weight of an irreducible equivariant
    bundle (the dominant weight of its H^0 when there is one) is minus the
    lowest weight of the defining module, so wedge^i contributes minus the sum
    of the i lowest fiber weights; wedge^5 of the rank-10 Levi module splits
    into two halves (the middle pair of fiber weights is incomparable) and
    both summands are listed.
    """
    from . import tables

    rs = build_root_system(LieType("E", 6))
    weights = tables.bbw_printed("E6/P6-S")["weights"]
    out = []
    for i in range(2, 11):
        if i != 5:
            acc = [0] * 6
            for row in weights[-i:]:
                acc = [a - b for a, b in zip(acc, row)]
            out.append((i, i - 1, WeightVec(rs, tuple(acc))))
        else:
            tail = weights[-6:]  # positions 4..9; 4 and 5 are the incomparable pair
            for drop in (0, 1):
                rows = [w for j, w in enumerate(tail) if j != drop]
                acc = [0] * 6
                for row in rows:
                    acc = [a - b for a, b in zip(acc, row)]
                out.append((i, i - 1, WeightVec(rs, tuple(acc))))
    return out


# ---------------------------------------------------------------------------
# non-emptiness verdicts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BundleCaseSpec:
    family: str
    params: tuple = ()

    KNOWN = ("G(k,2k+1)", "OG(k,4k-1)", "IG(k,3k)", "IG(k,3k-2)",
             "OG(5,10)", "OG(k,4k-2)", "OG(k,4k+2)", "E-row", "F4P4-EagonNorthcott")


@dataclass
class TermReport:
    position: int
    multiplicity: int
    weight: WeightVec
    verdict: AcyclicityVerdict


@dataclass
class NonemptinessVerdict:
    case: BundleCaseSpec
    nonempty: bool
    all_acyclic: bool
    h0_exactly_c: bool
    terms: list
    detail: str


def _terms_for_case(case: BundleCaseSpec) -> list[tuple[int, int, WeightVec]]:
    fam = case.family
    if fam == "G(k,2k+1)":
        (k,) = case.params
        ws = koszul_weights_long(LieType("A", 2 * k), k)
        return [(q + 1, 1, w) for q, w in enumerate(ws)]
    if fam == "OG(k,4k-1)":
        (k,) = case.params
        if k < 3:
            raise ValueError("OG(k,4k-1) needs k >= 3 (OG(2,7) is degenerate)")
        ws = koszul_weights_long(LieType("B", 2 * k - 1), k)
        return [(q + 1, 1, w) for q, w in enumerate(ws)]
    if fam == "IG(k,3k)":
        (k,) = case.params
        out = []
        for q in range(1, k + 3):
            for w in symplectic_wedge_weights(k, q):
                out.append((q, 1, w))
        return out
    if fam == "IG(k,3k-2)":
        (k,) = case.params
        return [(q + 1, 1, w) for q, w in enumerate(_ig_3km2_weights(k))]
    if fam == "OG(5,10)":
        ws = koszul_weights_long(LieType("D", 5), 5)
        return [(q + 1, 1, w) for q, w in enumerate(ws)]
    if fam == "OG(k,4k-2)":
        (k,) = case.params
        ws = koszul_weights_long(LieType("D", 2 * k - 1), k)
        return [(q + 1, 1, w) for q, w in enumerate(ws)]
    if fam == "OG(k,4k+2)":
        k, component = case.params if len(case.params) == 2 else (case.params[0], 0)
        ws = koszul_weights_long(LieType("D", 2 * k + 1), k, component=component)
        return [(q + 1, 1, w) for q, w in enumerate(ws)]
    if fam == "E-row":
        n, k = case.params
        ws = koszul_weights_long(LieType("E", n), k)
        return [(q + 1, 1, w) for q, w in enumerate(ws)]
    if fam == "F4P4-EagonNorthcott":
        return [(i - 1, mult, w) for i, mult, w in eagon_northcott_terms()]
    raise ValueError(f"unknown bundle case family {fam!r}; known: {BundleCaseSpec.KNOWN}")


def nonemptiness_verdict(case: BundleCaseSpec) -> NonemptinessVerdict:
    """Certify H^0(O_Z) != 0 (hence Z nonempty) from the per-term cohomology.

    With the term in homological position p denoted T_p, the constant section
    of O survives into H^0(O_Z) iff no H^(p-1)(T_p) is nonzero (those are the
    sources of the spectral-sequence differentials into it), and H^0(O_Z)
    equals exactly C iff additionally every H^p(T_p) vanishes.  Full
    acyclicity of every term -- what the cited proofs establish for the
    printed cases -- gives both at once.  Any non-acyclic term is reported
    with its degree and dominant weight, never silently ignored.
    """
    terms = []
    all_acyclic = True
    blocking = []
    extra = []
    for pos, mult, w in _terms_for_case(case):
        v = is_acyclic(w)
        terms.append(TermReport(pos, mult, w, v))
        if not v.acyclic:
            all_acyclic = False
            if v.degree == pos - 1:
                blocking.append((pos, w))
            if v.degree == pos:
                extra.append((pos, mult, w))
    nonempty = not blocking
    h0_exact = nonempty and not extra
    if blocking:
        detail = ("inconclusive: cohomology feeding the differential into H^0 at " +
                  ", ".join(f"position {p} weight {w.pretty()}" for p, w in blocking))
    elif all_acyclic:
        detail = ("H^0(O_Z) = C: every positive-degree term is acyclic, "
                  "hence Z is nonempty")
    elif h0_exact:
        detail = ("H^0(O_Z) = C hence Z nonempty; some terms carry harmless "
                  "degree-shifted cohomology (reported)")
    else:
        bumps = ", ".join(f"H^{p}((.)^{m}) at position {p} weight {w.pretty()}"
                          for p, m, w in extra)
        detail = ("H^0(O_Z) != 0 hence Z nonempty, but the diagonal "
                  f"contributions {bumps} survive, so H^0(O_Z) is strictly "
                  "bigger than C; the cited claim H^0 = C does not follow")
    return NonemptinessVerdict(case, nonempty, all_acyclic, h0_exact, terms, detail)
