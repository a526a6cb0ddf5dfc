"""Low-degree integral cohomology of K and of the flag manifold B = K/T.

For a principal torus bundle over a simply connected base with torsion-free
cohomology, the degree-3 cohomology of the total space is the middle
cohomology of a three-term lattice complex

    wedge^2(chars)  -->  chars (x) weights  -->  sym^2(weights) / invariants

with differentials d(x ^ y) = y (x) r(x) - x (x) r(y) and
d(x (x) w) = r(x) * w, where r is restriction of characters along the
inclusion of the coroot lattice into the integral lattice (in our
coordinates r is literally "read the character in weight coordinates").

The complex also yields H^1 and H^2 of the group (edge terms), H^2 and H^4
of the base, the Chern classes of K -> B, and the cycle test deciding which
hom-lattice elements represent degree-3 classes.

Basis conventions are fixed once: the character lattice carries the basis
dual to the integral lattice's preferred basis, tensor bases are ordered
lexicographically (character index major), monomials w_i w_j use i <= j.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DimensionMismatch, NotACycle
from .rootdata import RootDatum
from .zlinalg import (
    FgAbGroup,
    IntMatrix,
    Lattice,
    LatticeMap,
    column_hermite_form,
    hstack,
    image_basis,
    kernel_of_matrix,
    pair_basis,
    solve_columns,
    subquotient,
    sym2_map,
)


@dataclass(frozen=True)
class ChernVector:
    """Ordered degree-2 classes of a torus bundle, in weight coordinates."""

    classes: tuple[tuple[int, ...], ...]
    basis_convention: str

    def as_lists(self) -> list[list[int]]:
        return [list(c) for c in self.classes]


@dataclass(frozen=True)
class LssComplex:
    """The assembled three-term complex for one root datum."""

    rd: RootDatum
    char_basis: IntMatrix          # columns: character basis in weight coords
    wedge_pairs: tuple[tuple[int, int], ...]
    mono_pairs: tuple[tuple[int, int], ...]
    d20: IntMatrix                 # wedge^2(chars) -> chars (x) weights
    d21_raw: IntMatrix             # chars (x) weights -> sym^2(weights)
    invariants: Lattice            # Weyl-invariant sublattice of sym^2(weights)

    @property
    def rank(self) -> int:
        return self.rd.rank

    def c0_rank(self) -> int:
        return len(self.wedge_pairs)

    def c1_rank(self) -> int:
        return self.rank * self.rank

    def sym2_rank(self) -> int:
        return len(self.mono_pairs)

    # -- twist plumbing ------------------------------------------------------

    def twist_coords(self, u: IntMatrix) -> tuple[int, ...]:
        """Tensor coordinates of a hom-lattice element.

        `u` sends integral-lattice basis coordinates to weight coordinates;
        because the character basis is dual to the integral basis, the
        coefficient of x_a (x) w_b is simply u[b, a].
        """
        n = self.rank
        if u.rows != n or u.cols != n:
            raise DimensionMismatch(f"twist matrix must be {n}x{n} for {self.rd.label}")
        return tuple(u[b, a] for a in range(n) for b in range(n))

    def is_cycle(self, u: IntMatrix) -> bool:
        """True when the symmetrized quadratic form of u is Weyl-invariant."""
        coords = self.twist_coords(u)
        target = self.d21_raw @ IntMatrix.from_columns([coords])
        if self.invariants.rank == 0:
            return all(x == 0 for x in target.column(0))
        return solve_columns(self.invariants.basis, target) is not None

    def boundary_of(self, wedge_coeffs) -> IntMatrix:
        """Twist matrix of the boundary of an element of wedge^2(chars)."""
        n = self.rank
        col = self.d20 @ IntMatrix.from_columns([tuple(wedge_coeffs)])
        return IntMatrix([[col[a * n + b, 0] for a in range(n)] for b in range(n)], cols=n)


@lru_cache(maxsize=None)
def build_complex(rd: RootDatum) -> LssComplex:
    """Assemble both differentials in the fixed bases and sanity-check them."""
    n = rd.rank
    x = rd.char_lattice().basis
    wedge = tuple(pair_basis(n, strict=True))
    mono = tuple(pair_basis(n, strict=False))
    mono_index = {p: k for k, p in enumerate(mono)}

    d20 = [[0] * len(wedge) for _ in range(n * n)]
    for col, (a, b) in enumerate(wedge):
        for j in range(n):
            d20[b * n + j][col] += x[j, a]
            d20[a * n + j][col] -= x[j, b]

    d21 = [[0] * (n * n) for _ in range(len(mono))]
    for a in range(n):
        for j in range(n):
            col = a * n + j
            for i in range(n):
                coeff = x[i, a]
                if coeff:
                    d21[mono_index[(min(i, j), max(i, j))]][col] += coeff

    d20_m = IntMatrix(d20, cols=len(wedge))
    d21_m = IntMatrix(d21, cols=n * n)
    # The composite is exactly zero in sym^2 (the product is commutative).
    assert d21_m @ d20_m == IntMatrix.zero(len(mono), len(wedge)), "complex is not a complex"

    inv = sym_invariants(rd)
    return LssComplex(rd=rd, char_basis=x, wedge_pairs=wedge, mono_pairs=mono,
                      d20=d20_m, d21_raw=d21_m, invariants=inv)


@lru_cache(maxsize=None)
def sym_invariants(rd: RootDatum) -> Lattice:
    """Weyl-invariant sublattice of sym^2 of the weight lattice.

    Invariance under the simple reflections suffices (they generate), so the
    result is the common kernel of sym^2(s_i) - id, saturated by
    construction.
    """
    n = rd.rank
    dim = n * (n + 1) // 2
    stacked_rows: list[tuple[int, ...]] = []
    weight = Lattice.standard(n, "weights")
    for i in range(n):
        s = LatticeMap(weight, weight, rd.reflection_on_weights(i))
        m = sym2_map(s).matrix
        for r in range(dim):
            row = list(m.row(r))
            row[r] -= 1
            stacked_rows.append(tuple(row))
    stacked = IntMatrix(stacked_rows, cols=dim)
    basis = kernel_of_matrix(stacked)
    return Lattice(dim, basis, label="sym2 Weyl invariants")


# ---------------------------------------------------------------------------
# Cohomology groups
# ---------------------------------------------------------------------------


def _cycles_lattice(cx: LssComplex) -> Lattice:
    """Kernel of the second differential into the invariant quotient."""
    n2 = cx.c1_rank()
    inv = cx.invariants
    if inv.rank:
        ext = hstack(cx.d21_raw, inv.basis.scale(-1))
        ker = kernel_of_matrix(ext)
        proj = IntMatrix([list(ker.row(i)) for i in range(n2)], cols=ker.cols)
        basis = column_hermite_form(proj)
    else:
        basis = kernel_of_matrix(cx.d21_raw)
    return Lattice(n2, basis, label="degree-3 cycles")


def _boundaries_lattice(cx: LssComplex) -> Lattice:
    c0 = Lattice.standard(cx.c0_rank(), "wedge2 chars")
    c1 = Lattice.standard(cx.c1_rank(), "chars x weights")
    return image_basis(LatticeMap(c0, c1, cx.d20))


@lru_cache(maxsize=None)
def h3_group(rd: RootDatum) -> FgAbGroup:
    cx = build_complex(rd)
    return subquotient(_boundaries_lattice(cx), _cycles_lattice(cx))


def h3_of_K(rd: RootDatum) -> FgAbGroup:
    """H^3 of the group: cycles modulo boundaries, with generator lifts in
    tensor coordinates on chars (x) weights."""
    return h3_group(rd)


def h2_of_K(rd: RootDatum) -> FgAbGroup:
    """H^2 of the group: cokernel of the character restriction map.

    The other graded piece (kernel of the wedge-square differential) always
    vanishes for semisimple groups; that is asserted loudly rather than
    silently extending the answer.
    """
    cx = build_complex(rd)
    ker20 = kernel_of_matrix(cx.d20)
    if ker20.cols != 0:
        raise AssertionError(
            "kernel of the wedge-square differential is nonzero; the edge "
            "extension for H^2 would be ambiguous")
    inner = Lattice(rd.rank, column_hermite_form(cx.char_basis), "characters")
    return subquotient(inner, Lattice.standard(rd.rank, "weights"))


def h1_of_K(rd: RootDatum) -> FgAbGroup:
    """H^1 of the group: kernel of character restriction, zero for
    semisimple input (the restriction is injective)."""
    cx = build_complex(rd)
    ker = kernel_of_matrix(cx.char_basis)
    assert ker.cols == 0, "character restriction unexpectedly has a kernel"
    return subquotient(Lattice.zero(0), Lattice.standard(0))


def h2_of_B(rd: RootDatum) -> FgAbGroup:
    """H^2 of the flag manifold: free on the weight lattice."""
    return subquotient(Lattice.zero(rd.rank), Lattice.standard(rd.rank, "weights"))


def h4_of_B(rd: RootDatum) -> FgAbGroup:
    """H^4 of the flag manifold: sym^2 of the weights mod Weyl invariants."""
    cx = build_complex(rd)
    full = Lattice.standard(cx.sym2_rank(), "sym2 weights")
    return subquotient(cx.invariants, full)


def chern_classes(rd: RootDatum) -> ChernVector:
    """Chern classes of K -> B: restrictions of the character basis,
    expressed in weight coordinates through the transgression isomorphism."""
    x = rd.char_lattice().basis
    return ChernVector(
        classes=tuple(x.column(j) for j in range(x.cols)),
        basis_convention="c_k = restriction of the k-th character basis vector, "
                         "weight coordinates; character basis dual to the "
                         "integral-lattice basis",
    )


def is_cycle(rd: RootDatum, u: IntMatrix) -> bool:
    return build_complex(rd).is_cycle(u)


def class_in_h3(rd: RootDatum, u: IntMatrix) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(free, torsion) coordinates of [u] in the presentation of H^3."""
    cx = build_complex(rd)
    if not cx.is_cycle(u):
        raise NotACycle(f"twist is not a cycle for {rd.label}")
    return h3_group(rd).coords(cx.twist_coords(u))


# ---------------------------------------------------------------------------
# Dualizability
# ---------------------------------------------------------------------------


def _wedge3_differential(cx: LssComplex) -> IntMatrix:
    """Degree-2 differential on wedge^3 of the characters.

    Antiderivation rule: x^y^z maps to r(x)(x)(y^z) - r(y)(x)(x^z)
    + r(z)(x)(x^y) inside weights (x) wedge^2(chars).
    """
    n = cx.rank
    x = cx.char_basis
    wedge2 = list(cx.wedge_pairs)
    w2_index = {p: k for k, p in enumerate(wedge2)}
    triples = [(a, b, c) for a in range(n) for b in range(a + 1, n) for c in range(b + 1, n)]
    rows = n * len(wedge2)
    out = [[0] * len(triples) for _ in range(rows)]
    for col, (a, b, c) in enumerate(triples):
        for i in range(n):
            out[i * len(wedge2) + w2_index[(b, c)]][col] += x[i, a]
            out[i * len(wedge2) + w2_index[(a, c)]][col] -= x[i, b]
            out[i * len(wedge2) + w2_index[(a, b)]][col] += x[i, c]
    return IntMatrix(out, cols=len(triples))


@dataclass(frozen=True)
class DualizabilityReport:
    group: str
    dualizable: bool
    is_cycle: bool | None
    wedge3_kernel_rank: int
    notes: tuple[str, ...]

    def as_dict(self) -> dict:
        return {
            "group": self.group,
            "dualizable": self.dualizable,
            "twist_is_cycle": self.is_cycle,
            "wedge3_kernel_rank": self.wedge3_kernel_rank,
            "notes": list(self.notes),
        }


def dualizability_report(rd: RootDatum, u: IntMatrix | None = None) -> DualizabilityReport:
    """Every degree-3 class on K sits in the second filtration step, so a
    T-dual always exists; the report exhibits the two vanishing graded
    pieces instead of just asserting them."""
    cx = build_complex(rd)
    w3_ker = kernel_of_matrix(_wedge3_differential(cx)).cols if rd.rank >= 3 else 0
    cycle = cx.is_cycle(u) if u is not None else None
    notes = (
        "flag base has no degree-1 or degree-3 cohomology, so the (1,2) "
        "graded piece vanishes and the filtration ends at the hom-lattice term",
        f"wedge^3 differential has kernel rank {w3_ker}, so the (0,3) graded piece vanishes",
        "hence H^3 of the total space equals its second filtration step: "
        "every class admits a hom-lattice representative",
    )
    return DualizabilityReport(
        group=rd.label,
        dualizable=(w3_ker == 0),
        is_cycle=cycle,
        wedge3_kernel_rank=w3_ker,
        notes=notes,
    )


# ---------------------------------------------------------------------------
# Assembled report
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CohomologyReport:
    group: str
    h1_group: FgAbGroup
    h2_group: FgAbGroup
    h3_group: FgAbGroup
    h2_base: FgAbGroup
    h4_base: FgAbGroup
    chern: ChernVector
    filtration_notes: tuple[str, ...]
    h4_base_torsion_flag: bool

    def as_dict(self) -> dict:
        def grp(g: FgAbGroup) -> dict:
            return {"free_rank": g.free_rank, "invariant_factors": list(g.torsion),
                    "pretty": g.describe()}

        return {
            "group": self.group,
            "H1_K": grp(self.h1_group),
            "H2_K": grp(self.h2_group),
            "H3_K": grp(self.h3_group),
            "H2_B": grp(self.h2_base),
            "H4_B": grp(self.h4_base),
            "chern_classes": self.chern.as_lists(),
            "filtration_notes": list(self.filtration_notes),
            "H4_B_torsion_discrepancy": self.h4_base_torsion_flag,
        }


def cohomology(rd: RootDatum) -> CohomologyReport:
    h4b = h4_of_B(rd)
    torsion_flag = bool(h4b.torsion)
    notes = (
        "H^3 of the group is presented by hom-lattice representatives "
        "(second filtration step); see the dualizability report",
        "H^2 of the group is the cokernel of character restriction "
        "(the degree-(0,2) edge piece vanishes)",
    )
    if torsion_flag:
        notes += (
            "H^4 of the base has torsion, contradicting torsion-freeness of "
            "flag-manifold cohomology; this flags an internal discrepancy",
        )
    return CohomologyReport(
        group=rd.label,
        h1_group=h1_of_K(rd),
        h2_group=h2_of_K(rd),
        h3_group=h3_of_K(rd),
        h2_base=h2_of_B(rd),
        h4_base=h4b,
        chern=chern_classes(rd),
        filtration_notes=notes,
        h4_base_torsion_flag=torsion_flag,
    )
