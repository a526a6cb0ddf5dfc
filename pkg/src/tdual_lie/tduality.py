"""T-dual bundle data: dual Chern classes, torsor shifts, Langlands duals.

A twist representative is a homomorphism u from the integral lattice to the
weight lattice (an integer matrix in the fixed preferred/dual bases).  Its
image sublattice determines the T-dual torus bundle; two representatives of
the same degree-3 class differ by a boundary, and moving a representative
by the boundary of sum_{i<j} B_ij x_i ^ x_j shifts the dual Chern classes
by the exact integer formula

    chat_k' - chat_k = sum_{i<k} B_ik c_i - sum_{k<j} B_kj c_j.

Dual bundles are compared as canonical sublattices of the weight lattice
(generator choices are not unique); Chern-class tuples use the convention
chat_k = u(lambda_k) for the fixed integral-lattice basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DimensionMismatch, NotACycle, Unavailable
from .flagcoh import ChernVector, build_complex, chern_classes, class_in_h3, h3_group
from .rootdata import (
    RootDatum,
    _cartan_inverse,
    basic_form,
    langlands_dual,
    require_phi,
    weyl_elements_on_coweights,
)
from .zlinalg import (
    FgAbGroup,
    IntMatrix,
    Lattice,
    LatticeMap,
    column_hermite_form,
    image_basis,
    subquotient,
)

TWIST_BASIS_CONVENTION = (
    "chat_k = u(lambda_k) in weight coordinates; lambda_k = preferred basis "
    "of the integral lattice (simple coroots when simply connected)"
)


@dataclass(frozen=True)
class TwistClass:
    """Hom-lattice twist representative u: integral lattice -> weights."""

    rd: RootDatum
    matrix: IntMatrix

    def __post_init__(self):
        n = self.rd.rank
        if self.matrix.rows != n or self.matrix.cols != n:
            raise DimensionMismatch("twist matrix must be rank x rank")

    def is_cycle(self) -> bool:
        return build_complex(self.rd).is_cycle(self.matrix)

    def h3_class(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return class_in_h3(self.rd, self.matrix)

    def as_map(self) -> LatticeMap:
        return LatticeMap(self.rd.integral, self.rd.weight_lattice(), self.matrix)


def zero_twist(rd: RootDatum) -> TwistClass:
    return TwistClass(rd, IntMatrix.zero(rd.rank, rd.rank))


def level_twist(rd: RootDatum, level: int) -> TwistClass:
    """Twist induced by the invariant form: u = level * <., .> restricted to
    the integral lattice.  Always a cycle (the form is Weyl-invariant)."""
    n = rd.rank
    g = basic_form(rd, level).gram
    inv = _cartan_inverse(rd.cartan)
    b = rd.integral.basis
    from fractions import Fraction

    out = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        for k in range(n):
            out[j][k] = sum(
                Fraction(g[j, i]) * inv[i][t] * b[t, k] for i in range(n) for t in range(n)
            )
    bad = [v for row in out for v in row if v.denominator != 1]
    assert not bad, "invariant-form twist must be integral on the integral lattice"
    return TwistClass(rd, IntMatrix([[int(v) for v in row] for row in out], cols=n))


@dataclass(frozen=True)
class DualChernData:
    """Canonical image sublattice plus the basis-convention Chern tuple."""

    twist: TwistClass
    image: Lattice
    chern: ChernVector

    def as_dict(self) -> dict:
        return {
            "dual_chern_lattice": self.image.basis.tolist(),
            "dual_chern_classes": self.chern.as_lists(),
            "basis_convention": self.chern.basis_convention,
        }


def dual_chern(twist: TwistClass) -> DualChernData:
    """Chern data of the T-dual bundle attached to a cycle representative."""
    if not twist.is_cycle():
        raise NotACycle(f"twist is not a cycle for {twist.rd.label}")
    image = image_basis(
        LatticeMap(Lattice.standard(twist.rd.rank, "integral basis"),
                   twist.rd.weight_lattice(), twist.matrix)
    )
    chern = ChernVector(
        classes=tuple(twist.matrix.column(k) for k in range(twist.rd.rank)),
        basis_convention=TWIST_BASIS_CONVENTION,
    )
    return DualChernData(twist=twist, image=image, chern=chern)


@dataclass(frozen=True)
class ShiftMatrix:
    """Strictly upper-triangular integer matrix of torsor-shift coefficients."""

    entries: IntMatrix

    def __post_init__(self):
        m = self.entries
        if m.rows != m.cols:
            raise DimensionMismatch("shift matrix must be square")
        for i in range(m.rows):
            for j in range(m.cols):
                if j <= i and m[i, j] != 0:
                    raise DimensionMismatch("shift entries live strictly above the diagonal")

    @classmethod
    def from_rows(cls, rows) -> "ShiftMatrix":
        return cls(IntMatrix(rows))

    @classmethod
    def zero(cls, n: int) -> "ShiftMatrix":
        return cls(IntMatrix.zero(n, n))

    def __add__(self, other: "ShiftMatrix") -> "ShiftMatrix":
        return ShiftMatrix(self.entries + other.entries)

    def __neg__(self) -> "ShiftMatrix":
        return ShiftMatrix(self.entries.scale(-1))


def bfield_shift(chat: ChernVector, shift: ShiftMatrix, c: ChernVector) -> ChernVector:
    """Dual Chern classes after moving the reduction by the shift datum."""
    n = len(chat.classes)
    if len(c.classes) != n or shift.entries.rows != n:
        raise DimensionMismatch("shift and Chern data sizes disagree")
    dim = len(chat.classes[0]) if n else 0
    if any(len(v) != dim for v in c.classes):
        raise DimensionMismatch("Chern class vectors live in different spaces")
    b = shift.entries
    out = []
    for k in range(n):
        acc = list(chat.classes[k])
        for i in range(k):
            for t in range(dim):
                acc[t] += b[i, k] * c.classes[i][t]
        for j in range(k + 1, n):
            for t in range(dim):
                acc[t] -= b[k, j] * c.classes[j][t]
        out.append(tuple(acc))
    return ChernVector(classes=tuple(out), basis_convention=chat.basis_convention)


@dataclass(frozen=True)
class TorsorShiftResult:
    shifted_twist: TwistClass
    dual: DualChernData
    h3_class: tuple[tuple[int, ...], tuple[int, ...]]

    def as_dict(self) -> dict:
        return {
            "shifted_twist": self.shifted_twist.matrix.tolist(),
            "h3_class": {"free": list(self.h3_class[0]), "torsion": list(self.h3_class[1])},
            **self.dual.as_dict(),
        }


def reduction_torsor_shift(twist: TwistClass, shift: ShiftMatrix) -> TorsorShiftResult:
    """Act on a reduction by a shift datum: u moves by the boundary of
    sum B_ij x_i ^ x_j, the degree-3 class stays put, and the dual Chern
    data moves by `bfield_shift`."""
    if not twist.is_cycle():
        raise NotACycle(f"twist is not a cycle for {twist.rd.label}")
    cx = build_complex(twist.rd)
    coeffs = [shift.entries[i, j] for (i, j) in cx.wedge_pairs]
    moved = TwistClass(twist.rd, twist.matrix + cx.boundary_of(coeffs))
    return TorsorShiftResult(
        shifted_twist=moved,
        dual=dual_chern(moved),
        h3_class=moved.h3_class(),
    )


def reduction_torsor_group(rd: RootDatum) -> FgAbGroup:
    """The group acting simply transitively on reductions with a fixed
    class: boundaries inside the hom lattice (free, of wedge-square rank)."""
    cx = build_complex(rd)
    boundaries = image_basis(
        LatticeMap(Lattice.standard(cx.c0_rank()), Lattice.standard(cx.c1_rank()), cx.d20)
    )
    return subquotient(Lattice.zero(cx.c1_rank()), boundaries)


# ---------------------------------------------------------------------------
# Langlands duality
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _langlands_transport(rd: RootDatum) -> IntMatrix:
    """Pullback matrix from dual-side weight coordinates to weight
    coordinates whose induced twist is a cycle.

    The diagram isomorphism fixes the matrix up to composition with a Weyl
    element; for non-simply-laced self-dual factors the identity composition
    symmetrizes to a non-invariant form, so we take the first Weyl element
    (in word-length order) whose composite passes the cycle test.  The dual
    Chern lattice does not depend on this choice (the integral lattice is
    Weyl-stable), the cycle property does.
    """
    iso = require_phi(rd)
    cx = build_complex(rd)
    for w in weyl_elements_on_coweights(rd):
        transport = iso.matrix @ w
        if cx.is_cycle(transport @ rd.integral.basis):
            return transport
    raise Unavailable(
        f"no Weyl refinement of the diagram isomorphism yields a cycle for {rd.label}",
        evidence={"permutation": iso.permutation},
    )


def langlands_twist(rd: RootDatum) -> TwistClass:
    """The twist whose T-dual is the Langlands dual group: compose the
    inclusion of the integral lattice into the dual-side weight lattice with
    the (Weyl-refined) diagram-isomorphism pullback."""
    return TwistClass(rd, _langlands_transport(rd) @ rd.integral.basis)


@dataclass(frozen=True)
class LanglandsReport:
    group: str
    dual_group: str
    available: bool
    match: bool
    twist: TwistClass | None
    dual_chern_lattice: Lattice | None
    expected_lattice: Lattice | None

    def as_dict(self) -> dict:
        return {
            "group": self.group,
            "dual_group": self.dual_group,
            "available": self.available,
            "match": self.match,
            "twist": self.twist.matrix.tolist() if self.twist else None,
            "dual_chern_lattice": self.dual_chern_lattice.basis.tolist()
            if self.dual_chern_lattice else None,
            "expected_lattice": self.expected_lattice.basis.tolist()
            if self.expected_lattice else None,
        }


def verify_langlands_tdual(rd: RootDatum) -> LanglandsReport:
    """Two-sided check that the Langlands twist T-dualizes onto the dual
    group: the image lattice of the twist must coincide with the transported
    character lattice of the dual torus, both in canonical form.

    A mismatch is a defect indicator, not a user error; it is reported with
    both lattices.
    """
    twist = langlands_twist(rd)  # raises Unavailable without an isomorphism
    mine = dual_chern(twist).image
    dual_rd = langlands_dual(rd)
    transported = column_hermite_form(_langlands_transport(rd) @ dual_rd.char_lattice().basis)
    expected = Lattice(rd.rank, transported, "transported dual characters")
    return LanglandsReport(
        group=rd.label,
        dual_group=dual_rd.label,
        available=True,
        match=mine.basis == expected.basis,
        twist=twist,
        dual_chern_lattice=mine,
        expected_lattice=expected,
    )


def group_chern_classes(rd: RootDatum) -> ChernVector:
    """Chern classes of K -> K/T itself (re-export for the CLI)."""
    return chern_classes(rd)


def twist_class_group(rd: RootDatum) -> FgAbGroup:
    """H^3 of the group, the home of twist classes (re-export)."""
    return h3_group(rd)
