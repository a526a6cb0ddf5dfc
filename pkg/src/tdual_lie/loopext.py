"""Central extensions of the integral lattice induced by loop-group extensions.

A central extension of the integral lattice by the circle is classified by
its commutator map b, an antisymmetric bi-additive map with values in Q/Z;
the extension is trivial exactly when b vanishes.  For a simply connected,
simply laced group at level k the commutator map of the pulled-back
extension is b = [k/2 * <.,.>] on the coroot basis; in every other case the
formula is not asserted and an explicit b must be supplied (and can be
checked for admissibility against the invariant form).

Values in Q/Z are reduced fractions in [0, 1); everything is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, RequiresExplicitB
from .rootdata import InvariantForm, RootDatum, all_coroots
from .zlinalg import Lattice


def _mod1(x: Fraction) -> Fraction:
    return x - Fraction(x.numerator // x.denominator)


@dataclass(frozen=True)
class CommutatorMap:
    """Antisymmetric bi-additive Q/Z-valued form on the integral lattice.

    `values[i][j]` is b(e_i, e_j) for the lattice's basis, represented in
    [0, 1).  Bi-additive extension off the basis is exact and lossless
    because b is a homomorphism on the exterior square.
    """

    lattice: Lattice
    values: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = self.lattice.rank
        if len(self.values) != n or any(len(r) != n for r in self.values):
            raise DimensionMismatch("commutator matrix size must match lattice rank")
        for i in range(n):
            if self.values[i][i] != 0:
                raise ValueError("commutator map must vanish on the diagonal")
            for j in range(n):
                v = self.values[i][j]
                if not (0 <= v < 1):
                    raise ValueError("values must be reduced into [0, 1)")
                if _mod1(v + self.values[j][i]) != 0:
                    raise ValueError("commutator map must be antisymmetric mod 1")

    def value(self, x: Sequence[int], y: Sequence[int]) -> Fraction:
        """b(x, y) in [0,1) for x, y in basis coordinates."""
        total = Fraction(0)
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            row = self.values[i]
            total += xi * sum(row[j] * yj for j, yj in enumerate(y) if yj != 0)
        return _mod1(total)

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.values for v in row)

    def first_nonzero(self) -> tuple[int, int, Fraction] | None:
        for i, row in enumerate(self.values):
            for j, v in enumerate(row):
                if v != 0:
                    return i, j, v
        return None


@dataclass(frozen=True)
class AntisymLift:
    """Rational antisymmetric matrix reducing mod Z to a commutator map."""

    matrix: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.matrix)
        for i in range(n):
            for j in range(n):
                if self.matrix[i][j] != -self.matrix[j][i]:
                    raise ValueError("lift must be antisymmetric")

    def reduces_to(self, b: CommutatorMap) -> bool:
        n = len(self.matrix)
        return all(
            _mod1(self.matrix[i][j]) == b.values[i][j] for i in range(n) for j in range(n)
        )


def commutator_from_level(rd: RootDatum, form: InvariantForm) -> CommutatorMap:
    """b = [<.,.>/2] mod 1 on the coroot basis, form taken at its level.

    Only asserted for simply connected, simply laced groups; anything else
    raises RequiresExplicitB rather than extrapolating the formula.
    """
    if not rd.is_simply_laced():
        raise RequiresExplicitB(
            f"{rd.label} has a non-simply-laced factor; supply the commutator map explicitly")
    if not rd.is_simply_connected():
        raise RequiresExplicitB(
            f"{rd.label} is not simply connected; supply the commutator map explicitly")
    n = rd.rank
    g = form.gram
    values = tuple(
        tuple(_mod1(Fraction(g[i, j], 2)) for j in range(n)) for i in range(n)
    )
    return CommutatorMap(lattice=rd.integral, values=values)


def is_extension_trivial(b: CommutatorMap) -> bool:
    """A central extension of a free abelian group by the circle is trivial
    exactly when its commutator map vanishes."""
    return b.is_zero()


def lift_commutator(b: CommutatorMap) -> AntisymLift:
    """Canonical antisymmetric rational lift: entries above the diagonal are
    the [0,1) representatives, entries below their negatives."""
    n = b.lattice.rank
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            m[i][j] = b.values[i][j]
            m[j][i] = -b.values[i][j]
    return AntisymLift(matrix=tuple(tuple(row) for row in m))


@dataclass(frozen=True)
class TrivializabilityReport:
    group: str
    level: int | None
    trivializable: bool
    witness: tuple[tuple[str, ...], ...]
    witness_pair: tuple[int, int] | None
    witness_value: str | None
    explanation: str

    def as_dict(self) -> dict:
        return {
            "group": self.group,
            "level": self.level,
            "trivializable": self.trivializable,
            "commutator_matrix": [list(r) for r in self.witness],
            "witness_pair": list(self.witness_pair) if self.witness_pair else None,
            "witness_value": self.witness_value,
            "explanation": self.explanation,
        }


def _serialize_fractions(values) -> tuple[tuple[str, ...], ...]:
    return tuple(tuple(str(v) for v in row) for row in values)


def fibrewise_trivializable(rd: RootDatum, form: InvariantForm | None = None,
                            b: CommutatorMap | None = None) -> TrivializabilityReport:
    """Decide whether the canonical reduction over the flag manifold is
    trivializable along the torus fibres: true exactly when the pulled-back
    central extension of the integral lattice is trivial, i.e. b = 0."""
    if b is None:
        if form is None:
            raise ValueError("either an invariant form or an explicit b is required")
        b = commutator_from_level(rd, form)
    trivial = is_extension_trivial(b)
    nz = b.first_nonzero()
    if trivial:
        explanation = "commutator map vanishes, so the lattice extension splits"
    else:
        i, j, v = nz
        explanation = (
            f"commutator map does not vanish: b(basis_{i}, basis_{j}) = {v}; "
            "the lattice extension is nonabelian, so no fibrewise trivialization exists")
    return TrivializabilityReport(
        group=rd.label,
        level=form.level if form is not None else None,
        trivializable=trivial,
        witness=_serialize_fractions(b.values),
        witness_pair=(nz[0], nz[1]) if nz else None,
        witness_value=str(nz[2]) if nz else None,
        explanation=explanation,
    )


@dataclass(frozen=True)
class AdmissibilityReport:
    passed: bool
    integrality_violations: tuple[str, ...]
    half_pairing_violations: tuple[str, ...]

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "integrality_violations": list(self.integrality_violations),
            "half_pairing_violations": list(self.half_pairing_violations),
        }


def admissibility_check(rd: RootDatum, form: InvariantForm, b: CommutatorMap) -> AdmissibilityReport:
    """Check the two conditions under which a loop-group extension realizing
    (form, b) exists: the form is integral on pairs of fundamental coroots,
    and b(lambda, H) = [<lambda, H>/2] for every lattice basis vector and
    every coroot H."""
    n = rd.rank
    integrality = []
    for i in range(n):
        for j in range(n):
            # Recompute the pairing of simple coroots through the rational
            # coweight route and require an integer agreeing with the Gram.
            val = form.value_on_coweights(rd, rd.cartan.column(i), rd.cartan.column(j))
            if val.denominator != 1 or val != form.gram[i, j]:
                integrality.append(f"<H_{i}, H_{j}> = {val} is not the integer Gram entry")
    half = []
    basis_cols = [rd.integral.basis.column(k) for k in range(rd.integral.rank)]
    for k, lam in enumerate(basis_cols):
        for coroot in all_coroots(rd):
            coords = rd.integral.coords(coroot)
            if coords is None:
                half.append(f"coroot {coroot} lies outside the integral lattice")
                continue
            got = b.value([1 if t == k else 0 for t in range(n)], coords)
            want = _mod1(form.value_on_coweights(rd, lam, coroot) / 2)
            if got != want:
                half.append(
                    f"b(basis_{k}, coroot {coroot}) = {got} but [<.,.>/2] = {want}")
    ok = not integrality and not half
    return AdmissibilityReport(
        passed=ok,
        integrality_violations=tuple(integrality),
        half_pairing_violations=tuple(half),
    )


def commutator_from_matrix(rd: RootDatum, entries: Sequence[Sequence]) -> CommutatorMap:
    """Build a commutator map from rational entries (e.g. CLI "1/2" strings)."""
    n = rd.rank
    vals = tuple(
        tuple(_mod1(Fraction(x)) for x in row) for row in entries
    )
    if len(vals) != n:
        raise DimensionMismatch("commutator matrix size must match the rank")
    return CommutatorMap(lattice=rd.integral, values=vals)
