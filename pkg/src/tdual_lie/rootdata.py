"""Root data for compact connected semisimple Lie groups.

Conventions (fixed once, used by every module downstream):

  * cartan[i][j] = <alpha_i, alpha_j^vee>, the pairing of the i-th simple
    root with the j-th simple coroot.
  * The Cartan algebra t carries fundamental-coweight coordinates, so the
    coweight lattice is Z^n and the j-th simple coroot is the j-th COLUMN
    of the Cartan matrix.
  * The dual t* carries fundamental-weight coordinates, so the weight
    lattice is Z^n and the i-th simple root is the i-th ROW of the Cartan
    matrix.
  * The pairing of x in t* with v in t is x^T A^{-1} v; it is integral
    whenever x is a character of a torus whose integral lattice contains v.
  * The basic invariant form on the coroot lattice is normalized so that
    coroots of long roots have squared length 2; its Gram matrix on the
    simple coroots is diag(eps) * cartan with eps_i = 1 for long alpha_i
    and the squared-length ratio (2 or 3) for short alpha_i.

All stored data is integral; rationals appear only transiently when dual
lattices are computed and are verified to clear.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import (
    InvalidCenterSubgroup,
    InvalidSeries,
    NotBetweenLattices,
    Unavailable,
)
from .zlinalg import (
    FgAbGroup,
    IntMatrix,
    Lattice,
    LatticeMap,
    block_diag,
    column_hermite_form,
    contains_columns,
    hstack,
    subquotient,
)

SIMPLY_LACED = {"A", "D", "E"}

ROOT_COUNTS = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
    "F": lambda n: 48,
    "G": lambda n: 12,
}


def _check_series(series: str, rank: int) -> None:
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 3,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }.get(series)
    if not ok:
        raise InvalidSeries(f"no simple group of type {series}{rank}")


def cartan_block(series: str, rank: int) -> list[list[int]]:
    """Cartan matrix of one simple factor in the convention above."""
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def chain(pairs):
        for i, j in pairs:
            a[i][j] = -1
            a[j][i] = -1

    if series in ("A", "B", "C"):
        chain((i, i + 1) for i in range(rank - 1))
        if series == "B" and rank >= 2:
            a[rank - 2][rank - 1] = -2  # last root short
        if series == "C":
            a[rank - 1][rank - 2] = -2  # last root long
    elif series == "D":
        chain((i, i + 1) for i in range(rank - 2))
        chain([(rank - 3, rank - 1)])
    elif series == "E":
        chain((i, i + 1) for i in range(2, rank - 1))
        chain([(0, 2), (1, 3)])
    elif series == "F":
        chain([(0, 1), (2, 3)])
        a[1][2] = -2  # alpha_3, alpha_4 short
        a[2][1] = -1
    elif series == "G":
        a[0][1] = -3  # alpha_2 short
        a[1][0] = -1
    else:
        raise InvalidSeries(f"unknown series {series!r}")
    return a


def length_multipliers(series: str, rank: int) -> tuple[int, ...]:
    """eps_i = (long length)^2 / (alpha_i length)^2, per simple root."""
    if series in SIMPLY_LACED:
        return (1,) * rank
    if series == "B":
        return (1,) * (rank - 1) + (2,)
    if series == "C":
        return (2,) * (rank - 1) + (1,)
    if series == "F":
        return (1, 1, 2, 2)
    if series == "G":
        return (1, 3)
    raise InvalidSeries(series)


def _dual_series(series: str, rank: int) -> tuple[str, int]:
    if series == "B":
        return ("C", rank)
    if series == "C":
        return ("B", rank)
    return (series, rank)


@dataclass(frozen=True)
class RootDatum:
    """A compact semisimple group presented through its lattices.

    `integral` is the integral lattice of the chosen maximal torus, sitting
    between the coroot lattice (simply connected case) and the coweight
    lattice (adjoint case); its basis is the "preferred" basis every twist
    matrix downstream refers to: the simple coroots for a simply connected
    group, the fundamental coweights for an adjoint one, and a Hermite basis
    otherwise.
    """

    components: tuple[tuple[str, int], ...]
    cartan: IntMatrix
    integral: Lattice
    label: str
    fundamental_group: str = "simply_connected"

    def __post_init__(self):
        n = self.rank
        if self.cartan.rows != n or self.cartan.cols != n:
            raise InvalidSeries("Cartan matrix size does not match total rank")
        for i in range(n):
            if self.cartan[i, i] != 2:
                raise InvalidSeries("Cartan diagonal must be 2")
            for j in range(n):
                if i != j:
                    cij, cji = self.cartan[i, j], self.cartan[j, i]
                    if cij > 0 or cij * cji not in (0, 1, 2, 3):
                        raise InvalidSeries("not a Cartan matrix of finite type")
        if not contains_columns(self.integral.basis, self.coroot_lattice().basis):
            raise NotBetweenLattices("integral lattice does not contain the coroots")
        if not contains_columns(IntMatrix.identity(n), self.integral.basis):
            raise NotBetweenLattices("integral lattice is not inside the coweights")

    # -- ranks and factors ---------------------------------------------------

    @property
    def rank(self) -> int:
        return sum(r for _, r in self.components)

    def factor_ranges(self) -> list[tuple[int, int, str, int]]:
        """(start, stop, series, rank) for each simple factor."""
        out = []
        start = 0
        for series, r in self.components:
            out.append((start, start + r, series, r))
            start += r
        return out

    def is_simply_laced(self) -> bool:
        return all(s in SIMPLY_LACED for s, _ in self.components)

    def is_simply_connected(self) -> bool:
        return self.integral.same_lattice(self.coroot_lattice())

    # -- lattices --------------------------------------------------------------

    def coweight_lattice(self) -> Lattice:
        return Lattice.standard(self.rank, "coweights")

    def coroot_lattice(self) -> Lattice:
        return Lattice(self.rank, self.cartan, "coroots")

    def weight_lattice(self) -> Lattice:
        return Lattice.standard(self.rank, "weights")

    def root_lattice(self) -> Lattice:
        return Lattice(self.rank, self.cartan.transpose(), "roots")

    def simple_coroots(self) -> LatticeMap:
        return LatticeMap(Lattice.standard(self.rank, "simple coroot index"),
                          self.coweight_lattice(), self.cartan)

    def simple_roots(self) -> LatticeMap:
        return LatticeMap(Lattice.standard(self.rank, "simple root index"),
                          self.weight_lattice(), self.cartan.transpose())

    def char_lattice(self) -> Lattice:
        """Character lattice of the torus, with the basis dual to `integral`.

        Duality normalization: the k-th character basis vector pairs to
        delta_{ik} with the i-th integral-lattice basis vector.  This is
        what ties twist matrices to the degree-2 differential downstream.
        """
        return Lattice(self.rank, _dual_basis_matrix(self.cartan, self.integral.basis),
                       "characters")

    def epsilons(self) -> tuple[int, ...]:
        out: tuple[int, ...] = ()
        for series, r in self.components:
            out += length_multipliers(series, r)
        return out

    # -- Weyl group -------------------------------------------------------------

    def reflection_on_weights(self, i: int) -> IntMatrix:
        """Simple reflection s_i on fundamental-weight coordinates."""
        return _reflection(self.rank, self.cartan.row(i), i)

    def reflection_on_coweights(self, i: int) -> IntMatrix:
        """Simple reflection s_i on fundamental-coweight coordinates."""
        return _reflection(self.rank, self.cartan.column(i), i)

    # -- pairings ----------------------------------------------------------------

    def pairing(self, weight_vec: Sequence[int], coweight_vec: Sequence[int]) -> Fraction:
        """<x, v> for x in weight coordinates and v in coweight coordinates."""
        inv = _cartan_inverse(self.cartan)
        n = self.rank
        total = Fraction(0)
        for i in range(n):
            if weight_vec[i] == 0:
                continue
            row = inv[i]
            total += weight_vec[i] * sum(row[j] * coweight_vec[j] for j in range(n))
        return total


def _reflection(n: int, root_coords: Sequence[int], i: int) -> IntMatrix:
    # s_i(x) = x - x_i * root, i.e. I minus the outer product root * e_i^T.
    rows = []
    for r in range(n):
        row = [1 if r == c else 0 for c in range(n)]
        row[i] -= root_coords[r]
        rows.append(row)
    return IntMatrix(rows, cols=n)


def _rational_inverse(m: IntMatrix) -> list[list[Fraction]]:
    n = m.rows
    a = [[Fraction(m[i, j]) for j in range(n)] + [Fraction(1 if i == k else 0) for k in range(n)]
         for i in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        inv = a[c][c]
        a[c] = [x / inv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


@lru_cache(maxsize=None)
def _cartan_inverse(cartan: IntMatrix) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(row) for row in _rational_inverse(cartan))


def _dual_basis_matrix(cartan: IntMatrix, lattice_basis: IntMatrix) -> IntMatrix:
    """Integer matrix whose columns are the basis of the dual lattice.

    Column k is the character x_k with x_k^T A^{-1} lattice_basis = e_k^T,
    i.e. X = A^T (B^{-1})^T.  Integrality holds exactly when the lattice
    contains the coroots; we verify it entry by entry.
    """
    binv = _rational_inverse(lattice_basis)
    at = cartan.transpose()
    n = cartan.rows
    out = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[i][j] = sum(Fraction(at[i, k]) * binv[j][k] for k in range(n))
    for row in out:
        for x in row:
            if x.denominator != 1:
                raise NotBetweenLattices("dual basis is not integral; lattice misses coroots")
    return IntMatrix([[int(x) for x in row] for row in out], cols=n)


@dataclass(frozen=True)
class InvariantForm:
    """Weyl-invariant symmetric form on the coroot lattice basis."""

    gram: IntMatrix
    level: int

    def value_on_coweights(self, rd: RootDatum, v: Sequence[int], w: Sequence[int]) -> Fraction:
        """Form value for vectors in coweight coordinates."""
        inv = _cartan_inverse(rd.cartan)
        n = rd.cartan.rows
        # coroot coordinates of v are A^{-1} v.
        cv = [sum(inv[i][j] * v[j] for j in range(n)) for i in range(n)]
        cw = [sum(inv[i][j] * w[j] for j in range(n)) for i in range(n)]
        return sum(cv[i] * self.gram[i, j] * cw[j] for i in range(n) for j in range(n))


def basic_form(rd: RootDatum, level: int) -> InvariantForm:
    """level x (minimal invariant form with long-root coroots of norm 2)."""
    if level < 0:
        raise ValueError("level must be nonnegative")
    eps = rd.epsilons()
    n = rd.rank
    gram = IntMatrix([[level * eps[i] * rd.cartan[i, j] for j in range(n)] for i in range(n)], cols=n)
    return InvariantForm(gram=gram, level=level)


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------


def build(series_list: Sequence[tuple[str, int]], fundamental_group="simply_connected",
          label: str | None = None) -> RootDatum:
    """Assemble a root datum from simple factors and a fundamental group.

    `fundamental_group` is "simply_connected" (integral = coroot lattice),
    "adjoint" (integral = coweight lattice), or {"generators": [...]} where
    each generator is a coordinate vector over the cyclic factors of the
    product center (one coordinate per cyclic factor, factor by factor).
    """
    comps = []
    for series, rank in series_list:
        series = str(series).upper()
        _check_series(series, int(rank))
        comps.append((series, int(rank)))
    if not comps:
        raise InvalidSeries("a semisimple group needs at least one simple factor")
    components = tuple(comps)
    cartan = block_diag([IntMatrix(cartan_block(s, r)) for s, r in components])
    n = cartan.rows

    if fundamental_group == "simply_connected":
        basis = cartan
        fg = "simply_connected"
    elif fundamental_group == "adjoint":
        basis = IntMatrix.identity(n)
        fg = "adjoint"
    elif isinstance(fundamental_group, dict) and "generators" in fundamental_group:
        gens = _center_subgroup_lifts(components, cartan, fundamental_group["generators"])
        basis = column_hermite_form(hstack(cartan, gens))
        fg = "custom"
    else:
        raise InvalidCenterSubgroup(f"unrecognized fundamental group spec {fundamental_group!r}")

    name = label if label is not None else _generic_label(components, fg)
    return RootDatum(components=components, cartan=cartan,
                     integral=Lattice(n, basis, "integral lattice"),
                     label=name, fundamental_group=fg)


def _generic_label(components, fg) -> str:
    body = " x ".join(f"{s}{r}" for s, r in components)
    suffix = {"simply_connected": "", "adjoint": " (adjoint)", "custom": " (quotient)"}[fg]
    return body + suffix


def center_product_generators(components, cartan) -> list[tuple[int, tuple[int, ...]]]:
    """Cyclic generators of the product center, with coweight-coordinate lifts.

    Returns [(order, lift)] ordered factor by factor; D_even contributes two
    entries, every other simple factor at most one.
    """
    out = []
    start = 0
    for series, r in components:
        block = IntMatrix(cartan_block(series, r))
        zf = subquotient(Lattice(r, block, "coroots"), Lattice.standard(r))
        for order, lift in zip(zf.torsion, zf.torsion_generators()):
            full = [0] * cartan.rows
            for i, x in enumerate(lift):
                full[start + i] = x
            out.append((order, tuple(full)))
        start += r
    return out


def _center_subgroup_lifts(components, cartan, generators) -> IntMatrix:
    cyclic = center_product_generators(components, cartan)
    cols = []
    for gen in generators:
        if len(gen) != len(cyclic):
            raise InvalidCenterSubgroup(
                f"generator {gen!r} needs {len(cyclic)} coordinates "
                f"(one per cyclic factor of the center)")
        try:
            coeffs = [int(x) for x in gen]
        except (TypeError, ValueError) as exc:
            raise InvalidCenterSubgroup(f"non-integer generator entry in {gen!r}") from exc
        col = [0] * cartan.rows
        for a, (_, lift) in zip(coeffs, cyclic):
            for i in range(cartan.rows):
                col[i] += a * lift[i]
        cols.append(tuple(col))
    return IntMatrix.from_columns(cols, rows=cartan.rows)


_NAMED_SIMPLE = {"G2": ("G", 2), "F4": ("F", 4), "E6": ("E", 6), "E7": ("E", 7), "E8": ("E", 8)}


def named_group(name: str) -> RootDatum:
    """Resolve SU(n), PSU(n), Spin(n), SO(3), Sp(n), G2, ..., or bare 'B3'."""
    text = name.strip()
    if text in _NAMED_SIMPLE:
        return build([_NAMED_SIMPLE[text]], "simply_connected", label=text)
    if len(text) >= 2 and text[0] in "ABCDEFG" and text[1:].isdigit():
        return build([(text[0], int(text[1:]))], "simply_connected", label=text)
    for prefix, maker in _NAMED_MAKERS.items():
        if text.startswith(prefix + "(") and text.endswith(")"):
            try:
                n = int(text[len(prefix) + 1:-1])
            except ValueError as exc:
                raise InvalidSeries(f"cannot parse group name {name!r}") from exc
            return maker(n, text)
    raise InvalidSeries(f"unknown group name {name!r}")


def _make_su(n, label):
    if n < 2:
        raise InvalidSeries("SU(n) needs n >= 2")
    return build([("A", n - 1)], "simply_connected", label=label)


def _make_psu(n, label):
    if n < 2:
        raise InvalidSeries("PSU(n) needs n >= 2")
    return build([("A", n - 1)], "adjoint", label=label)


def _make_spin(n, label):
    if n >= 5 and n % 2 == 1:
        return build([("B", (n - 1) // 2)], "simply_connected", label=label)
    if n >= 8 and n % 2 == 0:
        return build([("D", n // 2)], "simply_connected", label=label)
    raise InvalidSeries(f"Spin({n}) is outside the supported BD range (odd >=5, even >=8)")


def _make_so(n, label):
    if n != 3:
        raise InvalidSeries("only SO(3) is provided as a named quotient")
    return build([("A", 1)], "adjoint", label=label)


def _make_sp(n, label):
    if n < 3:
        raise InvalidSeries("Sp(n) needs n >= 3 here; use SU(2) or Spin(5) instead")
    return build([("C", n)], "simply_connected", label=label)


_NAMED_MAKERS = {"SU": _make_su, "PSU": _make_psu, "Spin": _make_spin, "SO": _make_so, "Sp": _make_sp}


# ---------------------------------------------------------------------------
# Roots, center, duals
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def all_roots(rd: RootDatum) -> tuple[tuple[int, ...], ...]:
    """Every root, as weight-coordinate vectors, sorted."""
    return _orbit_closure(rd, on_weights=True)


@lru_cache(maxsize=None)
def all_coroots(rd: RootDatum) -> tuple[tuple[int, ...], ...]:
    """Every coroot, as coweight-coordinate vectors, sorted."""
    return _orbit_closure(rd, on_weights=False)


def _orbit_closure(rd: RootDatum, on_weights: bool) -> tuple[tuple[int, ...], ...]:
    n = rd.rank
    if on_weights:
        seeds = [rd.cartan.row(i) for i in range(n)]
        refl = [rd.reflection_on_weights(i) for i in range(n)]
    else:
        seeds = [rd.cartan.column(i) for i in range(n)]
        refl = [rd.reflection_on_coweights(i) for i in range(n)]
    seen = set(seeds)
    frontier = list(seeds)
    while frontier:
        nxt = []
        for v in frontier:
            for s in refl:
                w = s.apply(v)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return tuple(sorted(seen))


def long_short_split(rd: RootDatum) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    """(long roots, short roots); for simply laced factors all roots are long."""
    n = rd.rank
    eps = rd.epsilons()
    refl = [rd.reflection_on_weights(i) for i in range(n)]

    def orbit(seed_indices):
        seen = set(rd.cartan.row(i) for i in seed_indices)
        frontier = list(seen)
        while frontier:
            nxt = []
            for v in frontier:
                for s in refl:
                    w = s.apply(v)
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        return seen

    long_idx = [i for i in range(n) if eps[i] == 1]
    short_idx = [i for i in range(n) if eps[i] > 1]
    return tuple(sorted(orbit(long_idx))), tuple(sorted(orbit(short_idx))) if short_idx else ()


@lru_cache(maxsize=None)
def center(rd: RootDatum) -> FgAbGroup:
    """The center of the simply connected form, as coweights mod coroots."""
    return subquotient(rd.coroot_lattice(), rd.coweight_lattice())


@lru_cache(maxsize=None)
def fundamental_group_of(rd: RootDatum) -> FgAbGroup:
    """pi_1 of the group: integral lattice mod coroot lattice."""
    return subquotient(rd.coroot_lattice(), rd.integral)


def dual_lattice(lat: Lattice, rd: RootDatum) -> Lattice:
    """{x in weights : <x, lat> in Z}, canonical basis, for Q^vee <= lat <= P^vee."""
    if not contains_columns(lat.basis, rd.coroot_lattice().basis):
        raise NotBetweenLattices("lattice does not contain the coroot lattice")
    if not contains_columns(IntMatrix.identity(rd.rank), lat.basis):
        raise NotBetweenLattices("lattice is not contained in the coweight lattice")
    raw = _dual_basis_matrix(rd.cartan, lat.basis)
    return Lattice(rd.rank, column_hermite_form(raw), label=f"dual({lat.label})")


_DUAL_LABELS = {"SU": "PSU", "PSU": "SU"}


def _dual_label(rd: RootDatum) -> str:
    text = rd.label
    if text == "SU(2)":
        return "SO(3)"
    if text == "SO(3)":
        return "SU(2)"
    for src, dst in _DUAL_LABELS.items():
        if text.startswith(src + "("):
            return dst + text[len(src):]
    if text in ("G2", "F4", "E8"):
        return text
    return f"dual({text})"


@lru_cache(maxsize=None)
def langlands_dual(rd: RootDatum) -> RootDatum:
    """Swap roots with coroots and characters with cocharacters.

    In coordinates: the dual Cartan matrix is the transpose, the dual
    coweight coordinates are the original weight coordinates, and the dual
    integral lattice is the character lattice of the original torus.
    """
    comps = tuple(_dual_series(s, r) for s, r in rd.components)
    fg = {"simply_connected": "adjoint", "adjoint": "simply_connected"}.get(
        rd.fundamental_group, "custom")
    return RootDatum(
        components=comps,
        cartan=rd.cartan.transpose(),
        integral=Lattice(rd.rank, rd.char_lattice().basis, "integral lattice"),
        label=_dual_label(rd),
        fundamental_group=fg,
    )


@dataclass(frozen=True)
class DynkinIso:
    """Diagram isomorphism onto the dual group's diagram.

    `permutation` sends source simple-root indices to dual-side indices;
    `matrix` is the induced pullback from the dual group's weight
    coordinates to the source weight coordinates ((M x)_i = x_{perm(i)}).
    """

    permutation: tuple[int, ...]
    matrix: IntMatrix


def _block_isos(a_src, a_dst) -> Iterator[tuple[int, ...]]:
    """Permutations p with a_dst[p(i)][p(j)] == a_src[i][j], lazily."""
    r = len(a_src)

    def extend(partial):
        k = len(partial)
        if k == r:
            yield tuple(partial)
            return
        for cand in range(r):
            if cand in partial:
                continue
            if a_dst[cand][cand] != a_src[k][k]:
                continue
            ok = True
            for a_idx in range(k):
                pa = partial[a_idx]
                if a_dst[pa][cand] != a_src[a_idx][k] or a_dst[cand][pa] != a_src[k][a_idx]:
                    ok = False
                    break
            if ok:
                yield from extend(partial + [cand])

    yield from extend([])


@lru_cache(maxsize=None)
def find_phi(rd: RootDatum) -> DynkinIso | None:
    """Search for a Dynkin isomorphism from rd onto its Langlands dual.

    Works factor by factor (a diagram isomorphism cannot merge factors) but
    allows factors to permute.  Returns None when no isomorphism exists,
    which happens exactly when some B/C factor of rank >= 3 is unpaired.
    """
    dual = langlands_dual(rd)
    a, al = rd.cartan, dual.cartan
    src_blocks = rd.factor_ranges()
    dst_blocks = dual.factor_ranges()

    def block_of(mat, lo, hi):
        return [[mat[i, j] for j in range(lo, hi)] for i in range(lo, hi)]

    perm: list[int | None] = [None] * rd.rank

    def assign(k, used):
        if k == len(src_blocks):
            return True
        lo, hi, _, r = src_blocks[k]
        src = block_of(a, lo, hi)
        for gi, (glo, ghi, _, gr) in enumerate(dst_blocks):
            if gi in used or gr != r:
                continue
            dst = block_of(al, glo, ghi)
            for p in _block_isos(src, dst):
                for i, pi in enumerate(p):
                    perm[lo + i] = glo + pi
                if assign(k + 1, used | {gi}):
                    return True
            for i in range(lo, hi):
                perm[i] = None
        return False

    if not assign(0, frozenset()):
        return None
    final = tuple(int(p) for p in perm)  # type: ignore[arg-type]
    n = rd.rank
    mat = IntMatrix([[1 if final[i] == j else 0 for j in range(n)] for i in range(n)], cols=n)
    return DynkinIso(permutation=final, matrix=mat)


def require_phi(rd: RootDatum) -> DynkinIso:
    """find_phi, raising Unavailable with the obstruction spelled out."""
    iso = find_phi(rd)
    if iso is None:
        bad = [f"{s}{r}" for s, r in rd.components
               if _dual_series(s, r) != (s, r) and not (s in ("B", "C") and r == 2)]
        raise Unavailable(
            f"{rd.label}: no Dynkin isomorphism onto the Langlands dual "
            f"(obstructing factors: {', '.join(bad) or 'none found by factor scan'})",
            evidence={"components": rd.components, "dual": langlands_dual(rd).components},
        )
    return iso


def weyl_elements_on_coweights(rd: RootDatum, indices: Sequence[int] | None = None) -> Iterator[IntMatrix]:
    """Weyl elements as coweight-coordinate matrices, in BFS word order.

    The identity comes first, so consumers that scan for the first element
    with some property pay nothing in the common case.  `indices` restricts
    to the parabolic subgroup generated by those simple reflections.
    """
    gens = [rd.reflection_on_coweights(i) for i in (indices if indices is not None else range(rd.rank))]
    ident = IntMatrix.identity(rd.rank)
    seen = {ident}
    frontier = [ident]
    yield ident
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                u = g @ w
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
                    yield u
        frontier = nxt
