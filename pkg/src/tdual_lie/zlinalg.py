"""Exact integer linear algebra over Z.

Everything here is plain Python integers, so intermediate entries may grow
without bound (Smith normal form blows up fixed-width arithmetic quickly).
The module provides:

  * IntMatrix       -- immutable arbitrary-precision integer matrices,
  * smith_normal_form / column_hermite_form -- normal forms with transforms,
  * Lattice / LatticeMap -- free Z-modules with chosen bases and maps,
  * image_basis / kernel_basis / subquotient -- the pieces every cohomology
    group in the package is assembled from,
  * tensor_map / wedge2_map / sym2_map -- functorial powers with fixed
    lexicographic bases (i<j for wedge, i<=j for sym).

Canonical forms: sublattices are compared through the column-style Hermite
form (unique), and subquotients report invariant factors d1 | d2 | ... with
generator lifts reduced to a fixed representative modulo the inner lattice.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotCompatible, NotSublattice


class IntMatrix:
    """Immutable integer matrix, row-major, arbitrary precision."""

    __slots__ = ("_rows", "_shape")

    def __init__(self, rows: Iterable[Iterable[int]], cols: int | None = None):
        data = tuple(tuple(int(x) for x in row) for row in rows)
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise DimensionMismatch("ragged rows in matrix")
        else:
            width = 0 if cols is None else cols
        self._rows = data
        self._shape = (len(data), width)

    # -- construction -----------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), cols=n)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(tuple((0,) * cols for _ in range(rows)), cols=cols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int | None = None) -> "IntMatrix":
        cols = [tuple(int(x) for x in c) for c in columns]
        if cols:
            rows = len(cols[0])
        elif rows is None:
            rows = 0
        return cls(tuple(tuple(c[i] for c in cols) for i in range(rows)), cols=len(cols))

    @classmethod
    def diagonal(cls, entries: Sequence[int]) -> "IntMatrix":
        n = len(entries)
        return cls(tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)), cols=n)

    # -- shape and access --------------------------------------------------

    @property
    def rows(self) -> int:
        return self._shape[0]

    @property
    def cols(self) -> int:
        return self._shape[1]

    @property
    def entries(self) -> tuple[int, ...]:
        """Row-major flattening."""
        return tuple(x for row in self._rows for x in row)

    def row(self, i: int) -> tuple[int, ...]:
        return self._rows[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self._rows)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._rows]

    def __getitem__(self, key) -> int:
        i, j = key
        return self._rows[i][j]

    def __iter__(self):
        return iter(self._rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self._shape == other._shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._shape, self._rows))

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()!r})"

    # -- arithmetic ---------------------------------------------------------

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self._shape} by {other._shape}")
        bt = other.columns()
        return IntMatrix(
            tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in bt) for row in self._rows),
            cols=other.cols,
        )

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self._shape != other._shape:
            raise DimensionMismatch("shape mismatch in addition")
        return IntMatrix(
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self._rows, other._rows)),
            cols=self.cols,
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def __neg__(self) -> "IntMatrix":
        return self.scale(-1)

    def scale(self, k: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(k * x for x in r) for r in self._rows), cols=self.cols)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(self.columns()), cols=self.rows)

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        if len(vec) != self.cols:
            raise DimensionMismatch("vector length does not match column count")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self._rows)

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise DimensionMismatch("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = [list(r) for r in self._rows]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def rank(self) -> int:
        return sum(1 for d in smith_normal_form(self)[1].entries if d != 0)


def hstack(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.rows != b.rows:
        raise DimensionMismatch("row mismatch in hstack")
    return IntMatrix(tuple(ra + rb for ra, rb in zip(a, b)), cols=a.cols + b.cols)


def vstack(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.cols != b.cols:
        raise DimensionMismatch("column mismatch in vstack")
    return IntMatrix(tuple(a) + tuple(b), cols=a.cols)


def block_diag(blocks: Sequence[IntMatrix]) -> IntMatrix:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = [[0] * cols for _ in range(rows)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                out[r0 + i][c0 + j] = b[i, j]
        r0 += b.rows
        c0 += b.cols
    return IntMatrix(out, cols=cols)


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------


def _snf_with_inverses(m: IntMatrix):
    """Return (U, D, V, Uinv, Vinv) with U*m*V = D in Smith normal form."""
    R, C = m.rows, m.cols
    a = [list(r) for r in m]
    u = [[1 if i == j else 0 for j in range(R)] for i in range(R)]
    ui = [[1 if i == j else 0 for j in range(R)] for i in range(R)]
    v = [[1 if i == j else 0 for j in range(C)] for i in range(C)]
    vi = [[1 if i == j else 0 for j in range(C)] for i in range(C)]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]
        for r in ui:
            r[i], r[j] = r[j], r[i]

    def row_addmul(i, j, q):
        # row_i += q * row_j; the inverse transform is col_j -= q * col_i.
        ai, aj = a[i], a[j]
        for k in range(C):
            ai[k] += q * aj[k]
        uii, uj = u[i], u[j]
        for k in range(R):
            uii[k] += q * uj[k]
        for r in ui:
            r[j] -= q * r[i]

    def row_negate(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]
        for r in ui:
            r[i] = -r[i]

    def col_swap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]
        vi[i], vi[j] = vi[j], vi[i]

    def col_addmul(i, j, q):
        # col_i += q * col_j; the inverse transform is row_j -= q * row_i.
        for r in a:
            r[i] += q * r[j]
        for r in v:
            r[i] += q * r[j]
        vij, vii = vi[j], vi[i]
        for k in range(C):
            vij[k] -= q * vii[k]

    t = 0
    while t < min(R, C):
        # Locate a pivot of least absolute value in the trailing block.
        piv = None
        best = None
        for i in range(t, R):
            for j in range(t, C):
                x = a[i][j]
                if x != 0 and (best is None or abs(x) < best):
                    best = abs(x)
                    piv = (i, j)
        if piv is None:
            break
        if piv[0] != t:
            row_swap(t, piv[0])
        if piv[1] != t:
            col_swap(t, piv[1])

        while True:
            # Clear column t, restarting whenever a smaller pivot appears.
            dirty = False
            for i in range(R):
                if i == t or a[i][t] == 0:
                    continue
                q = a[i][t] // a[t][t]
                row_addmul(i, t, -q)
                if a[i][t] != 0:
                    row_swap(t, i)
                    dirty = True
            if dirty:
                continue
            for j in range(C):
                if j == t or a[t][j] == 0:
                    continue
                q = a[t][j] // a[t][t]
                col_addmul(j, t, -q)
                if a[t][j] != 0:
                    col_swap(t, j)
                    dirty = True
            if dirty:
                continue
            # Enforce d_t | (everything that remains).
            fix = None
            for i in range(t + 1, R):
                for j in range(t + 1, C):
                    if a[i][j] % a[t][t] != 0:
                        fix = i
                        break
                if fix is not None:
                    break
            if fix is None:
                break
            row_addmul(t, fix, 1)
        if a[t][t] < 0:
            row_negate(t)
        t += 1

    return (
        IntMatrix(u, cols=R),
        IntMatrix(a, cols=C),
        IntMatrix(v, cols=C),
        IntMatrix(ui, cols=R),
        IntMatrix(vi, cols=C),
    )


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form: U*m*V = D, U and V unimodular, D diagonal with
    positive entries satisfying d1 | d2 | ...."""
    u, d, v, _, _ = _snf_with_inverses(m)
    return u, d, v


def column_hermite_form(m: IntMatrix) -> IntMatrix:
    """Canonical column form of the lattice spanned by the columns of m.

    Zero columns are dropped, so the result's columns are a basis.  The form
    is the transpose of the (unique) row Hermite normal form of m^T: pivots
    positive, one pivot per echelon row, and entries left of a pivot reduced
    into [0, pivot).  Equal column spans give equal output, which is what
    makes lattice equality plain data equality.
    """
    # Work on the transpose with row operations.
    h = [list(col) for col in m.columns()]
    nrows = len(h)
    ncols = m.rows
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        # Shrink column c below row r to a single nonzero entry by gcd steps.
        while True:
            live = [i for i in range(r, nrows) if h[i][c] != 0]
            if not live:
                break
            i0 = min(live, key=lambda i: (abs(h[i][c]), i))
            if i0 != r:
                h[r], h[i0] = h[i0], h[r]
            done = True
            for i in range(r + 1, nrows):
                if h[i][c] == 0:
                    continue
                q = h[i][c] // h[r][c]
                h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                if h[i][c] != 0:
                    done = False
            if done:
                break
        if h[r][c] == 0:
            continue
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
        for i in range(r):
            q = h[i][c] // h[r][c]
            if q != 0:
                h[i] = [x - q * y for x, y in zip(h[i], h[r])]
        r += 1
    basis_rows = h[:r]
    return IntMatrix.from_columns([tuple(row) for row in basis_rows], rows=m.rows)


def solve_columns(basis: IntMatrix, targets: IntMatrix) -> IntMatrix | None:
    """Solve basis @ X = targets over the integers, or return None.

    Used for sublattice membership: the columns of `targets` lie in the
    Z-span of the columns of `basis` exactly when a solution exists.
    """
    if basis.rows != targets.rows:
        raise DimensionMismatch("ambient dimensions differ")
    u, d, v, _, _ = _snf_with_inverses(basis)
    # basis = Uinv D Vinv, so basis x = y  <=>  D z = U y with z = Vinv x.
    rhs = u @ targets
    n = basis.cols
    diag_len = min(basis.rows, n)
    sol = [[0] * targets.cols for _ in range(n)]
    for j in range(targets.cols):
        for i in range(rhs.rows):
            val = rhs[i, j]
            di = d[i, i] if i < diag_len else 0
            if di == 0:
                if val != 0:
                    return None
            elif val % di != 0:
                return None
            else:
                sol[i][j] = val // di
    z = IntMatrix(sol, cols=targets.cols)
    return v @ z


def contains_columns(basis: IntMatrix, targets: IntMatrix) -> bool:
    return solve_columns(basis, targets) is not None


# ---------------------------------------------------------------------------
# Lattices and maps
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Lattice:
    """Free Z-module with a chosen basis inside Z^ambient_dim.

    The basis matrix has the basis vectors as columns; they must be linearly
    independent over Q.
    """

    ambient_dim: int
    basis: IntMatrix
    label: str = ""

    def __post_init__(self):
        if self.basis.rows != self.ambient_dim:
            raise DimensionMismatch("basis rows must equal ambient dimension")
        if self.basis.cols and self.basis.rank() != self.basis.cols:
            raise DimensionMismatch(f"basis columns of {self.label or 'lattice'} are dependent")

    @property
    def rank(self) -> int:
        return self.basis.cols

    @classmethod
    def standard(cls, n: int, label: str = "") -> "Lattice":
        return cls(n, IntMatrix.identity(n), label)

    @classmethod
    def zero(cls, ambient_dim: int, label: str = "") -> "Lattice":
        return cls(ambient_dim, IntMatrix.zero(ambient_dim, 0), label)

    def canonical(self) -> "Lattice":
        """Same lattice with the canonical Hermite-form basis."""
        return Lattice(self.ambient_dim, column_hermite_form(self.basis), self.label)

    def same_lattice(self, other: "Lattice") -> bool:
        return (
            self.ambient_dim == other.ambient_dim
            and column_hermite_form(self.basis) == column_hermite_form(other.basis)
        )

    def contains(self, vec: Sequence[int]) -> bool:
        target = IntMatrix.from_columns([tuple(vec)], rows=self.ambient_dim)
        return contains_columns(self.basis, target)

    def contains_lattice(self, other: "Lattice") -> bool:
        if self.ambient_dim != other.ambient_dim:
            return False
        return contains_columns(self.basis, other.basis)

    def coords(self, vec: Sequence[int]) -> tuple[int, ...] | None:
        """Basis coordinates of an ambient vector, or None if outside."""
        sol = solve_columns(self.basis, IntMatrix.from_columns([tuple(vec)], rows=self.ambient_dim))
        if sol is None:
            return None
        return sol.column(0)

    def reduce_mod(self, vec: Sequence[int]) -> tuple[int, ...]:
        """Canonical representative of vec modulo this lattice.

        Reduction against the Hermite basis from the top pivot down; the
        result is the unique representative with coordinates in [0, pivot)
        at every pivot position.
        """
        h = column_hermite_form(self.basis)
        out = list(int(x) for x in vec)
        pivots = []
        for j in range(h.cols):
            col = h.column(j)
            i = next(i for i, x in enumerate(col) if x != 0)
            pivots.append((i, j))
        for i, j in sorted(pivots):
            p = h[i, j]
            q = out[i] // p
            if q != 0:
                for k in range(self.ambient_dim):
                    out[k] -= q * h[k, j]
        return tuple(out)


@dataclass(frozen=True)
class LatticeMap:
    """Z-linear map recorded in the chosen bases of domain and codomain."""

    domain: Lattice
    codomain: Lattice
    matrix: IntMatrix

    def __post_init__(self):
        if self.matrix.rows != self.codomain.rank or self.matrix.cols != self.domain.rank:
            raise DimensionMismatch("matrix shape does not match lattice ranks")

    @classmethod
    def identity_on(cls, lat: Lattice) -> "LatticeMap":
        return cls(lat, lat, IntMatrix.identity(lat.rank))

    def compose(self, inner: "LatticeMap") -> "LatticeMap":
        """self after inner."""
        if inner.codomain.basis != self.domain.basis:
            raise DimensionMismatch("composition bases do not match")
        return LatticeMap(inner.domain, self.codomain, self.matrix @ inner.matrix)

    def ambient_matrix(self) -> IntMatrix:
        """Matrix sending domain-basis coordinates to ambient codomain vectors."""
        return self.codomain.basis @ self.matrix


def image_basis(m: LatticeMap) -> Lattice:
    """Canonical basis of the image sublattice m(domain) of the codomain."""
    return Lattice(
        m.codomain.ambient_dim,
        column_hermite_form(m.ambient_matrix()),
        label=f"im({m.domain.label or '?'})",
    )


def kernel_basis(m: LatticeMap) -> Lattice:
    """Canonical basis of ker(m) as a (saturated) sublattice of the domain."""
    _, d, v, _, _ = _snf_with_inverses(m.matrix)
    rank = sum(1 for i in range(min(d.rows, d.cols)) if d[i, i] != 0)
    cols = [v.column(j) for j in range(rank, m.matrix.cols)]
    coords = IntMatrix.from_columns(cols, rows=m.matrix.cols)
    ambient = m.domain.basis @ coords
    return Lattice(m.domain.ambient_dim, column_hermite_form(ambient), label="ker")


def kernel_of_matrix(m: IntMatrix) -> IntMatrix:
    """Columns spanning {x : m x = 0}; saturated, in canonical form."""
    _, d, v, _, _ = _snf_with_inverses(m)
    rank = sum(1 for i in range(min(d.rows, d.cols)) if d[i, i] != 0)
    cols = [v.column(j) for j in range(rank, m.cols)]
    return column_hermite_form(IntMatrix.from_columns(cols, rows=m.cols))


@dataclass(frozen=True)
class FgAbGroup:
    """Finitely generated abelian group presented as outer/inner lattices.

    Stored as invariant factors d1 | d2 | ... (each >= 2) plus a free rank,
    with generator lifts in the common ambient space: free generators first,
    then torsion generators aligned with the factor list.  The presentation
    data needed to take coordinates of further elements is kept on the
    object (fields prefixed with an underscore).
    """

    free_rank: int
    torsion: tuple[int, ...]
    generator_lifts: IntMatrix
    _outer: Lattice = field(repr=False)
    _inner: Lattice = field(repr=False)
    _row_transform: IntMatrix = field(repr=False)
    _diag: tuple[int, ...] = field(repr=False)

    @property
    def invariant_factors(self) -> list[int]:
        """Invariant factor list, torsion then 0s for the free part."""
        return list(self.torsion) + [0] * self.free_rank

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def is_free(self) -> bool:
        return not self.torsion

    def order(self) -> int:
        """Group order (0 for infinite)."""
        if self.free_rank:
            return 0
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def same_type(self, other: "FgAbGroup") -> bool:
        return self.free_rank == other.free_rank and self.torsion == other.torsion

    def free_generators(self) -> list[tuple[int, ...]]:
        return [self.generator_lifts.column(j) for j in range(self.free_rank)]

    def torsion_generators(self) -> list[tuple[int, ...]]:
        return [self.generator_lifts.column(self.free_rank + j) for j in range(len(self.torsion))]

    def coords(self, vec: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(free, torsion) coordinates of an ambient vector's class.

        Torsion coordinates are reduced into [0, d).  Raises NotCompatible
        if the vector is not in the outer lattice.
        """
        c = self._outer.coords(vec)
        if c is None:
            raise NotCompatible("element lies outside the outer lattice")
        cc = self._row_transform.apply(c)
        rank = sum(1 for d in self._diag if d != 0)
        free = tuple(cc[i] for i in range(rank, self._outer.rank))
        tors = tuple(
            cc[i] % self._diag[i] for i in range(rank) if self._diag[i] >= 2
        )
        return free, tors

    def describe(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def subquotient(inner: Lattice, outer: Lattice) -> FgAbGroup:
    """Invariant-factor decomposition of outer/inner with generator lifts.

    Raises NotSublattice unless inner is contained in outer.
    """
    if inner.ambient_dim != outer.ambient_dim:
        raise NotSublattice("ambient dimensions differ")
    rel = solve_columns(outer.basis, inner.basis)
    if rel is None:
        raise NotSublattice("inner lattice is not contained in the outer one")
    u, d, _, ui, _ = _snf_with_inverses(rel)
    n_out = outer.rank
    diag = tuple(d[i, i] if i < min(d.rows, d.cols) else 0 for i in range(n_out))
    rank = sum(1 for x in diag if x != 0)
    gens_outer = outer.basis @ ui  # columns: generators in ambient coordinates
    free_cols = [gens_outer.column(j) for j in range(rank, n_out)]
    tors_cols = [gens_outer.column(j) for j in range(rank) if diag[j] >= 2]
    torsion = tuple(x for x in diag[:rank] if x >= 2)
    if inner.rank:
        free_cols = [inner.reduce_mod(c) for c in free_cols]
        tors_cols = [inner.reduce_mod(c) for c in tors_cols]
    lifts = IntMatrix.from_columns(free_cols + tors_cols, rows=outer.ambient_dim)
    return FgAbGroup(
        free_rank=n_out - rank,
        torsion=torsion,
        generator_lifts=lifts,
        _outer=outer,
        _inner=inner,
        _row_transform=u,
        _diag=diag,
    )


def induced_map_on_subquotient(f: IntMatrix, src: FgAbGroup, dst: FgAbGroup) -> IntMatrix:
    """Matrix of the homomorphism induced by the ambient map f.

    Columns give the dst-coordinates (free then torsion) of the images of the
    src generators (free then torsion).  Raises NotCompatible if f fails to
    map outer to outer or inner to inner.
    """
    if not contains_columns(dst._outer.basis, f @ src._outer.basis):
        raise NotCompatible("map does not send outer lattice into outer lattice")
    if src._inner.rank and not contains_columns(
        dst._inner.basis if dst._inner.rank else IntMatrix.zero(dst._inner.ambient_dim, 0),
        f @ src._inner.basis,
    ):
        raise NotCompatible("map does not send inner lattice into inner lattice")
    cols = []
    for j in range(src.generator_lifts.cols):
        img = f.apply(src.generator_lifts.column(j))
        free, tors = dst.coords(img)
        cols.append(tuple(free) + tuple(tors))
    return IntMatrix.from_columns(cols, rows=dst.free_rank + len(dst.torsion))


# ---------------------------------------------------------------------------
# Functorial powers (lexicographic bases)
# ---------------------------------------------------------------------------


def pair_basis(n: int, strict: bool) -> list[tuple[int, int]]:
    """Index pairs (i, j) with i<j (strict) or i<=j, in lexicographic order."""
    if strict:
        return [(i, j) for i in range(n) for j in range(i + 1, n)]
    return [(i, j) for i in range(n) for j in range(i, n)]


def tensor_map(f: LatticeMap, g: LatticeMap) -> LatticeMap:
    """Kronecker product on the standard tensor bases e_i (x) h_j."""
    fm, gm = f.matrix, g.matrix
    rows = fm.rows * gm.rows
    cols = fm.cols * gm.cols
    out = [[0] * cols for _ in range(rows)]
    for a in range(fm.rows):
        for i in range(fm.cols):
            fa = fm[a, i]
            if fa == 0:
                continue
            for b in range(gm.rows):
                for j in range(gm.cols):
                    out[a * gm.rows + b][i * gm.cols + j] = fa * gm[b, j]
    dom = Lattice.standard(cols, label=f"({f.domain.label})x({g.domain.label})")
    cod = Lattice.standard(rows, label=f"({f.codomain.label})x({g.codomain.label})")
    return LatticeMap(dom, cod, IntMatrix(out, cols=cols))


def wedge2_map(f: LatticeMap) -> LatticeMap:
    """Second exterior power on the basis e_i ^ e_j, i<j."""
    fm = f.matrix
    dom_idx = pair_basis(fm.cols, strict=True)
    cod_idx = pair_basis(fm.rows, strict=True)
    out = [[0] * len(dom_idx) for _ in range(len(cod_idx))]
    for cj, (i, j) in enumerate(dom_idx):
        for ri, (a, b) in enumerate(cod_idx):
            out[ri][cj] = fm[a, i] * fm[b, j] - fm[b, i] * fm[a, j]
    dom = Lattice.standard(len(dom_idx), label=f"wedge2({f.domain.label})")
    cod = Lattice.standard(len(cod_idx), label=f"wedge2({f.codomain.label})")
    return LatticeMap(dom, cod, IntMatrix(out, cols=len(dom_idx)))


def sym2_map(f: LatticeMap) -> LatticeMap:
    """Second symmetric power on the monomial basis e_i e_j, i<=j.

    Images multiply out as polynomials: the monomial coefficient of
    x_a x_b (a<b) in f(e_i) f(e_j) is F[a,i]F[b,j] + F[b,i]F[a,j], and of
    x_a^2 it is F[a,i]F[a,j].
    """
    fm = f.matrix
    dom_idx = pair_basis(fm.cols, strict=False)
    cod_idx = pair_basis(fm.rows, strict=False)
    out = [[0] * len(dom_idx) for _ in range(len(cod_idx))]
    for cj, (i, j) in enumerate(dom_idx):
        for ri, (a, b) in enumerate(cod_idx):
            if a == b:
                out[ri][cj] = fm[a, i] * fm[a, j]
            else:
                out[ri][cj] = fm[a, i] * fm[b, j] + fm[b, i] * fm[a, j]
    dom = Lattice.standard(len(dom_idx), label=f"sym2({f.domain.label})")
    cod = Lattice.standard(len(cod_idx), label=f"sym2({f.codomain.label})")
    return LatticeMap(dom, cod, IntMatrix(out, cols=len(dom_idx)))
