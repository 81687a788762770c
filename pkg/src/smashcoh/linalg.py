"""Exact linear algebra over the rationals.

Everything downstream (cocycle spaces, coboundaries, quotient bases, class
membership) reduces to the handful of primitives here.  All results are
canonical: pivoting is leftmost-column/topmost-row, echelon forms are fully
reduced, so identical inputs give bit-identical outputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rationals import ONE, ZERO, Rat


class NotInSpanError(ValueError):
    """Raised when a vector admits no exact expression in a given span."""


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple  # row-major, length rows*cols

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        flat = []
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
            flat.extend(Rat(x) for x in r)
        return cls(len(rows), cols, tuple(flat))

    def row_list(self):
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]


@dataclass(frozen=True)
class Subspace:
    """A subspace given by a reduced-row-echelon basis with increasing pivots."""

    ambient_dim: int
    basis: tuple  # tuple of coefficient tuples
    pivots: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    @classmethod
    def from_vectors(cls, vectors, ambient_dim):
        rows, pivots = rref_rows([list(v) for v in vectors], ambient_dim)
        return cls(ambient_dim, tuple(tuple(r) for r in rows), tuple(pivots))


def rref_rows(rows, ncols):
    """In-place Gauss-Jordan on a list of row lists.

    Returns (nonzero echelon rows, pivot columns).  Rows are normalized to a
    leading 1 and cleared above and below the pivot.
    """
    rows = [r for r in rows if any(r)]
    pivots = []
    top = 0
    for col in range(ncols):
        piv = None
        for i in range(top, len(rows)):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[top], rows[piv] = rows[piv], rows[top]
        prow = rows[top]
        lead = prow[col]
        if lead != ONE:
            inv = ONE / lead
            for c in range(col, ncols):
                if prow[c]:
                    prow[c] = prow[c] * inv
        for i in range(len(rows)):
            if i == top:
                continue
            f = rows[i][col]
            if f:
                r = rows[i]
                for c in range(col, ncols):
                    if prow[c]:
                        r[c] = r[c] - f * prow[c]
        pivots.append(col)
        top += 1
        if top == len(rows):
            break
    return rows[:top], pivots


def rref_rows_with_transform(rows, ncols):
    """Like rref_rows, but also returns T with T . input == echelon rows.

    Input rows must be nonzero and are not filtered; the transform is square
    of size len(rows) and rows beyond the rank map to zero rows.
    """
    rows = [list(r) for r in rows]
    k = len(rows)
    t = [[ONE if i == j else ZERO for j in range(k)] for i in range(k)]
    pivots = []
    top = 0
    for col in range(ncols):
        piv = None
        for i in range(top, k):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[top], rows[piv] = rows[piv], rows[top]
        t[top], t[piv] = t[piv], t[top]
        lead = rows[top][col]
        if lead != ONE:
            inv = ONE / lead
            rows[top] = [x * inv for x in rows[top]]
            t[top] = [x * inv for x in t[top]]
        for i in range(k):
            if i == top:
                continue
            f = rows[i][col]
            if f:
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[top])]
                t[i] = [a - f * b for a, b in zip(t[i], t[top])]
        pivots.append(col)
        top += 1
        if top == k:
            break
    return rows, pivots, t


def rref(m: Matrix):
    """Reduced row-echelon form of m, padded with zero rows to m's shape."""
    rows, pivots = rref_rows(m.row_list(), m.cols)
    while len(rows) < m.rows:
        rows.append([ZERO] * m.cols)
    return Matrix.from_rows(rows, m.cols), list(pivots)


def kernel_basis(m: Matrix) -> Subspace:
    """The exact nullspace {v : m v = 0}."""
    return kernel_subspace(m.row_list(), m.cols)


def kernel_subspace(rows, ncols) -> Subspace:
    ech, pivots = rref_rows([list(r) for r in rows], ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    gens = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for r, p in enumerate(pivots):
            if ech[r][f]:
                v[p] = -ech[r][f]
        gens.append(v)
    return Subspace.from_vectors(gens, ncols)


def image_basis(m: Matrix) -> Subspace:
    """The column space of m, echelonized."""
    rows = m.row_list()
    cols = [[rows[i][j] for i in range(m.rows)] for j in range(m.cols)]
    return Subspace.from_vectors(cols, m.rows)


def reduce_mod(v, sub: Subspace):
    """Canonical coset representative of v modulo sub (zero at sub's pivots)."""
    v = list(v)
    for row, p in zip(sub.basis, sub.pivots):
        f = v[p]
        if f:
            for c in range(p, sub.ambient_dim):
                if row[c]:
                    v[c] = v[c] - f * row[c]
    return v


def contains(sub: Subspace, v) -> bool:
    return not any(reduce_mod(v, sub))


def express_in_span(v, sub: Subspace):
    """Coordinates of v in sub's echelon basis; raises NotInSpanError."""
    if len(v) != sub.ambient_dim:
        raise ValueError("dimension mismatch")
    coords = [Rat(v[p]) for p in sub.pivots]
    resid = list(v)
    for c_val, row in zip(coords, sub.basis):
        if c_val:
            for c in range(sub.ambient_dim):
                if row[c]:
                    resid[c] = resid[c] - c_val * row[c]
    if any(resid):
        raise NotInSpanError("vector not in span")
    return coords


def quotient_basis(sub: Subspace, ambient_dim):
    """Coset representatives: standard basis vectors at sub's non-pivot slots."""
    if sub.ambient_dim != ambient_dim:
        raise ValueError("ambient dimension mismatch")
    pivot_set = set(sub.pivots)
    reps = []
    for c in range(ambient_dim):
        if c not in pivot_set:
            v = [ZERO] * ambient_dim
            v[c] = ONE
            reps.append(v)
    return reps


def intersect(s1: Subspace, s2: Subspace) -> Subspace:
    """Intersection of two subspaces of the same ambient space."""
    if s1.ambient_dim != s2.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    if s1.dim == 0 or s2.dim == 0:
        return Subspace(s1.ambient_dim, (), ())
    # v = x B1 = y B2  <=>  (x, y) in the nullspace of [B1^T | -B2^T].
    k1, k2 = s1.dim, s2.dim
    rows = []
    for c in range(s1.ambient_dim):
        rows.append([s1.basis[i][c] for i in range(k1)]
                    + [-s2.basis[j][c] for j in range(k2)])
    null = kernel_subspace(rows, k1 + k2)
    gens = []
    for sol in null.basis:
        v = [ZERO] * s1.ambient_dim
        for i in range(k1):
            if sol[i]:
                for c in range(s1.ambient_dim):
                    if s1.basis[i][c]:
                        v[c] = v[c] + sol[i] * s1.basis[i][c]
        gens.append(v)
    return Subspace.from_vectors(gens, s1.ambient_dim)


def solve(rows, rhs):
    """One exact solution x of (rows) x = rhs, or None if inconsistent."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [Rat(b)] for r, b in zip(rows, rhs)]
    ech, pivots = rref_rows(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [ZERO] * ncols
    for r, p in enumerate(pivots):
        x[p] = ech[r][ncols]
    return x
