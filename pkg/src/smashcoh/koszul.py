"""The Koszul dual of a skew-polynomial algebra and its bimodule complex.

Two models of the dual are kept side by side:

* the quotient model: degree m component = (V*)^{(x)m} modulo the two-sided
  span of the orthogonal relations, with canonical coset representatives at
  the non-pivot tensor coordinates (this is what the cochain differential
  multiplies in);
* the subspace model: its graded dual, the intersection of V^u (x) R (x) V^v
  inside V^{(x)m} (this is what the bimodule complex is built from).

The dimensions of the two models must agree; this is asserted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hopf import HopfData, sweedler
from .linalg import (Subspace, contains, express_in_span, intersect,
                     kernel_subspace, reduce_mod)
from .qalgebra import SkewPolyAlgebra, mono_mul, monomials_of_degree, relation_space
from .rationals import ONE, ZERO, Rat


class DegreeOverflowError(ValueError):
    pass


class RelationNotPreservedError(ValueError):
    pass


@dataclass(frozen=True)
class DualDegreeData:
    m: int
    ambient_dim: int
    rel_span: Subspace          # span of the degree-m orthogonal relations
    rep_indices: tuple          # ambient tensor coordinates of the coset reps

    @property
    def dim(self) -> int:
        return len(self.rep_indices)


def _tensor_index(multi, n):
    idx = 0
    for i in multi:
        idx = idx * n + i
    return idx


class KoszulDual:
    """Graded dual algebra data up to degree m_max."""

    def __init__(self, algebra: SkewPolyAlgebra, m_max: int):
        if m_max < 2:
            raise ValueError("m_max must be >= 2")
        self.algebra = algebra
        self.m_max = m_max
        n = algebra.n
        R = relation_space(algebra)
        # orthogonal relations: annihilator of R under the left-to-right pairing
        self.r_perp = kernel_subspace([list(r) for r in R.basis], n * n)

        self.degrees = []
        self.top_degree = None
        for m in range(m_max + 1):
            ambient = n ** m
            if self.top_degree is not None and m >= self.top_degree:
                span = Subspace(ambient, (), ())
                full = Subspace.from_vectors(
                    [[ONE if c == r else ZERO for c in range(ambient)]
                     for r in range(ambient)], ambient)
                self.degrees.append(DualDegreeData(m, ambient, full, ()))
                continue
            gens = []
            if m >= 2:
                for u in range(m - 1):
                    v = m - 2 - u
                    for row in self.r_perp.basis:
                        for a in range(n ** u):
                            for b in range(n ** v):
                                vec = [ZERO] * ambient
                                for mid in range(n * n):
                                    if row[mid]:
                                        vec[(a * n * n + mid) * (n ** v) + b] = row[mid]
                                gens.append(vec)
            span = Subspace.from_vectors(gens, ambient)
            pivot_set = set(span.pivots)
            reps = tuple(c for c in range(ambient) if c not in pivot_set)
            self.degrees.append(DualDegreeData(m, ambient, span, reps))
            if not reps and self.top_degree is None:
                self.top_degree = m

    def dim(self, m: int) -> int:
        return self.degree_data(m).dim

    def degree_data(self, m: int) -> DualDegreeData:
        if m < 0:
            raise ValueError("negative degree")
        if m <= self.m_max:
            return self.degrees[m]
        if self.top_degree is not None:
            n = self.algebra.n
            return DualDegreeData(m, n ** m, Subspace(n ** m, (), ()), ())
        raise DegreeOverflowError(f"dual degree {m} beyond computed range {self.m_max}")

    def reduce_ambient(self, m: int, vec):
        """Quotient coordinates of an ambient degree-m tensor."""
        data = self.degree_data(m)
        red = reduce_mod(vec, data.rel_span)
        return [red[c] for c in data.rep_indices]

    def lift(self, m: int, coords):
        """Sparse ambient tensor of a quotient element (via its coset reps)."""
        data = self.degree_data(m)
        return {idx: c for idx, c in zip(data.rep_indices, coords) if c}

    def multiply(self, m1: int, c1, m2: int, c2):
        """Product in the dual algebra: returns (m1 + m2, coords)."""
        m = m1 + m2
        data = self.degree_data(m)
        if data.dim == 0:
            return m, []
        n = self.algebra.n
        amb = [ZERO] * data.ambient_dim
        shift = n ** m2
        for i1, a1 in self.lift(m1, c1).items():
            for i2, a2 in self.lift(m2, c2).items():
                amb[i1 * shift + i2] = amb[i1 * shift + i2] + a1 * a2
        return m, self.reduce_ambient(m, amb)

    def gen_mult_matrices(self, m: int):
        """Matrices of left/right multiplication by each dual generator.

        Returns (L, R): L[i][r][c] with (e^i xi_c) = sum_r L[i][r][c] xi_r in
        degree m+1, likewise R[i] for xi_c e^i.
        """
        n = self.algebra.n
        src = self.degree_data(m)
        tgt = self.degree_data(m + 1)
        L = [[[ZERO] * src.dim for _ in range(tgt.dim)] for _ in range(n)]
        R = [[[ZERO] * src.dim for _ in range(tgt.dim)] for _ in range(n)]
        if tgt.dim == 0 or src.dim == 0:
            return L, R
        for c, rep in enumerate(src.rep_indices):
            for i in range(n):
                amb = [ZERO] * tgt.ambient_dim
                amb[i * (n ** m) + rep] = ONE
                for r, val in enumerate(self.reduce_ambient(m + 1, amb)):
                    L[i][r][c] = val
                amb = [ZERO] * tgt.ambient_dim
                amb[rep * n + i] = ONE
                for r, val in enumerate(self.reduce_ambient(m + 1, amb)):
                    R[i][r][c] = val
        return L, R


def dual_degrees(algebra: SkewPolyAlgebra, m_max: int):
    """Per-degree dual data and the least degree with dimension zero (if any)."""
    dual = KoszulDual(algebra, m_max)
    return dual.degrees, dual.top_degree


@dataclass(frozen=True)
class DualElement:
    m: int
    coords: tuple


class DualAction:
    """The right H-action on the dual algebra, as matrices per (basis, degree)."""

    def __init__(self, dual: KoszulDual, hopf: HopfData, gen_action):
        self.dual = dual
        self.hopf = hopf
        n = dual.algebra.n
        # e^i <| e_k = sum_j gen_action[k][i][j] e^j (row i of the action matrix)
        self.matrices = {}
        for k in range(hopf.dim):
            for m in range(dual.m_max + 1):
                data = dual.degree_data(m)
                if data.dim == 0:
                    self.matrices[(k, m)] = []
                    continue
                cols = []
                legs = sweedler(hopf, {k: ONE}, m) if m >= 1 else None
                for rep in data.rep_indices:
                    multi = self._unrank(rep, m, n)
                    amb = [ZERO] * data.ambient_dim
                    if m == 0:
                        amb[0] = hopf.counit[k]
                    else:
                        for key, c in legs.items():
                            self._accumulate(amb, multi, key, c, gen_action, n)
                    cols.append(self.dual.reduce_ambient(m, amb))
                self.matrices[(k, m)] = [[cols[c][r] for c in range(data.dim)]
                                         for r in range(data.dim)]
        self._check_descent(gen_action)

    @staticmethod
    def _unrank(idx, m, n):
        multi = []
        for _ in range(m):
            multi.append(idx % n)
            idx //= n
        return tuple(reversed(multi))

    @staticmethod
    def _accumulate(amb, multi, legs, coeff, gen_action, n):
        # (e^{i_1} (x) ... (x) e^{i_m}) <| h: leg t is row multi[t] of M_{legs[t]}
        partial = {0: coeff}
        for t, i in enumerate(multi):
            row = gen_action[legs[t]][i]
            nxt = {}
            for base, c in partial.items():
                for j in range(n):
                    if row[j]:
                        key = base * n + j
                        s = nxt.get(key, ZERO) + c * row[j]
                        if s:
                            nxt[key] = s
                        else:
                            nxt.pop(key, None)
            partial = nxt
        for idx, c in partial.items():
            amb[idx] = amb[idx] + c

    def _check_descent(self, gen_action):
        n = self.dual.algebra.n
        for m in range(2, self.dual.m_max + 1):
            data = self.dual.degree_data(m)
            if not data.rel_span.basis:
                continue
            for k in range(self.hopf.dim):
                legs = sweedler(self.hopf, {k: ONE}, m)
                for row in data.rel_span.basis:
                    amb = [ZERO] * data.ambient_dim
                    for idx, val in enumerate(row):
                        if val:
                            multi = self._unrank(idx, m, n)
                            for key, c in legs.items():
                                self._accumulate(amb, multi, key, c * val,
                                                 gen_action, n)
                    if not contains(data.rel_span, amb):
                        raise RelationNotPreservedError(
                            f"dual action of {self.hopf.labels[k]} leaves the "
                            f"degree-{m} relation span")

    def apply(self, elem: DualElement, h: dict) -> DualElement:
        mat_dim = self.dual.dim(elem.m)
        out = [ZERO] * mat_dim
        for k, ch in h.items():
            M = self.matrices[(k, elem.m)]
            for c, val in enumerate(elem.coords):
                if val:
                    for r in range(mat_dim):
                        if M[r][c]:
                            out[r] = out[r] + ch * val * M[r][c]
        return DualElement(elem.m, tuple(out))


def dual_action(dual: KoszulDual, hopf: HopfData, gen_action) -> DualAction:
    return DualAction(dual, hopf, gen_action)


# ---------------------------------------------------------------------------
# The bimodule complex and its exactness certificate
# ---------------------------------------------------------------------------


def _subspace_models(algebra: SkewPolyAlgebra, m_max: int):
    """Bases of the graded-dual subspaces inside V^{(x)m}, per degree.

    Degree m >= 2 is the intersection of V (x) S_{m-1} and S_{m-1} (x) V,
    which equals the full intersection of V^u (x) R (x) V^v.
    """
    n = algebra.n
    R = relation_space(algebra)
    models = [Subspace.from_vectors([[ONE]], 1),
              Subspace.from_vectors([[ONE if c == r else ZERO for c in range(n)]
                                     for r in range(n)], n)]
    for m in range(2, m_max + 1):
        if m == 2:
            models.append(R)
            continue
        prev = models[m - 1]
        amb = n ** m
        left = []
        right = []
        for i in range(n):
            for row in prev.basis:
                vec = [ZERO] * amb
                for idx, val in enumerate(row):
                    if val:
                        vec[i * (n ** (m - 1)) + idx] = val
                left.append(vec)
                vec = [ZERO] * amb
                for idx, val in enumerate(row):
                    if val:
                        vec[idx * n + i] = val
                right.append(vec)
        models.append(intersect(Subspace.from_vectors(left, amb),
                                Subspace.from_vectors(right, amb)))
    return models


@dataclass
class KoszulReport:
    m_max: int
    weight_max: int
    dims_quotient: list
    dims_subspace: list
    top_degree: int
    dsquared_ok: bool
    homology: dict  # weight -> list of homology dims per homological position

    @property
    def exact(self) -> bool:
        return self.dsquared_ok and all(
            all(h == 0 for h in dims) for dims in self.homology.values())


def koszul_complex_check(algebra: SkewPolyAlgebra, m_max: int,
                         weight_max: int) -> KoszulReport:
    """Certify exactness of the bimodule complex in all weights <= weight_max."""
    n = algebra.n
    dual = KoszulDual(algebra, m_max)
    models = _subspace_models(algebra, m_max)
    dims_q = [dual.dim(m) for m in range(m_max + 1)]
    dims_s = [models[m].dim for m in range(m_max + 1)]
    if dims_q != dims_s:
        raise AssertionError(f"dual models disagree: {dims_q} vs {dims_s}")
    top = dual.top_degree if dual.top_degree is not None else m_max + 1

    homology = {}
    dsq_ok = True
    for w in range(weight_max + 1):
        bases = []
        index = []
        m_hi = min(w, top - 1, m_max)
        for m in range(m_hi + 1):
            basis_m = []
            for p in range(w - m + 1):
                r = w - m - p
                for ma in monomials_of_degree(n, p):
                    for trow in range(models[m].dim):
                        for mb in monomials_of_degree(n, r):
                            basis_m.append((ma, trow, mb))
            bases.append(basis_m)
            index.append({key: pos for pos, key in enumerate(basis_m)})

        # augmentation to the weight-w component of the algebra
        target_mons = monomials_of_degree(n, w)
        tpos = {mo: i for i, mo in enumerate(target_mons)}
        aug = [[ZERO] * len(bases[0]) for _ in range(len(target_mons))]
        for col, (ma, _t, mb) in enumerate(bases[0]):
            c, e = mono_mul(algebra, ma, mb)
            aug[tpos[e]][col] = c

        mats = [aug]
        for m in range(1, m_hi + 1):
            mat = [[ZERO] * len(bases[m]) for _ in range(len(bases[m - 1]))]
            sign = -(Rat(-1) ** (m - 1))
            prev = models[m - 1]
            sub = n ** (m - 1)
            for col, (ma, trow, mb) in enumerate(bases[m]):
                t = models[m].basis[trow]
                for i in range(n):
                    gen = _gen(n, i)
                    # left part: split off the leading tensor leg
                    ti = [t[i * sub + jj] for jj in range(sub)]
                    if any(ti):
                        coords = express_in_span(ti, prev)
                        c, e = mono_mul(algebra, ma, gen)
                        for rr, cv in enumerate(coords):
                            if cv:
                                row = index[m - 1][(e, rr, mb)]
                                mat[row][col] = mat[row][col] + c * cv
                    # right part: split off the trailing tensor leg
                    ti = [t[jj * n + i] for jj in range(sub)]
                    if any(ti):
                        coords = express_in_span(ti, prev)
                        c, e = mono_mul(algebra, gen, mb)
                        for rr, cv in enumerate(coords):
                            if cv:
                                row = index[m - 1][(ma, rr, e)]
                                mat[row][col] = mat[row][col] + sign * c * cv
            mats.append(mat)

        # verify d composed with d vanishes, then rank-check exactness
        for m in range(1, len(mats)):
            upper, lower = mats[m], mats[m - 1]
            if not upper or not lower:
                continue
            for col in range(len(bases[m])):
                vec = [upper[r][col] for r in range(len(upper))]
                out = [sum((lower[r][k] * vec[k] for k in range(len(vec)) if vec[k]),
                           ZERO) for r in range(len(lower))]
                if any(out):
                    dsq_ok = False

        ranks = [len(rref_pivots(mat)) for mat in mats]
        dims = [len(b) for b in bases]
        hw = []
        # exactness at the algebra itself: the augmentation must be onto
        hw.append(len(target_mons) - ranks[0])
        for m in range(len(mats)):
            nullity = dims[m] - ranks[m]
            incoming = ranks[m + 1] if m + 1 < len(mats) else 0
            hw.append(nullity - incoming)
        homology[w] = hw

    return KoszulReport(m_max, weight_max, dims_q, dims_s, top, dsq_ok, homology)


def _gen(n, i):
    return tuple(1 if g == i else 0 for g in range(n))


def rref_pivots(rows):
    from .linalg import rref_rows
    if not rows or not rows[0]:
        return []
    _, pivots = rref_rows([list(r) for r in rows], len(rows[0]))
    return pivots
