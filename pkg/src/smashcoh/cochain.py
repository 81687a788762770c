"""The differential graded algebra built from the Koszul dual and the smash
product.

A cochain of cohomological degree m is a sparse combination of basis triples
(dual basis index, PBW exponent tuple, H basis index).  The differential is

    d(xi (x) b) = sum_i (e^i xi (x) x_i b  -  (-1)^m xi e^i (x) b x_i),

so it raises both the dual degree and the coefficient's algebra degree: the
internal weight w = (algebra degree) - (dual degree) is conserved, and the
complex splits into finite-dimensional weight strands.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .hopf import h_antipode, sweedler
from .koszul import DualAction, DualElement, KoszulDual
from .qalgebra import (HActionOnA, mono_mul, monomials_of_degree,
                       smash_from_algebra, smash_multiply)
from .rationals import ONE, ZERO, Rat


def _add_term(acc, key, coeff):
    s = acc.get(key, ZERO) + coeff
    if s:
        acc[key] = s
    else:
        acc.pop(key, None)


@dataclass
class Cochain:
    """Sparse cochain: all terms share the dual degree m."""

    m: int
    terms: dict  # (dual index, exponents, H index) -> Rat

    def __eq__(self, other):
        return self.m == other.m and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def weight(self):
        """Internal weight if bihomogeneous, else None."""
        weights = {sum(e) - self.m for (_d, e, _h) in self.terms}
        return weights.pop() if len(weights) == 1 else None

    def scaled(self, c) -> "Cochain":
        return Cochain(self.m, {k: v * c for k, v in self.terms.items()} if c else {})

    def plus(self, other: "Cochain") -> "Cochain":
        if self.m != other.m:
            raise ValueError("degree mismatch")
        out = dict(self.terms)
        for k, v in other.terms.items():
            _add_term(out, k, v)
        return Cochain(self.m, out)

    def minus(self, other: "Cochain") -> "Cochain":
        return self.plus(other.scaled(Rat(-1)))


@dataclass
class WeightStrand:
    w: int
    bases: dict   # m -> list of (dual index, exponents, H index)
    index: dict   # m -> {key: position}
    diffs: dict   # m -> matrix rows (dim at m+1) x cols (dim at m)

    def dim(self, m: int) -> int:
        return len(self.bases.get(m, ()))


class CochainAlgebra:
    """Context tying together the algebra, the Hopf action, and the dual."""

    def __init__(self, action: HActionOnA, m_max: int | None = None):
        self.action = action
        self.algebra = action.algebra
        self.hopf = action.hopf
        self.n = self.algebra.n
        if m_max is None:
            m_max = self.n + 2
        self.dual = KoszulDual(self.algebra, m_max)
        self.dual_act = DualAction(self.dual, self.hopf, action.gen_action)
        self.top = self.dual.top_degree if self.dual.top_degree is not None \
            else m_max + 1
        self._gen_mults = {}
        self._dual_prod = {}
        self._diff_memo = {}

    # -- dual bookkeeping ---------------------------------------------------

    def dual_dim(self, m: int) -> int:
        return self.dual.dim(m)

    def gen_mults(self, m: int):
        if m not in self._gen_mults:
            self._gen_mults[m] = self.dual.gen_mult_matrices(m)
        return self._gen_mults[m]

    def dual_basis_product(self, m1: int, d1: int, m2: int, d2: int):
        key = (m1, d1, m2, d2)
        if key not in self._dual_prod:
            c1 = [ONE if i == d1 else ZERO for i in range(self.dual_dim(m1))]
            c2 = [ONE if i == d2 else ZERO for i in range(self.dual_dim(m2))]
            _, coords = self.dual.multiply(m1, c1, m2, c2)
            self._dual_prod[key] = coords
        return self._dual_prod[key]

    # -- DG structure ---------------------------------------------------------

    def _diff_basis(self, m: int, di: int, e, h) -> dict:
        key = (m, di, e, h)
        hit = self._diff_memo.get(key)
        if hit is not None:
            return hit
        out = {}
        if self.dual_dim(m + 1):
            L, R = self.gen_mults(m)
            sign = Rat(-1) ** m
            kdim = self.dual_dim(m + 1)
            for i in range(self.n):
                gen = tuple(1 if g == i else 0 for g in range(self.n))
                # e^i xi (x) x_i b   with b = monomial # h
                lcol = [L[i][r][di] for r in range(kdim)]
                if any(lcol):
                    c, e_new = mono_mul(self.algebra, gen, e)
                    for r, cv in enumerate(lcol):
                        if cv:
                            _add_term(out, (r, e_new, h), cv * c)
                # xi e^i (x) b x_i
                rcol = [R[i][r][di] for r in range(kdim)]
                if any(rcol):
                    right = smash_multiply(
                        self.action, {(e, h): ONE},
                        smash_from_algebra(self.hopf, {gen: ONE}))
                    for (e_new, h_new), c in right.items():
                        for r, cv in enumerate(rcol):
                            if cv:
                                _add_term(out, (r, e_new, h_new), -sign * cv * c)
        self._diff_memo[key] = out
        return out

    def differential(self, c: Cochain) -> Cochain:
        out = {}
        for (di, e, h), coeff in c.terms.items():
            for k, v in self._diff_basis(c.m, di, e, h).items():
                _add_term(out, k, coeff * v)
        return Cochain(c.m + 1, out)

    def product(self, x: Cochain, y: Cochain) -> Cochain:
        """(xi (x) b)(xi' (x) b') = xi xi' (x) b b'."""
        m = x.m + y.m
        out = {}
        if self.dual_dim(m):
            for (d1, e1, h1), c1 in x.terms.items():
                for (d2, e2, h2), c2 in y.terms.items():
                    coords = self.dual_basis_product(x.m, d1, y.m, d2)
                    if not any(coords):
                        continue
                    smash = smash_multiply(self.action, {(e1, h1): ONE},
                                           {(e2, h2): ONE})
                    for (e, h), cs in smash.items():
                        base = c1 * c2 * cs
                        for r, cv in enumerate(coords):
                            if cv:
                                _add_term(out, (r, e, h), base * cv)
        return Cochain(m, out)

    def unit_cochain(self) -> Cochain:
        terms = {}
        zero_exp = (0,) * self.n
        for k, c in self.hopf.unit.items():
            terms[(0, zero_exp, k)] = c
        return Cochain(0, terms)

    def h_act(self, c: Cochain, h: dict) -> Cochain:
        """(xi (x) b) <| h = xi <| h_(2) (x) S(h_(1)) b h_(3)."""
        out = {}
        three = sweedler(self.hopf, h, 3)
        kdim = self.dual_dim(c.m)
        for (di, e, hb), coeff in c.terms.items():
            for (a, b, c3), s in three.items():
                col = [self.dual_act.matrices[(b, c.m)][r][di] for r in range(kdim)]
                if not any(col):
                    continue
                sa = h_antipode(self.hopf, {a: ONE})
                mid = smash_multiply(
                    self.action,
                    {((0,) * self.n, k): v for k, v in sa.items()},
                    {(e, hb): ONE})
                smash = smash_multiply(self.action, mid,
                                       {((0,) * self.n, c3): ONE})
                for (e_new, h_new), cs in smash.items():
                    base = coeff * s * cs
                    for r, cv in enumerate(col):
                        if cv:
                            _add_term(out, (r, e_new, h_new), base * cv)
        return Cochain(c.m, out)

    def integral_project(self, c: Cochain, lam: dict) -> Cochain:
        return self.h_act(c, lam)

    # -- weight strands -------------------------------------------------------

    def strand_basis(self, w: int, m: int):
        d = m + w
        if d < 0 or self.dual_dim(m) == 0:
            return []
        mons = monomials_of_degree(self.n, d)
        basis = []
        for di in range(self.dual_dim(m)):
            for e in mons:
                for h in range(self.hopf.dim):
                    basis.append((di, e, h))
        return basis

    def weight_strand(self, w: int) -> WeightStrand:
        bases, index, diffs = {}, {}, {}
        for m in range(self.top):
            bases[m] = self.strand_basis(w, m)
            index[m] = {key: pos for pos, key in enumerate(bases[m])}
        for m in range(self.top):
            nxt = bases.get(m + 1, [])
            idx_next = index.get(m + 1, {})
            mat = [[ZERO] * len(bases[m]) for _ in range(len(nxt))]
            for col, (di, e, h) in enumerate(bases[m]):
                for key, v in self._diff_basis(m, di, e, h).items():
                    mat[idx_next[key]][col] = v
            diffs[m] = mat
        return WeightStrand(w, bases, index, diffs)

    def to_vector(self, strand: WeightStrand, c: Cochain):
        basis = strand.bases.get(c.m, [])
        idx = strand.index.get(c.m, {})
        v = [ZERO] * len(basis)
        for key, coeff in c.terms.items():
            v[idx[key]] = coeff
        return v

    def from_vector(self, strand: WeightStrand, m: int, v) -> Cochain:
        return Cochain(m, {key: c for key, c in zip(strand.bases[m], v) if c})
