"""Cohomology of the weight strands, invariants, and cup products.

All bases are canonical: cocycle and coboundary spaces are echelonized over
the deterministic strand basis, and representatives are the reduced kernel
vectors, so two runs (or two thread counts) produce identical bases.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cochain import Cochain, CochainAlgebra, WeightStrand
from .linalg import (Subspace, kernel_subspace, reduce_mod,
                     rref_rows_with_transform)
from .rationals import ONE, ZERO, Rat


class NotACocycleError(ValueError):
    pass


class TargetBasisIncompleteError(ValueError):
    pass


class BasisMismatchError(ValueError):
    pass


@dataclass
class CohomologyBasis:
    m: int
    w: int
    strand: WeightStrand
    reps: list          # cocycle representative vectors (strand coordinates)
    coboundaries: Subspace
    labels: list = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.reps)

    def rep_cochains(self, ctx: CochainAlgebra):
        return [ctx.from_vector(self.strand, self.m, v) for v in self.reps]


def cohomology_at(ctx: CochainAlgebra, strand: WeightStrand, m: int,
                  labels=None) -> CohomologyBasis:
    """ker d^m / im d^{m-1} on the weight strand, with canonical representatives."""
    dim_m = strand.dim(m)
    diff = strand.diffs.get(m, [])
    cocycles = kernel_subspace([list(r) for r in diff], dim_m) if diff \
        else Subspace.from_vectors(
            [[ONE if c == r else ZERO for c in range(dim_m)] for r in range(dim_m)],
            dim_m)
    prev = strand.diffs.get(m - 1)
    if prev and strand.dim(m - 1):
        cols = [[prev[r][c] for r in range(len(prev))]
                for c in range(strand.dim(m - 1))]
        cobound = Subspace.from_vectors(cols, dim_m)
    else:
        cobound = Subspace(dim_m, (), ())
    reduced = []
    for z in cocycles.basis:
        r = reduce_mod(z, cobound)
        if any(r):
            reduced.append(r)
    span = Subspace.from_vectors(reduced, dim_m)
    reps = [list(v) for v in span.basis]
    if len(reps) != cocycles.dim - cobound.dim:
        raise AssertionError("cohomology dimension bookkeeping failed")
    basis = CohomologyBasis(m, strand.w, strand, reps, cobound)
    basis.labels = list(labels) if labels is not None else \
        [f"H{m}w{strand.w}#{i}" for i in range(len(reps))]
    return basis


def invariants(ctx: CochainAlgebra, basis: CohomologyBasis,
               lam: dict) -> CohomologyBasis:
    """Image of the integral projector on cohomology, echelonized."""
    projected = []
    for v in basis.reps:
        c = ctx.from_vector(basis.strand, basis.m, v)
        p = ctx.integral_project(c, lam)
        projected.append(reduce_mod(ctx.to_vector(basis.strand, p),
                                    basis.coboundaries))
    span = Subspace.from_vectors([v for v in projected if any(v)],
                                 len(basis.reps[0]) if basis.reps else 0)
    reps = [list(v) for v in span.basis]
    out = CohomologyBasis(basis.m, basis.w, basis.strand, reps,
                          basis.coboundaries)
    out.labels = [f"HH{basis.m}w{basis.w}#{i}" for i in range(len(reps))]
    return out


def class_equal(ctx: CochainAlgebra, basis: CohomologyBasis,
                x: Cochain, y: Cochain) -> bool:
    """Exact equality of cohomology classes (coset membership)."""
    for c in (x, y):
        if not ctx.differential(c).is_zero():
            raise NotACocycleError("argument is not a cocycle")
    diff = x.minus(y)
    v = ctx.to_vector(basis.strand, diff)
    return not any(reduce_mod(v, basis.coboundaries))


class ClassSolver:
    """Expresses cocycle classes in a fixed basis of a cohomology group.

    Precomputes a transform so each query is a coboundary reduction plus a
    small matrix product; membership is verified exactly on every call.
    """

    def __init__(self, ctx: CochainAlgebra, basis: CohomologyBasis):
        self.ctx = ctx
        self.basis = basis
        dim = basis.strand.dim(basis.m)
        self.reduced = [reduce_mod(v, basis.coboundaries) for v in basis.reps]
        ech, pivots, t = rref_rows_with_transform(self.reduced, dim)
        if len(pivots) != len(basis.reps):
            raise BasisMismatchError(
                f"classes at (m={basis.m}, w={basis.w}) are dependent")
        self.pivots = pivots
        self.transform = t

    def solve_vector(self, v):
        r = reduce_mod(v, self.basis.coboundaries)
        k = len(self.reduced)
        coords = [sum((r[self.pivots[t]] * self.transform[t][j]
                       for t in range(k) if r[self.pivots[t]]), ZERO)
                  for j in range(k)]
        # exact verification of membership in the class span
        resid = list(r)
        for j, cj in enumerate(coords):
            if cj:
                row = self.reduced[j]
                for c in range(len(resid)):
                    if row[c]:
                        resid[c] = resid[c] - cj * row[c]
        if any(resid):
            raise TargetBasisIncompleteError(
                f"class at (m={self.basis.m}, w={self.basis.w}) escapes the "
                f"target basis span")
        return coords

    def solve(self, c: Cochain):
        if not self.ctx.differential(c).is_zero():
            raise NotACocycleError("not a cocycle")
        return self.solve_vector(self.ctx.to_vector(self.basis.strand, c))


@dataclass
class CupTable:
    entries: dict  # (label_a, label_b) -> {label: Rat}


def cup_structure(ctx: CochainAlgebra, basis_a: CohomologyBasis,
                  basis_b: CohomologyBasis,
                  target: CohomologyBasis) -> CupTable:
    """Structure constants of the cup product against the target basis."""
    solver = ClassSolver(ctx, target)
    entries = {}
    reps_a = basis_a.rep_cochains(ctx)
    reps_b = basis_b.rep_cochains(ctx)
    for la, ca in zip(basis_a.labels, reps_a):
        for lb, cb in zip(basis_b.labels, reps_b):
            prod = ctx.product(ca, cb)
            coords = solver.solve(prod)
            entries[(la, lb)] = {target.labels[j]: c
                                 for j, c in enumerate(coords) if c}
    return CupTable(entries)
