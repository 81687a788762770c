"""Independent dimension oracles for the builtin scenario.

The oracles below literally enumerate the parametrized spanning families of
the pre-invariant and invariant cohomology (no reuse of the engine's linear
algebra), so they can serve as a cross-check of the computed dimensions.
There is also a brute-force centralizer solve used to validate the
trivial-Hopf degree-zero cohomology.
"""

from __future__ import annotations

from .linalg import kernel_subspace
from .qalgebra import SkewPolyAlgebra, mono_mul, monomials_of_degree
from .rationals import ZERO

# both H0 and H1 (the group part and its complement) have four basis elements
_H_PART = 4


def full_dims_oracle(m: int, w: int, bound: int = 64) -> int:
    """dim H^m(A, A#H) at weight w, by enumerating the spanning families."""
    count = 0
    rng = range(bound)
    if m == 0:
        # (1 (x) u^2i v^2j) H0
        count += _H_PART * sum(1 for i in rng for j in rng
                               if 2 * i + 2 * j == w)
    elif m == 1:
        # (u* (x) u^{2i+1} v^2j) H0 and (v* (x) u^2i v^{2j+1}) H0
        count += _H_PART * sum(1 for i in rng for j in rng
                               if 2 * i + 2 * j + 1 - 1 == w) * 2
        # (u* (x) v^2j - v* (x) q v^2j) H1
        count += _H_PART * sum(1 for j in rng if 2 * j - 1 == w)
    elif m == 2:
        # (u*v* (x) 1) H0 and (u*v* (x) 1) H1
        if w == -2:
            count += 2 * _H_PART
        # (u*v* (x) u^{2i+1} v^{2j+1}) H0
        count += _H_PART * sum(1 for i in rng for j in rng
                               if 2 * i + 2 * j + 2 - 2 == w)
        # (u*v* (x) v^{2j+1}) H1
        count += _H_PART * sum(1 for j in rng if 2 * j + 1 - 2 == w)
    return count


def invariant_dims_oracle(m: int, w: int, bound: int = 64) -> int:
    """dim HH^m(A#H) at weight w, by enumerating the named class families."""
    count = 0
    rng = range(bound)
    if m == 0:
        # eps1..eps3 for i <= j, eps4 for i < j
        count += 3 * sum(1 for i in rng for j in rng
                         if i <= j and 2 * (i + j) == w)
        count += sum(1 for i in rng for j in rng
                     if i < j and 2 * (i + j) == w)
    elif m == 1:
        # eta1..eta4 for all i, j >= 0
        count += 4 * sum(1 for i in rng for j in rng if 2 * (i + j) == w)
    elif m == 2:
        if w == -2:
            count += 5   # the exceptional u*v* (x) k classes
        # om1..om3 for i < j, om4 for i <= j
        count += 3 * sum(1 for i in rng for j in rng
                         if i < j and 2 * (i + j) == w)
        count += sum(1 for i in rng for j in rng
                     if i <= j and 2 * (i + j) == w)
    return count


def centralizer_dims(A: SkewPolyAlgebra, w: int) -> int:
    """dim of the degree-w part of the center of A, by brute-force solve.

    Sets up x_g a = a x_g for every generator g as a linear system on the
    degree-w monomial span and returns the nullity.
    """
    mons = monomials_of_degree(A.n, w)
    if not mons:
        return 0
    idx = {e: k for k, e in enumerate(mons)}
    nxt = monomials_of_degree(A.n, w + 1)
    nidx = {e: k for k, e in enumerate(nxt)}
    rows = []
    for g in range(A.n):
        gen = tuple(1 if t == g else 0 for t in range(A.n))
        block = [[ZERO] * len(mons) for _ in nxt]
        for e, col in idx.items():
            cl, el = mono_mul(A, gen, e)
            cr, er = mono_mul(A, e, gen)
            block[nidx[el]][col] = block[nidx[el]][col] + cl
            block[nidx[er]][col] = block[nidx[er]][col] - cr
        rows.extend(block)
    return kernel_subspace(rows, len(mons)).dim
