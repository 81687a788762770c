"""Skew-polynomial algebras, Hopf actions on them, and smash products.

An algebra here is a quantum affine space: generators x_1..x_n with
relations x_j x_i = q_ij x_i x_j for i < j.  These admit a PBW basis of
ordered monomials, so elements are sparse dicts {exponent tuple: coefficient}.
Smash product elements are dicts {(exponent tuple, H basis index): coefficient}.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from .hopf import HopfData, sweedler
from .linalg import Subspace, contains
from .rationals import ONE, ZERO, Rat


class InvalidAlgebraError(ValueError):
    pass


def _add_term(acc, key, coeff):
    s = acc.get(key, ZERO) + coeff
    if s:
        acc[key] = s
    else:
        acc.pop(key, None)


@dataclass(frozen=True)
class SkewPolyAlgebra:
    gen_labels: tuple
    q: tuple  # n x n; q[i][j] with i < j encodes x_j x_i = q_ij x_i x_j

    def __post_init__(self):
        n = self.n
        for i in range(n):
            for j in range(i + 1, n):
                if not self.q[i][j]:
                    raise InvalidAlgebraError(f"q[{i}][{j}] must be nonzero")

    @property
    def n(self) -> int:
        return len(self.gen_labels)


def quantum_plane(q12=Rat(-1)) -> SkewPolyAlgebra:
    return SkewPolyAlgebra(("u", "v"), ((ZERO, Rat(q12)), (ZERO, ZERO)))


def mono_mul(A: SkewPolyAlgebra, e1, e2):
    """Normal-form product of two PBW monomials: (coefficient, exponents)."""
    coeff = ONE
    n = A.n
    for i in range(n):
        if not e2[i]:
            continue
        for j in range(i + 1, n):
            if e1[j]:
                coeff = coeff * A.q[i][j] ** (e1[j] * e2[i])
    return coeff, tuple(a + b for a, b in zip(e1, e2))


def multiply(A: SkewPolyAlgebra, p1: dict, p2: dict) -> dict:
    out = {}
    for e1, c1 in p1.items():
        for e2, c2 in p2.items():
            c, e = mono_mul(A, e1, e2)
            _add_term(out, e, c1 * c2 * c)
    return out


def degree(e) -> int:
    return sum(e)


def monomials_of_degree(n: int, d: int):
    """Exponent tuples of total degree d in lex order."""
    if d < 0:
        return []
    if n == 1:
        return [(d,)]
    out = []
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            out.append((first,) + rest)
    return out


def dim_of_degree(n: int, d: int) -> int:
    if d < 0:
        return 0
    from math import comb
    return comb(d + n - 1, n - 1)


def relation_space(A: SkewPolyAlgebra) -> Subspace:
    """The relation subspace R of V (x) V, tensor index (i, j) -> i*n + j."""
    n = A.n
    gens = []
    for i in range(n):
        for j in range(i + 1, n):
            v = [ZERO] * (n * n)
            v[j * n + i] = ONE
            v[i * n + j] = -A.q[i][j]
            gens.append(v)
    return Subspace.from_vectors(gens, n * n)


@dataclass
class HActionOnA:
    """A homogeneous H-module-algebra action on a skew-polynomial algebra.

    gen_action[k] is the matrix of e_k acting on the generator span:
    e_k |> x_c = sum_r gen_action[k][r][c] x_r.  The extension to monomials
    uses the comultiplication and is memoized per (basis index, monomial).
    """

    algebra: SkewPolyAlgebra
    hopf: HopfData
    gen_action: tuple  # per H basis element, n x n matrix of Rat
    _memo: dict = field(default_factory=dict, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def act_basis(self, k: int, expt) -> dict:
        """e_k |> (the PBW monomial with exponents expt), as an algebra element."""
        key = (k, expt)
        try:
            return self._memo[key]
        except KeyError:
            pass
        n = self.algebra.n
        if not any(expt):
            result = {expt: self.hopf.counit[k]} if self.hopf.counit[k] else {}
        else:
            i = next(g for g in range(n) if expt[g])
            rest = tuple(e - (1 if g == i else 0) for g, e in enumerate(expt))
            result = {}
            for (a, b), c in self.hopf.comult[k].items():
                col = [self.gen_action[a][r][i] for r in range(n)]
                tail = self.act_basis(b, rest)
                if not tail:
                    continue
                for r in range(n):
                    if not col[r]:
                        continue
                    gen = tuple(1 if g == r else 0 for g in range(n))
                    for e2, c2 in tail.items():
                        cc, e = mono_mul(self.algebra, gen, e2)
                        _add_term(result, e, c * col[r] * c2 * cc)
        with self._lock:
            self._memo.setdefault(key, result)
        return result

    def act(self, h: dict, p: dict) -> dict:
        out = {}
        for k, ch in h.items():
            for e, ce in p.items():
                for e2, c2 in self.act_basis(k, e).items():
                    _add_term(out, e2, ch * ce * c2)
        return out


def check_module_algebra(action: HActionOnA):
    """Verify the module axiom on V, unit action, and preservation of relations."""
    from .hopf import AxiomReport, h_mult
    rep = AxiomReport()
    A, H = action.algebra, action.hopf
    n, d = A.n, H.dim

    def mat_mul(M, N):
        return [[sum((M[r][k] * N[k][c] for k in range(n)), ZERO)
                 for c in range(n)] for r in range(n)]

    for i in range(d):
        for j in range(d):
            prod = h_mult(H, {i: ONE}, {j: ONE})
            lhs = [[sum((c * action.gen_action[k][r][col] for k, c in prod.items()), ZERO)
                    for col in range(n)] for r in range(n)]
            rep.record("representation_on_generators",
                       lhs == mat_mul(action.gen_action[i], action.gen_action[j]),
                       (H.labels[i], H.labels[j]))
    unit_mat = [[sum((c * action.gen_action[k][r][col] for k, c in H.unit.items()), ZERO)
                 for col in range(n)] for r in range(n)]
    identity = [[ONE if r == c else ZERO for c in range(n)] for r in range(n)]
    rep.record("unit_acts_as_identity", unit_mat == identity)

    R = relation_space(A)
    for k in range(d):
        two = sweedler(H, {k: ONE}, 2)
        for row in R.basis:
            acted = [ZERO] * (n * n)
            for idx in range(n * n):
                if not row[idx]:
                    continue
                i, j = divmod(idx, n)
                for (a, b), c in two.items():
                    Ma, Mb = action.gen_action[a], action.gen_action[b]
                    for r in range(n):
                        if not Ma[r][i]:
                            continue
                        for s in range(n):
                            if Mb[s][j]:
                                acted[r * n + s] = acted[r * n + s] \
                                    + row[idx] * c * Ma[r][i] * Mb[s][j]
            rep.record("relations_preserved", contains(R, acted), H.labels[k])

    for k in range(d):
        one = action.act_basis(k, (0,) * n)
        want = {(0,) * n: H.counit[k]} if H.counit[k] else {}
        rep.record("unit_of_A_scaled_by_counit", one == want, H.labels[k])
    return rep


def smash_multiply(action: HActionOnA, s: dict, t: dict) -> dict:
    """(a # h)(a' # h') = a (h_(1) |> a') # h_(2) h'."""
    H = action.hopf
    A = action.algebra
    out = {}
    for (e1, h1), c1 in s.items():
        two = sweedler(H, {h1: ONE}, 2)
        for (e2, h2), c2 in t.items():
            for (a, b), c in two.items():
                acted = action.act_basis(a, e2)
                if not acted:
                    continue
                hpart = H.mult[b][h2]
                for ea, ca in acted.items():
                    cc, e = mono_mul(A, e1, ea)
                    base = c1 * c2 * c * ca * cc
                    for k, ck in hpart.items():
                        _add_term(out, (e, k), base * ck)
    return out


def smash_from_algebra(H: HopfData, p: dict) -> dict:
    """Embed an algebra element a as a # 1."""
    out = {}
    for e, c in p.items():
        for k, ck in H.unit.items():
            _add_term(out, (e, k), c * ck)
    return out


def smash_from_hopf(p: dict, n: int) -> dict:
    """Embed a Hopf element h as 1 # h."""
    return {((0,) * n, k): c for k, c in p.items() if c}
