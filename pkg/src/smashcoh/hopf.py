"""Finite-dimensional Hopf algebras as structure-constant data.

A Hopf algebra is stored as exact tables over a fixed basis: multiplication,
unit, comultiplication, counit, antipode.  Elements are sparse dicts
{basis index: coefficient}.  Builders for the Kac-Paljutkin algebra and for
group algebras are provided, together with exact axiom verification,
Sweedler expansion, and the normalized two-sided integral.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .linalg import kernel_subspace
from .rationals import ONE, ZERO, Rat


class NotAGroupError(ValueError):
    pass


class NoIntegralError(ValueError):
    pass


class NotSemisimpleError(ValueError):
    """Every integral is killed by the counit (Maschke obstruction)."""


@dataclass(eq=False)
class HopfData:
    """Structure constants of a finite-dimensional Hopf algebra.

    mult[i][j] is the coefficient dict of e_i * e_j, comult[i] the coefficient
    dict of Delta(e_i) over pairs (j, k), antipode[i] the coefficient dict of
    S(e_i).  Immutable by convention after construction.
    """

    dim: int
    labels: tuple
    mult: tuple      # dim x dim, each entry dict[int, Rat]
    unit: dict       # dict[int, Rat]
    comult: tuple    # per basis element: dict[(int, int), Rat]
    counit: tuple    # Rat per basis element
    antipode: tuple  # per basis element: dict[int, Rat]


def _add_term(acc, key, coeff):
    s = acc.get(key, ZERO) + coeff
    if s:
        acc[key] = s
    else:
        acc.pop(key, None)


def h_mult(H: HopfData, a: dict, b: dict) -> dict:
    out = {}
    for i, ca in a.items():
        for j, cb in b.items():
            c = ca * cb
            for k, ck in H.mult[i][j].items():
                _add_term(out, k, c * ck)
    return out


def h_antipode(H: HopfData, a: dict) -> dict:
    out = {}
    for i, c in a.items():
        for k, ck in H.antipode[i].items():
            _add_term(out, k, c * ck)
    return out


def h_counit(H: HopfData, a: dict) -> Rat:
    return sum((c * H.counit[i] for i, c in a.items()), ZERO)


def tensor_mult(H: HopfData, a: dict, b: dict) -> dict:
    """Componentwise product of sparse tensors (tuple keys of equal length)."""
    out = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            coeff = ca * cb
            # expand the product leg by leg
            partial = {(): coeff}
            for ia, ib in zip(ka, kb):
                nxt = {}
                for pk, pc in partial.items():
                    for k, ck in H.mult[ia][ib].items():
                        _add_term(nxt, pk + (k,), pc * ck)
                partial = nxt
            for k, c in partial.items():
                _add_term(out, k, c)
    return out


def expand_leg(H: HopfData, tensor: dict, leg: int) -> dict:
    """Apply the comultiplication to one leg of a sparse tensor."""
    out = {}
    for key, c in tensor.items():
        for (j, k), ck in H.comult[key[leg]].items():
            _add_term(out, key[:leg] + (j, k) + key[leg + 1:], c * ck)
    return out


def sweedler(H: HopfData, h: dict, legs: int) -> dict:
    """Iterated comultiplication of h into `legs` tensor legs."""
    if legs < 1:
        raise ValueError("legs must be >= 1")
    tensor = {(i,): c for i, c in h.items() if c}
    for cur in range(1, legs):
        if not tensor:
            break
        tensor = expand_leg(H, tensor, cur - 1)
    return tensor


@dataclass
class AxiomReport:
    results: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, name: str, ok: bool, witness=None):
        self.results[name] = self.results.get(name, True) and ok
        if not ok:
            self.failures.append(f"{name}: {witness}")


def check_hopf_axioms(H: HopfData) -> AxiomReport:
    """Verify all Hopf axioms exactly; failures are reported, never raised."""
    rep = AxiomReport()
    basis = [{i: ONE} for i in range(H.dim)]
    for i in range(H.dim):
        for j in range(H.dim):
            for k in range(H.dim):
                lhs = h_mult(H, h_mult(H, basis[i], basis[j]), basis[k])
                rhs = h_mult(H, basis[i], h_mult(H, basis[j], basis[k]))
                rep.record("associativity", lhs == rhs, (i, j, k))
    for i in range(H.dim):
        rep.record("unit", h_mult(H, H.unit, basis[i]) == basis[i]
                   and h_mult(H, basis[i], H.unit) == basis[i], i)
    for i in range(H.dim):
        t = {(i,): ONE}
        lhs = expand_leg(H, expand_leg(H, t, 0), 0)
        rhs = expand_leg(H, expand_leg(H, t, 0), 1)
        rep.record("coassociativity", lhs == rhs, H.labels[i])
        d = H.comult[i]
        left = {}
        right = {}
        for (j, k), c in d.items():
            _add_term(left, k, c * H.counit[j])
            _add_term(right, j, c * H.counit[k])
        rep.record("counit", left == basis[i] and right == basis[i], H.labels[i])
    for i in range(H.dim):
        for j in range(H.dim):
            prod = h_mult(H, basis[i], basis[j])
            lhs = {}
            for k, c in prod.items():
                for key, ck in H.comult[k].items():
                    _add_term(lhs, key, c * ck)
            rhs = tensor_mult(H, {(a, b): c for (a, b), c in H.comult[i].items()},
                              {(a, b): c for (a, b), c in H.comult[j].items()})
            rep.record("comult_algebra_map", lhs == rhs, (i, j))
            rep.record("counit_algebra_map",
                       h_counit(H, prod) == H.counit[i] * H.counit[j], (i, j))
    unit_delta = {}
    for i, c in H.unit.items():
        for key, ck in H.comult[i].items():
            _add_term(unit_delta, key, c * ck)
    one = {k: c for k, c in H.unit.items()}
    rep.record("comult_algebra_map",
               unit_delta == {(a, b): ca * cb for a, ca in one.items()
                              for b, cb in one.items() if ca * cb}, "unit")
    rep.record("counit_algebra_map", h_counit(H, H.unit) == ONE, "unit")
    for i in range(H.dim):
        target = {k: H.counit[i] * c for k, c in H.unit.items() if H.counit[i] * c}
        left = {}
        right = {}
        for (j, k), c in H.comult[i].items():
            for a, ca in h_mult(H, h_antipode(H, {j: ONE}), {k: ONE}).items():
                _add_term(left, a, c * ca)
            for a, ca in h_mult(H, {j: ONE}, h_antipode(H, {k: ONE})).items():
                _add_term(right, a, c * ca)
        rep.record("antipode", left == target and right == target, H.labels[i])
    return rep


# ---------------------------------------------------------------------------
# Kac-Paljutkin algebra
#
# Generators x, y, z with x^2 = y^2 = 1, z^2 = (1+x+y-xy)/2, yx = xy,
# zx = yz, zy = xz.  Basis monomials x^a y^b z^c, ordered as
# 1, x, y, z, xy, xz, yz, xyz.
# ---------------------------------------------------------------------------

KP_MONOMIALS = ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1),
                (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1))
KP_LABELS = ("1", "x", "y", "z", "xy", "xz", "yz", "xyz")
KP_INDEX = {m: i for i, m in enumerate(KP_MONOMIALS)}
HALF = Rat(1, 2)


def _kp_mono_mult(m1, m2) -> dict:
    a1, b1, c1 = m1
    a2, b2, c2 = m2
    if c1:
        a2, b2 = b2, a2  # z x^a y^b = x^b y^a z
    a, b = (a1 + a2) % 2, (b1 + b2) % 2
    if c1 + c2 < 2:
        return {KP_INDEX[(a, b, c1 + c2)]: ONE}
    # z^2 = (1 + x + y - xy)/2
    out = {}
    for (da, db), s in (((0, 0), ONE), ((1, 0), ONE), ((0, 1), ONE), ((1, 1), -ONE)):
        _add_term(out, KP_INDEX[((a + da) % 2, (b + db) % 2, 0)], s * HALF)
    return out


def kac_paljutkin() -> HopfData:
    """The 8-dimensional Kac-Paljutkin Hopf algebra."""
    dim = 8
    mult = tuple(tuple(_kp_mono_mult(KP_MONOMIALS[i], KP_MONOMIALS[j])
                       for j in range(dim)) for i in range(dim))
    H_stub = HopfData(dim, KP_LABELS, mult, {0: ONE}, (), tuple([ONE] * dim), ())

    dx = {(KP_INDEX[(1, 0, 0)], KP_INDEX[(1, 0, 0)]): ONE}
    dy = {(KP_INDEX[(0, 1, 0)], KP_INDEX[(0, 1, 0)]): ONE}
    iz, iyz, ixz = KP_INDEX[(0, 0, 1)], KP_INDEX[(0, 1, 1)], KP_INDEX[(1, 0, 1)]
    dz = {(iz, iz): HALF, (iz, ixz): HALF, (iyz, iz): HALF, (iyz, ixz): -HALF}
    comult = []
    for (a, b, c) in KP_MONOMIALS:
        t = {(0, 0): ONE}
        for d, factor in ((a, dx), (b, dy), (c, dz)):
            if d:
                t = tensor_mult(H_stub, t, factor)
        comult.append(t)

    antipode = []
    for (a, b, c) in KP_MONOMIALS:
        # S is an anti-homomorphism fixing x, y, z: S(x^a y^b z^c) = z^c y^b x^a
        elem = {0: ONE}
        if c:
            elem = h_mult(H_stub, elem, {KP_INDEX[(0, 0, 1)]: ONE})
        if b:
            elem = h_mult(H_stub, elem, {KP_INDEX[(0, 1, 0)]: ONE})
        if a:
            elem = h_mult(H_stub, elem, {KP_INDEX[(1, 0, 0)]: ONE})
        antipode.append(elem)

    return HopfData(dim, KP_LABELS, mult, {0: ONE}, tuple(comult),
                    tuple([ONE] * dim), tuple(antipode))


def group_algebra(table) -> HopfData:
    """Group algebra of a finite group given by its multiplication table.

    table[i][j] is the index of g_i g_j.  Delta(g) = g (x) g, S(g) = g^{-1}.
    """
    n = len(table)
    if any(len(row) != n for row in table):
        raise NotAGroupError("table is not square")
    if any(not (0 <= table[i][j] < n) for i in range(n) for j in range(n)):
        raise NotAGroupError("entries out of range")
    identity = None
    for e in range(n):
        if all(table[e][g] == g and table[g][e] == g for g in range(n)):
            identity = e
            break
    if identity is None:
        raise NotAGroupError("no identity element")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    raise NotAGroupError(f"not associative at {(i, j, k)}")
    inverse = [None] * n
    for g in range(n):
        for h in range(n):
            if table[g][h] == identity and table[h][g] == identity:
                inverse[g] = h
                break
        if inverse[g] is None:
            raise NotAGroupError(f"element {g} has no inverse")
    labels = tuple(f"g{i}" for i in range(n))
    mult = tuple(tuple({table[i][j]: ONE} for j in range(n)) for i in range(n))
    comult = tuple({(i, i): ONE} for i in range(n))
    antipode = tuple({inverse[i]: ONE} for i in range(n))
    return HopfData(n, labels, mult, {identity: ONE}, comult,
                    tuple([ONE] * n), antipode)


def trivial_hopf() -> HopfData:
    return group_algebra([[0]])


def left_mult_matrix(H: HopfData, i: int):
    """Matrix of left multiplication by e_i (columns indexed by the basis)."""
    mat = [[ZERO] * H.dim for _ in range(H.dim)]
    for j in range(H.dim):
        for k, c in H.mult[i][j].items():
            mat[k][j] = c
    return mat


def integral(H: HopfData) -> dict:
    """The two-sided integral normalized by counit 1.

    Solves x L = eps(x) L for all basis x by an exact stacked nullspace
    computation; two-sidedness is asserted afterwards.
    """
    rows = []
    for i in range(H.dim):
        li = left_mult_matrix(H, i)
        for r in range(H.dim):
            row = list(li[r])
            row[r] = row[r] - H.counit[i]
            rows.append(row)
    null = kernel_subspace(rows, H.dim)
    if null.dim == 0:
        raise NoIntegralError("no left integral: malformed Hopf data")
    chosen = None
    for vec in null.basis:
        eps = sum((c * H.counit[i] for i, c in enumerate(vec)), ZERO)
        if eps:
            chosen = [c / eps for c in vec]
            break
    if chosen is None:
        raise NotSemisimpleError("every integral has counit zero")
    lam = {i: c for i, c in enumerate(chosen) if c}
    for i in range(H.dim):
        want = {k: H.counit[i] * c for k, c in lam.items() if H.counit[i] * c}
        if h_mult(H, lam, {i: ONE}) != want:
            raise NotSemisimpleError("integral is not two-sided")
    return lam
