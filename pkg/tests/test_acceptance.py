"""Acceptance gate: one test per acceptance criterion, in order.

Each test prints a single PASS line on success (visible with -v through the
test id, and explicitly via the printed summary when run with -s or -rA).
"""

import itertools
import json
import random
import time

from smashcoh.cochain import Cochain, CochainAlgebra
from smashcoh.cohomology import (ClassSolver, class_equal, cohomology_at,
                                 invariants)
from smashcoh.cli import run_compute, run_tables
from smashcoh.hopf import (KP_LABELS, check_hopf_axioms, h_counit, integral,
                           kac_paljutkin, trivial_hopf)
from smashcoh.kacqp import (EXCEPTIONAL_LABELS, PRINTED_SIGN_DEVIATIONS,
                            canonical, expected_cup, kacqp_context,
                            named_basis, named_cochain,
                            reduction_identity_deg1, reduction_identity_deg2)
from smashcoh.koszul import KoszulDual, koszul_complex_check
from smashcoh.oracles import (centralizer_dims, full_dims_oracle,
                              invariant_dims_oracle)
from smashcoh.qalgebra import (HActionOnA, monomials_of_degree, quantum_plane)
from smashcoh.rationals import ONE, ZERO, Rat
from smashcoh.scenario import builtin_scenario

IDX = {lab: k for k, lab in enumerate(KP_LABELS)}
H1 = (IDX["z"], IDX["xz"], IDX["yz"], IDX["xyz"])
Q_VALUES = (Rat(1), Rat(2), Rat(3), Rat(-1))

_ctx_cache = {}


def ctx_at(q):
    if q not in _ctx_cache:
        _ctx_cache[q] = kacqp_context(q)
    return _ctx_cache[q]


def _passed(n, msg):
    print(f"criterion {n}: PASS - {msg}")


def _rand_cochain(ctx, rng, m):
    terms = {}
    for _ in range(3):
        di = rng.randrange(ctx.dual_dim(m))
        mons = monomials_of_degree(ctx.n, rng.randrange(4))
        e = mons[rng.randrange(len(mons))]
        h = rng.randrange(ctx.hopf.dim)
        terms[(di, e, h)] = Rat(rng.randint(-4, 4) or 1)
    return Cochain(m, terms)


def _check_dims(q, kind):
    ctx = ctx_at(q)
    lam = integral(ctx.hopf)
    for w in range(-2, 11):
        strand = ctx.weight_strand(w)
        for m in range(3):
            basis = cohomology_at(ctx, strand, m)
            if kind == "full":
                assert basis.dim == full_dims_oracle(m, w), (q, m, w)
            else:
                inv = invariants(ctx, basis, lam)
                assert inv.dim == invariant_dims_oracle(m, w), (q, m, w)


def _check_tables(q, index_max=2):
    """All cup products of named classes match the derived closed form;
    returns the set of entries that deviate from the reference tables."""
    ctx = ctx_at(q)
    idx = range(index_max + 1)
    solvers = {}

    def canon(fam):
        seen = []
        for f in (1, 2, 3, 4):
            for i, j in itertools.product(idx, idx):
                lab, sg = canonical(fam, f, i, j)
                if lab is not None and sg == ONE and lab not in seen:
                    seen.append(lab)
        return seen

    cols_eps = canon("eps")
    cols_eta = [f"eta{g}[{i},{j}]" for g in (1, 2, 3, 4)
                for i in idx for j in idx]
    rows = canon("eps") + canon("eta") + canon("om") + list(EXCEPTIONAL_LABELS)
    deviations = set()
    for la in rows:
        cols = cols_eps + (cols_eta if la.startswith("eta") else [])
        for lb in cols:
            ca, cb = named_cochain(q, la), named_cochain(q, lb)
            prod = ctx.product(ca, cb)
            key = (prod.m, ca.weight() + cb.weight())
            if key not in solvers:
                solvers[key] = ClassSolver(ctx, named_basis(ctx, q, *key))
            sv = solvers[key]
            got = {sv.basis.labels[k]: c
                   for k, c in enumerate(sv.solve(prod)) if c}
            assert got == expected_cup(la, lb), (q, la, lb, got)
            if got != expected_cup(la, lb, as_printed=True):
                deviations.add((la, lb))
    return deviations


def _check_identities(q):
    ctx = ctx_at(q)
    bases = {}
    for i in range(3):
        for j in range(3):
            for h in H1:
                lhs, rhs = reduction_identity_deg1(q, i, j, h)
                key = (1, lhs.weight())
                if key not in bases:
                    bases[key] = cohomology_at(
                        ctx, ctx.weight_strand(key[1]), 1)
                assert class_equal(ctx, bases[key], lhs, rhs), (q, 1, i, j, h)
                lhs, rhs = reduction_identity_deg2(q, i, j, h)
                key = (2, lhs.weight())
                if key not in bases:
                    bases[key] = cohomology_at(
                        ctx, ctx.weight_strand(key[1]), 2)
                assert class_equal(ctx, bases[key], lhs, rhs), (q, 2, i, j, h)


def test_criterion_01_hopf_axioms_and_integral():
    t0 = time.time()
    H = kac_paljutkin()
    rep = check_hopf_axioms(H)
    assert rep.passed, rep.failures[:5]
    lam = integral(H)
    assert lam == {k: Rat(1, 8) for k in range(8)}
    assert h_counit(H, lam) == ONE
    elapsed = time.time() - t0
    assert elapsed < 1.0, elapsed
    _passed(1, f"Hopf axioms and integral 1/8-average in {elapsed:.2f}s")


def test_criterion_02_koszul_dual_and_exactness():
    t0 = time.time()
    A = quantum_plane()
    dual = KoszulDual(A, 4)
    assert [dual.dim(m) for m in range(4)] == [1, 2, 1, 0]
    u, v = [ONE, ZERO], [ZERO, ONE]
    for g in (u, v):
        _, sq = dual.multiply(1, g, 1, g)
        assert not any(sq)
    _, uv = dual.multiply(1, u, 1, v)
    _, vu = dual.multiply(1, v, 1, u)
    assert any(uv) and uv == vu
    rep = koszul_complex_check(A, m_max=4, weight_max=6)
    assert rep.dsquared_ok and rep.exact, rep.homology
    elapsed = time.time() - t0
    assert elapsed < 5.0, elapsed
    _passed(2, f"dual dims (1,2,1,0), relations, exact strands in {elapsed:.2f}s")


def test_criterion_03_dg_structure():
    ctx = ctx_at(Rat(2))
    for w in range(-3, 13):
        for m in range(ctx.top):
            for key in ctx.strand_basis(w, m):
                c = Cochain(m, {key: ONE})
                assert ctx.differential(ctx.differential(c)).is_zero(), (w, m)
    rng = random.Random(0)
    for _ in range(100):
        m1, m2 = rng.randrange(ctx.top), rng.randrange(ctx.top)
        x, y = _rand_cochain(ctx, rng, m1), _rand_cochain(ctx, rng, m2)
        lhs = ctx.differential(ctx.product(x, y))
        rhs = ctx.product(ctx.differential(x), y).plus(
            ctx.product(x, ctx.differential(y)).scaled(Rat(-1) ** m1))
        assert lhs == rhs
    for _ in range(50):
        c = _rand_cochain(ctx, rng, rng.randrange(ctx.top))
        for k in range(ctx.hopf.dim):
            h = {k: ONE}
            assert ctx.h_act(ctx.differential(c), h) == \
                ctx.differential(ctx.h_act(c, h))
    _passed(3, "d^2=0 (w<=12), Leibniz (100 pairs), action commutes with d")


def test_criterion_04_pre_invariant_dimensions():
    _check_dims(Rat(2), "full")
    _passed(4, "full cohomology dims match family enumeration, w in -2..10")


def test_criterion_05_invariant_dimensions():
    ctx = ctx_at(Rat(2))
    lam = integral(ctx.hopf)
    _check_dims(Rat(2), "invariant")
    spot = {}
    for (m, w) in ((2, -2), (2, 0), (0, 0)):
        basis = cohomology_at(ctx, ctx.weight_strand(w), m)
        spot[(m, w)] = invariants(ctx, basis, lam).dim
    assert spot == {(2, -2): 5, (2, 0): 1, (0, 0): 3}
    _passed(5, "invariant dims match the named-class enumeration; "
               "(m=2,w=-2)=5, (m=2,w=0)=1, (m=0,w=0)=3")


def test_criterion_06_cup_tables():
    deviations = _check_tables(Rat(2), index_max=2)
    # every deviation from the reference tables is one of the documented
    # second-term sign flips in the eps4 column; both coefficients verified
    documented = {(r, rf, cf) for r, rf, cf in PRINTED_SIGN_DEVIATIONS}
    for la, lb in deviations:
        head = la.split("[")[0]
        fam, f = head[:-1], int(head[-1])
        g = int(lb.split("[")[0][-1])
        assert (fam, f, g) in documented, (la, lb)
        assert lb.startswith("eps")
    _passed(6, "all structure constants match the derived tables exactly; "
               f"{len(deviations)} reference entries deviate only by the "
               "documented second-term sign in the eps4 column (both "
               "coefficients reported by the tables pipeline)")


def test_criterion_07_class_identities():
    _check_identities(Rat(2))
    _passed(7, "both reduction identities hold as classes for i,j<=2 and "
               "all four H1 basis elements")


def test_criterion_08_q_robustness():
    for q in Q_VALUES:
        if q == Rat(2):
            continue  # covered by criteria 4-7
        _check_dims(q, "full")
        _check_dims(q, "invariant")
        _check_identities(q)
        devs = _check_tables(q, index_max=2)
        assert devs == _check_tables(Rat(2), index_max=2)
    _passed(8, "criteria 4-7 pass identically for q in {1, 2, 3, -1}")


def test_criterion_09_trivial_hopf_centralizer():
    A = quantum_plane()
    H = trivial_hopf()
    act = HActionOnA(A, H, (((ONE, ZERO), (ZERO, ONE)),))
    ctx = CochainAlgebra(act)
    lam = integral(H)
    for w in range(0, 11):
        strand = ctx.weight_strand(w)
        basis = cohomology_at(ctx, strand, 0)
        assert basis.dim == centralizer_dims(A, w), w
        # with the trivial Hopf algebra, invariants are everything
        for m in range(3):
            b = cohomology_at(ctx, strand, m)
            assert invariants(ctx, b, lam).dim == b.dim, (m, w)
    _passed(9, "trivial-Hopf degree-0 cohomology equals the brute-force "
               "centralizer for w<=10; full and invariant coincide")


def test_criterion_10_determinism():
    s = builtin_scenario(Rat(2))
    r1 = json.dumps(run_compute(s, weight_max=4, threads=1), sort_keys=True)
    r3 = json.dumps(run_compute(s, weight_max=4, threads=3), sort_keys=True)
    assert r1 == r3
    t1 = json.dumps(run_tables(s, index_max=1, threads=1), sort_keys=True)
    t2 = json.dumps(run_tables(s, index_max=1, threads=2), sort_keys=True)
    assert t1 == t2
    _passed(10, "reports byte-identical across thread counts")
