import math

import pytest

import dyadicbump as db


def test_young_function():
    a = db.YoungFunction.power(2.0)
    assert a(3.0) == pytest.approx(9.0)
    assert a.conjugate(2.0) == pytest.approx(1.0, abs=1e-9)
    assert a.inverse(4.0) == pytest.approx(2.0, abs=1e-9)
    assert db.YoungFunction.log_bump(2.0, 1.0).bp_verdict(2.0) == "member"
    assert db.YoungFunction.power(2.0).bp_verdict(2.0) == "non-member"
    with pytest.raises(Exception):
        db.YoungFunction.power(1.0)


def test_domain_and_norms():
    d = db.DyadicDomain(2, [1.0, 2.0, 3.0, 4.0])
    f = db.GridFunction([1.0, 0.0, 2.0, 0.0])
    root = db.CubeId(0, 0, 0)
    assert d.integrate(f, root) == pytest.approx(7.0)
    assert d.average(f, root) == pytest.approx(0.7)
    assert db.lp_norm_on_cube(d, f, root, 2.0) == pytest.approx(math.sqrt(1.3))
    assert db.orlicz_norm_on_cube(d, f, root, db.YoungFunction.power(2.0)) == pytest.approx(
        math.sqrt(1.3), abs=1e-9
    )


def test_maximal_and_sparse():
    d = db.DyadicDomain(2, [1.0, 2.0, 3.0, 4.0])
    f = db.GridFunction([1.0, 0.0, 2.0, 0.0])
    m = db.maximal_hl(d, f)
    assert [m[i] for i in range(4)] == pytest.approx([1.0, 1.2, 2.0, 6.0 / 7.0])

    s = db.build_cz_sparse(d, f, 2.0)
    ok, worst = db.verify_sparsity(d, s)
    assert ok and worst <= 0.5 + 1e-12
    t = db.sparse_operator(d, s, f)
    assert all(t[i] >= 0.0 for i in range(4))
    assert db.ainfty_gamma(d, s, db.GridFunction.constant(d, 1.0)) <= 2.0 + 1e-12


def test_constants():
    d = db.DyadicDomain.uniform(2)
    w = db.GridFunction([4.0, 4.0, 1.0, 1.0])
    c = db.two_weight_ap_constant(d, w, w, 2.0)
    assert c.value == pytest.approx(25.0 / 16.0)
    assert c.witness.level == 0
    one = db.GridFunction.constant(d, 1.0)
    assert db.a1_constant(d, one) == pytest.approx(1.0)
    assert db.reverse_holder_constant(d, one, 2.0).value == pytest.approx(1.0)
    seq = db.power_weight_blowup(0.4, 0.2, 2.0, [6, 7, 8])
    assert seq[1] / seq[0] == pytest.approx(2.0**0.2)


def test_rubio_certification():
    d = db.DyadicDomain.uniform(5)
    cfg = db.RdFConfig(2.0, 3.0)
    h = db.GridFunction.constant(d, 1.0)
    r = db.rubio_operator(d, h, cfg)
    assert r[0] == pytest.approx(8.0 / 7.0)
    rep = db.certify_properties(d, db.GridFunction.lognormal(d, 9), cfg)
    assert rep.certified()
    assert rep.norm_ratio <= 2.0 ** (2.0 / 3.0) + 1e-6


def test_theorem_checks():
    s1 = db.verify_step1(seed=11, depth=6)
    assert s1.passed and s1.lhs <= s1.rhs * (1 + 1e-8)
    mt = db.verify_main(seed=11, depth=6, preset="mq-pair")
    assert mt.passed and mt.tight_pass and mt.coarse_pass


def test_acceptance_subset():
    results = db.run_acceptance(scale=0.02, max_depth=10, jobs=2, only=[1, 2])
    assert [r["id"] for r in results] == [1, 2]
    assert all(r["pass"] for r in results)
