import math

import pytest

import acw


def test_group_roundtrip():
    g = acw.Group([4, 6])
    x = g.encode([3, 5])
    assert g.decode(x) == [3, 5]
    assert g.add([3, 5], [2, 2]) == [1, 1]
    assert abs(g.char_eval([1, 0], [1, 0]) - 1j) < 1e-12


def test_entropy_and_distance():
    g = acw.Group([12])
    h = acw.Dist.uniform(g, [[0], [4], [8]])
    assert acw.entropy(h) == pytest.approx(math.log(3))
    assert acw.ruzsa_dist(h, h) == pytest.approx(0.0, abs=1e-12)
    p = acw.Dist(g, [([0], 1.0), ([1], 3.0)])
    assert p.mass([1]) == pytest.approx(0.75)
    assert acw.renyi(p, 0) == pytest.approx(math.log(2))
    d = acw.convolve(p, p, minus=True)
    assert len(d) == 3
    assert acw.fibring_application_check(p, p, 2) >= -1e-9


def test_doubling_and_tau():
    g = acw.Group([101])
    s = acw.doubling_constant(g, [[i] for i in range(10)])
    assert s["sumset_size"] == 19
    assert s["K"] == pytest.approx(1.9)
    trace = acw.minimize_tau(g, [[0], [1], [10], [11]], n_hi=3)
    taus = [trace["tau_start"]] + [st["tau_after"] for st in trace["steps"]]
    assert all(b < a - 1e-9 for a, b in zip(taus, taus[1:]))


def test_fourier():
    g = acw.Group([4])
    u = acw.Dist.uniform(g, [[0], [1]])
    vals = acw.dft(u)
    for a, v in enumerate(vals):
        assert abs(v - (1 + 1j ** (-a)) / 2) < 1e-12
    assert acw.spec(u, 0.7) == [[0], [1], [3]]


def test_bohr_and_bogolyubov():
    g = acw.Group([64, 64])
    b = acw.bohr_set(g, [[1, 0], [0, 1]], 0.25)
    assert [0, 0] in b
    assert all([(-x) % 64, (-y) % 64] in b for x, y in b)
    r = acw.weak_bogolyubov_global(acw.Group([257]), [[i] for i in range(64)])
    assert r["contained"] and r["margin_ok"]


def test_cover_certificate():
    sc = acw.scenario_ap(512, 32)
    g = acw.Group(sc["group"]["moduli"])
    cert = acw.freiman_cover(g, sc["set"])
    assert cert["schema"] == "acw-cert/1"
    assert cert["cover_valid"]
    assert len(cert["hypotheses"]) > 0


def test_calculus_and_binomial():
    rep = acw.verify_calculus(cases=20, seed=3, group_max=128)
    assert all(e["violations"] == 0 for e in rep.values())
    sc = acw.scenario_binomial(64)
    # Atoms below the mass floor are dropped from the far tails.
    assert 0 < len(sc["dist"]) <= 65
    assert sum(a["p"] for a in sc["dist"]) == pytest.approx(1.0)


def test_errors_surface():
    with pytest.raises(acw.AcwError):
        acw.Group([0])
    g = acw.Group([5])
    with pytest.raises(acw.AcwError):
        acw.Dist(g, [([0, 1], 1.0)])
