import pytest

import ircbounds as irc


def chx():
    return irc.ChannelSnr(s11=12, s12=2.5, s13=7, s21=3, s22=9, s23=4, s31=6)


def test_cap():
    assert irc.cap(100.0) == pytest.approx(3.3291057413759, abs=1e-12)
    assert irc.cap(0.0) == 0.0
    with pytest.raises(ValueError):
        irc.cap(-1.0)


def test_channel_roundtrip_and_validation():
    c = irc.channel_from_db(s11=20, s12=8, s31=-3)
    assert c.s11 == pytest.approx(100.0)
    assert irc.lin_to_db(c.s31) == pytest.approx(-3.0)
    with pytest.raises(ValueError):
        irc.ChannelSnr(s11=-2.0)


def test_region_geometry():
    r = irc.RateRegion([(1, 0, 2.0), (0, 1, 1.0), (1, 1, 2.5)])
    expected = [(0.0, 0.0), (2.0, 0.0), (2.0, 0.5), (1.5, 1.0), (0.0, 1.0)]
    got = r.vertices()
    assert len(got) == len(expected)
    for (r1, r2), (e1, e2) in zip(got, expected):
        assert r1 == pytest.approx(e1, abs=1e-12)
        assert r2 == pytest.approx(e2, abs=1e-12)
    assert r.contains(1.0, 0.9)
    assert not r.contains(2.0, 0.6)
    assert r.support(2, 1) == pytest.approx(4.5)
    outer = irc.RateRegion([(1, 0, 2.0), (0, 1, 2.0)])
    inner = irc.RateRegion([(1, 0, 1.0), (0, 1, 1.0)])
    assert irc.gap_per_dim(outer, inner) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        irc.RateRegion([(3, 1, 1.0)])


def test_bound_regions_nest():
    c = chx()
    outer = irc.outer_region(c)
    assert len(outer.planes()) == 20
    for inner in (
        irc.df_full_region(c),
        irc.df_partial_region(c),
        irc.cf_region(c),
        irc.hk_region(c),
    ):
        for r1, r2 in inner.vertices():
            assert outer.contains(r1, r2, 1e-9)


def test_objective_and_sweep():
    assert irc.cf_gap_objective(1.81) == pytest.approx(
        1.31772304925817, abs=1e-9
    )
    base = irc.channel_from_db(s11=20, s12=8, s13=20, s21=8, s22=20, s23=20)
    row = irc.sweep_row(base, 0.0)
    assert row["outer"] == pytest.approx(4.7473208, abs=1e-6)
    assert row["gap_cf"] == pytest.approx(0.552906739, abs=1e-6)


def test_audit_is_deterministic():
    a = irc.run_audit("cf", samples=200, seed=11)
    b = irc.run_audit("cf", samples=200, seed=11)
    assert a == b
    assert a["kept"] > 0
    assert sum(a["histogram"]) == a["kept"]
    assert a["max_gap"] <= 1.32 + 1e-2
    with pytest.raises(ValueError):
        irc.run_audit("bogus")


def test_fme_checks():
    assert irc.fme_builtin_names() == [
        "df-full",
        "df-partial",
        "cf-joint",
        "cf-single-1",
        "cf-single-2",
    ]
    out = irc.fme_check("cf-joint")
    assert out["ok"]
    assert len(out["matched"]) == 7
    assert len(out["extra"]) == 2
    assert out["missing"] == []
