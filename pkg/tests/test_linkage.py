import pytest

from defosc import (
    DomainError,
    LinkInput,
    PoleError,
    check_link_consistency,
    hg_for_two_sided,
    link_table,
    mu_for_arik_coon_target,
    mu_from_g_match,
    mu_from_h_match,
    mu_from_q,
    q_and_pn_from_mu,
    q_from_mu,
    q_from_p,
)

GRID = (0.5, 0.9, 1.1, 2.0)


def rel_gap(a: float, b: float) -> float:
    return abs(a - b) / max(1.0, abs(a), abs(b))


# ---------------------------------------------------------------------------
# the worked point: qb=2, pb=1, p=1, level 0
# ---------------------------------------------------------------------------


def test_worked_point_q():
    assert q_from_p(2.0, 1.0, 1.0, 0) == 4.625  # 37/8


def test_worked_point_mu_along_every_route():
    link = LinkInput(qb=2.0, pb=1.0, q=4.625, p=1.0, level=0)
    assert mu_from_h_match(link) == 8.0
    assert mu_from_g_match(link) == 8.0
    assert mu_from_q(2.0, 1.0, 4.625, 0) == 8.0
    assert q_from_mu(2.0, 1.0, 1.0, 8.0, 0) == 4.625


def test_worked_point_inversion():
    q, pn = q_and_pn_from_mu(2.0, 1.0, 8.0, 0)
    assert q == 4.625
    assert pn == 1.0


def test_worked_point_reaches_the_oscillator_target():
    pair = hg_for_two_sided(2.0, 1.0, 8.0)
    assert pair.h(0) == 1.0
    assert pair.g(0) == 4.625


def test_undeformed_point_gives_zero_mu():
    link = LinkInput(qb=1.0, pb=1.0, q=1.0, p=1.0, level=3)
    assert mu_from_h_match(link) == 0.0
    q, pn = q_and_pn_from_mu(1.0, 1.0, 0.0, 0)
    assert q == 1.0
    assert pn == 1.0


# ---------------------------------------------------------------------------
# loop closure
# ---------------------------------------------------------------------------


def test_loop_closes_on_the_parameter_grid():
    for qb in GRID:
        for pb in GRID:
            for p in GRID:
                for level in range(0, 9, 2):
                    report = check_link_consistency(qb, pb, p, level)
                    assert report.passed, (qb, pb, p, level, report.per_state)


def test_consistency_report_shape():
    report = check_link_consistency(2.0, 1.0, 1.0, 0)
    assert report.passed
    assert len(report.per_state) == 8
    assert report.max_abs_residual <= 1e-10


def test_float_routes_agree_where_well_conditioned():
    # moderate deformation: the float formulas close the loop on their own
    for qb, pb, p in [(1.1, 0.9, 1.1), (0.9, 1.1, 0.5), (2.0, 1.0, 1.0)]:
        for level in range(4):
            q = q_from_p(qb, pb, p, level)
            link = LinkInput(qb=qb, pb=pb, q=q, p=p, level=level)
            mu = mu_from_h_match(link)
            assert rel_gap(mu_from_g_match(link), mu) <= 1e-10
            assert rel_gap(mu_from_q(qb, pb, q, level), mu) <= 1e-10
            assert rel_gap(q_from_mu(qb, pb, p, mu, level), q) <= 1e-10
            q47, pn47 = q_and_pn_from_mu(qb, pb, mu, level)
            assert rel_gap(q47, q) <= 1e-10
            assert rel_gap(pn47, p**level) <= 1e-10


def test_n_dependence_witness():
    # with the ratio away from one, the matching mu genuinely moves with
    # the level: the constant-mu reading of the two-sided relation cannot
    # reproduce the symmetric oscillator
    for qb in GRID:
        for pb in GRID:
            if qb == pb:
                continue
            for p in GRID:
                mu0 = mu_from_h_match(LinkInput(qb=qb, pb=pb, q=1.0, p=p, level=0))
                mu1 = mu_from_h_match(LinkInput(qb=qb, pb=pb, q=1.0, p=p, level=1))
                assert abs(mu1 - mu0) > 1e-6


def test_q_also_depends_on_the_level():
    for qb, pb in [(2.0, 1.0), (0.5, 2.0)]:
        assert abs(q_from_p(qb, pb, 1.0, 1) - q_from_p(qb, pb, 1.0, 0)) > 1e-6


# ---------------------------------------------------------------------------
# reduced cases
# ---------------------------------------------------------------------------


def test_ratio_one_limit_of_mu_from_q():
    # mu -> 2 qb (q - 1)/(q + 1)
    qb = 1.4
    for q in (0.7, 1.3, 2.0):
        for eps in (1e-8, -1e-8):
            pb = qb / (1.0 + eps)
            want = 2.0 * qb * (q - 1.0) / (q + 1.0)
            assert rel_gap(mu_from_q(qb, pb, q, 3), want) <= 1e-6


def test_ratio_one_limit_of_q_from_p():
    # q -> -1 + 2 qb p**N
    qb = 1.4
    for p in (0.5, 2.0):
        for level in (0, 2, 5):
            pb = qb / (1.0 + 1e-8)
            want = -1.0 + 2.0 * qb * p**level
            assert rel_gap(q_from_p(qb, pb, p, level), want) <= 1e-6


def test_ratio_one_mu_through_p_alone():
    # combining both ratio-one limits: mu = 2 (qb - p**-N)
    qb = 1.3
    for p in (0.5, 2.0):
        for level in range(4):
            q = q_from_p(qb, qb, p, level)
            mu = mu_from_h_match(LinkInput(qb=qb, pb=qb, q=q, p=p, level=level))
            want = 2.0 * (qb - p ** (-level))
            assert rel_gap(mu, want) <= 1e-12


def test_mu_vanishes_when_the_target_is_undeformed():
    # p**-N -> qb together with ratio one sends mu to zero
    qb = pb = 1.3
    level = 2
    p = qb ** (-1.0 / level)
    q = q_from_p(qb, pb, p, level)
    mu = mu_from_h_match(LinkInput(qb=qb, pb=pb, q=q, p=p, level=level))
    assert abs(mu) <= 1e-12
    assert rel_gap(q, 1.0) <= 1e-12


def test_reciprocal_ratio_simplification():
    # q = 1/ratio collapses mu to qb (ratio - 1)(ratio**2 + 1) ratio**(4N-2)
    for qb, pb in [(2.0, 1.0), (0.5, 2.0), (1.1, 0.9)]:
        ratio = qb / pb
        for level in range(4):
            got = mu_from_q(qb, pb, 1.0 / ratio, level)
            want = qb * (ratio - 1.0) * (ratio**2 + 1.0) * ratio ** (4 * level - 2)
            assert rel_gap(got, want) <= 1e-12


def test_arik_coon_target():
    assert mu_for_arik_coon_target(2.0, 1.0, 0) == 8.0
    assert mu_for_arik_coon_target(1.0, 1.0, 5) == 0.0
    # the matching mu really flattens h to one
    for qb, pb in [(2.0, 1.0), (0.5, 2.0), (1.1, 0.9)]:
        for level in range(5):
            mu = mu_for_arik_coon_target(qb, pb, level)
            pair = hg_for_two_sided(qb, pb, mu)
            assert rel_gap(pair.h(level), 1.0) <= 1e-12


# ---------------------------------------------------------------------------
# poles and validation
# ---------------------------------------------------------------------------


def test_mu_from_q_pole():
    with pytest.raises(PoleError):
        mu_from_q(2.0, 1.0, -1.0, 0)


def test_inversion_pole():
    # mu equal to the denominator term hits the declared singularity
    mu = 1.0 * 2.0 * (1.0 + 4.0)  # pb ratio (1 + ratio**2) at level 0
    with pytest.raises(PoleError):
        q_and_pn_from_mu(2.0, 1.0, mu, 0)


def test_link_input_validation():
    with pytest.raises(DomainError):
        LinkInput(qb=0.0, pb=1.0, q=1.0, p=1.0, level=0)
    with pytest.raises(DomainError):
        LinkInput(qb=1.0, pb=1.0, q=1.0, p=1.0, level=-1)
    with pytest.raises(DomainError):
        q_from_p(1.0, 1.0, 1.0, -2)


# ---------------------------------------------------------------------------
# the per-level table
# ---------------------------------------------------------------------------


def test_link_table_worked_row():
    rows = link_table(2.0, 1.0, 1.0, 0)
    assert len(rows) == 1
    row = rows[0]
    assert row["n"] == 0
    assert row["q"] == 4.625
    assert row["mu_h_match"] == 8.0
    assert row["mu_g_match"] == 8.0
    assert row["mu_from_q"] == 8.0
    assert row["p_pow_n"] == 1.0
    assert row["consistent"] is True


def test_link_table_is_consistent_across_levels():
    rows = link_table(1.1, 0.9, 1.1, 6)
    assert len(rows) == 7
    assert all(row["consistent"] for row in rows)
    # the level dependence is visible in the table itself
    q_values = [row["q"] for row in rows]
    assert len(set(q_values)) == len(q_values)
