import io
import json
from contextlib import redirect_stderr, redirect_stdout

import pytest

from defosc.cli import main


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


# ---------------------------------------------------------------------------
# sf
# ---------------------------------------------------------------------------


def test_sf_harmonic_golden_csv():
    code, out, _ = run_cli("sf", "--model", "harmonic", "--n-max", "3")
    assert code == 0
    assert out == (
        "# command=sf\n"
        "# model=harmonic\n"
        "# n_max=3\n"
        "# format=csv\n"
        "n,phi\n"
        "0,0\n"
        "1,1\n"
        "2,2\n"
        "3,3\n"
    )


def test_sf_nonstd_q_first_level():
    code, out, _ = run_cli("sf", "--model", "nonstd-q", "--q", "2", "--n-max", "1")
    assert code == 0
    assert out.splitlines()[-1] == "1,0.20000000000000001"


def test_sf_json_round_trips():
    code, out, _ = run_cli(
        "sf", "--model", "nonstd-q", "--q", "2", "--n-max", "2", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["config"]["model"] == "nonstd-q"
    assert doc["config"]["q"] == 2.0
    assert doc["rows"][1] == {"n": 1, "phi": 0.2}
    assert len(doc["rows"]) == 3


def test_sf_rejects_bad_domain():
    code, _, err = run_cli("sf", "--model", "nonstd-q", "--q", "-1")
    assert code == 2
    assert "q" in err


def test_sf_names_the_missing_parameter():
    code, _, err = run_cli("sf", "--model", "nonstd-q")
    assert code == 2
    assert "--q" in err


def test_sf_rejects_unknown_model_before_computing():
    with pytest.raises(SystemExit) as exc:
        run_cli("sf", "--model", "not-a-model")
    assert exc.value.code == 2


# ---------------------------------------------------------------------------
# spectrum
# ---------------------------------------------------------------------------


def test_spectrum_harmonic():
    code, out, _ = run_cli("spectrum", "--model", "harmonic", "--n-max", "2")
    assert code == 0
    assert out.splitlines()[-3:] == ["0,0.5", "1,1.5", "2,2.5"]


def test_spectrum_scaled_harmonic_spacing():
    code, out, _ = run_cli(
        "spectrum", "--model", "nonstd-qp", "--q", "2", "--p", "2", "--n-max", "3"
    )
    assert code == 0
    assert out.splitlines()[-4:] == ["0,0.25", "1,0.75", "2,1.25", "3,1.75"]


def test_spectrum_two_sided_equal_ground_level():
    code, out, _ = run_cli(
        "spectrum", "--model", "two-sided-equal", "--qb", "2", "--pb", "1",
        "--n-max", "0", "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["rows"][0]["energy"] == pytest.approx(8.0 / 45.0, rel=1e-15)


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def test_verify_passes_and_exits_zero():
    code, out, _ = run_cli(
        "verify", "--relation", "q-ha", "--q", "1", "--dim", "16", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    row = doc["rows"][0]
    assert row["pass"] is True
    assert row["max_abs_residual"] <= 1e-12


def test_verify_two_sided_mu_zero():
    code, out, _ = run_cli(
        "verify", "--relation", "two-sided", "--qb", "2", "--pb", "0.5",
        "--mu", "0", "--dim", "32", "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["rows"][0]["pass"] is True


def test_verify_hg_and_commutator_relations():
    code, out, _ = run_cli(
        "verify", "--relation", "hg", "--q", "2", "--dim", "16", "--format", "json"
    )
    assert code == 0
    code, out, _ = run_cli(
        "verify", "--relation", "commutator-sf", "--model", "arik-coon",
        "--q", "2", "--dim", "16", "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["rows"][0]["pass"] is True


def test_verify_unattainable_tolerance_exits_one():
    code, out, _ = run_cli(
        "verify", "--relation", "q-ha", "--q", "2", "--dim", "16",
        "--tolerance", "1e-30",
    )
    assert code == 1
    assert "false" in out


def test_verify_alt_pairing_exits_one_when_deformed():
    code, _, _ = run_cli(
        "verify", "--relation", "two-sided", "--qb", "2", "--pb", "1",
        "--mu", "0.3", "--alt-pairing",
    )
    assert code == 1


# ---------------------------------------------------------------------------
# link
# ---------------------------------------------------------------------------


def test_link_worked_row():
    code, out, _ = run_cli("link", "--qb", "2", "--pb", "1", "--p", "1", "--n-max", "0")
    assert code == 0
    assert out.splitlines()[-2] == "n,q,mu_h_match,mu_g_match,mu_from_q,p_pow_n,consistent"
    assert out.splitlines()[-1] == "0,4.625,8,8,8,1,true"


def test_link_undeformed_rows():
    code, out, _ = run_cli(
        "link", "--qb", "1", "--pb", "1", "--p", "1", "--n-max", "2", "--format", "json"
    )
    assert code == 0
    for row in json.loads(out)["rows"]:
        assert row["q"] == 1.0
        assert row["mu_h_match"] == 0.0
        assert row["consistent"] is True


def test_link_ratio_one_mu_column():
    # mu = 2 (qb - p**-N) when qb = pb
    code, out, _ = run_cli(
        "link", "--qb", "1.3", "--pb", "1.3", "--p", "2", "--n-max", "4",
        "--format", "json",
    )
    assert code == 0
    for row in json.loads(out)["rows"]:
        want = 2.0 * (1.3 - 2.0 ** (-row["n"]))
        assert row["mu_h_match"] == pytest.approx(want, rel=1e-12)


def test_link_pole_exits_two():
    # at qb=2, pb=0.5, p=2 the float inversion loses the p-power term
    # beyond the double mantissa and hits its declared pole
    code, _, err = run_cli("link", "--qb", "2", "--pb", "0.5", "--p", "2", "--n-max", "8")
    assert code == 2
    assert "pole" in err.lower() or "denominator" in err.lower()


# ---------------------------------------------------------------------------
# limits
# ---------------------------------------------------------------------------


def test_limits_default_run_passes():
    code, out, _ = run_cli("limits", "--format", "json")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert len(rows) >= 8
    assert all(row["pass"] for row in rows)


def test_limits_zero_tolerance_exits_one():
    code, _, _ = run_cli("limits", "--tolerance", "0")
    assert code == 1


# ---------------------------------------------------------------------------
# output plumbing
# ---------------------------------------------------------------------------


def test_out_writes_the_file(tmp_path):
    target = tmp_path / "table.csv"
    code, out, _ = run_cli(
        "sf", "--model", "harmonic", "--n-max", "2", "--out", str(target)
    )
    assert code == 0
    assert out == ""
    assert target.read_text().endswith("2,2\n")


def test_numeric_cells_round_trip_exactly():
    _, out, _ = run_cli("sf", "--model", "cj", "--q", "1.7", "--p", "0.3", "--n-max", "6")
    from defosc import chakrabarti_jagannathan, sf_eval

    model = chakrabarti_jagannathan(1.7, 0.3)
    for line in out.splitlines():
        if line.startswith("#") or line.startswith("n,"):
            continue
        n, phi = line.split(",")
        assert float(phi) == sf_eval(model, int(n))


@pytest.mark.parametrize(
    "argv",
    [
        ("sf", "--model", "nonstd-qp", "--q", "1.7", "--p", "0.6", "--n-max", "12"),
        ("sf", "--model", "jannussis-mu", "--mu-tilde", "0.3", "--format", "json"),
        ("spectrum", "--model", "biedenharn-macfarlane", "--q", "1.3"),
        ("verify", "--relation", "qp-ha", "--q", "2", "--p", "0.5", "--format", "json"),
        ("link", "--qb", "1.1", "--pb", "0.9", "--p", "1.1", "--n-max", "5"),
        ("limits",),
    ],
)
def test_repeated_runs_are_byte_identical(argv):
    first = run_cli(*argv)
    second = run_cli(*argv)
    assert first == second
    assert first[0] == 0
