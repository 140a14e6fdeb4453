"""Catalog lookups, the presentation file format, and the command line."""

import pytest

from foxcalc.catalog import (
    YOSHIKAWA_KEYS,
    catalog_lookup,
    load_presentation,
    parse_presentation_file,
    theta_presentation,
    theta_wirtinger_presentation,
)
from foxcalc.cli import main
from foxcalc.presentations import ParseError, parse_word


def test_theta_presentation_structure():
    pres = theta_presentation(5)
    assert pres.s == 5 and pres.t == 1
    gens = pres.gen_index
    want = parse_word(
        "x1 x5 x1^-1 x2 x1 x2^-1 x3 x2 x3^-1 x4 x3 x4^-1 x5 x4 x5^-1", gens
    )
    assert pres.relators[0] == want


def test_theta_wirtinger_structure():
    n = 4
    pres = theta_wirtinger_presentation(n)
    assert pres.s == 3 * n and pres.t == 2 * n + 1
    gens = pres.gen_index
    assert pres.relators[0] == parse_word("x1 x4 y1^-1 x4^-1", gens)
    assert pres.relators[n] == parse_word("z4 x1 x4^-1 x1^-1", gens)
    assert pres.relators[2 * n] == parse_word("z4 z1 z2 z3", gens)


def test_catalog_has_23_surface_links():
    assert len(YOSHIKAWA_KEYS) == 23
    for key in YOSHIKAWA_KEYS:
        entry = catalog_lookup(f"yoshikawa:{key}")
        assert entry.presentation.s >= 1
        # default alpha (all generators to t, order 2) validated on build
        assert entry.default_alpha is not None


def test_corrected_group_differs_from_its_partner():
    fixed = catalog_lookup("yoshikawa:9_1^1,-2").presentation
    assert fixed.render() == "< x, y | x y x y^-1, x^2 >"
    other = catalog_lookup("yoshikawa:8_1^-1,-1").presentation
    assert other.render() == "< x, y | x y x y^-1, x^-2 y^2 >"


def test_catalog_rejects_unknown_keys():
    for key in ("yoshikawa:3_1", "theta:2", "nonsense", "theta:x"):
        with pytest.raises(ParseError):
            catalog_lookup(key)


def test_presentation_file_format(tmp_path):
    text = """# trefoil-like example
group demo
gens x1 x2
rel x1 x2 x1 x2^-1 x1^-1 x2^-1
"""
    pres, name = parse_presentation_file(text)
    assert name == "demo"
    assert pres.s == 2 and pres.t == 1
    path = tmp_path / "demo.txt"
    path.write_text(text)
    loaded, _ = load_presentation(str(path))
    assert loaded == pres


def test_presentation_file_errors():
    with pytest.raises(ParseError):
        parse_presentation_file("rel x\n")  # no gens line
    with pytest.raises(ParseError):
        parse_presentation_file("gens x\nbogus y\n")
    with pytest.raises(ParseError):
        parse_presentation_file("gens x\ngens y\n")


def test_load_presentation_inline():
    pres, entry = load_presentation("< a, b | a b a^-1 b^-1 >")
    assert pres.generators == ("a", "b")
    assert entry is None


# ---------------------------------------------------------------------------
# CLI.


def test_cli_ideal_command(capsys):
    rc = main(
        [
            "ideal",
            "< x1, x2 | x1 x2 x1 x2^-1 x1^-1 x2^-1 >",
            "--alpha",
            "x1=t,x2=t@t^inf",
            "--d",
            "1",
        ]
    )
    out = capsys.readouterr().out
    assert rc == 0
    assert "E_1 = (1-t+t^2)" in out


def test_cli_ideal_all_d(capsys):
    rc = main(["ideal", "theta:3", "--alpha", "x1=t,x2=t,x3=t^-2@t^inf", "--all-d"])
    out = capsys.readouterr().out.strip().splitlines()
    assert rc == 0
    assert out[0] == "E_0 = (0)"
    assert out[-1] == "E_3 = (1)"


def test_cli_table3(capsys):
    rc = main(["table3", "yoshikawa:0_1"])
    assert rc == 0
    assert capsys.readouterr().out.strip() == "{(0,1)_3}"


def test_cli_table3_json(capsys):
    import json

    rc = main(["table3", "yoshikawa:0_1", "--json"])
    assert rc == 0
    data = json.loads(capsys.readouterr().out)
    assert data["rows"] == [{"entries": ["0", "1"], "multiplicity": 3}]


def test_cli_table1(capsys):
    rc = main(["table1", "< x, y | >"])
    assert rc == 0
    assert capsys.readouterr().out.strip() == "{(1,1,1)_11}"


def test_cli_reps(capsys):
    rc = main(["reps", "yoshikawa:8_1"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "homomorphisms: 12" in out
    assert "conjugacy classes: 4" in out


def test_cli_twisted(capsys):
    rc = main(
        [
            "twisted",
            "theta:5",
            "--alpha",
            "x1=t,x2=t,x3=t,x4=t,x5=t^-4@t^inf",
            "--rho",
            "lemma36",
            "--d",
            "8",
        ]
    )
    out = capsys.readouterr().out
    assert rc == 0
    assert "E_8 = (1+t)" in out


def test_cli_verify(capsys):
    assert main(["verify", "theorem3.4", "--n-max", "5"]) == 0
    assert main(["verify", "lemma3.6", "--n-list", "5,7"]) == 0
    capsys.readouterr()


def test_cli_parse_errors_exit_2(capsys):
    assert main(["ideal", "yoshikawa:3_1", "--alpha", "x=t@t^2"]) == 2
    assert main(["ideal", "< x | >", "--alpha", "x=t"]) == 2  # missing target
    capsys.readouterr()


def test_cli_bad_alpha_exit_1(capsys):
    # alpha that does not kill the relator: computation error
    assert main(["ideal", "< x | x^2 >", "--alpha", "x=t@t^inf"]) == 1
    capsys.readouterr()
