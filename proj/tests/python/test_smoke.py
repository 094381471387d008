from fractions import Fraction
from pathlib import Path

import pytest

import ribbon

DATA = Path(__file__).resolve().parent.parent / "data"


def test_cycle_polynomial_matches_closed_form():
    for n in range(1, 9):
        g = ribbon.generate("cycle", n)
        assert ribbon.pdg_polynomial(g) == ([2, 2**n - 2] if n > 1 else [2])
        assert ribbon.closed_form_pdg("cycle", n) == ribbon.pdg_polynomial(g, method="construct")


def test_decode_and_surface_stats():
    g = ribbon.RibbonGraph.decode((DATA / "c2.rg").read_text())
    assert (g.vertex_count, g.edge_count) == (2, 2)
    s = ribbon.surface_stats(g)
    assert (s.v, s.e, s.f, s.c, s.genus) == (2, 2, 2, 1, 0)
    assert g.encode() == (DATA / "c2.rg").read_text()


def test_twisted_loop_from_rotations():
    b1 = ribbon.RibbonGraph([[(0, 0), (0, 1)]], [True])
    s = ribbon.surface_stats(b1)
    assert not s.orientable
    assert s.genus is None
    assert s.euler_genus == 1
    with pytest.raises(ribbon.PreconditionError):
        ribbon.pdg_polynomial(b1)


def test_partial_dual_shares_the_polynomial():
    g = ribbon.generate("necklace", 2)
    poly = ribbon.pdg_polynomial(g)
    d = ribbon.partial_dual(g, [0, 3, 4])
    assert ribbon.pdg_polynomial(d, method="construct") == poly
    assert ribbon.equivalent_embedding(ribbon.partial_dual(d, [0, 3, 4]), g)
    assert ribbon.genus_of_partial_dual(g, [0, 3, 4]) == ribbon.surface_stats(d).genus


def test_euler_counterexample():
    g = ribbon.generate("join_with_bm", 2, 1)
    coeffs = ribbon.euler_polynomial(g)
    assert coeffs == [0, 4, 0, 4]
    assert ribbon.spectrum(coeffs) == ([1, 3], False)


def test_big_coefficients_are_python_ints():
    q = ribbon.closed_form_pdg("fan_q", 40)
    assert sum(q) == 2 ** (2 * 40 - 1)


def test_moments_are_exact():
    assert ribbon.moments([2, 6], 3) == (Fraction(3, 4), Fraction(3, 16))
    rows = ribbon.asymptotic_suite("necklace", 3)
    assert rows[0][:3] == (1, Fraction(3, 4), Fraction(3, 16))


def test_audit_and_max_genus():
    reports = ribbon.audit("deletion", seed=3, trials=5, max_edges=7)
    assert len(reports) == 5
    assert all(r["agree"] for r in reports)
    assert ribbon.max_pd_genus(ribbon.generate("cycle", 5), "xi") == 1


def test_cli_entry_point():
    code, out, err = ribbon.run_cli(["pdg", "--family", "cycle", "--n", "5"])
    assert (code, out, err) == (0, "2 + 30*z\n", "")
    code, _, err = ribbon.run_cli(["pdg", "--file", str(DATA / "bad_duplicate_end.rg")])
    assert code == 3
    assert "line 4" in err


def test_parse_error_is_raised():
    with pytest.raises(ribbon.ParseError):
        ribbon.RibbonGraph.decode("ribbongraph 2\n")
