"""Direct links and the suspension linkage ladder."""

import pytest

from liccilab.linkage import (
    is_monomial_regular_sequence,
    verify_direct_link,
    verify_suspension_chain,
)
from liccilab.monomial import IdealError, Monomial, MonomialIdeal


def mono(*exps):
    return Monomial(exps)


def test_regular_sequence_predicate():
    assert is_monomial_regular_sequence([mono(1, 1, 0, 0), mono(0, 0, 1, 1)])
    assert not is_monomial_regular_sequence([mono(1, 1, 0), mono(0, 1, 1)])
    with pytest.raises(IdealError):
        is_monomial_regular_sequence([])
    with pytest.raises(IdealError):
        is_monomial_regular_sequence([mono(0, 0)])


def test_self_link_of_principal():
    # (x) is self-linked through (x^2): (x^2) : (x) = (x) on both sides.
    # The triple ((x), (x), (x)) is not a link: (x) : (x) is the unit ideal.
    I = MonomialIdeal(["x"], [(1,)])
    assert verify_direct_link(I, I, [mono(2)]).passed
    degenerate = verify_direct_link(I, I, [mono(1)])
    assert not degenerate.passed


def test_direct_link_symmetry():
    v = ["x", "y"]
    ci = [mono(2, 0), mono(0, 2)]
    m = MonomialIdeal(v, [(2, 0), (1, 1), (0, 2)])
    mm = MonomialIdeal(v, [(1, 0), (0, 1)])
    # (x^2, y^2) : m^2 = m and (x^2, y^2) : m = m^2
    assert verify_direct_link(m, mm, ci).passed
    assert verify_direct_link(mm, m, ci).passed


def test_broken_sequence_fails_cleanly():
    v = ["x", "y", "z"]
    I = MonomialIdeal(v, [(1, 1, 0), (0, 1, 1)])
    report = verify_direct_link(I, I, [mono(1, 1, 0), mono(0, 1, 1)])
    assert not report.passed
    assert report.checks[0].name == "regular_sequence"
    assert not report.checks[0].passed


def test_variable_pair_linked_through_their_product():
    v = ["x", "y"]
    a = MonomialIdeal(v, [(1, 0)])
    b = MonomialIdeal(v, [(0, 1)])
    assert verify_direct_link(a, b, [mono(1, 1)]).passed


def test_non_link_reported_not_raised():
    v = ["x", "y"]
    a = MonomialIdeal(v, [(1, 0), (0, 1)])
    b = MonomialIdeal(v, [(1, 0)])
    report = verify_direct_link(a, b, [mono(2, 0)])
    assert not report.passed
    failed = {c.name for c in report.failures()}
    assert "colon_by_second_gives_first" in failed or "heights_match" in failed


@pytest.mark.parametrize("n,t", [(2, 3), (2, 4), (2, 5), (3, 3), (3, 4)])
def test_suspension_chain_passes(n, t):
    report = verify_suspension_chain(n, t)
    assert report.passed, [c.name for c in report.failures()]


def test_suspension_chain_rung_count():
    # t = 5 walks k = 5, 3 and ends at the complete intersection I_1
    report = verify_suspension_chain(2, 5)
    rung_names = {c.name.split(":")[0] for c in report.checks if c.name.startswith("k=")}
    assert rung_names == {"k=5", "k=3"}
    assert any(c.name.startswith("terminal: I_1") for c in report.checks)
    # t = 4 walks k = 4 and ends at the linked complete intersection for I_2
    report = verify_suspension_chain(2, 4)
    rung_names = {c.name.split(":")[0] for c in report.checks if c.name.startswith("k=")}
    assert rung_names == {"k=4"}
    assert any(c.name.startswith("terminal: I_2") for c in report.checks)


def test_chain_matches_path_ideal_and_three_line_identity():
    report = verify_suspension_chain(2, 3)
    by_name = {c.name: c for c in report.checks}
    assert by_name["path_ideal_matches_display"].passed
    assert by_name["k=3: three-line identity J:I = J':I'"].passed


def test_chain_rejects_bad_parameters():
    with pytest.raises(IdealError):
        verify_suspension_chain(1, 3)
    with pytest.raises(IdealError):
        verify_suspension_chain(2, 2)
