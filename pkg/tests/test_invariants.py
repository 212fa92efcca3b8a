import pytest

from braidshadow.diagram import (
    BridgeParams,
    assemble,
    bridge_params,
    mini_stabilize,
    pairwise_links,
)
from braidshadow.factorization import standard_factorization
from braidshadow.invariants import (
    bennequin_check,
    euler_check,
    genus_expected,
    make_ledger,
    sl_sum_check,
    transverse_sl,
)
from braidshadow.words import BraidError, BraidWord, identity


def test_genus_expected_values():
    assert genus_expected(1) == 0
    assert genus_expected(2) == 0
    assert genus_expected(3) == 1
    assert genus_expected(5) == 6
    with pytest.raises(BraidError):
        genus_expected(0)


def test_euler_check_examples():
    assert euler_check(BridgeParams(4, 2, 2, 2, 0), 2)
    assert euler_check(BridgeParams(12, 3, 6, 3, 0), 3)
    assert not euler_check(BridgeParams(5, 2, 2, 2, 0), 2)


def test_transverse_sl():
    assert transverse_sl(identity(2)) == -2
    assert transverse_sl(identity(5)) == -5
    assert transverse_sl(identity(1)) == -1
    assert transverse_sl(BraidWord(3, (1, 2, -1))) == -2


def test_sl_sum_check_examples():
    assert sl_sum_check(BridgeParams(4, 2, 2, 2, 0), 2)
    assert sl_sum_check(BridgeParams(12, 3, 6, 3, 0), 3)
    # stabilization cancels: (12+s; 3, 6+s, 3)
    for s in (0, 1, 2, 7, 40):
        assert sl_sum_check(BridgeParams(12 + s, 3, 6 + s, 3, s), 3)


def test_bennequin_check_cases():
    p = BridgeParams(6, 2, 2, 2, 0)
    rep = bennequin_check(p, (-2, -2, -2))
    assert rep.ok and rep.equalities == (True, True, True)
    rep = bennequin_check(p, (-3, -2, -2))
    assert rep.ok and rep.equalities == (False, True, True)
    rep = bennequin_check(p, (-1, -2, -2))
    assert not rep.ok


@pytest.mark.parametrize("d", [2, 3, 4])
def test_ledger_all_ok_for_standard_diagrams(d):
    f = standard_factorization(d)
    diag = mini_stabilize(assemble(f))
    params = bridge_params(diag)
    links = pairwise_links(diag, f)
    ledger = make_ledger(params, d, links)
    assert ledger.all_ok
    assert ledger.genus_expected == (d - 1) * (d - 2) // 2
    assert ledger.euler_expected == 3 * d - d * d
    assert ledger.sl == (-params.c1, -params.c2, -params.c3)
    # genus consistency with the parameter tuple
    assert 2 - params.euler() == 2 * ledger.genus_expected


def test_ledger_flags_failures():
    bad = BridgeParams(5, 2, 2, 2, 0)
    ledger = make_ledger(bad, 2)
    assert not ledger.checks["euler"]
    assert not ledger.all_ok


def test_ledger_for_singular_input_skips_smooth_identities():
    ledger = make_ledger(BridgeParams(2, 2, 1, 1, 0), 2, smooth=False)
    assert "euler" not in ledger.checks
    assert ledger.all_ok
