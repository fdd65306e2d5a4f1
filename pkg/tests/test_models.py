import pytest

from tiltquiver.models import (
    AInterval,
    DIndec,
    a_dim,
    a_hom_nonzero,
    a_indecs,
    a_tau,
    ar_translate,
    compatible,
    d_dim,
    d_indecs,
    d_matrices,
    d_tau,
    ext_vanish_pair,
    model_dim,
    render,
)


def test_compatible_examples():
    assert not compatible((0, 1), (1, 2))  # meet at 1, neither nested
    assert compatible((0, 1), (2, 3))  # disjoint
    assert compatible((1, 2), (0, 4))  # nested
    assert compatible((0, 3), (0, 3))


def test_ext_vanish_examples():
    assert ext_vanish_pair("D", DIndec("L+", 0, 3), DIndec("L-", 0, 3), 3)
    assert not ext_vanish_pair("D", DIndec("M", 0, 1), DIndec("M", 1, 2), 3)
    assert not ext_vanish_pair("A", AInterval(0, 2), AInterval(2, 4), 4)


def test_ext_vanish_is_symmetric():
    n = 4
    indecs = d_indecs(n)
    for x in indecs:
        for y in indecs:
            assert ext_vanish_pair("D", x, y, n) == ext_vanish_pair("D", y, x, n)


def test_tau_examples_type_a():
    assert a_tau(AInterval(0, 1), 2) == AInterval(1, 2)
    assert a_tau(AInterval(1, 2), 2) is None
    assert ar_translate("A", AInterval(1, 3), 5) == AInterval(2, 4)


def test_tau_examples_type_d():
    # an interval reaching the stem end translates to a thick module
    assert d_tau(DIndec("L", 0, 2), 3) == DIndec("M", 0, 1)
    assert d_tau(DIndec("L", 1, 2), 3) == DIndec("M", 0, 2)
    assert d_tau(DIndec("L", 0, 1), 3) == DIndec("L", 1, 2)
    assert d_tau(DIndec("L+", 0, 3), 3) == DIndec("L-", 1, 3)
    assert d_tau(DIndec("L-", 1, 3), 3) == DIndec("L+", 2, 3)
    # projectives die: thick modules ending at the stem end and the tip simples
    assert d_tau(DIndec("M", 0, 2), 3) is None
    assert d_tau(DIndec("L+", 2, 3), 3) is None
    assert d_tau(DIndec("L-", 2, 3), 3) is None


def test_dim_vector_examples():
    assert a_dim(AInterval(1, 3), 4) == {"1": 0, "2": 1, "3": 1, "4": 0}
    assert d_dim(DIndec("M", 0, 1), 3) == {"1": 1, "2": 2, "3+": 1, "3-": 1}
    assert d_dim(DIndec("L-", 0, 3), 3) == {"1": 1, "2": 1, "3+": 0, "3-": 1}
    assert model_dim("D", DIndec("L+", 2, 3), 3) == {"1": 0, "2": 0, "3+": 1, "3-": 0}


def test_indec_counts():
    assert len(a_indecs(4)) == 10
    assert len(d_indecs(3)) == 12
    kinds = [x.kind for x in d_indecs(3)]
    assert kinds.count("L") == 3 and kinds.count("M") == 3
    assert kinds.count("L+") == 3 and kinds.count("L-") == 3


def test_m_matrices_at_fork():
    maps = d_matrices(DIndec("M", 0, 1), 3)
    assert maps[("1", "2")] == ((1,), (1,))
    assert maps[("2", "3+")] == ((1, 0),)
    assert maps[("2", "3-")] == ((0, 1),)
    # projective fork module carries scalar maps at the tips
    maps = d_matrices(DIndec("M", 0, 2), 3)
    assert maps[("2", "3+")] == ((1,),)
    assert maps[("2", "3-")] == ((1,),)


def test_full_support_models_have_identity_maps():
    maps = d_matrices(DIndec("L+", 0, 3), 3)
    assert maps[("1", "2")] == ((1,),)
    assert maps[("2", "3+")] == ((1,),)
    assert maps[("2", "3-")] == ((0,),) or maps[("2", "3-")] == ()
    # the missing tip has dimension zero, so the matrix has no rows
    assert maps[("2", "3-")] == ()


def test_hom_criterion_is_strict_at_the_left_end():
    # the quotient-to-submodule slot: simple tops do not map backwards
    assert not a_hom_nonzero(AInterval(2, 3), AInterval(1, 2))
    assert a_hom_nonzero(AInterval(0, 2), AInterval(0, 1))
    assert not a_hom_nonzero(AInterval(0, 1), AInterval(1, 2))


def test_render():
    assert render(AInterval(0, 2)) == "L(0,2)"
    assert render(DIndec("L+", 1, 3)) == "L+(1,3)"
    assert render(DIndec("M", 0, 2)) == "M(0,2)"


def test_unknown_kind_rejected():
    with pytest.raises(ValueError):
        ext_vanish_pair("E", None, None, 6)
