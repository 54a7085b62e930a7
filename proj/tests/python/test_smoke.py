import pytest

import cyhodge as ch


def test_cycnum_arithmetic():
    z3 = ch.CycNum.root_of_unity(3)
    assert z3.pow(3) == ch.CycNum(1)
    assert (ch.CycNum(1) + z3 + z3.pow(2)).is_zero()
    assert z3.conj() == z3.pow(2)
    assert (z3 * z3.inverse()) == ch.CycNum(1)
    s = ch.CycNum.root_of_unity(12) + ch.CycNum.root_of_unity(12, -1)
    assert s.certified_sign() == 1


def test_cycnum_embed():
    z6 = ch.CycNum.root_of_unity(12).pow(2)
    iv = z6.embed(64)
    assert abs(iv["real_mid"] - 0.5) < 1e-12
    assert abs(iv["imag_mid"] - 0.8660254) < 1e-6


def test_k3_lattice():
    k3 = ch.Lattice.standard("K3")
    assert k3.rank == 22
    assert k3.signature() == (3, 19, 0)
    assert k3.is_even_unimodular() == (True, True)


def test_catalog_isometries():
    for r in (1, 3, 5):
        iso = ch.catalog_order3(r)
        assert iso.order == 3
        assert iso.multiplicities()[3] == r + 1
        assert iso.eigenspace_signature(3, 2) == (1, r, 0)


def test_validate_isometry_rejects():
    u = ch.Lattice.standard("U")
    with pytest.raises(Exception):
        ch.validate_isometry(u, [[1, 1], [0, 1]])


def test_hodge_numbers():
    for k in range(7):
        rep = ch.cy3_hodge_numbers(k)
        assert rep["h21"] == 6 - k
        assert rep["h11"] == 18 + 11 * k
    assert ch.fixed_locus_from_k(2) == (2, 5, 4)
    assert ch.invariant_h11_product(3) == 15
    bv = ch.borcea_voisin_z2_example()
    assert (bv["h11"], bv["h21"]) == (61, 1)


def test_pipeline():
    run = ch.run_pipeline(1)
    assert run["b3"] == 4
    assert run["piece_dims"]["3,0"] == 1
    assert run["piece_dims"]["2,1"] == 1
    assert run["f2_check"] == "holds"
    assert run["cm_with_order3_action"] == "not_certified"
    assert run["consistency_with_quotient_k"]


def test_classification():
    assert ch.allowed_maximal_orders(60) == [1, 2, 3, 4, 6]
    assert ch.prime_order_test(3, 4) == "allowed"
    assert ch.prime_order_test(5, 8) == "excluded"
    assert ch.prime_order_test(2, 8) == "scalar_only"
    facts = ch.cyclotomic_factorization(9)
    assert facts[-1] == (9, "x^6 + x^3 + 1")


def test_analyze_action():
    phi9_companion = [
        [0, 0, 0, 0, 0, -1],
        [1, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, -1],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 1, 0],
    ]
    a = ch.analyze_action(phi9_companion)
    assert a["order"] == 9
    assert a["reason"] == "TOO_MANY_ORBITS"
    assert not a["maximal_compatible"]


def test_monodromy():
    n = ch.nilpotent_log([[1, 1], [0, 1]])
    assert n == [["0", "1"], ["0", "0"]]
    jordan4 = [
        [1, 1, 0, 0],
        [0, 1, 1, 0],
        [0, 0, 1, 1],
        [0, 0, 0, 1],
    ]
    log4 = ch.nilpotent_log(jordan4)
    assert ch.weight_w0_dim(log4) == 1
