import pytest

from sisotopy.morphisms import Isotopism, apply_isotopism, saum, verify_isotopism
from sisotopy.perm import Perm
from sisotopy.substructure import make_spair
from sisotopy.tables import cyclic_group
from sisotopy.theorems import (
    PairingWitness,
    check_pairing,
    corollary_checks_31,
    pairing_search,
    special_triple,
    verify_theorem_31,
    verify_theorem_32,
)
from sisotopy.varieties import CATALOG

from conftest import load_table
from oracles import compose, invert

I4 = Perm.identity(4)
NEG4 = Perm((0, 3, 2, 1))
Z4S = make_spair(cyclic_group(4), (0, 2))

# an order-5 S-quasigroup with trivial SAUM
Q5 = make_spair(load_table("example1_star.tbl"), (1, 2))


def _brute_pairing(u, v, beta, delta, gamma):
    n = u.order
    return all(
        v.table.op(delta[x], gamma[y]) == delta[u.table.op(beta[x], y)]
        for x in range(n) for y in range(n)
    )


def test_check_pairing_identity_on_group():
    ok, cell = check_pairing(Z4S, Z4S, I4, I4, I4)
    assert ok and cell is None


def test_check_pairing_identity_between_different_tables(dot_pair, star_pair):
    ident = Perm.identity(5)
    ok, cell = check_pairing(dot_pair, star_pair, ident, ident, ident)
    assert not ok and cell == (0, 0)


def test_check_pairing_matches_brute_force(dot_pair):
    sa = saum(dot_pair)
    for beta in sa:
        for delta in sa:
            for gamma in sa:
                ok, _ = check_pairing(dot_pair, dot_pair, beta, delta, gamma)
                assert ok == _brute_pairing(dot_pair, dot_pair, beta, delta, gamma)


def test_check_pairing_membership(dot_pair):
    not_aut = Perm((1, 0, 2, 3, 4))
    ident = Perm.identity(5)
    with pytest.raises(ValueError):
        check_pairing(dot_pair, dot_pair, not_aut, ident, ident)
    with pytest.raises(ValueError):
        check_pairing(dot_pair, dot_pair, ident, not_aut, ident)


def test_special_triple():
    assert special_triple(I4, I4, I4) == Isotopism.identity(4)
    t = special_triple(I4, NEG4, NEG4)
    assert t == Isotopism(NEG4.inverse(), NEG4.inverse(), NEG4.inverse())
    t = special_triple(I4, I4, NEG4)
    assert t.U == NEG4.inverse() and t.V == I4 and t.W == NEG4.inverse()
    beta, gamma, delta = Perm((1, 2, 0)), Perm((0, 2, 1)), Perm((2, 0, 1))
    t = special_triple(beta, gamma, delta)
    assert t.U.images == compose(invert(delta.images), beta.images)
    with pytest.raises(ValueError):
        special_triple(I4, Perm.identity(3), I4)


def test_special_triple_maps_v_onto_u_under_pairing():
    # whenever the pairing condition holds, the special triple is an isotopism V -> U
    for case in pairing_search(Q5, Q5):
        if case.satisfied:
            t = special_triple(case.beta, case.gamma, case.delta)
            assert verify_isotopism(Q5.table, Q5.table, t).is_isotopism


def test_t31_reflexive_trivial_saum():
    r = verify_theorem_31(Q5, Q5)
    assert r.hypothesis_ok and r.hypothesis["conjugator"].is_identity()
    assert r.conclusion["pairing_all_beta"] and r.conclusion["s_isomorphic"]
    assert r.conclusion["agreement"]
    assert r.discrepancies_of("forward", "reverse", "proof-map") == []
    # the delta = I consequence claims |SAUM| = 3; observed 1
    assert [d["item"] for d in r.discrepancies_of("corollary")] == ["delta-identity-orders"]


def test_t31_reflexive_nontrivial_saum_reports_reverse():
    r = verify_theorem_31(Z4S, Z4S)
    assert r.hypothesis_ok
    w = {x.beta: x for x in r.witnesses}
    assert w[I4].satisfied and w[I4].delta == I4 and w[I4].gamma == I4
    assert not w[NEG4].satisfied
    assert r.conclusion["s_isomorphic"]
    assert [d["kind"] for d in r.discrepancies_of("reverse")] == ["reverse"]
    assert r.conclusion["proof_map"]["bijective"]


def test_t31_example1_not_conjugate(dot_pair, star_pair):
    r = verify_theorem_31(dot_pair, star_pair)
    assert r.hypothesis["saum_orders"] == [3, 1]
    assert r.hypothesis["ambient_order"] == 12
    assert not r.hypothesis_ok
    assert r.conclusion is None
    assert r.hypothesis["initial"] == {"U": True, "V": True}


def test_t31_order_mismatch(dot_pair):
    with pytest.raises(ValueError):
        verify_theorem_31(dot_pair, Z4S)


def test_pairing_search_least_witness():
    ws = pairing_search(Q5, Q5)
    assert ws == [PairingWitness(Perm.identity(5), Perm.identity(5), Perm.identity(5), None, True)]


def test_corollaries_identity_witness():
    w = PairingWitness(I4, I4, I4, I4, True)
    items = {i["item"]: i for i in corollary_checks_31(Z4S, Z4S, w)}
    assert items["gamma-in-saum-u-iff-autotopism"]["agrees"]
    assert items["translation-identities"]["agrees"]
    # delta = I: the claimed order 3 cannot match |SAUM(Z4, {0,2})| = 2
    assert items["delta-identity-orders"]["observed"]["orders"] == [2, 2]
    assert items["delta-identity-orders"]["agrees"] is False
    with pytest.raises(ValueError):
        corollary_checks_31(Z4S, Z4S, PairingWitness(I4, None, None, None, False))


def test_t32_identity_triple():
    r = verify_theorem_32(Z4S, I4, I4, I4)
    assert r.observations["v_table"] == Z4S.table
    assert all(row["agree"] for row in r.observations["s_varieties"].values())
    assert r.hypothesis["s_isotopism"]
    assert r.observations["table_profiles"]["U"] == r.observations["table_profiles"]["V"]


def test_t32_identity_triple_trivial_saum():
    ident = Perm.identity(5)
    r = verify_theorem_32(Q5, ident, ident, ident)
    assert not r.hypothesis["saums_nontrivial"]
    assert not r.hypothesis_ok and r.conclusion is None
    assert all(row["agree"] for row in r.observations["s_varieties"].values())


def test_t32_z4_negation():
    r = verify_theorem_32(Z4S, I4, I4, NEG4)
    assert r.hypothesis["v_valid"] and r.hypothesis["s_isotopism"]
    v_table = r.observations["v_table"]
    assert apply_isotopism(v_table, special_triple(I4, I4, NEG4)) == Z4S.table
    assert not r.hypothesis["pairing_all_beta"]
    assert r.conclusion is None
    # the group-implied identities are preserved on the designated Z2
    assert all(row["U"] and row["V"] for row in r.observations["s_varieties"].values())


def test_t32_beta_membership():
    with pytest.raises(ValueError):
        verify_theorem_32(Z4S, Perm((1, 2, 3, 0)), I4, I4)


def test_t32_invalid_v_reported(dot_pair):
    # delta maps {0,1} to a subset that is not a subgroup of V
    ident = Perm.identity(5)
    r = verify_theorem_32(dot_pair, ident, ident, Perm((0, 2, 1, 3, 4)))
    assert r.hypothesis["v_valid"] is False
    assert "v_error" in r.hypothesis and not r.hypothesis_ok


def test_t32_variety_subset():
    r = verify_theorem_32(Z4S, I4, I4, I4, [CATALOG["cip"]])
    assert list(r.observations["s_varieties"]) == ["cip"]


def test_report_json_round_trip():
    import json

    doc = verify_theorem_31(Z4S, Z4S).to_json()
    assert set(doc) >= {"hypothesis", "witnesses", "conclusion", "discrepancies"}
    json.dumps(doc)
