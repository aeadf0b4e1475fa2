import random

import pytest

from sisotopy.morphisms import Isotopism, apply_isotopism, automorphism_group, saum
from sisotopy.substructure import make_spair
from sisotopy.sweep import (
    latin_squares,
    normalized_s_quasigroups,
    pairing_partners,
    random_latin_square,
    sample_s_quasigroups,
    sweep_pairing_theorem,
    sweep_variety_theorem,
    variety_agreement,
)
from sisotopy.tables import classify, cyclic_group
from sisotopy.theorems import check_pairing

from oracles import is_latin, rows_of

# number of reduced Latin squares is 1, 1, 1, 4, 56 for n = 1..5; totals n! (n-1)! times that
LATIN_COUNTS = {1: 1, 2: 2, 3: 12, 4: 576}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_latin_square_counts(n):
    squares = list(latin_squares(n))
    assert len(squares) == LATIN_COUNTS[n]
    assert len(set(squares)) == len(squares)
    assert all(is_latin(rows_of(t)) for t in squares)


def test_normalized_counts():
    assert list(normalized_s_quasigroups(3)) == []
    assert len(list(normalized_s_quasigroups(4))) == 8
    assert len(list(normalized_s_quasigroups(5))) == 288


def test_random_latin_square_seeded():
    a = random_latin_square(6, random.Random(3))
    b = random_latin_square(6, random.Random(3))
    assert a == b and classify(a).is_quasigroup
    assert sample_s_quasigroups(6, 3, seed=1) == sample_s_quasigroups(6, 3, seed=1)


def test_partners_of_z4_satisfy_pairing_at_identity():
    u = make_spair(cyclic_group(4), (0, 2))
    partners = pairing_partners(u)
    assert u in partners
    ident = Isotopism.identity(4).U
    for v in partners:
        sv = saum(v)
        assert any(
            check_pairing(u, v, ident, d, g)[0] for d in sv for g in sv
        )


def test_partners_complete_for_small_case():
    """Every isotope V of U reachable by (β⁻¹δ, γ, δ) at β = I with δ, γ ∈ SAUM(V)
    appears among the generated partners (checked over all δ, γ ∈ AUM of the isotope)."""
    from sisotopy.perm import all_perms

    u = next(iter(normalized_s_quasigroups(4)))
    partners = {(v.table, v.subset) for v in pairing_partners(u)}
    for delta in all_perms(4):
        for gamma in all_perms(4):
            v_table = apply_isotopism(u.table, Isotopism(delta, gamma, delta))
            aum = automorphism_group(v_table)
            if delta in aum and gamma in aum:
                sub = tuple(sorted(delta.image_of(u.subset)))
                if delta.preserves(sub) and gamma.preserves(sub):
                    assert (v_table, sub) in partners


@pytest.mark.slow
def test_order6_sample_finding():
    cases = sweep_pairing_theorem((), sample_order6=20, seed=0)
    forward = [c for c in cases if c.report.discrepancies_of("forward")]
    # one table designating two non-automorphic subgroups; see the decisions ledger
    assert len(forward) == 1
    c = forward[0]
    assert c.u.table == c.v.table and c.u.subset != c.v.subset


def test_variety_sweep_identity_cases_agree():
    cases = sweep_pairing_theorem((4,))
    audits = sweep_variety_theorem(cases)
    assert all(variety_agreement(r) for _, r in audits)
