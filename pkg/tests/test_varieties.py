import itertools

import pytest

from sisotopy.errors import NotApplicableError
from sisotopy.substructure import make_spair
from sisotopy.tables import cyclic_group, direct_product, klein_four, parse_table, symmetric_group
from sisotopy.varieties import (
    CATALOG,
    Mul,
    RightInverse,
    Unit,
    Var,
    eval_term,
    holds_identity,
    parse_identity,
    parse_term,
    resolve_varieties,
    smarandache_variety_check,
    variety_profile,
)

EQUATIONAL = [n for n, v in CATALOG.items() if not v.requires_loop]
GROUPS = {
    "Z1": parse_table("1\n0"),
    "Z2": cyclic_group(2),
    "Z3": cyclic_group(3),
    "Z4": cyclic_group(4),
    "V4": klein_four(),
    "Z5": cyclic_group(5),
    "Z6": cyclic_group(6),
    "S3": symmetric_group(3),
    "Z2xZ3": direct_product(cyclic_group(2), cyclic_group(3)),
}


def _abelian(t):
    return all(t.op(x, y) == t.op(y, x) for x in range(t.order) for y in range(t.order))


def test_eval_term(dot):
    assert eval_term(dot, Mul(Var(0), Var(1)), (2, 3)) == 2
    assert eval_term(cyclic_group(4), Unit(), ()) == 0
    assert eval_term(cyclic_group(4), RightInverse(Var(0)), {0: 1}) == 3


def test_eval_term_errors(dot):
    with pytest.raises(KeyError):
        eval_term(dot, Mul(Var(0), Var(1)), {0: 1})
    with pytest.raises(NotApplicableError):
        eval_term(dot, RightInverse(Var(0)), (1,))


def test_parse_term_prefix():
    t = parse_term("(mul (mul x y) (rinv x))")
    assert t == Mul(Mul(Var(0, "x"), Var(1, "y")), RightInverse(Var(0, "x")))
    with pytest.raises(ValueError):
        parse_term("(mul x)")
    with pytest.raises(ValueError):
        parse_term("(pow x y)")
    with pytest.raises(ValueError):
        parse_term("(mul x y")


def test_group_tables_pass_equational_catalog():
    for name, t in GROUPS.items():
        prof = variety_profile(t)
        for v in EQUATIONAL:
            assert prof[v] == "holds", (name, v)
        for v in ("ip.left", "ip.right", "wip"):
            assert prof[v] == "holds", (name, v)
        for v in ("cip", "aip"):
            assert (prof[v] == "holds") == _abelian(t), (name, v)


def test_s3_cip_counterexample():
    s3 = symmetric_group(3)
    ok, cex = holds_identity(s3, CATALOG["cip"])
    assert not ok
    assert cex == {"x": 1, "y": 2}
    x, y = cex["x"], cex["y"]
    # (x·y)·x^ρ != y, computed without the library's evaluator
    rho = next(r for r in range(6) if s3.op(x, r) == 0)
    assert s3.op(s3.op(x, y), rho) != y


def test_least_counterexample_is_least():
    s3 = symmetric_group(3)
    v = CATALOG["aip"]
    _, cex = holds_identity(s3, v)
    rinv = [next(r for r in range(6) if s3.op(x, r) == 0) for x in range(6)]
    first = next(
        (x, y) for x, y in itertools.product(range(6), repeat=2)
        if rinv[s3.op(x, y)] != s3.op(rinv[x], rinv[y])
    )
    assert (cex["x"], cex["y"]) == first


def test_example1_profile(dot):
    prof = variety_profile(dot)
    for name, v in CATALOG.items():
        if v.requires_loop:
            assert prof[name] == "not_applicable"
        else:
            assert prof[name] in ("holds", "fails")
    with pytest.raises(NotApplicableError):
        holds_identity(dot, CATALOG["cip"])


def test_smarandache_check_on_subgroup(dot_pair):
    for v in CATALOG.values():
        ok, cex = smarandache_variety_check(dot_pair, v)
        assert ok and cex is None


def test_smarandache_counterexample_in_parent_labels():
    s3 = symmetric_group(3)
    big = direct_product(s3, cyclic_group(2))  # order 12, contains S3 x {0}
    subset = tuple(sorted(2 * a for a in range(6)))
    pair = make_spair(big, subset)
    ok, cex = smarandache_variety_check(pair, CATALOG["cip"])
    assert not ok
    assert set(cex.values()) <= set(subset)


def test_parse_identity_union_of_variables():
    v = parse_identity("(mul (mul x y) (rinv x)) = y", "cip2")
    assert v.variables == ("x", "y") and v.requires_loop


def test_resolve_varieties():
    assert len(resolve_varieties("all")) == len(CATALOG)
    assert [v.name for v in resolve_varieties("cip,aip")] == ["cip", "aip"]
    assert resolve_varieties("(mul x y) = (mul y x)")[0].arity == 2
    with pytest.raises(ValueError):
        resolve_varieties("nonsense")


def test_isomorphic_tables_same_profile():
    assert variety_profile(cyclic_group(6)) == variety_profile(direct_product(cyclic_group(2), cyclic_group(3)))
