import pytest

from sisotopy.perm import Perm, all_perms, setwise_stabilizer


def test_parse_and_format_round_trip():
    p = Perm.parse("1 2 0")
    assert p.images == (1, 2, 0)
    assert Perm.parse(p.format()) == p


def test_rejects_non_bijection():
    with pytest.raises(ValueError):
        Perm((0, 0, 1))
    with pytest.raises(ValueError):
        Perm((0, 3, 1))


def test_product_reads_left_to_right():
    a = Perm((1, 2, 0))  # x -> x+1 mod 3
    b = Perm((0, 2, 1))
    ab = a * b
    assert all(ab[x] == b[a[x]] for x in range(3))


def test_inverse_and_identity():
    p = Perm((3, 0, 4, 1, 2))
    assert (p * p.inverse()).is_identity()
    assert (p.inverse() * p).is_identity()
    assert Perm.identity(5).is_identity()


def test_conjugate_by():
    a = Perm((1, 0, 2))
    psi = Perm((2, 1, 0))
    assert a.conjugate_by(psi) == psi.inverse() * a * psi


def test_order():
    assert Perm((1, 2, 0, 3)).order() == 3
    assert Perm((1, 0, 3, 4, 2)).order() == 6
    assert Perm.identity(4).order() == 1


def test_image_and_preserves():
    p = Perm((1, 0, 3, 2))
    assert p.image_of({0, 1}) == frozenset({0, 1})
    assert p.preserves((2, 3))
    assert not Perm((2, 1, 0, 3)).preserves((0, 1))


def test_all_perms_sorted_identity_first():
    ps = list(all_perms(4))
    assert len(ps) == 24
    assert ps == sorted(ps)
    assert ps[0].is_identity()


def test_setwise_stabilizer_size():
    # |H|! (n-|H|)!
    assert len(setwise_stabilizer(5, (0, 1))) == 12
    assert len(setwise_stabilizer(6, (2, 4))) == 48
    assert all(p.preserves((2, 4)) for p in setwise_stabilizer(6, (2, 4)))
