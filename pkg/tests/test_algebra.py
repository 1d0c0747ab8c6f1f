import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lcdgc.algebra import (
    AlgebraElement,
    adjoint,
    adjoint_filtered_lcd_supports,
    batch_square,
    exhaustive_lcd_supports,
    inner_product,
    is_lcd_idempotent,
    mul,
    supports_to_bits,
    to_vector,
)
from lcdgc.groups import Subset, make_group, subgroups

GROUPS = {s: make_group(s) for s in ["cyclic:9", "cyclic:4", "sym:3", "sym:4", "dihedral:4", "dihedral:5",
                                     "product:cyclic:3,cyclic:3"]}


def el(g, idx):
    return AlgebraElement.of(g, idx)


def elements(spec):
    g = GROUPS[spec]
    return st.integers(0, (1 << g.n) - 1).map(lambda s: AlgebraElement(g, s))


group_specs = st.sampled_from(sorted(GROUPS))


def test_add_examples():
    g = GROUPS["cyclic:9"]
    a = el(g, [0, 3])
    assert a + a == AlgebraElement.zero(g)
    assert a + AlgebraElement.zero(g) == a
    assert el(g, [0, 3]) + el(g, [3, 6]) == el(g, [0, 6])


def test_mul_examples():
    g = GROUPS["cyclic:9"]
    a = el(g, [3, 6])
    assert AlgebraElement.one(g) * a == a
    assert a * a == el(g, [3, 6])
    s3 = GROUPS["sym:3"]
    e = el(s3, [0, 4, 5])
    assert e * e == e


def test_group_mismatch():
    with pytest.raises(ValueError):
        el(GROUPS["cyclic:9"], [0]) + el(GROUPS["sym:3"], [0])
    with pytest.raises(ValueError):
        AlgebraElement(GROUPS["sym:3"], 1 << 6)


def test_adjoint_examples():
    g = GROUPS["cyclic:9"]
    assert adjoint(AlgebraElement.one(g)) == AlgebraElement.one(g)
    assert adjoint(el(g, [3, 6])) == el(g, [3, 6])
    assert adjoint(el(g, [1])) == el(g, [8])


def test_lcd_idempotent_examples():
    s3 = GROUPS["sym:3"]
    assert is_lcd_idempotent(AlgebraElement.zero(s3))
    assert is_lcd_idempotent(el(s3, [0, 4, 5]))
    assert is_lcd_idempotent(el(s3, [4, 5]))
    assert not is_lcd_idempotent(el(s3, [0, 1]))


def test_to_vector_and_inner_product_examples():
    c3 = make_group("cyclic:3")
    assert to_vector(AlgebraElement.zero(c3)).to_strings() == ["000"]
    assert to_vector(AlgebraElement.one(c3)).to_strings() == ["100"]
    s3 = GROUPS["sym:3"]
    assert to_vector(el(s3, [0, 4, 5])).to_strings() == ["100011"]
    f1, f2 = el(s3, [0, 4, 5]), el(s3, [1, 2, 3])
    assert inner_product(f1, AlgebraElement.zero(s3)) == 0
    assert inner_product(AlgebraElement.one(s3), AlgebraElement.one(s3)) == 1
    assert inner_product(f1, f2) == 0 and inner_product(f1, f1) == 1


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_ring_laws(data):
    spec = data.draw(group_specs)
    a, b, c = (data.draw(elements(spec)) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    assert adjoint(a * b) == adjoint(b) * adjoint(a)
    assert adjoint(adjoint(a)) == a


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_inner_product_is_vector_dot(data):
    spec = data.draw(group_specs)
    a, b = data.draw(elements(spec)), data.draw(elements(spec))
    va, vb = to_vector(a).to_dense()[0], to_vector(b).to_dense()[0]
    assert inner_product(a, b) == int(va @ vb) % 2


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_batch_square_matches_scalar(data):
    spec = data.draw(group_specs)
    g = GROUPS[spec]
    sups = data.draw(st.lists(st.integers(0, (1 << g.n) - 1), min_size=1, max_size=20))
    sq = batch_square(g, supports_to_bits(sups, g.n))
    for row, s in zip(sq, sups):
        e = AlgebraElement(g, s)
        assert np.array_equal(row, to_vector(e * e).to_dense()[0])


@pytest.mark.parametrize("spec", ["cyclic:9", "cyclic:4", "sym:3", "dihedral:4", "dihedral:5",
                                  "product:cyclic:3,cyclic:3"])
def test_adjoint_filtered_equals_exhaustive(spec):
    g = GROUPS[spec]
    assert adjoint_filtered_lcd_supports(g) == exhaustive_lcd_supports(g)


def test_sym3_exhaustive_list():
    g = GROUPS["sym:3"]
    assert exhaustive_lcd_supports(g) == [0, 0b1, 0b110000, 0b110001]


@pytest.mark.parametrize("spec", sorted(GROUPS))
def test_odd_subgroups_give_lcd_idempotents(spec):
    g = GROUPS[spec]
    for h in subgroups(g):
        e = AlgebraElement(g, h)
        if h.bit_count() % 2:
            assert is_lcd_idempotent(e)
        else:
            # even order: e^2 = |H| e = 0
            assert mul(e, e) == AlgebraElement.zero(g)
