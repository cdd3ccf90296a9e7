import numpy as np
import pytest

from codes.errors import GroupLiteralError, RingMismatchError, UnsupportedShapeError
from codes.groupring import (GroupKind, GroupRingElem, GroupSpec, RingMatrix, element_from_ordinal, elements_of, gr_add,
                             gr_hat, gr_identity, gr_mul, involution, is_gr_unit, is_unitary_unit, sigma,
                             sigma_closed_form)
from codes.rings import RingId

GROUPS = ["C3", "C7", "C9", "C3xC3", "C3,3", "C5,3"]


def random_elem(group: GroupSpec, ring: RingId, rng: np.random.Generator) -> GroupRingElem:
    values = np.array([e.bits for e in ring.elements()], dtype=np.uint8)
    return GroupRingElem(group, ring, rng.choice(values, size=group.order))


@pytest.mark.parametrize("literal, kind, order", [
    ("C9", GroupKind.CYCLIC, 9),
    ("C3xC3", GroupKind.PRODUCT, 9),
    ("C3×C5", GroupKind.PRODUCT, 15),
    ("C3,3", GroupKind.MIXED, 9),
    ("C5,3", GroupKind.MIXED, 15),
])
def test_group_literals(literal, kind, order):
    group = GroupSpec.parse(literal)
    assert group.kind is kind
    assert group.order == order
    assert GroupSpec.parse(group.literal) == group


@pytest.mark.parametrize("literal", ["D6", "S3", "C", "C3xD3", ""])
def test_bad_group_literals(literal):
    with pytest.raises(GroupLiteralError):
        GroupSpec.parse(literal)


@pytest.mark.parametrize("literal", GROUPS)
def test_group_law_tables(literal):
    group = GroupSpec.parse(literal)
    idx = np.arange(group.order)
    assert np.array_equal(group.law[0], idx)
    assert np.array_equal(group.law, group.law.T)
    assert np.all(group.law[idx, group.inverse] == 0)
    for row in group.law:
        assert sorted(row) == list(idx)


def test_mixed_labeling_follows_generator_powers():
    # index i + 3j <-> x^(3i + j) in C9, so index 1 is x^3 and index 3 is x
    group = GroupSpec.mixed(3, 3)
    x = 3
    powers = [0]
    for _ in range(8):
        powers.append(int(group.law[powers[-1], x]))
    assert powers == [0, 3, 6, 1, 4, 7, 2, 5, 8]


@pytest.mark.parametrize("literal", GROUPS)
@pytest.mark.parametrize("ring", [RingId.F2U, RingId.F4U])
def test_sigma_is_a_ring_homomorphism(literal, ring, rng):
    group = GroupSpec.parse(literal)
    for _ in range(5):
        v, w = random_elem(group, ring, rng), random_elem(group, ring, rng)
        assert sigma(gr_mul(v, w)) == sigma(v) @ sigma(w)
        assert sigma(gr_add(v, w)) == sigma(v) + sigma(w)
        assert sigma(involution(v)) == sigma(v).T


def assert_sigma_on_every_pair(literal: str, ring: RingId) -> None:
    group = GroupSpec.parse(literal)
    elems = list(elements_of(group, ring))
    images = [sigma(v) for v in elems]
    for v, image in zip(elems, images):
        assert sigma(involution(v)) == image.T
        for w, other in zip(elems, images):
            assert sigma(gr_mul(v, w)) == image @ other
            assert sigma(gr_add(v, w)) == image + other


@pytest.mark.parametrize("literal, ring", [("C3", RingId.F2), ("C3", RingId.F2U), ("C3", RingId.F4),
                                           ("C5", RingId.F2), ("C7", RingId.F2)])
def test_sigma_is_a_homomorphism_on_every_pair(literal, ring):
    assert_sigma_on_every_pair(literal, ring)


@pytest.mark.slow
@pytest.mark.parametrize("literal", ["C9", "C3xC3", "C3,3"])
def test_sigma_is_a_homomorphism_on_every_pair_of_order_nine(literal):
    assert_sigma_on_every_pair(literal, RingId.F2)


@pytest.mark.parametrize("literal", GROUPS)
def test_closed_form_matches_group_law(literal, rng):
    group = GroupSpec.parse(literal)
    for ring in RingId:
        v = random_elem(group, ring, rng)
        assert sigma_closed_form(v) == sigma(v)


def test_cyclic_sigma_is_circulant():
    group = GroupSpec.cyclic(3)
    v = GroupRingElem.parse(group, RingId.F2U, "(1,u,3)")
    assert sigma(v).to_text() == "(1,u,3)\n(3,1,u)\n(u,3,1)"


@pytest.mark.parametrize("literal", GROUPS)
def test_multiplication_laws(literal, rng):
    group = GroupSpec.parse(literal)
    ring = RingId.F4U
    one = gr_identity(group, ring)
    for _ in range(5):
        a, b, c = (random_elem(group, ring, rng) for _ in range(3))
        assert gr_mul(a, one) == a
        assert gr_mul(a, b) == gr_mul(b, a)
        assert gr_mul(gr_mul(a, b), c) == gr_mul(a, gr_mul(b, c))
        assert involution(involution(a)) == a
        assert involution(gr_mul(a, b)) == gr_mul(involution(b), involution(a))


def test_involution_inverts_group_elements():
    group = GroupSpec.cyclic(3)
    x = GroupRingElem.parse(group, RingId.F2, "010")
    assert involution(x) == GroupRingElem.parse(group, RingId.F2, "001")
    assert is_unitary_unit(x)
    assert gr_mul(x, involution(x)) == gr_identity(group, RingId.F2)


def test_units_and_augmentation():
    group = GroupSpec.cyclic(3)
    hat = gr_hat(group, RingId.F2)
    assert hat.augmentation() == RingId.F2.one
    assert not is_gr_unit(hat)
    assert is_gr_unit(gr_identity(group, RingId.F2))
    # 1 + x is a zero divisor in F2 C3: (1 + x)(1 + x + x^2) = 0
    one_plus_x = GroupRingElem.parse(group, RingId.F2, "110")
    assert not is_gr_unit(one_plus_x)
    assert not gr_mul(one_plus_x, hat).coeffs.any()


def test_element_from_ordinal_is_lexicographic():
    group = GroupSpec.cyclic(3)
    assert element_from_ordinal(group, RingId.F2, 3) == GroupRingElem.parse(group, RingId.F2, "011")
    assert element_from_ordinal(group, RingId.F2U, 4 ** 3 - 1) == GroupRingElem.parse(group, RingId.F2U, "333")
    assert element_from_ordinal(group, RingId.F4U, 0) == GroupRingElem.parse(group, RingId.F4U, "000")


def test_mismatched_operands():
    c3, c5 = GroupSpec.cyclic(3), GroupSpec.cyclic(5)
    with pytest.raises(RingMismatchError):
        gr_mul(gr_identity(c3, RingId.F2), gr_identity(c5, RingId.F2))
    with pytest.raises(RingMismatchError):
        gr_add(gr_identity(c3, RingId.F2), gr_identity(c3, RingId.F2U))
    with pytest.raises(UnsupportedShapeError):
        GroupRingElem.parse(c3, RingId.F2, "0110")


def test_ring_matrix_text_round_trip():
    group = GroupSpec.parse("C3,3")
    v = GroupRingElem.parse(group, RingId.F4U, "(0,A,4,7,1,2,F,9,3)")
    matrix = sigma(v)
    assert RingMatrix.from_text(RingId.F4U, matrix.to_text()) == matrix
    with pytest.raises(UnsupportedShapeError):
        RingMatrix.from_text(RingId.F2, "(1,0)\n(1)")
    with pytest.raises(UnsupportedShapeError):
        RingMatrix.from_text(RingId.F2, "  ")
