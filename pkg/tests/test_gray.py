import numpy as np
import pytest

from codes.bincode import weight_counts
from codes.construct import ConstructionParams, build_generator
from codes.errors import RingMismatchError
from codes.gray import (GrayChain, GrayLayout, binary_image, expand_rows, phi1, phi_f4u, psi_f4, psi_f4u,
                        psi_f4u_generator)
from codes.groupring import RingMatrix
from codes.rings import RingId, parse_shorthand

TABLE1_ROW1 = ("C3", "F4", "(0,1,w,w)", "(0,1,1)", "(0,1,w+1)")
# the same border and elements read inside F4+uF4
F4_ROW_OVER_F4U = ("C3", "F4U", "(0,1,4,4)", "(0,1,1)", "(0,1,5)")


def bits(vector) -> list:
    return [e.bits for e in vector]


def test_phi1_layouts():
    vec = parse_shorthand("(u,1)", RingId.F2U)
    assert bits(phi1(vec, GrayLayout.BLOCK)) == [1, 0, 1, 1]
    assert bits(phi1(vec, GrayLayout.INTERLEAVED)) == [1, 1, 0, 1]
    assert bits(phi1(parse_shorthand("(0,1,u,3)", RingId.F2U))) == [0, 0, 1, 1, 0, 1, 1, 0]


def test_psi_f4_values():
    vec = parse_shorthand("(0,w,w+1,1)", RingId.F4)
    assert bits(psi_f4(vec, GrayLayout.INTERLEAVED)) == [0, 0, 1, 0, 0, 1, 1, 1]


def test_psi_f4u_values():
    # r + pω + su + quω -> (p+r + (q+s)u, r + su)
    vec = parse_shorthand("(1,4,2,8)", RingId.F4U)
    out = psi_f4u(vec, GrayLayout.INTERLEAVED)
    assert all(e.ring is RingId.F2U for e in out)
    assert [str(e) for e in out] == ["1", "1", "1", "0", "u", "u", "u", "0"]


def test_phi_f4u_values():
    # a + bu -> (b, a+b) with a, b in F4
    vec = parse_shorthand("(1,2,6)", RingId.F4U)
    assert [str(e) for e in phi_f4u(vec, GrayLayout.INTERLEAVED)] == ["0", "1", "1", "1", "1", "w+1"]


def test_chains_compose_stages():
    assert GrayChain.default_for(RingId.F4U) is GrayChain.PHI1_PSI_F4U
    assert GrayChain.PHI1_PSI_F4U.stages == ("psi_f4u", "phi1")
    assert GrayChain.PSI_F4_PHI_F4U.factor == 4
    assert GrayChain.IDENTITY.factor == 1


def test_expand_rows_spans_the_ring_module():
    rows = np.array([[1, 4]], dtype=np.uint8)
    assert expand_rows(rows, RingId.F4).tolist() == [[1, 4], [4, 5]]
    assert expand_rows(rows, RingId.F4U).shape == (4, 2)


def test_image_of_a_self_dual_code_is_self_dual():
    generator = build_generator(ConstructionParams.from_shorthand(*TABLE1_ROW1))
    image = binary_image(generator)
    assert image.chain is GrayChain.PSI_F4
    assert image.source_self_dual
    assert (image.code.n, image.code.k) == (32, 16)
    assert image.code.is_self_dual()


def test_layouts_give_equivalent_codes():
    generator = build_generator(ConstructionParams.from_shorthand(*TABLE1_ROW1))
    block = binary_image(generator, layout=GrayLayout.BLOCK).code
    interleaved = binary_image(generator, layout=GrayLayout.INTERLEAVED).code
    assert weight_counts(block, 12) == weight_counts(interleaved, 12)


def test_f4u_chains_agree_on_self_duality():
    generator = build_generator(ConstructionParams.from_shorthand(*F4_ROW_OVER_F4U))
    canonical = binary_image(generator, GrayChain.PHI1_PSI_F4U)
    alternate = binary_image(generator, GrayChain.PSI_F4_PHI_F4U)
    for image in (canonical, alternate):
        assert (image.code.n, image.code.k) == (64, 32)
        assert image.code.is_self_dual()


def test_psi_f4u_generator_shape():
    generator = build_generator(ConstructionParams.from_shorthand(*F4_ROW_OVER_F4U))
    image = psi_f4u_generator(generator)
    assert image.ring is RingId.F2U
    assert (image.rows, image.cols) == (16, 32)
    assert binary_image(image).code == binary_image(generator).code


def test_chain_must_start_at_the_generator_ring():
    generator = RingMatrix(RingId.F4, np.array([[1, 0, 4, 5]], dtype=np.uint8))
    with pytest.raises(RingMismatchError):
        binary_image(generator, GrayChain.PHI1)
    with pytest.raises(RingMismatchError):
        psi_f4u_generator(generator)


def test_image_of_non_self_dual_generator_is_flagged():
    generator = RingMatrix(RingId.F2U, np.array([[1, 0, 1, 1], [0, 1, 2, 1]], dtype=np.uint8))
    image = binary_image(generator)
    assert not image.source_self_dual
    assert image.code.n == 8
