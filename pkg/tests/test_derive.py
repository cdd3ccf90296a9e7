import numpy as np
import pytest

from codes.bincode import BinaryCode
from codes.construct import gram
from codes.derive import (CoordinateFrame, ExtensionSpec, NeighborSpec, binary_extend, extend,
                          intersection_dimension, neighbor, parse_neighbor_vector)
from codes.errors import DerivationError, RingMismatchError
from codes.gray import binary_image
from codes.groupring import RingMatrix
from codes.rings import RingElem, RingId, parse_element, parse_shorthand


def test_binary_extension(hamming8):
    x = [1, 0, 0, 0, 0, 0, 0, 0]
    extended = binary_extend(hamming8, x)
    assert (extended.n, extended.k) == (10, 5)
    assert extended.is_self_dual()


def test_extension_over_f2u():
    base = RingMatrix(RingId.F2U, np.array([[1, 3]], dtype=np.uint8))
    assert gram(base).is_zero()
    spec = ExtensionSpec(base=base, c=parse_element("3", RingId.F2U), x=tuple(parse_shorthand("(1,0)", RingId.F2U)))
    generator = extend(spec)
    assert generator.to_text() == "(1,0,1,0)\n(1,3,1,3)"
    assert gram(generator).is_zero()
    image = binary_image(generator).code
    assert (image.n, image.k) == (8, 4)
    assert image.is_self_dual()


def unit_norm_vector(ring: RingId, n: int, rng: np.random.Generator) -> tuple:
    """Random X over F2 or F2+uF2 with an odd number of unit entries, so <X,X> = 1."""
    values = np.array([e.bits for e in ring.elements()], dtype=np.uint8)
    x = rng.choice(values, size=n)
    if int(np.count_nonzero(x & 1)) % 2 == 0:
        x[0] ^= 1
    return tuple(RingElem(ring, int(bits)) for bits in x)


def test_random_binary_extensions_stay_self_dual(self_dual_factory, rng):
    ring = RingId.F2
    for step in range(100):
        code = self_dual_factory(2 * (2 + step % 10))
        base = RingMatrix(ring, code.generator)
        extended = extend(ExtensionSpec(base=base, c=ring.one, x=unit_norm_vector(ring, code.n, rng)))
        assert (extended.rows, extended.cols) == (code.k + 1, code.n + 2)
        assert gram(extended).is_zero()


def test_chained_f2u_extensions_stay_self_dual(rng):
    ring = RingId.F2U
    units = [ring.one, parse_element("u+1", ring)]
    start = RingMatrix(ring, np.array([[1, 3]], dtype=np.uint8))
    base = start
    for _ in range(100):
        c = units[int(rng.integers(0, 2))]
        extended = extend(ExtensionSpec(base=base, c=c, x=unit_norm_vector(ring, base.cols, rng)))
        assert (extended.rows, extended.cols) == (base.rows + 1, base.cols + 2)
        assert gram(extended).is_zero()
        base = start if extended.cols >= 24 else extended


def test_extension_input_errors():
    base = RingMatrix(RingId.F2U, np.array([[1, 3]], dtype=np.uint8))
    x = tuple(parse_shorthand("(1,0)", RingId.F2U))
    with pytest.raises(DerivationError, match="not a unit"):
        ExtensionSpec(base=base, c=parse_element("u", RingId.F2U), x=x)
    with pytest.raises(DerivationError, match="expected 1"):
        ExtensionSpec(base=base, c=RingId.F2U.one, x=tuple(parse_shorthand("(1,1)", RingId.F2U)))
    with pytest.raises(DerivationError, match="length"):
        ExtensionSpec(base=base, c=RingId.F2U.one, x=tuple(parse_shorthand("(1,0,0)", RingId.F2U)))
    with pytest.raises(RingMismatchError):
        ExtensionSpec(base=base, c=RingId.F2.one, x=x)
    f4_base = RingMatrix(RingId.F4, np.array([[1, 4]], dtype=np.uint8))
    with pytest.raises(DerivationError, match="F2"):
        ExtensionSpec(base=f4_base, c=RingId.F4.one, x=tuple(parse_shorthand("(1,0)", RingId.F4)))


def test_neighbor_of_extended_hamming(hamming8):
    x = np.array([1, 1, 0, 0, 0, 0, 0, 0], dtype=np.uint8)
    result = neighbor(NeighborSpec(hamming8, x))
    assert result.is_self_dual()
    assert result.contains(x)
    assert intersection_dimension(hamming8, result) == hamming8.k - 1


def test_random_neighbors_stay_self_dual(self_dual_factory, rng):
    found = 0
    for _ in range(20):
        code = self_dual_factory(16)
        x = rng.integers(0, 2, size=code.n).astype(np.uint8)
        if x.sum() % 2:
            x[0] ^= 1
        if code.contains(x):
            continue
        result = neighbor(NeighborSpec(code, x))
        found += 1
        assert result.is_self_dual()
        assert intersection_dimension(code, result) == code.k - 1
    assert found > 0


def test_neighbor_input_errors(hamming8):
    with pytest.raises(DerivationError, match="odd weight"):
        neighbor(NeighborSpec(hamming8, [1, 0, 0, 0, 0, 0, 0, 0]))
    with pytest.raises(DerivationError, match="lies in C"):
        neighbor(NeighborSpec(hamming8, hamming8.generator[0]))
    with pytest.raises(DerivationError, match="length"):
        NeighborSpec(hamming8, [1, 1])
    not_self_dual = BinaryCode(np.array([[1, 1, 0, 0]], dtype=np.uint8))
    with pytest.raises(DerivationError, match="not self-dual"):
        neighbor(NeighborSpec(not_self_dual, [0, 0, 1, 1]))


def test_frames_agree_on_systematic_generators(hamming8):
    x = np.array([0, 1, 1, 0, 0, 0, 0, 0], dtype=np.uint8)
    raw = neighbor(NeighborSpec.in_frame(hamming8, x, CoordinateFrame.RAW))
    standard = neighbor(NeighborSpec.in_frame(hamming8, x, CoordinateFrame.STANDARD))
    assert raw == standard


def test_standard_frame_maps_back_to_code_order():
    code = BinaryCode(np.array([[0, 1, 1, 0], [1, 0, 0, 1]], dtype=np.uint8))
    spec = NeighborSpec.in_frame(code, [1, 0, 1, 0], CoordinateFrame.STANDARD)
    # pivots are columns 0 and 1, so the frame is the identity here
    assert spec.x.tolist() == [1, 0, 1, 0]
    swapped = BinaryCode(np.array([[0, 0, 1, 1], [1, 1, 0, 0]], dtype=np.uint8))
    spec = NeighborSpec.in_frame(swapped, [1, 1, 0, 0], CoordinateFrame.STANDARD)
    assert spec.x.tolist() == [1, 0, 1, 0]


def test_parse_neighbor_vector():
    assert parse_neighbor_vector("0101", zero_prefix=2).tolist() == [0, 0, 0, 1, 0, 1]
    assert parse_neighbor_vector("(0,1, 1)").tolist() == [0, 1, 1]
    with pytest.raises(DerivationError):
        parse_neighbor_vector("01u1")
