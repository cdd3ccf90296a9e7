"""Self-dual codes from group rings: ring arithmetic, the bordered construction, Gray images and binary codes."""
from codes.bincode import BinaryCode, CodeType, WeightProfile
from codes.construct import ConstructionParams, ScreenVerdict
from codes.groupring import GroupRingElem, GroupSpec, RingMatrix
from codes.rings import RingElem, RingId

__all__ = [
    "BinaryCode",
    "CodeType",
    "WeightProfile",
    "ConstructionParams",
    "ScreenVerdict",
    "GroupRingElem",
    "GroupSpec",
    "RingMatrix",
    "RingElem",
    "RingId",
]
