"""Binary linear codes: reduction, duality, exact low-weight counting, classification.

Low-weight codewords are enumerated level by level over an information set.
Level t holds the XOR of every t-subset of the generator rows restricted to the
redundancy columns, packed into one uint64 per codeword. Subsets are grouped by
their largest row index, so level t is the concatenation over j of
(the part of level t-1 using rows < j) XOR row j. Codeword weight is
t + popcount(redundancy part).
"""
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import numpy as np
from loguru import logger

from codes.errors import CeilingExceededError, ClassificationError, UnsupportedShapeError

DEFAULT_WEIGHT_CEILING = 16
DEFAULT_KEEP_LEVEL_LIMIT = 40_000_000
FULL_ENUMERATION_MAX_K = 24


def _as_bits(matrix) -> np.ndarray:
    arr = np.array(matrix, dtype=np.uint8) % 2
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    return arr


@dataclass(frozen=True)
class RowReduction:
    matrix: np.ndarray
    rank: int
    pivots: Tuple[int, ...]


def rref(matrix) -> RowReduction:
    """Reduced row echelon form over F2 with leftmost pivots."""
    mat = _as_bits(matrix).copy()
    m, n = mat.shape
    pivots: List[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        candidates = np.nonzero(mat[row:, col])[0]
        if candidates.size == 0:
            continue
        pivot = row + int(candidates[0])
        if pivot != row:
            mat[[row, pivot]] = mat[[pivot, row]]
        hits = np.nonzero(mat[:, col])[0]
        hits = hits[hits != row]
        if hits.size:
            mat[hits] ^= mat[row]
        pivots.append(col)
        row += 1
    return RowReduction(matrix=mat, rank=len(pivots), pivots=tuple(pivots))


def gf2_rank(matrix) -> int:
    return rref(matrix).rank


def pack_rows(matrix: np.ndarray) -> np.ndarray:
    """Pack each 0/1 row (at most 64 columns) into one uint64, column c at bit c."""
    rows, cols = matrix.shape
    if cols > 64:
        raise UnsupportedShapeError(f"Cannot pack {cols} columns into one machine word")
    weights = np.left_shift(np.uint64(1), np.arange(cols, dtype=np.uint64))
    return np.bitwise_or.reduce(matrix.astype(np.uint64) * weights, axis=1) if cols else np.zeros(rows, np.uint64)


@dataclass(frozen=True)
class StandardForm:
    """[I_k | A] in permuted coordinates: column j is original column permutation[j]."""
    matrix: np.ndarray
    redundancy: np.ndarray
    permutation: np.ndarray

    @property
    def dual_matrix(self) -> np.ndarray:
        """[A^T | I_{n-k}], a parity-check matrix (a generator when the code is self-dual)."""
        k, r = self.redundancy.shape
        return np.concatenate([self.redundancy.T, np.eye(r, dtype=np.uint8)], axis=1)

    def to_permuted(self, vector) -> np.ndarray:
        return np.asarray(vector, dtype=np.uint8)[..., self.permutation]

    def from_permuted(self, vector) -> np.ndarray:
        vec = np.asarray(vector, dtype=np.uint8)
        out = np.empty_like(vec)
        out[..., self.permutation] = vec
        return out


class CodeType(str, Enum):
    I = "I"
    II = "II"


@dataclass(frozen=True, eq=False)
class BinaryCode:
    generator: np.ndarray

    def __post_init__(self):
        gen = _as_bits(self.generator)
        if gf2_rank(gen) != gen.shape[0]:
            raise UnsupportedShapeError("Generator rows are linearly dependent; use BinaryCode.from_rows")
        gen.setflags(write=False)
        object.__setattr__(self, "generator", gen)

    @classmethod
    def from_rows(cls, rows) -> "BinaryCode":
        reduced = rref(rows)
        return cls(reduced.matrix[: reduced.rank])

    @property
    def n(self) -> int:
        return self.generator.shape[1]

    @property
    def k(self) -> int:
        return self.generator.shape[0]

    def __eq__(self, other: object) -> bool:
        # Same code iff the reduced echelon forms agree
        if not isinstance(other, BinaryCode):
            return NotImplemented
        return self.n == other.n and self.k == other.k and np.array_equal(
            rref(self.generator).matrix, rref(other.generator).matrix)

    def __hash__(self) -> int:
        return hash(rref(self.generator).matrix.tobytes())

    @cached_property
    def standard_form(self) -> StandardForm:
        reduced = rref(self.generator)
        pivots = list(reduced.pivots)
        pivot_set = set(pivots)
        rest = [c for c in range(self.n) if c not in pivot_set]
        permutation = np.array(pivots + rest, dtype=np.int64)
        matrix = reduced.matrix[:, permutation]
        matrix.setflags(write=False)
        return StandardForm(matrix=matrix, redundancy=matrix[:, self.k:], permutation=permutation)

    @cached_property
    def packed_left(self) -> np.ndarray:
        return pack_rows(self.standard_form.redundancy)

    @cached_property
    def packed_right(self) -> np.ndarray:
        return pack_rows(np.ascontiguousarray(self.standard_form.redundancy.T))

    def gram(self) -> np.ndarray:
        g = self.generator.astype(np.int64)
        return (g @ g.T) & 1

    def is_self_orthogonal(self) -> bool:
        return not self.gram().any()

    def is_self_dual(self) -> bool:
        return 2 * self.k == self.n and self.is_self_orthogonal()

    def is_type_ii(self) -> bool:
        if not self.is_self_dual():
            return False
        return bool(np.all(self.generator.sum(axis=1) % 4 == 0))

    @property
    def code_type(self) -> CodeType:
        return CodeType.II if self.is_type_ii() else CodeType.I

    def contains(self, vector) -> bool:
        vec = _as_bits(vector)
        if vec.shape[1] != self.n:
            raise UnsupportedShapeError(f"Vector length {vec.shape[1]} differs from code length {self.n}")
        return gf2_rank(np.concatenate([self.generator, vec])) == self.k

    def contains_all_ones(self) -> bool:
        return self.contains(np.ones(self.n, dtype=np.uint8))


# ===== LEVEL ENUMERATION =====

class LevelEnumerator:
    """Walks message weights t = 1, 2, ... over one information set.

    advance() returns the histogram of codeword weights produced by the next level.
    """

    def __init__(self, rows: np.ndarray, width: int, workers: int = 1,
                 keep_level_limit: int = DEFAULT_KEEP_LEVEL_LIMIT):
        self.rows = np.asarray(rows, dtype=np.uint64)
        self.k = self.rows.size
        self.width = width
        self.n = self.k + width
        self.workers = max(1, workers)
        self.keep_level_limit = keep_level_limit
        self.level = 0
        self._current: Optional[np.ndarray] = np.zeros(1, dtype=np.uint64)

    def _chunk(self, t: int, j: int, keep: bool) -> Tuple[Optional[np.ndarray], np.ndarray]:
        prefix = self._current[: math.comb(j, t - 1)]
        chunk = prefix ^ self.rows[j]
        counts = np.bincount(np.bitwise_count(chunk), minlength=self.width + 1)
        return (chunk if keep else None), counts

    def advance(self, keep: bool = True) -> np.ndarray:
        t = self.level + 1
        hist = np.zeros(self.n + 1, dtype=np.int64)
        if t > self.k:
            self.level = t
            self._current = np.zeros(0, dtype=np.uint64)
            return hist
        if self._current is None:
            raise RuntimeError(f"Level {self.level} was not kept; cannot build level {t}")
        if keep and math.comb(self.k, t) > self.keep_level_limit:
            raise CeilingExceededError(t, self.keep_level_limit, math.comb(self.k, t))

        indices = range(t - 1, self.k)
        if self.workers > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                results = list(pool.map(lambda j: self._chunk(t, j, keep), indices))
        else:
            results = [self._chunk(t, j, keep) for j in indices]

        for _, counts in results:
            hist[t: t + counts.size] += counts
        self._current = np.concatenate([chunk for chunk, _ in results]) if keep else None
        self.level = t
        logger.debug(f"LevelEnumerator: level {t} done, {math.comb(self.k, t):,} codewords")
        return hist


def _level_histograms(rows: np.ndarray, width: int, max_level: int, workers: int,
                      keep_level_limit: int) -> np.ndarray:
    """hist[t, w] = number of codewords of weight w with message weight t, for t <= max_level."""
    walker = LevelEnumerator(rows, width, workers, keep_level_limit)
    hist = np.zeros((max_level + 1, walker.n + 1), dtype=np.int64)
    hist[0, 0] = 1
    for t in range(1, max_level + 1):
        hist[t] = walker.advance(keep=t < max_level)
    return hist


def _two_set_cost(k: int, max_weight: int) -> int:
    return sum(math.comb(k, t) for t in range(max_weight // 2 + 1)) * 2


def _single_set_cost(k: int, max_weight: int) -> int:
    return sum(math.comb(k, t) for t in range(min(max_weight, k) + 1))


def weight_counts(code: BinaryCode, max_weight: int, workers: int = 1,
                  ceiling: int = DEFAULT_WEIGHT_CEILING, single_set: bool = False,
                  keep_level_limit: int = DEFAULT_KEEP_LEVEL_LIMIT) -> Dict[int, int]:
    """Exact A_w for every 0 <= w <= max_weight.

    Self-dual codes use both information sets: every codeword of weight w has at
    most floor(w/2) ones on the left set, or fewer than w/2 on the right one.
    Other codes enumerate every message of weight <= w on the left set.
    """
    two_sets = code.is_self_dual() and not single_set
    full = not two_sets and code.k <= FULL_ENUMERATION_MAX_K
    if max_weight > ceiling and not full:
        cost = _two_set_cost(code.k, max_weight) if two_sets else _single_set_cost(code.k, max_weight)
        raise CeilingExceededError(max_weight, ceiling, cost)

    width = code.n - code.k
    if two_sets:
        left = _level_histograms(code.packed_left, width, max_weight // 2, workers, keep_level_limit)
        right = _level_histograms(code.packed_right, code.k, (max_weight + 1) // 2 - 1, workers,
                                  keep_level_limit)
        counts = {}
        for w in range(max_weight + 1):
            total = int(left[: w // 2 + 1, w].sum())
            total += int(right[: (w + 1) // 2, w].sum())
            counts[w] = total
        return counts

    levels = code.k if full else min(max_weight, code.k)
    hist = _level_histograms(code.packed_left, width, levels, workers, keep_level_limit)
    totals = hist.sum(axis=0)
    return {w: int(totals[w]) if w < totals.size else 0 for w in range(max_weight + 1)}


def count_weight(code: BinaryCode, w: int, workers: int = 1, ceiling: int = DEFAULT_WEIGHT_CEILING,
                 single_set: bool = False) -> int:
    if w < 0 or w > code.n:
        return 0
    if w == 0:
        return 1
    return weight_counts(code, w, workers=workers, ceiling=ceiling, single_set=single_set)[w]


def min_weight(code: BinaryCode, workers: int = 1,
               keep_level_limit: int = DEFAULT_KEEP_LEVEL_LIMIT) -> int:
    """Exact minimum nonzero weight; 0 for the zero code."""
    if code.k == 0:
        return 0
    width = code.n - code.k
    two_sets = code.is_self_dual()
    left = LevelEnumerator(code.packed_left, width, workers, keep_level_limit)
    right = LevelEnumerator(code.packed_right, code.k, workers, keep_level_limit) if two_sets else None

    best = code.n + 1
    for r in range(1, code.k + 1):
        for walker in (left, right):
            if walker is None:
                continue
            hist = walker.advance()
            nonzero = np.nonzero(hist)[0]
            if nonzero.size:
                best = min(best, int(nonzero[0]))
        # Unseen codewords have weight >= 2r+2 (two sets) or >= r+1 (one set)
        if two_sets and best <= 2 * r + 1:
            break
        if not two_sets and best <= r + 1:
            break
    logger.debug(f"min_weight: [{code.n},{code.k}] d={best}")
    return best


def rains_bound(n: int, code_type: CodeType) -> int:
    if n % 2:
        raise ValueError(f"Self-dual codes have even length, got {n}")
    bound = 4 * (n // 24) + 4
    if code_type is CodeType.I and n % 24 == 22:
        bound += 2
    return bound


# ===== CLASSIFICATION =====

@dataclass
class WeightProfile:
    n: int
    k: int
    d: int
    counts: Dict[int, int]
    code_type: CodeType
    family: Optional[str] = None
    params: Dict[str, int] = field(default_factory=dict)

    @property
    def extremal(self) -> bool:
        return self.d == rains_bound(self.n, self.code_type)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "type": self.code_type.value,
            "counts": {str(w): c for w, c in sorted(self.counts.items())},
            "family": self.family,
            "params": dict(self.params),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "WeightProfile":
        return cls(
            n=int(data["n"]),
            k=int(data["k"]),
            d=int(data["d"]),
            counts={int(w): int(c) for w, c in data["counts"].items()},
            code_type=CodeType(data["type"]),
            family=data.get("family"),
            params={key: int(value) for key, value in (data.get("params") or {}).items()},
        )


# n -> (largest weight needed, minimum distance of the families)
CLASSIFIED_LENGTHS = {56: (12, 10), 64: (14, 12), 68: (14, 12), 80: (16, 14)}

PARAM_RANGES = {
    ("W64,1", "beta"): (14, 284),
    ("W64,2", "beta"): (0, 277),
    ("W68,1", "beta"): (104, 1358),
    ("W68,2", "gamma"): (0, 9),
}


def _exact(numerator: int, denominator: int, name: str, n: int, counts: Dict[int, int]) -> int:
    if numerator % denominator:
        raise ClassificationError(f"Enumerator outside known families: {name} is not an integer", n, counts)
    return numerator // denominator


def _families(n: int, counts: Dict[int, int]) -> Tuple[str, Dict[str, int]]:
    if n == 56:
        alpha = _exact(counts[10] - 308, 4, "alpha", n, counts)
        if counts[12] == 4246 - 8 * alpha:
            return "W56,1", {"alpha": alpha}
        if counts[12] == 3990 - 8 * alpha:
            return "W56,2", {"alpha": alpha}
    elif n == 64:
        beta = _exact(counts[12] - 1312, 16, "beta", n, counts)
        if counts[14] == 22016 - 64 * beta:
            return "W64,1", {"beta": beta}
        if counts[14] == 23040 - 64 * beta:
            return "W64,2", {"beta": beta}
    elif n == 68:
        beta = _exact(counts[12] - 442, 4, "beta", n, counts)
        if counts[14] == 10864 - 8 * beta:
            return "W68,1", {"beta": beta}
        gamma = _exact(14960 - 8 * beta - counts[14], 256, "gamma", n, counts)
        return "W68,2", {"gamma": gamma, "beta": beta}
    elif n == 80:
        alpha = _exact(counts[14] - 3200, 4, "alpha", n, counts)
        beta = _exact(counts[16] - 47645 + 8 * alpha, 256, "beta", n, counts)
        return "W80,2", {"alpha": alpha, "beta": beta}
    raise ClassificationError("Enumerator outside known families", n, counts)


def _check_ranges(family: str, params: Dict[str, int]) -> None:
    for name, value in params.items():
        bounds = PARAM_RANGES.get((family, name))
        if bounds and not bounds[0] <= value <= bounds[1]:
            logger.warning(f"classify_enumerator: {family} {name}={value} outside known range {bounds}")


def classify_enumerator(code: BinaryCode, workers: int = 1,
                        ceiling: int = DEFAULT_WEIGHT_CEILING) -> WeightProfile:
    if not code.is_self_dual():
        raise ClassificationError("Only self-dual codes can be classified", code.n, {})
    code_type = code.code_type

    if code.n not in CLASSIFIED_LENGTHS:
        d = min_weight(code, workers=workers)
        counts = weight_counts(code, d, workers=workers, ceiling=ceiling) if d <= ceiling else {0: 1}
        return WeightProfile(n=code.n, k=code.k, d=d, counts=counts, code_type=code_type)

    top, family_d = CLASSIFIED_LENGTHS[code.n]
    counts = weight_counts(code, top, workers=workers, ceiling=ceiling)
    nonzero = [w for w, c in counts.items() if w > 0 and c > 0]
    d = min(nonzero) if nonzero else min_weight(code, workers=workers)

    if code_type is CodeType.II:
        return WeightProfile(n=code.n, k=code.k, d=d, counts=counts, code_type=code_type, family="II")
    if d != family_d:
        raise ClassificationError(f"Minimum weight {d} differs from the family value {family_d}", code.n, counts)

    family, params = _families(code.n, counts)
    _check_ranges(family, params)
    return WeightProfile(n=code.n, k=code.k, d=d, counts=counts, code_type=code_type, family=family, params=params)


def expected_counts(family: str, params: Dict[str, int]) -> Dict[int, int]:
    """Low-weight coefficients predicted by a family and its parameters."""
    alpha, beta, gamma = params.get("alpha", 0), params.get("beta", 0), params.get("gamma", 0)
    table = {
        "W56,1": {10: 308 + 4 * alpha, 12: 4246 - 8 * alpha},
        "W56,2": {10: 308 + 4 * alpha, 12: 3990 - 8 * alpha},
        "W64,1": {12: 1312 + 16 * beta, 14: 22016 - 64 * beta},
        "W64,2": {12: 1312 + 16 * beta, 14: 23040 - 64 * beta},
        "W68,1": {12: 442 + 4 * beta, 14: 10864 - 8 * beta},
        "W68,2": {12: 442 + 4 * beta, 14: 14960 - 8 * beta - 256 * gamma},
        "W80,2": {14: 3200 + 4 * alpha, 16: 47645 - 8 * alpha + 256 * beta},
    }
    if family not in table:
        raise KeyError(f"Unknown family {family}")
    return table[family]


# ===== PERSISTENCE =====

def format_generator(code: BinaryCode) -> str:
    lines = [f"{code.n} {code.k}"]
    lines.extend("".join(str(int(bit)) for bit in row) for row in code.generator)
    return "\n".join(lines) + "\n"


def parse_generator(text: str) -> BinaryCode:
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError("Empty generator text")
    try:
        n, k = (int(part) for part in lines[0].split())
    except ValueError as exc:
        raise ValueError(f"Bad generator header {lines[0]!r}; expected 'n k'") from exc
    rows = lines[1:]
    if len(rows) != k:
        raise ValueError(f"Header announces {k} rows, found {len(rows)}")
    for index, row in enumerate(rows):
        if len(row) != n or set(row) - {"0", "1"}:
            raise ValueError(f"Row {index + 1} is not a 0/1 string of length {n}")
    code = BinaryCode(np.array([[int(ch) for ch in row] for row in rows], dtype=np.uint8))
    return code


def save_generator(code: BinaryCode, path: Union[str, Path]) -> Path:
    target = Path(path)
    target.write_text(format_generator(code))
    return target


def load_generator(path: Union[str, Path]) -> BinaryCode:
    return parse_generator(Path(path).read_text())
