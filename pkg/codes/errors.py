from typing import Dict, Optional


class RingMismatchError(ValueError):
    """Operands live in different rings (or groups)."""


class ShorthandParseError(ValueError):
    def __init__(self, message: str, position: int, token: Optional[str] = None):
        self.position = position
        self.token = token
        super().__init__(f"{message} (token {position}: {token!r})")


class GroupLiteralError(ValueError):
    pass


class UnsupportedShapeError(ValueError):
    pass


class CeilingExceededError(ValueError):
    def __init__(self, weight: int, ceiling: int, estimated_codewords: int):
        self.weight = weight
        self.ceiling = ceiling
        self.estimated_codewords = estimated_codewords
        super().__init__(
            f"Refusing to count weight {weight} above ceiling {ceiling}: "
            f"about {estimated_codewords:,} codeword updates required"
        )


class ClassificationError(ValueError):
    """Enumerator outside the known families; carries the raw counts."""

    def __init__(self, message: str, n: int, counts: Dict[int, int]):
        self.n = n
        self.counts = dict(counts)
        super().__init__(f"{message}; n={n}, counts={self.counts}")


class DerivationError(ValueError):
    pass
