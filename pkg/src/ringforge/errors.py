class RingError(Exception):
    """Base class for all ringforge errors."""


class DimensionMismatch(RingError):
    pass


class NotAssociative(RingError):
    def __init__(self, i, j, l):
        super().__init__(f"(b{i}*b{j})*b{l} != b{i}*(b{j}*b{l})")
        self.witness = (i, j, l)


class NoIdentity(RingError):
    def __init__(self, index):
        super().__init__(f"given identity does not fix basis element b{index}")
        self.witness = index


class OrderMismatch(RingError):
    def __init__(self, i, j):
        super().__init__(f"product b{i}*b{j} is not killed by the additive orders of its factors")
        self.witness = (i, j)


class AmbientMismatch(RingError):
    pass


class NotAnIdeal(RingError):
    def __init__(self, witness):
        super().__init__(f"subgroup is not a two-sided ideal (witness {witness})")
        self.witness = witness


class TooLarge(RingError):
    def __init__(self, size, cap, cap_name="elements"):
        super().__init__(f"size {size} exceeds cap '{cap_name}' = {cap}")
        self.size = size
        self.cap = cap
        self.cap_name = cap_name


class InvariantViolation(RingError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class NotIdempotentModJ(RingError):
    pass


class ClassificationAmbiguous(InvariantViolation):
    pass


class InvalidGroupTable(RingError):
    pass


class NotAdmissible(RingError):
    pass


class NotFiniteDimensional(RingError):
    pass


class NotQF(RingError):
    pass


class UnknownName(RingError):
    pass


class ParseError(RingError):
    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)
        self.offset = offset
