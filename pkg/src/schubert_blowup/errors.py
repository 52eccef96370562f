"""Exception types raised on violated preconditions."""


class EngineError(ValueError):
    """Base class for all precondition violations."""


class InadmissibleRank(EngineError):
    pass


class RankMismatch(EngineError):
    pass


class NotARoot(EngineError):
    pass


class IndexOutOfRange(EngineError):
    pass


class RankTooLargeForOracle(EngineError):
    pass


class NotAPCharacter(EngineError):
    pass


class NotMinimalRep(EngineError):
    pass


class CodimOutOfRange(EngineError):
    pass


class BasisMismatch(EngineError):
    pass


class NotCominuscule(EngineError):
    pass


class OutOfRange(EngineError):
    pass
