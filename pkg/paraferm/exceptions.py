class ParafermError(Exception):
    pass


class InvalidArgumentError(ParafermError, ValueError):
    pass


class CutoffExceededError(ParafermError):
    pass


class DimensionMismatchError(ParafermError, ValueError):
    pass


class InternalConsistencyError(ParafermError):
    pass


class FlaggedSeedError(ParafermError):
    pass


class UnknownCheckError(ParafermError, KeyError):
    pass


class InvalidConfigError(ParafermError, ValueError):
    pass
