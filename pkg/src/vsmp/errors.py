"""Exception types raised across the package."""


class VSMPError(Exception):
    pass


class InvalidVertex(VSMPError, ValueError):
    pass


class SelfLoop(VSMPError, ValueError):
    pass


class NotABijection(VSMPError, ValueError):
    pass


class InvalidPosition(VSMPError, IndexError):
    pass


class SizeMismatch(VSMPError, ValueError):
    pass


class UnknownHeuristic(VSMPError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class InstanceTooLarge(VSMPError, ValueError):
    pass


class InvalidParameter(VSMPError, ValueError):
    pass


class UnsupportedFormat(VSMPError, ValueError):
    pass


class DuplicateRun(VSMPError, ValueError):
    pass


class ParseError(VSMPError, ValueError):
    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line


class InstanceFailed(VSMPError):
    def __init__(self, instance_id, cause):
        super().__init__(f"instance {instance_id!r}: {cause}")
        self.instance_id = instance_id
        self.cause = cause
