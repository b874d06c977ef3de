"""Exception types shared by every module.

Each error carries a short machine-readable ``code`` (``"loop"``,
``"size_limit_exceeded"``, ...) so callers and the CLI can branch on the
failure kind without parsing messages.
"""


class GcsumError(ValueError):
    code = "error"

    def __init__(self, message, code=None):
        super().__init__(message)
        if code is not None:
            self.code = code


class InvalidGraph(GcsumError):
    code = "invalid_graph"


class SizeLimitExceeded(GcsumError):
    code = "size_limit_exceeded"


class PreconditionViolated(GcsumError):
    code = "precondition_violated"


class InvalidPartition(GcsumError):
    code = "invalid_partition"


class ExtensionError(GcsumError):
    code = "extension_error"


class CompositionError(GcsumError):
    code = "composition_error"
