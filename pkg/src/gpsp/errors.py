"""Exception types shared across the package."""


class GpspError(Exception):
    """Base class for all errors raised by this package."""


class GraphFormatError(GpspError, ValueError):
    """A node/edge/label file line could not be parsed."""

    def __init__(self, path, lineno, message):
        self.path = str(path)
        self.lineno = lineno
        super().__init__(f"{path}:{lineno}: {message}")


class TypeConsistencyError(GpspError, ValueError):
    """An edge type was seen with conflicting endpoint node types."""


class SubnetworkNotFoundError(GpspError, LookupError):
    """No subnetwork in a partition matches the requested type query."""


class MissingVectorError(GpspError, KeyError):
    """A required node has no vector in an embedding matrix."""

    def __str__(self):  # KeyError quotes its message by default
        return self.args[0] if self.args else ""


class PipelineStageError(GpspError, RuntimeError):
    """A pipeline stage failed; carries the stage name and the cause."""

    def __init__(self, stage, cause):
        self.stage = stage
        self.cause = cause
        super().__init__(f"stage '{stage}' failed: {cause}")
