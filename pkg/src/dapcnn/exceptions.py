"""Exception hierarchy. Every error carries a stable machine-readable code."""


class DapcnnError(Exception):
    """Base class for all library errors."""

    code = "dapcnn-error"


class EmptySampleError(DapcnnError):
    code = "empty-sample"


class NonFiniteInputError(DapcnnError):
    code = "non-finite-input"


class MomentDegeneracyError(DapcnnError):
    """Hankel matrix of moments is not positive definite at some degree.

    ``max_feasible_degree`` is the largest degree for which the construction
    still succeeds; ``layer``/``signal`` locate the offending signal when the
    error originates inside a network refresh (1-based layer index).
    """

    code = "moment-degeneracy"

    def __init__(self, message, max_feasible_degree=None, layer=None, signal=None):
        super().__init__(message)
        self.max_feasible_degree = max_feasible_degree
        self.layer = layer
        self.signal = signal


class DegreeOutOfRangeError(DapcnnError):
    code = "degree-out-of-range"


class NonRealRootsError(DapcnnError):
    code = "non-real-roots"


class BasisTooLargeError(DapcnnError):
    code = "basis-too-large"


class DimensionMismatchError(DapcnnError):
    code = "dimension-mismatch"


class DimensionUnsupportedError(DapcnnError):
    code = "dimension-unsupported"


class MissingNormalizationStatsError(DapcnnError):
    code = "missing-normalization-stats"


class BasesNotRefreshedError(DapcnnError):
    code = "bases-not-refreshed"


class DegenerateNodeError(DapcnnError):
    code = "degenerate-node"


class EmptyDatasetError(DapcnnError):
    code = "empty-dataset"


class LMStallError(DapcnnError):
    """Normal-equation solve kept failing after maximal damping escalation.

    The best state reached before the stall is attached.
    """

    code = "lm-stall"

    def __init__(self, message, best_state=None, history=None):
        super().__init__(message)
        self.best_state = best_state
        self.history = history


class DatasetFormatError(DapcnnError):
    code = "dataset-format"


class WeightCountMismatchError(DapcnnError):
    code = "weight-count-mismatch"


class UnsupportedSchemaError(DapcnnError):
    code = "unsupported-schema"


class DegenerateSignalWarning(UserWarning):
    """A hidden-layer signal collapsed and its basis degree was reduced."""
