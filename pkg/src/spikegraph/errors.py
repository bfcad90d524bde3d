"""Exception hierarchy shared across the package."""


class SpikeGraphError(Exception):
    """Base class for all package errors."""


class ValidationError(SpikeGraphError):
    """A network or configuration failed validation."""


class SelfLoop(ValidationError):
    """A neuron has a nonzero synaptic weight onto itself."""


class NonMonotone(ValidationError):
    """A rate function decreases somewhere on the probe grid."""


class ZeroDelta(ValidationError):
    """Some presynaptic weight produces a zero rate gap at the origin."""


class NoEdgesDeclared(ValidationError):
    """The network has no edges, so edge-dependent constants are undefined."""


class DeltaTooLarge(ValidationError):
    """Requested slot length exceeds the certified maximum without an override."""


class HorizonTooShort(SpikeGraphError):
    """The recording is too short for the requested slotting."""


class OutOfHorizon(SpikeGraphError):
    """A query time lies outside the recorded horizon."""


class NoCandidateLog(SpikeGraphError):
    """An operation requires a candidate log but none was recorded."""


class NoBoundsProvided(SpikeGraphError):
    """External data needs user-asserted rate bounds, and none were given."""


class InsufficientReplicas(SpikeGraphError):
    """A Monte Carlo check is inconclusive at the requested replica budget."""


class IoFailure(SpikeGraphError):
    """A file could not be written or read."""


class SchemaError(SpikeGraphError):
    """A config document does not match the documented schema."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


class UnsortedTimes(IoFailure):
    """Spike rows are not globally time-sorted."""


class DuplicateTimestamp(IoFailure):
    """The same neuron carries two identical spike times."""


class MalformedRow(IoFailure):
    """A spike file row (or binary record) could not be parsed."""
