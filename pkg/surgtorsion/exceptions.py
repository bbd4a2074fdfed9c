class TorsionError(Exception):
    """Base exception for surgtorsion errors."""
    pass

class InputParseError(TorsionError):
    """Raised when a diagram, word, permutation, slope or input file cannot be parsed."""
    pass

class HypothesisError(TorsionError):
    """Raised when a hypothesis of a torsion formula does not hold."""
    pass

class NonAcyclicError(HypothesisError):
    """Raised when a twisted chain complex or a filling is not acyclic."""
    pass

class InconsistencyError(TorsionError):
    """Raised when two independent computations of the same quantity disagree."""
    pass

class RecordEncodingError(TorsionError):
    """Raised when encoding or decoding a record fails."""
    pass
