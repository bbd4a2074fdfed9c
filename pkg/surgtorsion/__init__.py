__version__ = "0.1.0"

from .surgtorsion import SurgeryTorsion
from .exceptions import TorsionError, InputParseError, HypothesisError, NonAcyclicError, InconsistencyError, \
    RecordEncodingError
