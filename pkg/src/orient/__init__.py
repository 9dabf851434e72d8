from .construct import find_cyclic_orientation, orient_from_log
from .verify import ViolationReport, VerifyMode, is_cyclically_oriented, verify_orientation

__all__ = [
    "find_cyclic_orientation", "orient_from_log", "ViolationReport", "VerifyMode",
    "is_cyclically_oriented", "verify_orientation",
]
