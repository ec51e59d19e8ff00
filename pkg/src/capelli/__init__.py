"""Exact-arithmetic verification of Capelli identities for symmetric pairs."""

from .identities import (ResourceLimitExceeded, VerificationReport, verify_classical_capelli,
                         verify_proposition, verify_theorem)
from .weil import CaseConfig, build_omega, omega_hom
from .weyl import WeylElement, format_weyl, parse_weyl

__version__ = "0.1.0"

__all__ = ["CaseConfig", "ResourceLimitExceeded", "VerificationReport", "WeylElement", "build_omega",
           "format_weyl", "omega_hom", "parse_weyl", "verify_classical_capelli", "verify_proposition",
           "verify_theorem"]
