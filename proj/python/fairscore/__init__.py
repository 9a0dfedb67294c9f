"""Demographic-fairness evaluation of biometric verification systems.

Thin Python wrapper over the C++ core: verification score ingestion,
FMR/FNMR rate tables, threshold calibration at FMR operating points,
the fairness discrepancy rate (FDR) and its area summary, DET sweeps,
closed-/open-set identification extensions, and a seeded synthetic
score generator.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
