"""
wknots - exact computations for w-knotted objects.
Gauss diagrams and braids, arrow-diagram quotients, the Alexander formula,
the expansion Z, AT spaces and a truncated Kashiwara-Vergne solver.
"""

from .config import settings  # noqa: F401
