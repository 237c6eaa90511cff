class WKnotsError(Exception):
    """Base exception for every failure raised by the wknots package."""
