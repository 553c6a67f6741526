"""Checked exact-integer arithmetic shared by every module.

Values are Python ints, so nothing wraps on its own.  The width check makes
a fixed machine width explicit: a result that does not fit raises
:class:`ActivityOverflowError` instead of being silently truncated.  Passing
``bits=None`` lifts the bound.
"""

DEFAULT_BITS = 64
INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1


class ActivityOverflowError(OverflowError):
    """A value left the configured exact-integer range."""


def checked(value, bits=DEFAULT_BITS, what="value"):
    """Return ``value`` unchanged if it fits in ``bits`` unsigned bits."""
    if bits is not None and not 0 <= value < (1 << bits):
        raise ActivityOverflowError(
            f"{what} does not fit in {bits}-bit unsigned range")
    return value


def checked_signed(value, what="value"):
    if not INT64_MIN <= value <= INT64_MAX:
        raise ActivityOverflowError(f"{what} does not fit in signed 64-bit range")
    return value


def max_index(func, bits, start=0):
    """Largest ``n`` for which the increasing ``func(n, bits=None)`` fits in ``bits``."""
    n = start
    while not func(n + 1, bits=None) >> bits:
        n += 1
    return n
