"""Dyadic block sums of the activity and the detrended signal.

``S_n`` sums X over ``[0, 2**n)``; it obeys ``S_n = 2 S_{n-1} + 4 S_{n-2}``
and equals ``F_{n+2} * 2**n``.  Subtracting the per-block mean ``N_n`` from
every X(t) with ``2**(n-1) <= t < 2**n`` gives a signal whose sum vanishes
on each dyadic block.
"""
import math
from fractions import Fraction

from .exact import DEFAULT_BITS, ActivityOverflowError, checked, max_index
from .replication_engine import activity_series

GOLDEN = (1 + math.sqrt(5)) / 2


def _overflow(func, n, bits):
    limit = max_index(func, bits, start=1)
    return ActivityOverflowError(
        f"{func.__name__}({n}) exceeds {bits}-bit range; maximal supported n is {limit}")


def block_sum(n, bits=DEFAULT_BITS):
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    prev, cur = 1, 4
    if n == 0:
        cur = prev
    for _ in range(n - 1):
        prev, cur = cur, 2 * cur + 4 * prev
    if bits is not None and cur >> bits:
        raise _overflow(block_sum, n, bits)
    return cur


def fibonacci(n, bits=DEFAULT_BITS):
    """F_n with F_1 = F_2 = 1."""
    if n < 1:
        raise ValueError(f"Fibonacci index must be positive, got {n}")
    a, b = 0, 1
    for _ in range(n - 1):
        a, b = b, a + b
    if bits is not None and b >> bits:
        raise _overflow(fibonacci, n, bits)
    return b


def binet(n):
    """Floating-point Binet approximation of F_n, for cross-checks only."""
    return (GOLDEN ** n - (1 - GOLDEN) ** n) / math.sqrt(5)


def block_sum_fib(n, bits=DEFAULT_BITS):
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    value = fibonacci(n + 2, bits=None) << n
    if bits is not None and value >> bits:
        raise _overflow(block_sum_fib, n, bits)
    return value


def detrend_offset(n, bits=DEFAULT_BITS):
    """Mean activity N_n over the block ``[2**(n-1), 2**n)``; N_0 = 1."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n == 0:
        return 1
    diff = block_sum(n, bits=None) - block_sum(n - 1, bits=None)
    q, r = divmod(diff, 1 << (n - 1))
    assert r == 0, f"S_{n} - S_{n-1} not divisible by 2^{n-1}"
    return checked(q, bits, f"N_{n}")


def detrended_series(count, bits=DEFAULT_BITS):
    """X(t) - N_{bitlength(t)} for t < ``count``; ``count`` must be a power of two."""
    if count < 1 or count & (count - 1):
        raise ValueError(f"count must be a power of two, got {count}")
    xs = activity_series(count).values
    offsets = [detrend_offset(n, bits) for n in range(count.bit_length())]
    return tuple(x - offsets[t.bit_length()] for t, x in enumerate(xs))


def eigenvalue_ratio(n, bits=DEFAULT_BITS):
    """S_n / S_{n-1}, tending to the dominant eigenvalue 1 + sqrt(5)."""
    if n < 2:
        raise ValueError(f"ratio needs n >= 2, got {n}")
    return float(Fraction(block_sum(n, bits), block_sum(n - 1, bits)))
