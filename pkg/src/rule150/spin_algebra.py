"""Binary time spins, spin blocks and the closed-form activity product.

The activity of single-seeded Rule 150 at time ``t`` is multiplicative over
the maximal runs of 1-digits in the binary expansion of ``t``: a run of
length ``n`` contributes the factor ``chi(n) = X(2**n - 1)``.
"""
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .exact import DEFAULT_BITS, ActivityOverflowError, checked


@dataclass(frozen=True)
class SpinWord:
    """Binary digits of a time index, ``sigma[j]`` being the weight-``2**j`` digit.

    Indexing outside ``0 <= j < width`` reads 0, which gives the boundary
    digits sigma_{-1} and sigma_N for free.
    """

    sigma: tuple = ()

    def __post_init__(self):
        if any(s not in (0, 1) for s in self.sigma):
            raise ValueError("spin digits must be 0 or 1")
        if self.sigma and self.sigma[-1] != 1:
            raise ValueError("leading spin must be 1")

    @property
    def width(self):
        return len(self.sigma)

    @property
    def value(self):
        return sum(s << j for j, s in enumerate(self.sigma))

    def __getitem__(self, j):
        if 0 <= j < len(self.sigma):
            return self.sigma[j]
        return 0

    def __str__(self):
        return "".join(str(s) for s in reversed(self.sigma))


def spin_decompose(t):
    if t < 0:
        raise ValueError(f"time index must be non-negative, got {t}")
    return SpinWord(tuple((t >> j) & 1 for j in range(t.bit_length())))


def spin_blocks(word):
    """Multiplicities of maximal 1-runs, keyed by run length."""
    counts = Counter()
    run = 0
    # one step past the top digit so the virtual zero sigma_N closes the last run
    for j in range(word.width + 1):
        if word[j]:
            run += 1
        elif run:
            counts[run] += 1
            run = 0
    return counts


def _block_exponent(word, n):
    # direct transcription of the boundary-product exponent, used as a test oracle
    total = 0
    for i in range(word.width - n + 1):
        inside = 1
        for k in range(n):
            inside *= word[i + k]
        total += (1 - word[i - 1]) * (1 - word[i + n]) * inside
    return total


@lru_cache(maxsize=None)
def _chi_exact(n):
    value = 1
    for k in range(1, n + 1):
        value = 2 * value - (-1) ** k
    return value


def chi(n, bits=DEFAULT_BITS):
    """Activity factor of a spin block of length ``n`` via its recurrence."""
    if n < 0:
        raise ValueError(f"block length must be non-negative, got {n}")
    return checked(_chi_exact(n), bits, f"chi({n})")


def chi_closed(n, bits=DEFAULT_BITS):
    if n < 0:
        raise ValueError(f"block length must be non-negative, got {n}")
    return checked(((1 << (n + 2)) + 1) // 3, bits, f"chi({n})")


def activity_closed_form(t, bits=DEFAULT_BITS):
    """X(t) as the product of chi over the spin blocks of ``t``."""
    product = 1
    for n, c in spin_blocks(spin_decompose(t)).items():
        product *= chi(n, bits=None) ** c
        if bits is not None and product >> bits:
            raise ActivityOverflowError(
                f"X({t}) does not fit in {bits}-bit unsigned range")
    return product


def rule90_activity(t, bits=DEFAULT_BITS):
    """Sierpinski activity ``2**popcount(t)``."""
    if t < 0:
        raise ValueError(f"time index must be non-negative, got {t}")
    return checked(1 << bin(t).count("1"), bits, f"X90({t})")
