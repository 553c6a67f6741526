"""Direct simulation of single-seeded elementary cellular automata.

Rows live on an infinite lattice but are stored as a finite window: the
set bits of ``mask`` (bit ``i`` is cell ``offset + i``), with every cell
outside the window equal to 0.  Rules 90 and 150 step by shift-XOR on the
packed row; any other rule goes through its 8-entry lookup table.
"""
from dataclasses import dataclass

from . import _backend

RULE90 = 90
RULE150 = 150


@dataclass(frozen=True)
class LatticeWindow:
    mask: int
    offset: int = 0

    def __post_init__(self):
        if self.mask < 0:
            raise ValueError("mask must be non-negative")
        if self.mask and not self.mask & 1:
            raise ValueError("window is not trimmed: lowest bit must be set")

    @classmethod
    def from_cells(cls, cells, offset=0):
        mask = sum(1 << i for i, c in enumerate(cells) if c)
        return cls.trimmed(mask, offset)

    @classmethod
    def trimmed(cls, mask, offset):
        if not mask:
            return cls(0, 0)
        low = (mask & -mask).bit_length() - 1
        return cls(mask >> low, offset + low)

    @property
    def width(self):
        return self.mask.bit_length()

    @property
    def cells(self):
        return tuple((self.mask >> i) & 1 for i in range(self.width))

    @property
    def activity(self):
        return bin(self.mask).count("1")

    def cell(self, n):
        i = n - self.offset
        return (self.mask >> i) & 1 if i >= 0 else 0


SEED = LatticeWindow(1, 0)


def _check_rule(rule):
    if not 0 <= rule <= 255:
        raise ValueError(f"rule number must be in [0, 255], got {rule}")
    if rule & 1:
        raise ValueError(
            f"rule {rule} maps 000 to 1, so the single-seed pattern is not finite")


def step(rule, row):
    """Next row of ``rule`` applied to ``row`` on the infinite zero background."""
    _check_rule(rule)
    m = row.mask
    if rule == RULE150:
        return LatticeWindow.trimmed(m ^ (m << 1) ^ (m << 2), row.offset - 1)
    if rule == RULE90:
        return LatticeWindow.trimmed(m ^ (m << 2), row.offset - 1)
    return step_table(rule, row)


def step_table(rule, row):
    """Per-cell lookup path, valid for every rule with f(000) = 0."""
    _check_rule(rule)
    new = 0
    for j in range(row.width + 2):
        # new cell offset - 1 + j sees old cells offset - 2 + j .. offset + j
        left = row.cell(row.offset - 2 + j)
        center = row.cell(row.offset - 1 + j)
        right = row.cell(row.offset + j)
        if (rule >> (4 * left + 2 * center + right)) & 1:
            new |= 1 << j
    return LatticeWindow.trimmed(new, row.offset - 1)


def rows(rule, count):
    """The first ``count`` rows starting from the single seed."""
    row = SEED
    out = []
    for _ in range(count):
        out.append(row)
        row = step(rule, row)
    return out


def simulate_activity(rule, count):
    """Activity of each of the first ``count`` rows, O(count**2) work."""
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    _check_rule(rule)
    if rule in (RULE90, RULE150):
        return _backend.kernels.simulate_counts(1 if rule == RULE150 else 0, count)
    return [r.activity for r in rows(rule, count)]


def clmul(a, b):
    """Carry-less product of two GF(2) polynomials packed as ints."""
    if a.bit_count() > b.bit_count():
        a, b = b, a
    out = 0
    while a:
        low = a & -a
        out ^= b << (low.bit_length() - 1)
        a ^= low
    return out


def gf2_power(base, exponent):
    result = 1
    while exponent:
        if exponent & 1:
            result = clmul(result, base)
        exponent >>= 1
        if exponent:
            base = clmul(base, base)
    return result


def row150_polynomial(t):
    """Row ``t`` of Rule 150 as the coefficients of (1 + x + x**2)**t mod 2."""
    if t < 0:
        raise ValueError(f"time index must be non-negative, got {t}")
    return LatticeWindow.trimmed(gf2_power(0b111, t), -t)
