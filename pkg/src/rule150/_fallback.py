"""Pure-Python kernels, used when the compiled extension is unavailable.

Mirrors the signatures in ``_kernels.pyx`` exactly.
"""
from array import array

from .exact import INT64_MAX, INT64_MIN, ActivityOverflowError

COMPILED = False


def _combine(strings, coeffs):
    terms = [(c, s) for c, s in zip(coeffs, strings) if c]
    if not terms:
        return [0] * len(strings[0])
    if len(terms) == 1:
        c, s = terms[0]
        return list(s) if c == 1 else [c * v for v in s]
    if len(terms) == 2:
        (c0, s0), (c1, s1) = terms
        return [c0 * u + c1 * v for u, v in zip(s0, s1)]
    return [sum(c * s[i] for c, s in terms) for i in range(len(strings[0]))]


def expand(seeds, program, generations, bounded=True, stats=None):
    """Apply a linear replication program ``generations`` times.

    ``program[k]`` lists the coefficient tuples whose combinations are
    concatenated to form carried string ``k`` of the next generation.
    Bounded runs return int64 arrays, unbounded runs lists of Python ints.
    """
    strings = [list(s) for s in seeds]
    for gen in range(1, generations + 1):
        new = []
        for segments in program:
            out = []
            for coeffs in segments:
                part = _combine(strings, coeffs)
                if bounded and part and (max(part) > INT64_MAX or min(part) < INT64_MIN):
                    raise ActivityOverflowError(
                        f"element overflow in generation {gen}")
                out.extend(part)
                if stats is not None:
                    stats["ops"] = stats.get("ops", 0) + len(part) * max(
                        1, sum(1 for c in coeffs if c))
            new.append(out)
        strings = new
    if bounded:
        return [array("q", s) for s in strings]
    return strings


def simulate_counts(r, count):
    """Activities of the first ``count`` rows of single-seeded Rule 90 (r=0) or 150 (r=1).

    Row ``t`` is packed into an int whose bit ``i`` holds cell ``i - t``.
    """
    row = 1
    out = [1]
    if r:
        for _ in range(count - 1):
            row ^= (row << 1) ^ (row << 2)
            out.append(row.bit_count())
    else:
        for _ in range(count - 1):
            row ^= row << 2
            out.append(row.bit_count())
    return out[:count]


def rule150_series(count):
    """X(0..count-1) by appending ``3y`` and ``2y + z`` to the prefix per doubling."""
    xs = [1, 3]
    while len(xs) < count:
        half = len(xs) // 2
        y = xs[:half]
        xs.extend([3 * v for v in y])
        xs.extend([2 * u + v for u, v in zip(y, xs[half:2 * half])])
    del xs[count:]
    try:
        return array("q", xs)
    except OverflowError:
        raise ActivityOverflowError("element overflow in doubling") from None
