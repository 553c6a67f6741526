"""Reference data and independent brute-force oracles for the test suite.

Nothing here imports the package under test.
"""

# X(t1 + t2): rows t1 = 0..15, columns t2 = 0, 16, ..., 240
_ACTIVITY_256_ROWS = """
1 3 3 5 3 9 5 11 3 9 9 15 5 15 11 21
3 9 9 15 9 27 15 33 9 27 27 45 15 45 33 63
3 9 9 15 9 27 15 33 9 27 27 45 15 45 33 63
5 15 15 25 15 45 25 55 15 45 45 75 25 75 55 105
3 9 9 15 9 27 15 33 9 27 27 45 15 45 33 63
9 27 27 45 27 81 45 99 27 81 81 135 45 135 99 189
5 15 15 25 15 45 25 55 15 45 45 75 25 75 55 105
11 33 33 55 33 99 55 121 33 99 99 165 55 165 121 231
3 5 9 11 9 15 15 21 9 15 27 33 15 25 33 43
9 15 27 33 27 45 45 63 27 45 81 99 45 75 99 129
9 15 27 33 27 45 45 63 27 45 81 99 45 75 99 129
15 25 45 55 45 75 75 105 45 75 135 165 75 125 165 215
5 11 15 21 15 33 25 43 15 33 45 63 25 55 55 85
15 33 45 63 45 99 75 129 45 99 135 189 75 165 165 255
11 21 33 43 33 63 55 85 33 63 99 129 55 105 121 171
21 43 63 85 63 129 105 171 63 129 189 255 105 215 231 341
"""


def _activity_256():
    rows = [[int(v) for v in line.split()] for line in _ACTIVITY_256_ROWS.strip().splitlines()]
    xs = [0] * 256
    for t1, row in enumerate(rows):
        for k, x in enumerate(row):
            xs[t1 + 16 * k] = x
    return xs


ACTIVITY_256 = _activity_256()

BLOCK_SUMS_18 = [1, 4, 12, 40, 128, 416, 1344, 4352, 14080, 45568, 147456, 477184,
          1544192, 4997120, 16171008, 52330496, 169345024, 548012032]

DETREND_LISTED = [1, 3, 4, 7, 11, 18]


def naive_rows(rule, count):
    """Rows of single-seeded ECA ``rule`` as 0/1 lists over cells -count..count."""
    width = 2 * count + 1
    row = [0] * width
    row[count] = 1
    out = [row]
    for _ in range(count - 1):
        nxt = [0] * width
        for i in range(1, width - 1):
            idx = 4 * row[i - 1] + 2 * row[i] + row[i + 1]
            nxt[i] = (rule >> idx) & 1
        row = nxt
        out.append(row)
    return out


def naive_activity(rule, count):
    return [sum(r) for r in naive_rows(rule, count)]


def popcount(t):
    return bin(t).count("1")


def poly_mul_mod2(p, q):
    """Schoolbook product of coefficient lists, reduced mod 2."""
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return [c % 2 for c in out]
