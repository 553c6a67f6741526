"""Wall-clock scaling of the activity methods under doubling of T."""
import gc
import statistics
import time

from . import _backend
from .eca_oracle import RULE150, simulate_activity
from .replication_engine import activity_series
from .spin_algebra import activity_closed_form

METHODS = {
    "iteration": lambda T: activity_series(T),
    "simulate": lambda T: simulate_activity(RULE150, T),
    "closed": lambda T: [activity_closed_form(t) for t in range(T)],
}

# allowed time ratio per doubling of T, checked at the largest pair of sizes
BANDS = {"iteration": (1.5, 3.0), "simulate": (3.0, 6.0)}

DEFAULT_SIZES = {
    "iteration": [1 << 16, 1 << 17],
    "simulate": [1 << 13, 1 << 14],
    "closed": [1 << 14, 1 << 15],
}


def _sample(func, min_time):
    calls = 0
    start = time.perf_counter()
    while True:
        func()
        calls += 1
        elapsed = time.perf_counter() - start
        if elapsed >= min_time:
            return elapsed / calls


def time_sizes(func, sizes, repetitions=5, min_time=0.2):
    """Median per-call seconds of ``func(size)`` for each size.

    Sizes are sampled round-robin within each repetition so that slow drift
    in machine speed hits every size alike.  Each sample loops until at least
    ``min_time`` has elapsed; one warmup call per size is discarded; the
    garbage collector is paused while timing, as in :mod:`timeit`.
    """
    for size in sizes:
        func(size)
    samples = {size: [] for size in sizes}
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        for _ in range(repetitions):
            for size in sizes:
                samples[size].append(_sample(lambda: func(size), min_time))
    finally:
        if gc_was_enabled:
            gc.enable()
    return [statistics.median(samples[size]) for size in sizes]


def run(methods, sizes=None, repetitions=5, backends=("active",), min_time=0.2):
    """Rows of ``(method, backend, size, seconds, ratio)``; ratio is None for the first size."""
    modules = {"active": _backend.kernels, "pure": _backend.pure,
               "compiled": _backend.compiled}
    rows = []
    for backend in backends:
        module = modules[backend]
        if module is None:
            raise ValueError("compiled kernels are not available")
        name = "compiled" if module.COMPILED else "pure"
        with _backend.using(module):
            for method in methods:
                method_sizes = sizes or DEFAULT_SIZES[method]
                times = time_sizes(METHODS[method], method_sizes, repetitions, min_time)
                prev = None
                for size, seconds in zip(method_sizes, times):
                    ratio = seconds / prev if prev else None
                    rows.append((method, name, size, seconds, ratio))
                    prev = seconds
    return rows


def check(rows):
    """Messages for every method whose final doubling ratio leaves its band."""
    failures = []
    last = {}
    for method, backend, size, seconds, ratio in rows:
        last[method, backend] = (size, ratio)
    for (method, backend), (size, ratio) in last.items():
        if method not in BANDS:
            continue
        lo, hi = BANDS[method]
        if not lo <= ratio <= hi:
            failures.append(
                f"{method}/{backend} ratio {ratio:.2f} at T={size} outside [{lo}, {hi}]")
    return failures
