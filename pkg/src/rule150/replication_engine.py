"""Linear string-doubling iteration for the Rule 150 activity series.

A replication rule carries one or two equal-length integer strings from
generation to generation.  Each new string is a concatenation of segments,
and each segment is an elementwise integer combination of the carried
strings.  Rule 150 is ``a,b -> a,b,3a,2a+b`` seeded with ``a=(1), b=(3)``:
after ``n`` generations ``a`` and ``b`` are the activities on
``[0, 2**n)`` and ``[2**n, 2**(n+1))``.

Rules are written in a tiny grammar::

    rule  := idents "->" combo ("," combo)*
    combo := ["+"|"-"] term (("+"|"-") term)*
    term  := [integer] ident

The combos are split evenly among the carried strings in order.
"""
import re
from collections.abc import Sequence
from dataclasses import dataclass

from . import _backend
from .exact import ActivityOverflowError
from .spin_algebra import activity_closed_form


class RuleSyntaxError(ValueError):
    """Malformed rule text; ``position`` is the 0-based character offset."""

    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class ReplicationRule:
    """Arity, per-output coefficient segments and seed strings of a rule."""

    names: tuple
    outputs: tuple
    seeds: tuple = ()

    def __post_init__(self):
        arity = len(self.names)
        if arity not in (1, 2):
            raise ValueError(f"rule arity must be 1 or 2, got {arity}")
        if len(self.outputs) != arity:
            raise ValueError("one output per carried string is required")
        nseg = len(self.outputs[0])
        for segments in self.outputs:
            if not segments:
                raise ValueError("every output needs at least one segment")
            if len(segments) != nseg:
                raise ValueError("outputs must have equal segment counts")
            for coeffs in segments:
                if len(coeffs) != arity:
                    raise ValueError(
                        f"coefficient tuple {coeffs} does not match arity {arity}")
        if self.seeds:
            if len(self.seeds) != arity:
                raise ValueError(f"expected {arity} seed strings, got {len(self.seeds)}")
            if len({len(s) for s in self.seeds}) != 1 or not self.seeds[0]:
                raise ValueError("seed strings must be non-empty and of equal length")

    @property
    def arity(self):
        return len(self.names)

    def with_seeds(self, *seeds):
        return ReplicationRule(self.names, self.outputs,
                               tuple(tuple(s) for s in seeds))


@dataclass(frozen=True)
class GenerationState:
    generation: int
    strings: tuple

    def concatenated(self):
        return tuple(v for s in self.strings for v in s)


@dataclass(frozen=True)
class ActivityString:
    """``values[i]`` is the activity at time ``start + i``.

    ``values`` is any read-only integer sequence; the doubling iteration
    hands back a memoryview over packed int64 storage.
    """

    values: Sequence[int]
    start: int = 0

    def tolist(self):
        return list(self.values)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]


_TOKEN = re.compile(r"(?P<arrow>->)|(?P<int>\d+)|(?P<ident>[a-z]+)|(?P<op>[+,-])")


def _tokenize(text):
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            raise RuleSyntaxError(f"unexpected character {text[pos]!r}", pos)
        tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind, value=None):
        tok = self.tokens[self.i]
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise RuleSyntaxError(f"expected {want!r}, found {got!r}", tok[2])
        self.i += 1
        return tok

    def names(self):
        names = [self.take("ident")]
        while self.peek()[1] == ",":
            self.take("op", ",")
            names.append(self.take("ident"))
        seen = set()
        for _, name, pos in names:
            if name in seen:
                raise RuleSyntaxError(f"duplicate identifier {name!r}", pos)
            seen.add(name)
        return [n for _, n, _ in names]

    def combo(self, names):
        coeffs = [0] * len(names)
        sign = 1
        first = True
        while True:
            tok = self.peek()
            if tok[1] in "+-" and tok[0] == "op":
                sign = -1 if tok[1] == "-" else 1
                self.take("op")
            elif not first:
                break
            weight = 1
            if self.peek()[0] == "int":
                weight = int(self.take("int")[1])
            _, name, pos = self.take("ident")
            if name not in names:
                raise RuleSyntaxError(f"unknown identifier {name!r}", pos)
            coeffs[names.index(name)] += sign * weight
            sign = 1
            first = False
        return tuple(coeffs)

    def rule(self):
        names = self.names()
        self.take("arrow")
        combos = [self.combo(names)]
        while self.peek()[1] == ",":
            self.take("op", ",")
            combos.append(self.combo(names))
        end = self.take("end")
        if len(combos) % len(names):
            raise RuleSyntaxError(
                f"{len(combos)} segments cannot be split among {len(names)} strings",
                end[2])
        per = len(combos) // len(names)
        outputs = tuple(tuple(combos[k * per:(k + 1) * per]) for k in range(len(names)))
        return names, outputs


def parse_rule(text, seeds=()):
    """Parse rule text such as ``"a,b -> a,b,3a,2a+b"``."""
    names, outputs = _Parser(text).rule()
    if len(names) > 2:
        raise RuleSyntaxError(f"rule arity must be 1 or 2, got {len(names)}", 0)
    return ReplicationRule(tuple(names), outputs, tuple(tuple(s) for s in seeds))


RULE150 = parse_rule("a,b -> a,b,3a,2a+b", seeds=[(1,), (3,)])
SIERPINSKI = parse_rule("a -> a,2a", seeds=[(1,)])
THUE_MORSE = parse_rule("a -> a,-a", seeds=[(1,)])


def initial_state(rule):
    if not rule.seeds:
        raise ValueError("rule has no seed strings")
    return GenerationState(0, rule.seeds)


def run_rule(rule, generations, bounded=True):
    """Final :class:`GenerationState` after ``generations`` doublings."""
    if generations < 0:
        raise ValueError(f"generations must be non-negative, got {generations}")
    strings = _backend.kernels.expand(
        [list(s) for s in initial_state(rule).strings], rule.outputs,
        generations, bounded)
    return GenerationState(generations, tuple(tuple(s) for s in strings))


def apply_generation(rule, state, bounded=True):
    """One doubling step; returns a fresh state."""
    if len(state.strings) != rule.arity:
        raise ValueError(
            f"state carries {len(state.strings)} strings, rule expects {rule.arity}")
    try:
        strings = _backend.kernels.expand(
            [list(s) for s in state.strings], rule.outputs, 1, bounded)
    except ActivityOverflowError:
        raise ActivityOverflowError(
            f"element overflow in generation {state.generation + 1}") from None
    return GenerationState(state.generation + 1, tuple(tuple(s) for s in strings))


def activity_series(count, bounded=True):
    """X(0), ..., X(count-1) of single-seeded Rule 150 by string doubling.

    The concatenation ``(Y_n, Z_n)`` is prefix-stable, so the series is built
    in place in a single buffer; ``bounded=False`` runs the general engine on
    Python ints instead.
    """
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    if bounded:
        return ActivityString(memoryview(_backend.kernels.rule150_series(count)).toreadonly())
    generations = max(0, (count - 1).bit_length() - 1)
    y, z = _backend.kernels.expand([[1], [3]], RULE150.outputs, generations, False)
    return ActivityString(tuple((y + z)[:count]))


def activity_at(t):
    """X(t) in O(log t) through the spin-block product."""
    return activity_closed_form(t)


def self_similarity_check(t):
    """Whether X(t) = X(t mod 4) * X(t div 8) for ``t`` whose bit 2 is clear."""
    if t < 8:
        raise ValueError(f"self-similarity needs t >= 8, got {t}")
    if (t >> 2) & 1:
        raise ValueError(f"bit 2 of t={t} is set")
    return activity_at(t) == activity_at(t & 3) * activity_at(t >> 3)
