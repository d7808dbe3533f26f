"""Finitely supported sequences: Seq(S) and Seq(M,+).

A :class:`FinSeq` is stored trimmed (no trailing units), so tuple equality is
equality of sequences. Comparison pads with units on demand.
"""

from __future__ import annotations

import random
from itertools import zip_longest

from . import kernels
from .order import NAT_PLUS, OrderedMonoid, PosetCategory, UsageError, verify_ordered_monoid


class StructureError(ValueError):
    """A requested categorical structure does not exist for these inputs."""


class FinSeq(tuple):
    """Finitely supported sequence of naturals, e.g. ``FinSeq([0, 1, 2])``."""

    def __new__(cls, entries=()):
        entries = tuple(entries)
        if any(x < 0 for x in entries):
            raise ValueError(f"negative entry in {entries}")
        return super().__new__(cls, kernels.trim(entries))

    @property
    def length(self) -> int:
        return len(self)

    def __repr__(self):
        return f"FinSeq({list(self)})"

    def __str__(self):
        return format_seq(self)


ZERO = FinSeq()


def lex_compare(a, b) -> int:
    """-1, 0 or 1; decided at the first differing index after zero padding."""
    return kernels.lex_cmp(tuple(a), tuple(b))


def lexmax(a: FinSeq, b: FinSeq) -> FinSeq:
    return b if lex_compare(a, b) < 0 else a


def concat(a: FinSeq, b: FinSeq) -> FinSeq:
    # a is trimmed, so len(a) is l(a) and b starts right after it
    return FinSeq(tuple(a) + tuple(b))


def pointwise_add(a: FinSeq, b: FinSeq) -> FinSeq:
    return tuple.__new__(FinSeq, kernels.add_seq(tuple(a), tuple(b)))


def sort_desc(a: FinSeq) -> FinSeq:
    return FinSeq(sorted(a, reverse=True))


def check_sort_triangle(a: FinSeq, b: FinSeq) -> bool:
    """s(A + B) <= s(A) + s(B). Always true; ``False`` signals a bug."""
    a = FinSeq(a)
    b = FinSeq(b)
    lhs = sort_desc(pointwise_add(a, b))
    rhs = pointwise_add(sort_desc(a), sort_desc(b))
    return lex_compare(lhs, rhs) <= 0


def parse_seq(text: str) -> FinSeq:
    """Parse ``[0,1,2]``; ``[]`` is the zero sequence."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise UsageError(f"expected a bracketed sequence, got {text!r}")
    body = s[1:-1].strip()
    if not body:
        return ZERO
    try:
        return FinSeq(int(tok) for tok in body.split(","))
    except ValueError as exc:
        raise UsageError(f"bad sequence {text!r}: {exc}") from exc


def format_seq(a) -> str:
    return "[" + ",".join(str(x) for x in a) + "]"


def random_seq(rng: random.Random, max_len: int = 6, max_val: int = 4) -> FinSeq:
    return FinSeq(rng.randint(0, max_val) for _ in range(rng.randint(0, max_len)))


# generic Seq(M) over an arbitrary ordered monoid ------------------------------


def _generic_ops(m: OrderedMonoid):
    unit = m.unit

    def trim(xs):
        xs = list(xs)
        while xs and xs[-1] == unit:
            xs.pop()
        return tuple(xs)

    def cmp(a, b):
        for x, y in zip_longest(a, b, fillvalue=unit):
            c = m.compare(x, y)
            if c:
                return c
        return 0

    def mx(a, b):
        return b if cmp(a, b) < 0 else a

    def cat(a, b):
        return trim(tuple(a) + tuple(b))

    def add(a, b):
        return trim(m.op(x, y) for x, y in zip_longest(a, b, fillvalue=unit))

    return trim, cmp, mx, cat, add


def seq_category(
    monoid: OrderedMonoid | None = None,
    *,
    pointwise: bool = True,
    sample_values=None,
) -> PosetCategory:
    """Seq(M) (lexmax, concat) or, with ``pointwise``, Seq(M,+) (..., pointwise op).

    The pointwise product only exists when the monoid operation strictly
    preserves strict order; that is checked here, once, by sampling or on
    ``sample_values``. Failing monoids raise :class:`StructureError`.
    """
    monoid = monoid or NAT_PLUS
    if pointwise:
        if monoid.strict_monotone is None:
            if sample_values is None and monoid is not NAT_PLUS:
                raise UsageError("need sample_values to check a custom monoid")
            values = sample_values if sample_values is not None else range(6)
            verdict = verify_ordered_monoid(monoid, values=values)
            if not verdict.ok:
                raise StructureError(f"{monoid.name} is not an ordered monoid: {verdict.reason}")
        if not monoid.strict_monotone:
            raise StructureError(
                f"{monoid.name} does not strictly preserve strict order; "
                "pointwise product does not respect lexicographic order"
            )

    if monoid is NAT_PLUS:
        products = [lexmax, concat, pointwise_add]
        names = ["lexmax", "concat", "pointwise+"]
        compare, unit = lex_compare, ZERO
        decode = FinSeq
    else:
        _, compare, mx, cat, add = _generic_ops(monoid)
        products = [mx, cat, add]
        names = ["lexmax", "concat", f"pointwise-{monoid.name}"]
        unit = ()
        decode = tuple
    if not pointwise:
        products, names = products[:2], names[:2]
    name = "seq-nat" if pointwise else "seq"
    if monoid is not NAT_PLUS:
        name += f"[{monoid.name}]"
    return PosetCategory(
        name,
        products,
        unit,
        compare,
        product_names=names,
        encode=list,
        decode=decode,
        render=format_seq,
        sampler=random_seq if monoid is NAT_PLUS else None,
    )
