"""Ordered monoids, compactification and the generic axiom harness.

Every category in this package is a total (pre)order whose morphisms are the
``<=`` relations. All diagrams in such a category commute, so checking the
n-fold monoidal axioms reduces to checking that the required inequalities
exist. The pentagon and hexagon conditions are satisfied by construction and
are not tested separately.
"""

from __future__ import annotations

import itertools
import operator
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence


class UsageError(ValueError):
    """Bad arguments: mismatched carriers, product indices out of range, ..."""


class _Bottom:
    """The adjoined initial object of a compactified category."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "∅"

    def __reduce__(self):
        return (_Bottom, ())


BOTTOM = _Bottom()


def is_bottom(x) -> bool:
    return x is BOTTOM


@dataclass(frozen=True)
class Verdict:
    """Outcome of a verifier: ``ok`` or a counterexample witness.

    ``witness`` is a mapping; operad verifiers fill in
    ``p, q, k, composition, arity, lhs, rhs``.
    """

    ok: bool
    reason: str = ""
    witness: dict | None = None
    flags: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok

    @classmethod
    def success(cls, **flags) -> "Verdict":
        return cls(True, flags=flags)

    @classmethod
    def failure(cls, reason: str, **witness) -> "Verdict":
        return cls(False, reason, witness)

    def to_json(self, encode: Callable[[Any], Any] | None = None) -> dict:
        out: dict = {"status": "success" if self.ok else "counterexample"}
        if self.flags:
            out["flags"] = dict(self.flags)
        if not self.ok:
            out["reason"] = self.reason
            w = {}
            for key, val in (self.witness or {}).items():
                if encode is not None and key in ("lhs", "rhs", "object"):
                    val = encode(val)
                elif isinstance(val, tuple):
                    val = list(val)
                w[key] = val
            out["witness"] = w
        return out


def _cmp_default(a, b) -> int:
    return (a > b) - (a < b)


@dataclass
class OrderedMonoid:
    """A totally ordered monoid given by its behaviour.

    ``compare`` returns -1/0/1. ``strict_monotone`` is ``None`` until
    :func:`verify_ordered_monoid` has sampled the strictness law.
    """

    name: str
    op: Callable[[Any, Any], Any]
    unit: Any
    least: Any
    compare: Callable[[Any, Any], int] = _cmp_default
    strict_monotone: bool | None = None


def omax(a, b, compare: Callable[[Any, Any], int] = _cmp_default):
    """Order-max. Bottom is the strict unit (lifted coproduct)."""
    if a is BOTTOM:
        return b
    if b is BOTTOM:
        return a
    return b if compare(a, b) < 0 else a


def check_interchange(prod_p, prod_q, a, b, c, d, le=operator.le) -> bool:
    """Whether (a ⊗q b) ⊗p (c ⊗q d) <= (a ⊗p c) ⊗q (b ⊗p d).

    In a poset category this is exactly the existence of the interchanger.
    """
    try:
        lhs = prod_p(prod_q(a, b), prod_q(c, d))
        rhs = prod_q(prod_p(a, c), prod_p(b, d))
        return bool(le(lhs, rhs))
    except TypeError as exc:
        raise UsageError(f"incompatible operands for interchange: {exc}") from exc


class PosetCategory:
    """A strict n-fold monoidal category whose hom-sets are a total (pre)order.

    Objects are immutable Python values; ``products[i - 1]`` is ⊗_i. The
    category is always used compactified: :data:`BOTTOM` is adjoined below
    everything and annihilates every product.
    """

    def __init__(
        self,
        name: str,
        products: Sequence[Callable[[Any, Any], Any]],
        unit,
        compare: Callable[[Any, Any], int],
        *,
        product_names: Sequence[str] | None = None,
        encode: Callable[[Any], Any] = lambda x: x,
        decode: Callable[[Any], Any] = lambda x: x,
        render: Callable[[Any], str] | None = None,
        sampler: Callable[[random.Random], Any] | None = None,
        params: dict | None = None,
    ):
        self.name = name
        self.products = tuple(products)
        self.unit = unit
        self._compare = compare
        self.product_names = tuple(product_names or (f"⊗{i + 1}" for i in range(len(self.products))))
        self._encode = encode
        self._decode = decode
        self._render = render
        self.sampler = sampler
        self.params = dict(params or {})

    def __repr__(self):
        return f"PosetCategory({self.name!r}, n={self.n})"

    @property
    def n(self) -> int:
        return len(self.products)

    # order, lifted to the compactification
    def cmp(self, a, b) -> int:
        if a is BOTTOM or b is BOTTOM:
            return (b is BOTTOM) - (a is BOTTOM)
        return self._compare(a, b)

    def le(self, a, b) -> bool:
        return self.cmp(a, b) <= 0

    def lt(self, a, b) -> bool:
        return self.cmp(a, b) < 0

    def equivalent(self, a, b) -> bool:
        return self.cmp(a, b) == 0

    def max(self, a, b):
        return omax(a, b, self.cmp)

    def lexmax(self, items: Iterable):
        best = BOTTOM
        for x in items:
            best = self.max(best, x)
        return best

    # products, lifted to the compactification
    def product(self, i: int):
        if not 1 <= i <= self.n:
            raise UsageError(f"{self.name} has products 1..{self.n}, not {i}")
        return self.products[i - 1]

    def tensor(self, i: int, a, b):
        f = self.product(i)
        if a is BOTTOM or b is BOTTOM:
            return BOTTOM
        return f(a, b)

    def tensor_all(self, i: int, xs: Iterable):
        f = self.product(i)
        acc = self.unit
        for x in xs:
            if x is BOTTOM:
                return BOTTOM
            acc = f(acc, x)
        return acc

    def interchange(self, p: int, q: int, a, b, c, d):
        """Both four-fold products for the interchanger η^{pq}, p < q."""
        if not p < q:
            raise UsageError(f"interchange needs p < q, got {p}, {q}")
        lhs = self.tensor(p, self.tensor(q, a, b), self.tensor(q, c, d))
        rhs = self.tensor(q, self.tensor(p, a, c), self.tensor(p, b, d))
        return lhs, rhs

    def check_interchange(self, p: int, q: int, a, b, c, d) -> bool:
        lhs, rhs = self.interchange(p, q, a, b, c, d)
        return self.le(lhs, rhs)

    # serialisation
    def encode(self, x):
        return None if x is BOTTOM else self._encode(x)

    def decode(self, data):
        return BOTTOM if data is None else self._decode(data)

    def render(self, x) -> str:
        if x is BOTTOM:
            return "∅"
        if self._render is not None:
            return self._render(x)
        return str(self.encode(x))

    def sample(self, rng: random.Random):
        if self.sampler is None:
            raise UsageError(f"{self.name} has no sampler")
        return self.sampler(rng)


def _tuples(values, sampler, rng, trials, arity):
    if values is not None:
        yield from itertools.product(list(values), repeat=arity)
    else:
        for _ in range(trials):
            yield tuple(sampler(rng) for _ in range(arity))


def verify_ordered_monoid(
    m: OrderedMonoid,
    sampler: Callable[[random.Random], Any] | None = None,
    trials: int = 1000,
    *,
    values: Iterable | None = None,
    seed: int = 0,
) -> Verdict:
    """Check the ordered-monoid laws on samples (or exhaustively on ``values``).

    On success ``m.strict_monotone`` is set from the strictness check, and
    the same value is reported in ``verdict.flags``.
    """
    if values is not None:
        values = list(values)
    rng = random.Random(seed)
    cmp = m.compare

    def le(x, y):
        return cmp(x, y) <= 0

    for (a,) in _tuples(values, sampler, rng, trials, 1):
        if cmp(a, a) != 0:
            return Verdict.failure("reflexivity", values=(a,))
        if m.op(m.unit, a) != a or m.op(a, m.unit) != a:
            return Verdict.failure("unit", values=(a,))
        if not le(m.least, a):
            return Verdict.failure("least", values=(a,))
    strict = True
    for a, b, c in _tuples(values, sampler, rng, trials, 3):
        if cmp(a, b) != -cmp(b, a):
            return Verdict.failure("antisymmetry", values=(a, b))
        if le(a, b) and le(b, c) and not le(a, c):
            return Verdict.failure("transitivity", values=(a, b, c))
        if m.op(m.op(a, b), c) != m.op(a, m.op(b, c)):
            return Verdict.failure("associativity", values=(a, b, c))
    for a, b, c, d in _tuples(values, sampler, rng, trials, 4):
        if le(b, a):
            a, b = b, a
        if le(d, c):
            c, d = d, c
        if not le(m.op(a, c), m.op(b, d)) or not le(m.op(c, a), m.op(d, b)):
            return Verdict.failure("functoriality", values=(a, b, c, d))
        if strict and cmp(m.unit, a) < 0 and cmp(a, b) < 0:
            if not (cmp(m.op(a, c), m.op(b, d)) < 0 and cmp(m.op(c, a), m.op(d, b)) < 0):
                strict = False
    m.strict_monotone = strict
    return Verdict.success(strict_monotone=strict)


def verify_nfold(
    cat: PosetCategory,
    sampler: Callable[[random.Random], Any] | None = None,
    trials: int = 1000,
    *,
    values: Iterable | None = None,
    seed: int = 0,
) -> Verdict:
    """Check that ``cat`` is an n-fold monoidal category on samples.

    Each product must be associative, unital and order-functorial, and the
    interchange inequality must hold for every pair p < q. The internal and
    external unit conditions reduce to exact equalities of unit products.
    """
    if values is not None:
        values = list(values)
    if sampler is None and values is None:
        sampler = cat.sample
    rng = random.Random(seed)
    u = cat.unit
    for i in range(1, cat.n + 1):
        if cat.tensor(i, u, u) != u:
            return Verdict.failure("unit-coherence", product=i)
    for (a,) in _tuples(values, sampler, rng, trials, 1):
        for i in range(1, cat.n + 1):
            if cat.tensor(i, u, a) != a or cat.tensor(i, a, u) != a:
                return Verdict.failure("unit", product=i, values=(a,))
    for a, b, c in _tuples(values, sampler, rng, trials, 3):
        for i in range(1, cat.n + 1):
            if cat.tensor(i, cat.tensor(i, a, b), c) != cat.tensor(i, a, cat.tensor(i, b, c)):
                return Verdict.failure("associativity", product=i, values=(a, b, c))
    for quad in _tuples(values, sampler, rng, trials, 4):
        a, b, c, d = quad
        lo_ab, hi_ab = (a, b) if cat.le(a, b) else (b, a)
        lo_cd, hi_cd = (c, d) if cat.le(c, d) else (d, c)
        for i in range(1, cat.n + 1):
            if not cat.le(cat.tensor(i, lo_ab, lo_cd), cat.tensor(i, hi_ab, hi_cd)):
                return Verdict.failure("functoriality", product=i, values=(lo_ab, hi_ab, lo_cd, hi_cd))
        for p in range(1, cat.n + 1):
            for q in range(p + 1, cat.n + 1):
                lhs, rhs = cat.interchange(p, q, a, b, c, d)
                if not cat.le(lhs, rhs):
                    return Verdict.failure(
                        "interchange", p=p, q=q, values=quad, lhs=lhs, rhs=rhs
                    )
    return Verdict.success()


NAT_PLUS = OrderedMonoid("nat+", operator.add, 0, 0)


def nat_category() -> PosetCategory:
    """(ℕ; max, +), the basic 2-fold example."""
    return PosetCategory(
        "nat",
        [max, operator.add],
        0,
        _cmp_default,
        product_names=["max", "+"],
        decode=int,
        sampler=lambda rng: rng.randint(0, 20),
    )
