"""Linear expressions of the free strict n-fold monoidal category.

Grammar::

    expr := "0" | IDENT | "(" expr ("*" INT expr)+ ")"

All ``*INT`` operators inside one parenthesis group must carry the same
index. Expressions are normalised on construction: nested products with the
same index are flattened, units are dropped, and one-factor products
collapse to their factor.

There is at most one morphism between two linear expressions, and it exists
iff every pair of symbols is placed compatibly; see :func:`morphism_exists`.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .order import UsageError


class ParseError(UsageError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


@dataclass(frozen=True)
class Unit:
    def __str__(self):
        return "0"


@dataclass(frozen=True)
class Sym:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Prod:
    index: int
    factors: tuple

    def __str__(self):
        return "(" + f" *{self.index} ".join(str(f) for f in self.factors) + ")"


Expr = Unit | Sym | Prod
UNIT = Unit()


def product(index: int, factors: Iterable[Expr]) -> Expr:
    """Normalised ⊗_index of ``factors``."""
    flat: list = []
    for f in factors:
        if isinstance(f, Unit):
            continue
        if isinstance(f, Prod) and f.index == index:
            flat.extend(f.factors)
        else:
            flat.append(f)
    if not flat:
        return UNIT
    if len(flat) == 1:
        return flat[0]
    return Prod(index, tuple(flat))


def normalize(e: Expr) -> Expr:
    if isinstance(e, Prod):
        return product(e.index, (normalize(f) for f in e.factors))
    return e


# --------------------------------------------------------------------------
# parsing

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_STAR = re.compile(r"\*\s*(\d+)")


def _tokens(text: str):
    """Yield (kind, value, position); kinds: lp rp star zero ident end."""
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            yield "end", None, pos
            return
        ch = text[pos]
        if ch in "()":
            yield ("lp" if ch == "(" else "rp"), None, pos
            pos += 1
        elif ch == "*":
            m = _STAR.match(text, pos)
            if not m:
                raise ParseError("expected a product index after '*'", pos)
            yield "star", int(m.group(1)), pos
            pos = m.end()
        elif ch == "0" and not _IDENT.match(text, pos + 1) and not text[pos + 1 : pos + 2].isdigit():
            yield "zero", None, pos
            pos += 1
        elif m := _IDENT.match(text, pos):
            yield "ident", m.group(), pos
            pos = m.end()
        else:
            raise ParseError(f"unexpected character {ch!r}", pos)


def parse(text: str, n: int) -> Expr:
    """Parse ``text`` as an expression with product indices in ``1..n``."""
    toks = list(_tokens(text))
    pos = 0

    def peek():
        return toks[pos]

    def take(kind):
        nonlocal pos
        tok = toks[pos]
        if tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[0]}", tok[2])
        pos += 1
        return tok

    def expr():
        nonlocal pos
        kind, val, at = peek()
        if kind == "zero":
            pos += 1
            return UNIT
        if kind == "ident":
            pos += 1
            return Sym(val)
        if kind == "lp":
            pos += 1
            factors = [expr()]
            index = None
            while peek()[0] == "star":
                _, i, iat = take("star")
                if not 1 <= i <= n:
                    raise ParseError(f"product index {i} outside 1..{n}", iat)
                if index is not None and i != index:
                    raise ParseError(
                        f"mixed indices *{index} and *{i} in one group; add parentheses", iat
                    )
                index = i
                factors.append(expr())
            if index is None:
                raise ParseError("parenthesised group needs at least one product", peek()[2])
            take("rp")
            return product(index, factors)
        raise ParseError(f"unexpected {kind}", at)

    e = expr()
    take("end")
    return e


def to_text(e: Expr) -> str:
    return str(e)


# --------------------------------------------------------------------------
# symbols, restriction, pair shapes


def symbols(e: Expr) -> list:
    if isinstance(e, Sym):
        return [e.name]
    if isinstance(e, Prod):
        return [s for f in e.factors for s in symbols(f)]
    return []


def is_linear(e: Expr, syms: Iterable[str]) -> bool:
    """Each symbol of ``syms`` occurs exactly once and nothing else occurs."""
    occ = symbols(e)
    wanted = set(syms)
    return len(occ) == len(set(occ)) and set(occ) == wanted


@dataclass(frozen=True)
class PairShape:
    """Restriction of a linear expression to the pair (a, b).

    ``kind`` is ``"AB"`` (a ⊗_index b), ``"BA"`` (b ⊗_index a), ``"OnlyA"``,
    ``"OnlyB"`` or ``"Empty"``.
    """

    kind: str
    index: int | None = None

    def __str__(self):
        return f"{self.kind}({self.index})" if self.index is not None else self.kind


def _keep(e: Expr, keep: set) -> Expr:
    if isinstance(e, Sym):
        return e if e.name in keep else UNIT
    if isinstance(e, Prod):
        return product(e.index, (_keep(f, keep) for f in e.factors))
    return e


def restrict(e: Expr, a: str, b: str) -> PairShape:
    """Send every symbol other than a, b to the unit and classify the rest."""
    if a == b:
        raise UsageError("restriction needs two distinct symbols")
    r = _keep(e, {a, b})
    if isinstance(r, Unit):
        return PairShape("Empty")
    if isinstance(r, Sym):
        return PairShape("OnlyA" if r.name == a else "OnlyB")
    if len(r.factors) != 2:
        raise UsageError(f"expression is not linear in {{{a}, {b}}}: {e}")
    first, second = r.factors
    if (first, second) == (Sym(a), Sym(b)):
        return PairShape("AB", r.index)
    if (first, second) == (Sym(b), Sym(a)):
        return PairShape("BA", r.index)
    raise UsageError(f"expression is not linear in {{{a}, {b}}}: {e}")


def _paths(e: Expr) -> dict:
    """symbol -> tuple of (product index, factor position) from the root."""
    out: dict = {}

    def walk(node, path):
        if isinstance(node, Sym):
            if node.name in out:
                raise UsageError(f"symbol {node.name!r} occurs twice")
            out[node.name] = path
        elif isinstance(node, Prod):
            for pos, f in enumerate(node.factors):
                walk(f, path + ((node.index, pos),))

    walk(e, ())
    return out


def pair_shapes(e: Expr, syms: Iterable[str] | None = None) -> dict:
    """PairShape for every ordered pair (a, b), a before b in sorted order.

    One traversal; each pair is decided at its lowest common ancestor.
    """
    paths = _paths(e)
    names = sorted(syms) if syms is not None else sorted(paths)
    out = {}
    for a, b in combinations(names, 2):
        pa, pb = paths.get(a), paths.get(b)
        if pa is None or pb is None:
            if pa is None and pb is None:
                out[a, b] = PairShape("Empty")
            else:
                out[a, b] = PairShape("OnlyA" if pb is None else "OnlyB")
            continue
        for (ia, sa), (_, sb) in zip(pa, pb):
            if sa != sb:
                out[a, b] = PairShape("AB" if sa < sb else "BA", ia)
                break
        else:  # pragma: no cover - distinct leaves always diverge
            raise UsageError(f"symbols {a!r} and {b!r} share a leaf")
    return out


def pair_shapes_reference(e: Expr, syms: Iterable[str] | None = None) -> dict:
    names = sorted(syms) if syms is not None else sorted(set(symbols(e)))
    return {(a, b): restrict(e, a, b) for a, b in combinations(names, 2)}


def _check_same_symbols(a: Expr, b: Expr) -> list:
    sa, sb = symbols(a), symbols(b)
    if len(sa) != len(set(sa)) or len(sb) != len(set(sb)):
        raise UsageError("expressions must be linear (each symbol exactly once)")
    if set(sa) != set(sb):
        raise UsageError(f"symbol sets differ: {sorted(set(sa))} vs {sorted(set(sb))}")
    return sorted(sa)


def _pair_ok(sa: PairShape, sb: PairShape) -> bool:
    # a ⊗_i b in A needs a ⊗_j b (j >= i) or b ⊗_j a (j > i) in B
    if sa.kind == sb.kind:
        return sb.index >= sa.index
    return sb.index > sa.index


def violations(a: Expr, b: Expr, *, reference: bool = False) -> list:
    """Pairs blocking a morphism a -> b, as ((x, y), shape in a, shape in b)."""
    names = _check_same_symbols(a, b)
    shapes = pair_shapes_reference if reference else pair_shapes
    sa, sb = shapes(a, names), shapes(b, names)
    return [(pair, sa[pair], sb[pair]) for pair in sa if not _pair_ok(sa[pair], sb[pair])]


def morphism_exists(a: Expr, b: Expr, *, reference: bool = False) -> bool:
    return not violations(a, b, reference=reference)


def hom_count(a: Expr, b: Expr) -> int:
    """Size of the hom-set: the coherence theorem bounds it by one."""
    return 1 if morphism_exists(a, b) else 0


def interchange_shape(p: int, q: int, names=("a", "b", "c", "d"), units=()) -> tuple:
    """Source and target of η^{pq} on four slots; slots listed in ``units`` are 0."""
    slots = [UNIT if i in units else Sym(x) for i, x in enumerate(names)]
    a, b, c, d = slots
    src = product(p, [product(q, [a, b]), product(q, [c, d])])
    tgt = product(q, [product(p, [a, c]), product(p, [b, d])])
    return src, tgt


def random_linear(rng: random.Random, names, n: int, unit_rate: float = 0.1) -> Expr:
    """A random linear expression over ``names`` with indices in 1..n."""
    leaves: list = [Sym(x) for x in names]
    rng.shuffle(leaves)
    for _ in range(int(unit_rate * len(leaves) + rng.random())):
        leaves.insert(rng.randrange(len(leaves) + 1), UNIT)

    def build(items):
        if len(items) == 1:
            return items[0]
        k = rng.randint(2, min(3, len(items)))
        cuts = sorted(rng.sample(range(1, len(items)), k - 1))
        parts = [items[i:j] for i, j in zip([0] + cuts, cuts + [len(items)])]
        return Prod(rng.randint(1, n), tuple(build(p) for p in parts))

    return build(leaves) if leaves else UNIT
