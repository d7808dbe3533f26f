"""Collections, n-fold operads and their algebras in poset categories.

In a category whose morphisms are ``<=``, an operad composition γ^{pq}
exists iff

    C(k) ⊗_p (C(j_1) ⊗_q ... ⊗_q C(j_k))  <=  C(j_1 + ... + j_k)

and its associativity and unit diagrams commute automatically. The unit
diagrams hold iff C(1) is the unit object. Compositions are enumerated with
the arity n ascending, then k ascending, then in colexicographic order, so
the first counterexample is deterministic.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Iterator, Sequence

from . import kernels
from .categories import category_ref, from_ref, get_category
from .order import BOTTOM, PosetCategory, UsageError, Verdict
from .seq import FinSeq
from .young import Young


class ConstructionError(ValueError):
    """Seeds or inputs that cannot start an operad."""


@dataclass(frozen=True)
class Collection:
    """Terms C(0..bound) in a compactified poset category."""

    category: PosetCategory
    terms: tuple
    name: str = ""

    @property
    def bound(self) -> int:
        return len(self.terms) - 1

    def __getitem__(self, j: int):
        if not 0 <= j <= self.bound:
            raise IndexError(f"arity {j} outside 0..{self.bound}")
        return self.terms[j]

    def __len__(self):
        return len(self.terms)

    def truncate(self, bound: int) -> "Collection":
        return Collection(self.category, self.terms[: bound + 1], self.name)

    def replace(self, j: int, value) -> "Collection":
        terms = list(self.terms)
        terms[j] = value
        return Collection(self.category, tuple(terms), self.name)

    def to_json(self) -> dict:
        cat = self.category
        out = {
            "category": category_ref(cat),
            "bound": self.bound,
            "terms": {str(j): cat.encode(t) for j, t in enumerate(self.terms)},
        }
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Collection":
        try:
            cat = from_ref(data["category"])
            bound = int(data["bound"])
            raw = data["terms"]
            terms = tuple(cat.decode(raw.get(str(j))) for j in range(bound + 1))
        except (KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"malformed collection: {exc!r}") from exc
        return cls(cat, terms, data.get("name", ""))


def collection(cat: PosetCategory, terms: Sequence, name: str = "", *, arity0=BOTTOM) -> Collection:
    """Build a collection from terms for arities 1..N; arity 0 is ``arity0``."""
    return Collection(cat, (arity0,) + tuple(terms), name)


# --------------------------------------------------------------------------
# compositions


def colex_compositions(n: int, k: int) -> Iterator[tuple]:
    """Compositions of n into k positive parts, colexicographic order."""
    if k < 1 or n < k:
        return
    if k == 1:
        yield (n,)
        return
    for last in range(1, n - k + 2):
        for head in colex_compositions(n - last, k - 1):
            yield head + (last,)


def compositions(n: int, ks=None) -> Iterator[tuple]:
    """All compositions of n, k ascending, colex within each k."""
    for k in ks if ks is not None else range(1, n + 1):
        yield from colex_compositions(n, k)


def composite(C: Collection, p: int, q: int, comp: Sequence[int]):
    """C(k) ⊗_p (C(j_1) ⊗_q ... ⊗_q C(j_k))."""
    cat = C.category
    inner = cat.tensor_all(q, (C[j] for j in comp))
    return cat.tensor(p, C[len(comp)], inner)


def composite_right(C: Collection, p: int, q: int, comp: Sequence[int]):
    """Same composite, with the inner product associated to the right."""
    cat = C.category
    inner = cat.unit
    for j in reversed(comp):
        inner = cat.tensor(q, C[j], inner)
    return cat.tensor(p, C[len(comp)], inner)


def check_composition(C: Collection, p: int, q: int, comp: Sequence[int]):
    """(lhs, rhs, holds) for one instance of γ^{pq}."""
    comp = tuple(comp)
    if any(j < 1 for j in comp):
        raise UsageError("composition parts must be >= 1")
    n = sum(comp)
    lhs = composite(C, p, q, comp)
    rhs = C[n]
    return lhs, rhs, C.category.le(lhs, rhs)


def _check_pq(cat: PosetCategory, p: int, q: int):
    if not 1 <= p < q:
        raise UsageError(f"need 1 <= p < q, got p={p}, q={q}")
    if q > cat.n:
        raise UsageError(f"{cat.name} has only {cat.n} products; q={q}")


def _witness(p, q, comp, lhs, rhs) -> dict:
    return dict(p=p, q=q, k=len(comp), composition=tuple(comp), arity=sum(comp), lhs=lhs, rhs=rhs)


def _unit_verdict(C: Collection) -> Verdict | None:
    cat = C.category
    if C.bound >= 1 and not C[1] == cat.unit:
        return Verdict.failure("unit-axiom", arity=1, object=C[1])
    return None


def iter_failures(C: Collection, p: int, q: int, bound: int | None = None, arities=None):
    """Every failing composition, in enumeration order."""
    bound = C.bound if bound is None else bound
    for n in arities if arities is not None else range(1, bound + 1):
        for comp in compositions(n):
            lhs, rhs, ok = check_composition(C, p, q, comp)
            if not ok:
                yield _witness(p, q, comp, lhs, rhs)


def _is_nat(cat) -> bool:
    return cat.name == "nat"


def _first_failure_at(payload):
    ref, encoded, p, q, n = payload
    C = Collection.from_json({"category": ref, "bound": len(encoded) - 1,
                              "terms": {str(j): t for j, t in enumerate(encoded)}})
    for w in iter_failures(C, p, q, arities=[n]):
        w = dict(w)
        w["lhs"], w["rhs"] = C.category.encode(w["lhs"]), C.category.encode(w["rhs"])
        return w
    return None


def verify_operad(
    C: Collection,
    p: int = 1,
    q: int = 2,
    bound: int | None = None,
    *,
    fast: bool = True,
    jobs: int = 1,
) -> Verdict:
    """Whether γ^{pq} exists for every composition of every arity <= bound."""
    cat = C.category
    _check_pq(cat, p, q)
    bound = C.bound if bound is None else bound
    if bound > C.bound:
        raise UsageError(f"bound {bound} exceeds the collection's {C.bound}")
    bad_unit = _unit_verdict(C)
    if bad_unit is not None:
        return bad_unit

    if fast and _is_nat(cat) and (p, q) == (1, 2) and BOTTOM not in C.terms[1 : bound + 1]:
        hit = kernels.nat_first_violation(list(C.terms[: bound + 1]), bound)
        if hit is None:
            return Verdict.success()
        n, k, comp = hit
        lhs, rhs, _ = check_composition(C, p, q, comp)
        return Verdict.failure("composition", **_witness(p, q, comp, lhs, rhs))

    if jobs > 1:
        ref = category_ref(cat)
        encoded = [cat.encode(t) for t in C.terms[: bound + 1]]
        payloads = [(ref, encoded, p, q, n) for n in range(1, bound + 1)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for w in pool.map(_first_failure_at, payloads):
                if w is not None:
                    w["lhs"], w["rhs"] = cat.decode(w["lhs"]), cat.decode(w["rhs"])
                    return Verdict.failure("composition", **w)
        return Verdict.success()

    for w in iter_failures(C, p, q, bound):
        return Verdict.failure("composition", **w)
    return Verdict.success()


def verify_all_pairs(C: Collection, m: int, bound: int | None = None) -> Verdict:
    """First failure over all 1 <= p < q <= m.

    Also checks downward inheritance: if every adjacent pair (q-1, q)
    succeeds then every pair must.
    """
    if m > C.category.n:
        raise UsageError(f"{C.category.name} has only {C.category.n} products")
    results = {}
    for p in range(1, m + 1):
        for q in range(p + 1, m + 1):
            results[p, q] = verify_operad(C, p, q, bound)
    adjacent_ok = all(results[q - 1, q].ok for q in range(2, m + 1))
    for (p, q), v in results.items():
        if not v.ok:
            if adjacent_ok:
                return Verdict.failure("downward-inheritance", **(v.witness or {}))
            return v
    return Verdict.success(pairs=len(results))


# --------------------------------------------------------------------------
# minimal operads in ℕ


def _seed_check(seeds: Sequence[int]):
    seeds = [int(s) for s in seeds]
    if not seeds:
        raise ConstructionError("need at least the seed C(1) = 0")
    if seeds[0] != 0:
        raise ConstructionError(f"C(1) must be 0 (unit), got {seeds[0]}")
    if any(s < 0 for s in seeds):
        raise ConstructionError("seeds must be natural numbers")
    C = collection(get_category("nat"), seeds)
    v = verify_operad(C, 1, 2)
    if not v.ok:
        w = v.witness
        raise ConstructionError(
            "seeds violate max(C(k), C(j_1)+...+C(j_k)) <= C(n) at "
            f"n={w['arity']}, k={w['k']}, j={w['composition']}: {w['lhs']} > {w['rhs']}"
        )
    return seeds


def minimal_nat(seeds: Sequence[int], bound: int = 16, *, method: str = "dp") -> Collection:
    """The minimal 2-fold operad in (ℕ; max, +) extending ``seeds`` = (C(1), ..., C(l)).

    ``method="dp"`` uses the binary split max_i C(i) + C(n-i);
    ``method="enum"`` takes the max over every composition.
    """
    seeds = _seed_check(seeds)
    if method == "dp":
        terms = kernels.nat_minimal_dp(seeds, bound)[1:]
    elif method == "enum":
        terms = list(seeds[:bound])
        for n in range(len(seeds) + 1, bound + 1):
            # the all-ones composition contributes C(n) + 0, so 0 is a floor
            terms.append(max(0, kernels.nat_enum_max([-1] + terms, n)))
    else:
        raise UsageError(f"unknown method {method!r}")
    name = "C_{" + ",".join(map(str, seeds)) + "}"
    return collection(get_category("nat"), terms, name)


def closed_form_nat(seeds: Sequence[int], n: int, *, q_from_zero: bool = False) -> int:
    """a_q + p * a_k with n = p*k + q and k = len(seeds).

    By default 1 <= q <= k; with ``q_from_zero`` 0 <= q < k and a_0 = 0.
    """
    if n < 1:
        raise UsageError("n must be >= 1")
    k = len(seeds)
    a = [0] + list(seeds)
    if q_from_zero:
        p, q = divmod(n, k)
    else:
        p, q = divmod(n - 1, k)
        q += 1
    return a[q] + p * a[k]


def closed_form_applies(seeds: Sequence[int]) -> bool:
    """Whether the periodic extension a_q + p*a_k is superadditive.

    Exactly when this holds does the closed form agree with the minimal
    operad for every n.
    """
    k = len(seeds)
    for x in range(1, k + 1):
        for y in range(x, k + 1):
            if closed_form_nat(seeds, x + y) < seeds[x - 1] + seeds[y - 1]:
                return False
    return True


def random_valid_seeds(rng: random.Random, max_len: int = 5, max_step: int = 4) -> list:
    """Random seeds (0, a_2, ..., a_l) that satisfy the operad inequalities."""
    length = rng.randint(2, max_len)
    seeds = [0]
    for n in range(2, length + 1):
        floor = max(seeds[i - 1] + seeds[n - i - 1] for i in range(1, n))
        seeds.append(floor + rng.randint(0, max_step))
    return seeds


# --------------------------------------------------------------------------
# minimal operads of Young diagrams


def minimal_young(B, bound: int = 14, *, method: str = "enum", p: int = 2, q: int = 3) -> Collection:
    """The operad generated by the diagram ``B``: C(1) = 0, C(2) = B and

        C(n) = lexmax over compositions, 1 < k < n, of C(k) ⊗_p (⊗_q C(j_i)).

    ``method="enum"`` walks every composition and is the reference.
    ``method="binary"`` builds the inner products from two-factor partial
    composites; it relies on both products being order-functorial and is
    only trusted where it has been checked against ``"enum"``.
    """
    cat = get_category("young2")
    B = Young(B)
    if not B:
        raise ConstructionError("generator B must be a nonempty diagram")
    terms = [BOTTOM, cat.unit, B][: bound + 1]
    for n in range(3, bound + 1):
        if method == "enum":
            C = Collection(cat, tuple(terms))
            best = BOTTOM
            for k in range(2, n):
                for comp in colex_compositions(n, k):
                    best = cat.max(best, composite(C, p, q, comp))
        elif method == "binary":
            best = BOTTOM
            # inner[m] = lexmax over compositions of m into k parts of ⊗_q C(j_i)
            inner = {m: terms[m] for m in range(1, n)}
            for k in range(2, n):
                inner = {
                    m: cat.lexmax(
                        cat.tensor(q, terms[j], inner[m - j])
                        for j in range(1, m - k + 2)
                        if (m - j) in inner
                    )
                    for m in range(k, n + 1)
                }
                best = cat.max(best, cat.tensor(p, terms[k], inner[n]))
        else:
            raise UsageError(f"unknown method {method!r}")
        terms.append(best)
    return Collection(cat, tuple(terms), f"C_{list(B)}")


def round_formula(n: int) -> Young:
    """Column k = n / 2^k rounded to nearest, exact halves rounded down."""
    if n < 1:
        raise UsageError("n must be >= 1")
    cols = []
    k = 1
    while True:
        d = 1 << k
        whole, rest = divmod(n, d)
        v = whole + 1 if 2 * rest > d else whole
        if v == 0:
            break
        cols.append(v)
        k += 1
    return Young(cols)


# --------------------------------------------------------------------------
# tensor products, sufficiency test, algebras


def termwise(C: Collection, D: Collection, k: int, name: str = "") -> Collection:
    """(C ⊗ D)(j) = C(j) ⊗_k D(j), with no operad-level checks."""
    if C.category is not D.category:
        raise UsageError("collections live in different categories")
    cat = C.category
    bound = min(C.bound, D.bound)
    terms = tuple(cat.tensor(k, C[j], D[j]) for j in range(bound + 1))
    return Collection(cat, terms, name)


def tensor_operads(C: Collection, D: Collection, i: int, m: int) -> Collection:
    """(C ⊗'_i D)(j) = C(j) ⊗_{i+m} D(j) for m-fold operads C, D."""
    cat = C.category
    if i < 1 or m < 1:
        raise UsageError("need i >= 1 and m >= 1")
    if i + m > cat.n:
        raise UsageError(
            f"⊗'_{i} of {m}-fold operads needs product {i + m}; {cat.name} has {cat.n}"
        )
    return termwise(C, D, i + m, f"({C.name} ⊗'_{i} {D.name})")


def suff_check(f: Callable[[int], int], bound: int) -> bool:
    """f(1) = 0 and f(i + j) >= f(i) + f(j) for all i + j <= bound."""
    if f(1) != 0:
        return False
    for s in range(2, bound + 1):
        fs = f(s)
        for i in range(1, s // 2 + 1):
            if fs < f(i) + f(s - i):
                return False
    return True


def is_algebra(C: Collection, A, p: int, q: int, bound: int | None = None) -> Verdict:
    """Whether C(j) ⊗_p (A ⊗_q ... ⊗_q A) <= A for all arities j <= bound."""
    cat = C.category
    _check_pq(cat, p, q)
    bound = C.bound if bound is None else bound
    bad_unit = _unit_verdict(C)
    if bad_unit is not None:
        return bad_unit
    for j in range(0, bound + 1):
        lhs = cat.tensor(p, C[j], cat.tensor_all(q, [A] * j))
        if not cat.le(lhs, A):
            return Verdict.failure("action", p=p, q=q, arity=j, lhs=lhs, rhs=A)
    return Verdict.success()


def verify_algebra_tensor(C, D, A, B, i: int, m: int, p: int, q: int, bound=None) -> Verdict:
    """Run :func:`is_algebra` for A ⊗_{i+m} B against C ⊗'_i D."""
    T = tensor_operads(C, D, i, m)
    AB = T.category.tensor(i + m, A, B)
    return is_algebra(T, AB, p, q, bound)


# --------------------------------------------------------------------------
# named examples


def operad_B(bound: int = 8) -> Collection:
    """B(j) = (1, ..., 1) with j - 1 ones, in Seq(ℕ,+)."""
    cat = get_category("seq-nat")
    return collection(cat, [FinSeq([1] * (j - 1)) for j in range(1, bound + 1)], "B")


def operad_C(bound: int = 8) -> Collection:
    """C(j) = (j - 1), a single entry, in Seq(ℕ,+)."""
    cat = get_category("seq-nat")
    return collection(cat, [FinSeq([j - 1]) for j in range(1, bound + 1)], "C")


def operad_D(bound: int = 8) -> Collection:
    """D(j) = B(j) concatenated with C(j); not an operad."""
    return termwise(operad_B(bound), operad_C(bound), 2, "D")


def square_operad(bound: int = 8) -> Collection:
    """C(n) = the (n-1) x (n-1) square diagram."""
    return collection(get_category("young2"), [Young([j - 1] * (j - 1)) for j in range(1, bound + 1)], "square")


def trivial_operad(cat: PosetCategory, bound: int = 8) -> Collection:
    return collection(cat, [cat.unit] * bound, "trivial")


def from_heights(f: Callable[[int], int], bound: int) -> Collection:
    """Single-column diagrams with heights f(1), ..., f(bound)."""
    return collection(get_category("young2"), [Young([f(j)] if f(j) else []) for j in range(1, bound + 1)], "h")


EXAMPLES: dict[str, Callable[[int], Collection]] = {
    "B": operad_B,
    "C": operad_C,
    "D": operad_D,
    "BC": lambda bound: tensor_operads(operad_B(bound), operad_C(bound), 1, 2),
    "square": square_operad,
}


def example(name: str, bound: int = 8) -> Collection:
    try:
        return EXAMPLES[name](bound)
    except KeyError:
        raise UsageError(f"unknown example {name!r}; choose from {', '.join(EXAMPLES)}") from None


def lowered(C: Collection, n: int, value: Any) -> Collection:
    """Copy of C with C(n) replaced by a smaller ``value``."""
    if not C.category.lt(value, C[n]):
        raise UsageError("replacement must be strictly smaller")
    return C.replace(n, value)
