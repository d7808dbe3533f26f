"""Pure-Python kernels.

Every function here has a twin in ``_kernels.pyx`` with the same signature
and the same results; ``nfold.kernels`` picks one at import time.
Sequences are tuples of non-negative ints, compared with zero padding.
"""

from itertools import zip_longest


def trim(a):
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return tuple(a[:n])


def lex_cmp(a, b):
    """Compare two int sequences lexicographically after zero padding."""
    for x, y in zip_longest(a, b, fillvalue=0):
        if x != y:
            return -1 if x < y else 1
    return 0


def add_seq(a, b):
    return trim(tuple(x + y for x, y in zip_longest(a, b, fillvalue=0)))


def merge_desc(a, b):
    """Merge two non-increasing sequences into one non-increasing sequence."""
    out = []
    i = j = 0
    na, nb = len(a), len(b)
    while i < na and j < nb:
        if a[i] >= b[j]:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def nat_minimal_dp(seeds, bound):
    """Binary-split closure: term(n) = max_{1<=i<n} term(i) + term(n-i).

    Returns a list indexed by arity (index 0 unused, set to -1).
    """
    terms = [-1] + list(seeds[:bound])
    for n in range(len(seeds) + 1, bound + 1):
        best = 0
        for i in range(1, n // 2 + 1):
            v = terms[i] + terms[n - i]
            if v > best:
                best = v
        terms.append(best)
    return terms


def nat_enum_max(terms, n):
    """Max over compositions (j_1..j_k) of n, 2 <= k < n, of max(C(k), sum C(j_i)).

    ``terms`` must hold arities 1..n-1. Walks every composition explicitly.
    """
    best = -1
    # A composition of n is a subset of the n-1 cut points.
    for mask in range(1, (1 << (n - 1)) - 1):
        k = 1
        total = 0
        last = 0
        for pos in range(1, n):
            if mask >> (pos - 1) & 1:
                total += terms[pos - last]
                last = pos
                k += 1
        total += terms[n - last]
        v = terms[k] if terms[k] > total else total
        if v > best:
            best = v
    return best


def _colex_compositions(n, k):
    if k == 1:
        yield (n,)
        return
    for last in range(1, n - k + 2):
        for head in _colex_compositions(n - last, k - 1):
            yield head + (last,)


def nat_first_violation(terms, bound):
    """First (n, k, composition) with max(C(k), sum C(j_i)) > C(n), or None.

    Order: n ascending, k ascending, compositions in colex order.
    ``terms`` is indexed by arity; terms[0] is ignored (bottom).
    """
    for n in range(1, bound + 1):
        target = terms[n]
        for k in range(1, n + 1):
            ck = terms[k]
            for comp in _colex_compositions(n, k):
                total = 0
                for j in comp:
                    total += terms[j]
                if (ck if ck > total else total) > target:
                    return n, k, comp
    return None
