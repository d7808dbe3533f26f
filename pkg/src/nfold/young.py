"""Young diagrams in 2, 3 and n dimensions.

2-D diagrams are stored as column heights (non-increasing positive ints).
3-D diagrams are stored as their rows, each row a 2-D diagram; the matrix is
non-increasing along rows and columns. n-D diagrams are numpy arrays of
dimension n - 1, non-increasing along every axis, trimmed to their support.

All orders are lexicographic with precedence to lower indices.
"""

from __future__ import annotations

import itertools
import random
from typing import Sequence

import numpy as np

from . import kernels
from .order import PosetCategory, UsageError

BOX = "□"


class InvariantError(AssertionError):
    """A product produced a non-monotone diagram. Never expected."""


# --------------------------------------------------------------------------
# 2-D


class Young(tuple):
    """A Young diagram given by its column heights, tallest first."""

    def __new__(cls, cols=()):
        cols = kernels.trim(tuple(int(c) for c in cols))
        for x, y in zip(cols, cols[1:]):
            if y > x:
                raise ValueError(f"column heights must be non-increasing: {cols}")
        if cols and cols[-1] < 0:
            raise ValueError(f"negative column height: {cols}")
        return super().__new__(cls, cols)

    @classmethod
    def from_rows(cls, rows) -> "Young":
        return cls(_conjugate(Young(rows)))

    @property
    def cols(self) -> tuple:
        return tuple(self)

    @property
    def rows(self) -> tuple:
        return _conjugate(self)

    @property
    def blocks(self) -> int:
        return sum(self)

    def __repr__(self):
        return f"Young({list(self)})"


EMPTY = Young()


def _raw(a) -> tuple:
    return tuple.__new__(Young, a)


def _conjugate(cols: Sequence[int]) -> tuple:
    if not cols:
        return ()
    return tuple(sum(1 for c in cols if c > i) for i in range(cols[0]))


def conjugate(a: Young) -> Young:
    return _raw(_conjugate(a))


def hstack(a: Young, b: Young) -> Young:
    """Horizontal stacking: merge the two column multisets, tallest first."""
    return _raw(kernels.merge_desc(tuple(a), tuple(b)))


def hstack_rows(a: Young, b: Young) -> Young:
    """Horizontal stacking computed the other way: add row lengths."""
    return _raw(_conjugate(kernels.add_seq(_conjugate(a), _conjugate(b))))


def vstack(a: Young, b: Young) -> Young:
    """Vertical stacking: add column heights."""
    return _raw(kernels.add_seq(tuple(a), tuple(b)))


def young_compare(a: Young, b: Young) -> int:
    return kernels.lex_cmp(tuple(a), tuple(b))


def ymax(a: Young, b: Young) -> Young:
    return b if young_compare(a, b) < 0 else a


def height(a: Young) -> int:
    return a[0] if a else 0


def hpre_compare(a: Young, b: Young) -> int:
    """Height preorder: diagrams of equal height are isomorphic."""
    ha, hb = height(a), height(b)
    return (ha > hb) - (ha < hb)


def hmax(a: Young, b: Young) -> Young:
    """Max for the height preorder; ties keep the left operand."""
    return a if hpre_compare(b, a) <= 0 else b


def render(a: Young) -> str:
    """Rows as runs of boxes, top row first; the unit renders as ``0``."""
    if not a:
        return "0"
    return "\n".join(BOX * r for r in a.rows)


def random_young(rng: random.Random, max_cols: int = 5, max_height: int = 5) -> Young:
    n = rng.randint(0, max_cols)
    return Young(sorted((rng.randint(1, max_height) for _ in range(n)), reverse=True))


def young_partitions(blocks: int):
    """All diagrams with ``blocks`` boxes, in decreasing lexicographic order."""

    def gen(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    for cols in gen(blocks, blocks):
        yield _raw(cols)


def young_predecessor(a: Young) -> Young | None:
    """Lexicographically next smaller diagram with the same number of blocks."""
    found = False
    for b in young_partitions(a.blocks):
        if found:
            return b
        if b == a:
            found = True
    return None


# --------------------------------------------------------------------------
# 3-D


class Young3(tuple):
    """A 3-D Young diagram: matrix rows, non-increasing in both indices."""

    def __new__(cls, rows=()):
        rows = [kernels.trim(tuple(int(x) for x in r)) for r in rows]
        while rows and not rows[-1]:
            rows.pop()
        self = super().__new__(cls, (tuple(r) for r in rows))
        if not _is_monotone3(self):
            raise ValueError(f"not a 3-D Young diagram: {[list(r) for r in rows]}")
        return self

    @property
    def blocks(self) -> int:
        return sum(sum(r) for r in self)

    def entry(self, i: int, j: int) -> int:
        if i < len(self) and j < len(self[i]):
            return self[i][j]
        return 0

    def __repr__(self):
        return f"Young3({[list(r) for r in self]})"


def _is_monotone3(rows) -> bool:
    for r in rows:
        if any(y > x for x, y in zip(r, r[1:])) or (r and r[-1] < 0):
            return False
    for r, s in zip(rows, rows[1:]):
        if len(s) > len(r) or any(y > x for x, y in zip(r, s)):
            return False
    return True


def _checked3(rows) -> Young3:
    rows = [kernels.trim(tuple(r)) for r in rows]
    while rows and not rows[-1]:
        rows.pop()
    out = tuple.__new__(Young3, rows)
    if not _is_monotone3(out):
        raise InvariantError(f"product left the category: {rows}")
    return out


def _columns(m, width=None):
    width = max((len(r) for r in m), default=0) if width is None else width
    return [tuple(r[j] if j < len(r) else 0 for r in m) for j in range(width)]


def zstack(a: Young3, b: Young3) -> Young3:
    """z-axis stacking: stack the matrices vertically, sort each column."""
    width = max(len(a[0]) if a else 0, len(b[0]) if b else 0)
    cols = [
        kernels.merge_desc(ca, cb)
        for ca, cb in zip(_columns(a, width), _columns(b, width))
    ]
    height = len(a) + len(b)
    return _checked3([[c[i] for c in cols] for i in range(height)])


def ystack(a: Young3, b: Young3) -> Young3:
    """y-axis stacking: join the matrices side by side, sort each row."""
    rows = [
        kernels.merge_desc(ra, rb)
        for ra, rb in itertools.zip_longest(a, b, fillvalue=())
    ]
    return _checked3(rows)


def xstack(a: Young3, b: Young3) -> Young3:
    """x-axis stacking: entrywise sum."""
    rows = [kernels.add_seq(ra, rb) for ra, rb in itertools.zip_longest(a, b, fillvalue=())]
    return _checked3(rows)


def lex3_compare(a: Young3, b: Young3) -> int:
    """Row-major lexicographic comparison after zero padding."""
    for ra, rb in itertools.zip_longest(a, b, fillvalue=()):
        c = kernels.lex_cmp(tuple(ra), tuple(rb))
        if c:
            return c
    return 0


def random_young3(rng: random.Random, max_rows: int = 3, max_cols: int = 3, max_val: int = 3) -> Young3:
    r, c = rng.randint(0, max_rows), rng.randint(0, max_cols)
    m = [[rng.randint(0, max_val) for _ in range(c)] for _ in range(r)]
    m = sort_columns(sort_rows(m))
    return Young3(m)


# --------------------------------------------------------------------------
# the two sorting lemmas behind the 3-D interchangers


def check_minmax(a: Sequence[int], b: Sequence[int], sigma: Sequence[int], tau: Sequence[int]) -> bool:
    """max_i min(a[σ(i)], b[τ(i)]) <= min(max a, max b). Always true."""
    if not (len(a) == len(b) == len(sigma) == len(tau)):
        raise UsageError("minmax needs equal-length lists and permutations")
    if sorted(sigma) != list(range(len(a))) or sorted(tau) != list(range(len(b))):
        raise UsageError("sigma and tau must be permutations of range(n)")
    if not a:
        return True
    lhs = max(min(a[s], b[t]) for s, t in zip(sigma, tau))
    return lhs <= min(max(a), max(b))


def _rect(m):
    width = max((len(r) for r in m), default=0)
    return [list(r) + [0] * (width - len(r)) for r in m]


def sort_rows(m):
    return [sorted(r, reverse=True) for r in _rect(m)]


def sort_columns(m):
    m = _rect(m)
    if not m:
        return []
    cols = [sorted(c, reverse=True) for c in zip(*m)]
    return [list(r) for r in zip(*cols)]


def matrix_lex_compare(m1, m2) -> int:
    rows1 = [kernels.trim(tuple(r)) for r in m1]
    rows2 = [kernels.trim(tuple(r)) for r in m2]
    for ra, rb in itertools.zip_longest(rows1, rows2, fillvalue=()):
        c = kernels.lex_cmp(ra, rb)
        if c:
            return c
    return 0


def matrixsort_sides(m):
    """(sort rows then columns, sort columns then rows)."""
    return sort_columns(sort_rows(m)), sort_rows(sort_columns(m))


def check_matrixsort(m) -> bool:
    """Rows-then-columns sorting is lexicographically <= columns-then-rows."""
    first, second = matrixsort_sides(m)
    return matrix_lex_compare(first, second) <= 0


# --------------------------------------------------------------------------
# n-D


def _trim_array(arr: np.ndarray) -> np.ndarray:
    if not arr.size or not arr.any():
        return np.zeros((0,) * arr.ndim, dtype=np.int64)
    nz = np.nonzero(arr)
    return arr[tuple(slice(0, int(idx.max()) + 1) for idx in nz)]


def _pad_to(arr: np.ndarray, shape) -> np.ndarray:
    if arr.shape == tuple(shape):
        return arr
    out = np.zeros(shape, dtype=np.int64)
    out[tuple(slice(0, s) for s in arr.shape)] = arr
    return out


def _is_monotone_nd(arr: np.ndarray) -> bool:
    if (arr < 0).any():
        return False
    for ax in range(arr.ndim):
        if arr.shape[ax] > 1 and (np.diff(arr, axis=ax) > 0).any():
            return False
    return True


def _dense(data, dim: int):
    """Zero-pad a ragged nested list to a rectangular array."""
    if isinstance(data, np.ndarray):
        return data

    def shape_of(x, d):
        if d == 0:
            return ()
        subs = [shape_of(y, d - 1) for y in x]
        inner = tuple(max(t) for t in zip(*subs)) if subs else (0,) * (d - 1)
        return (len(x),) + inner

    shape = shape_of(data, dim)
    out = np.zeros(shape, dtype=np.int64)

    def fill(x, idx, d):
        if d == 1:
            for j, v in enumerate(x):
                out[idx + (j,)] = v
            return
        for j, y in enumerate(x):
            fill(y, idx + (j,), d - 1)

    if dim:
        fill(data, (), dim)
    return out


class YoungN:
    """An n-dimensional Young diagram as an (n-1)-dimensional array."""

    __slots__ = ("dim", "arr", "_key")

    def __init__(self, data, dim: int | None = None, *, _trusted: bool = False):
        if dim is None:
            arr = np.array(data, dtype=np.int64)
            dim = arr.ndim
        else:
            arr = np.asarray(_dense(data, dim), dtype=np.int64)
        if arr.size == 0:
            arr = np.zeros((0,) * dim, dtype=np.int64)
        if arr.ndim != dim:
            raise UsageError(f"expected a {dim}-dimensional array, got {arr.ndim}")
        arr = _trim_array(arr)
        if not _trusted and not _is_monotone_nd(arr):
            raise ValueError("array is not monotone non-increasing in every index")
        arr.setflags(write=False)
        self.dim = dim
        self.arr = arr
        self._key = (dim, arr.shape, arr.tobytes())

    @property
    def n(self) -> int:
        return self.dim + 1

    @property
    def blocks(self) -> int:
        return int(self.arr.sum())

    def tolist(self):
        return self.arr.tolist()

    def __eq__(self, other):
        return isinstance(other, YoungN) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"YoungN({self.tolist()}, dim={self.dim})"


def _common(a: YoungN, b: YoungN):
    if a.dim != b.dim:
        raise UsageError(f"dimension mismatch: {a.dim} vs {b.dim}")
    shape = tuple(max(x, y) for x, y in zip(a.arr.shape, b.arr.shape))
    return shape


def merge_axis(k: int, dim: int) -> int:
    """Array axis (0-based) along which ⊗_k merges, for k = 1..dim.

    ⊗_1 merges along the first index, which has the highest precedence in
    the order; this matches z-axis stacking of 3-D diagrams.
    """
    if not 1 <= k <= dim:
        raise UsageError(f"merge product index must be in 1..{dim}, got {k}")
    return k - 1


def nd_product(a: YoungN, b: YoungN, k: int) -> YoungN:
    """⊗_k for k = 1..n: merge along one axis for k < n, pointwise sum for k = n."""
    shape = _common(a, b)
    dim = a.dim
    if not 1 <= k <= dim + 1:
        raise UsageError(f"product index must be in 1..{dim + 1}, got {k}")
    if k == dim + 1:
        out = _pad_to(a.arr, shape) + _pad_to(b.arr, shape)
    else:
        ax = merge_axis(k, dim)
        sa = list(shape)
        sa[ax] = a.arr.shape[ax]
        sb = list(shape)
        sb[ax] = b.arr.shape[ax]
        joined = np.concatenate([_pad_to(a.arr, sa), _pad_to(b.arr, sb)], axis=ax)
        out = -np.sort(-joined, axis=ax, kind="stable")
    if not _is_monotone_nd(out):
        raise InvariantError(f"⊗_{k} left the category")
    return YoungN(out, dim, _trusted=True)


def ndlex_compare(a: YoungN, b: YoungN) -> int:
    """Compare cells in lexicographic index order after zero padding."""
    shape = _common(a, b)
    fa = _pad_to(a.arr, shape).ravel()
    fb = _pad_to(b.arr, shape).ravel()
    diff = np.nonzero(fa != fb)[0]
    if not diff.size:
        return 0
    i = diff[0]
    return -1 if fa[i] < fb[i] else 1


def random_youngn(rng: random.Random, dim: int, side: int = 2, max_val: int = 3) -> YoungN:
    shape = tuple(rng.randint(0, side) for _ in range(dim))
    arr = np.array([rng.randint(0, max_val) for _ in range(int(np.prod(shape)))], dtype=np.int64)
    arr = arr.reshape(shape)
    for ax in range(dim):
        if arr.size:
            arr = -np.sort(-arr, axis=ax)
    return YoungN(arr, dim)


def young_to_n(a: Young) -> YoungN:
    return YoungN(list(a), 1)


def young3_to_n(a: Young3) -> YoungN:
    return YoungN(_rect(a), 2)


def youngn_to_young3(a: YoungN) -> Young3:
    if a.dim != 2:
        raise UsageError("need a 2-dimensional array")
    return Young3(a.tolist())


# --------------------------------------------------------------------------
# categories


def young2_category() -> PosetCategory:
    """Young diagrams with (lexmax, hstack, vstack)."""
    return PosetCategory(
        "young2",
        [ymax, hstack, vstack],
        EMPTY,
        young_compare,
        product_names=["lexmax", "hstack", "vstack"],
        encode=list,
        decode=Young,
        render=render,
        sampler=random_young,
    )


def young_height_category() -> PosetCategory:
    """Young diagrams preordered by height, with (height-max, hstack, vstack)."""
    return PosetCategory(
        "young-height",
        [hmax, hstack, vstack],
        EMPTY,
        hpre_compare,
        product_names=["hmax", "hstack", "vstack"],
        encode=list,
        decode=Young,
        render=render,
        sampler=random_young,
    )


def _render3(a: Young3) -> str:
    return "\n".join(" ".join(str(x) for x in r) for r in a) or "0"


def young3_category() -> PosetCategory:
    """3-D Young diagrams with (zstack, ystack, xstack)."""
    return PosetCategory(
        "young3",
        [zstack, ystack, xstack],
        Young3(),
        lex3_compare,
        product_names=["zstack", "ystack", "xstack"],
        encode=lambda a: [list(r) for r in a],
        decode=Young3,
        render=_render3,
        sampler=random_young3,
    )


def youngn_category(dim: int) -> PosetCategory:
    """(dim+1)-dimensional Young diagrams: dim merges then pointwise sum."""
    if dim < 1:
        raise UsageError("dim must be >= 1")

    def prod(k):
        return lambda a, b: nd_product(a, b, k)

    names = [f"merge[i{merge_axis(k, dim) + 1}]" for k in range(1, dim + 1)] + ["add"]
    return PosetCategory(
        f"youngN[{dim}]",
        [prod(k) for k in range(1, dim + 2)],
        YoungN(np.zeros((0,) * dim), dim),
        ndlex_compare,
        product_names=names,
        encode=YoungN.tolist,
        decode=lambda data: YoungN(data, dim),
        render=lambda a: str(a.tolist()),
        sampler=lambda rng: random_youngn(rng, dim),
        params={"dim": dim},
    )
