"""Named, compactified category instances (used by JSON files and the CLI)."""

from __future__ import annotations

from functools import lru_cache

from .order import PosetCategory, UsageError, nat_category
from .seq import seq_category
from .young import young2_category, young3_category, young_height_category, youngn_category

NAMES = ("nat", "seq", "seq-nat", "young2", "young-height", "young3", "youngN")


def get_category(name: str, dim: int | None = None) -> PosetCategory:
    """Shared instance of a named category (one object per name and dim)."""
    if name.startswith("youngN[") and name.endswith("]"):
        name, dim = "youngN", int(name[len("youngN[") : -1])
    if name == "youngn":
        name = "youngN"
    return _build(name, None if name != "youngN" or dim is None else int(dim))


@lru_cache(maxsize=None)
def _build(name: str, dim: int | None) -> PosetCategory:
    if name == "nat":
        return nat_category()
    if name == "seq":
        return seq_category(pointwise=False)
    if name == "seq-nat":
        return seq_category()
    if name == "young2":
        return young2_category()
    if name == "young-height":
        return young_height_category()
    if name == "young3":
        return young3_category()
    if name == "youngN":
        if dim is None:
            raise UsageError("youngN needs --dim")
        return youngn_category(dim)
    raise UsageError(f"unknown category {name!r}; choose from {', '.join(NAMES)}")


def category_ref(cat: PosetCategory) -> dict:
    """JSON-able reference that :func:`from_ref` turns back into ``cat``."""
    ref = {"name": cat.name.split("[")[0]}
    if "dim" in cat.params:
        ref["dim"] = cat.params["dim"]
    return ref


def from_ref(ref) -> PosetCategory:
    if isinstance(ref, str):
        return get_category(ref)
    return get_category(ref["name"], ref.get("dim"))
