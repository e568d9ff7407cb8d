"""Shoda pairs, primitive central idempotents and simple components of QG.

Thin convenience layer over the C++ core: the heavy lifting happens in
``shoda._core``; these wrappers decode its JSON payloads into dicts.
"""

import json as _json

from ._core import (  # noqa: F401
    CapExceeded,
    Group,
    MalformedSpec,
    NotClosed,
    group,
    is_in_class,
    normal_subgroups,
    tree_dot,
)
from . import _core as _c

__all__ = [
    "CapExceeded",
    "Group",
    "MalformedSpec",
    "NotClosed",
    "group",
    "is_in_class",
    "normal_subgroups",
    "tree",
    "tree_dot",
    "pairs",
    "components",
    "verify",
]


def tree(g, normal, subgroup_cap=2000):
    """Character-triple tree over one normal subgroup, as a dict."""
    return _json.loads(_c.tree_json(g, normal, subgroup_cap))


def pairs(g, with_pci=False, subgroup_cap=2000, jobs=1):
    """All Shoda pairs with alpha, strong/good flags and optionally the PCIs."""
    return _json.loads(_c.pairs_json(g, with_pci, subgroup_cap, jobs))["pairs"]


def components(g, subgroup_cap=2000, jobs=1):
    """Simple-component descriptors (cyclotomic order, degrees, dimensions)."""
    return _json.loads(_c.components_json(g, subgroup_cap, jobs))


def verify(g, subgroup_cap=2000, jobs=1):
    """Full verification battery; the returned dict carries a 'passed' flag."""
    return _json.loads(_c.verify_json(g, subgroup_cap, jobs))
