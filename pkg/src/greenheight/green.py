"""Green's relations R, L, J, H over a finite semigroup: preorders, class
posets with heights, kernel and minimal right ideals, regular elements,
local right identities, and inverse-semigroup classification.

The preorders follow the S^1 convention without materializing an identity:
a <=_R b iff a = b or a in bS, and the R-key of b is {b} | bS, so both the
membership test and the subset test decide the same preorder.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import core

RELATIONS = ("R", "L", "J", "H")


def _principal_keys(s: core.FiniteSemigroup, relation: str):
    """keys[a] = the principal set S^1-style key of a; H gets an (R, L) pair."""
    if relation not in RELATIONS:
        raise ValueError(f"unknown relation {relation!r}")
    cached = s._cache.get(("keys", relation))
    if cached is not None:
        return cached
    t = s.table
    m = s.order
    if relation == "R":
        keys = [frozenset({a, *t[a].tolist()}) for a in range(m)]
    elif relation == "L":
        keys = [frozenset({a, *t[:, a].tolist()}) for a in range(m)]
    elif relation == "J":
        keys = []
        for a in range(m):
            sas = t[t[:, a], :]
            keys.append(
                frozenset({a, *t[a].tolist(), *t[:, a].tolist(), *sas.ravel().tolist()})
            )
    else:  # H
        rk = _principal_keys(s, "R")
        lk = _principal_keys(s, "L")
        keys = [(rk[a], lk[a]) for a in range(m)]
    s._cache[("keys", relation)] = keys
    return keys


def _key_leq(keys, a: int, b: int, relation: str) -> bool:
    if relation == "H":
        return a in keys[b][0] and a in keys[b][1]
    return a in keys[b]


def leq(s: core.FiniteSemigroup, a: int, b: int, relation: str = "R") -> bool:
    """Green's preorder: is a below-or-equivalent-to b?"""
    a, b = int(a), int(b)
    if not (0 <= a < s.order and 0 <= b < s.order):
        raise ValueError("element index out of range")
    return _key_leq(_principal_keys(s, relation), a, b, relation)


class ClassPoset:
    """Partition into Green's classes plus the induced partial order.

    classes are ordered by smallest member; covers[i] lists the classes
    immediately below class i; height counts classes on a longest chain.
    """

    def __init__(self, semigroup, relation, classes, class_of, strict, height, covers, size_order):
        self.semigroup = semigroup
        self.relation = relation
        self.classes = classes
        self.class_of = class_of
        self.height = height
        self.covers = covers
        self._strict = strict
        self._size_order = size_order

    def class_index(self, a: int) -> int:
        return int(self.class_of[int(a)])

    def leq_classes(self, i: int, j: int) -> bool:
        """Is class i below-or-equal class j?"""
        return i == j or bool(self._strict[i, j])

    def minimal_classes(self):
        return tuple(i for i in range(len(self.classes)) if not self._strict[:, i].any())

    def maximal_classes(self):
        return tuple(i for i in range(len(self.classes)) if not self._strict[i, :].any())

    def longest_chain(self, class_ids=None) -> int:
        """Longest chain (in classes) within the induced subposet."""
        if class_ids is None:
            return self.height
        sel = set(int(i) for i in class_ids)
        if not sel:
            return 0
        best = {}
        for i in self._size_order:
            if i not in sel:
                continue
            below = [j for j in np.nonzero(self._strict[:, i])[0].tolist() if j in best]
            best[i] = 1 + max((best[j] for j in below), default=0)
        return max(best.values())

    def to_dot(self) -> str:
        """Hasse diagram, one node per class, edges larger -> smaller."""
        names = self.semigroup.names
        lines = [f"digraph {self.relation}_classes {{"]
        for i, cls in enumerate(self.classes):
            label = "{" + ", ".join(names[a] for a in cls) + "}"
            label = label.replace("\\", "\\\\").replace('"', '\\"')
            lines.append(f'  c{i} [label="{label}"];')
        for i in range(len(self.classes)):
            for j in self.covers[i]:
                lines.append(f"  c{i} -> c{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return (
            f"ClassPoset({self.relation}, {len(self.classes)} classes,"
            f" height={self.height})"
        )


def class_poset(s: core.FiniteSemigroup, relation: str = "R") -> ClassPoset:
    cached = s._cache.get(("poset", relation))
    if cached is not None:
        return cached
    keys = _principal_keys(s, relation)
    m = s.order
    by_key = {}
    for a in range(m):
        by_key.setdefault(keys[a], []).append(a)
    classes = tuple(sorted((tuple(c) for c in by_key.values()), key=lambda c: c[0]))
    n = len(classes)
    class_of = np.empty(m, dtype=np.int32)
    for i, cls in enumerate(classes):
        for a in cls:
            class_of[a] = i
    reps = [cls[0] for cls in classes]
    strict = np.zeros((n, n), dtype=bool)
    for i, a in enumerate(reps):
        for j, b in enumerate(reps):
            if i != j and _key_leq(keys, a, b, relation):
                strict[i, j] = True
    if (strict & strict.T).any():
        raise RuntimeError("class order is not antisymmetric: engine bug")

    def key_size(i):
        k = keys[reps[i]]
        return len(k[0]) + len(k[1]) if relation == "H" else len(k)

    size_order = sorted(range(n), key=key_size)
    heights = np.ones(n, dtype=np.int64)
    for i in size_order:
        below = np.nonzero(strict[:, i])[0]
        if below.size:
            heights[i] = 1 + heights[below].max()
    covers = []
    for i in range(n):
        below = np.nonzero(strict[:, i])[0].tolist()
        cov = [j for j in below if not any(strict[j, k] for k in below if k != j)]
        covers.append(tuple(sorted(cov)))
    poset = ClassPoset(
        s, relation, classes, class_of, strict, int(heights.max()), tuple(covers), size_order
    )
    s._cache[("poset", relation)] = poset
    return poset


def height(s: core.FiniteSemigroup, relation: str = "R") -> int:
    """Maximum cardinality of a chain of Green's classes (single class = 1)."""
    return class_poset(s, relation).height


@dataclass(frozen=True)
class KernelInfo:
    members: frozenset
    is_completely_simple: bool
    minimal_right_ideals: tuple


def kernel(s: core.FiniteSemigroup) -> KernelInfo:
    """The unique minimal two-sided ideal, with its minimal right ideals.

    Every claim is re-verified on the table (ideal closure, right-ideal
    closure, kernel coverage); failures raise RuntimeError since they are
    impossible for an associative table and would indicate an engine bug.
    """
    cached = s._cache.get("kernel")
    if cached is not None:
        return cached
    jp = class_poset(s, "J")
    bottoms = jp.minimal_classes()
    if len(bottoms) != 1:
        raise RuntimeError("finite semigroup without a unique minimal J-class")
    members = frozenset(jp.classes[bottoms[0]])
    if core.closure_violation(s, members, "two_sided_ideal") is not None:
        raise RuntimeError("minimal J-class is not a two-sided ideal")
    rp = class_poset(s, "R")
    mins = []
    for i in rp.minimal_classes():
        cls = frozenset(rp.classes[i])
        if core.closure_violation(s, cls, "right_ideal") is not None:
            raise RuntimeError("minimal R-class is not a right ideal")
        mins.append(cls)
    if frozenset().union(*mins) != members:
        raise RuntimeError("minimal right ideals do not cover the kernel")
    sub = core.restrict_to_subsemigroup(core.SubsetHandle(s, members, "two_sided_ideal"))
    simple = len(class_poset(sub, "J").classes) == 1
    cs = simple and height(sub, "R") == 1 and height(sub, "L") == 1
    info = KernelInfo(members, cs, tuple(mins))
    s._cache["kernel"] = info
    return info


def regular_elements(s: core.FiniteSemigroup) -> frozenset:
    """{a : a*b*a = a for some b}."""
    cached = s._cache.get("regular")
    if cached is not None:
        return cached
    t = s.table
    out = frozenset(a for a in range(s.order) if bool((t[t[a], a] == a).any()))
    s._cache["regular"] = out
    return out


def idempotents(s: core.FiniteSemigroup):
    t = s.table
    return tuple(e for e in range(s.order) if int(t[e, e]) == e)


def has_local_right_identity(x, a: int) -> bool:
    """Is a in a*T, for T the semigroup or the handle's member set?"""
    a = int(a)
    if isinstance(x, core.SubsetHandle):
        if a not in x.members:
            raise ValueError("element is not a member of the handle")
        t = x.parent.table
        return any(int(t[a, b]) == a for b in x.members)
    if not 0 <= a < x.order:
        raise ValueError("element index out of range")
    return bool((x.table[a] == a).any())


@dataclass(frozen=True)
class InverseStructure:
    kind: str  # "not_regular" | "regular_not_inverse" | "inverse"
    idempotent_height: int | None = None


def inverse_structure(s: core.FiniteSemigroup) -> InverseStructure:
    """Classify s; for inverse semigroups also measure the idempotent order.

    idempotent_height is the longest chain (in elements) of idempotents
    under e <= f iff ef = fe = e.
    """
    t = s.table
    m = s.order
    if len(regular_elements(s)) != m:
        return InverseStructure("not_regular")
    for a in range(m):
        inverses = 0
        for b in range(m):
            if int(t[t[a, b], a]) == a and int(t[t[b, a], b]) == b:
                inverses += 1
        if inverses != 1:
            return InverseStructure("regular_not_inverse")
    es = idempotents(s)
    below = {
        e: [f for f in es if f != e and int(t[e, f]) == f and int(t[f, e]) == f]
        for e in es
    }
    heights = {}
    for e in sorted(es, key=lambda e: len(below[e])):
        heights[e] = 1 + max((heights[f] for f in below[e]), default=0)
    return InverseStructure("inverse", max(heights.values()))
