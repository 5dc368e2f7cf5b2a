"""Concrete semigroups: the two presentation families with their tight
bi-ideal/left-ideal witnesses, Brandt extensions and the iterated
right-ideal tower, null extensions, full transformation monoids, symmetric
inverse monoids, and a few stock small semigroups.
"""

from __future__ import annotations

import itertools
import string
from dataclasses import dataclass

import numpy as np

from . import core, ideals, rewriting
from .errors import UnsupportedInfinite


@dataclass(frozen=True)
class FamilyInstance:
    """One member of a parametrized family, with its distinguished subset
    and the closed-form values the construction promises."""

    n: int
    semigroup: core.FiniteSemigroup
    distinguished: core.SubsetHandle
    expected: dict
    presentation_text: str | None = None

    def to_table_text(self) -> str:
        return core.format_table_text(self.semigroup)

    def to_presentation_text(self) -> str:
        if self.presentation_text is None:
            raise ValueError("this instance was not built from a presentation")
        return self.presentation_text


def bi_ideal_family(n: int) -> FamilyInstance:
    """Semigroup of order 12(n-1)+1 with R-height n whose bi-ideal generated
    by {x, y, z, tx} has relative R-height 3n-2 (the sharp CS-kernel case)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    zeros = [
        "x" * n, "yy", "zz", "tt",
        "xz", "xt", "yx", "yt", "zx", "zy", "tz",
        "t" + "x" * (n - 1),
    ]
    lines = ["letters: x y z t", "zero: 0",
             "rule: xyzt -> x", "rule: yzty -> y",
             "rule: ztyz -> z", "rule: tyzt -> t"]
    lines += [f"rule: {w} -> 0" for w in zeros]
    text = "\n".join(lines) + "\n"
    rs = rewriting.parse_presentation(text)
    s = rewriting.semigroup_from_presentation(rs)
    gens = {rewriting.element_index(rs, s, w) for w in ("x", "y", "z", "tx")}
    handle = ideals.generate(s, gens, "bi_ideal")
    expected = {
        "order": 12 * (n - 1) + 1,
        "height_r": n,
        "relative_height": 3 * n - 2,
        "chain_param": n,
        "excluded": ("t", "zt", "ty", "yzt", "tyz"),
    }
    return FamilyInstance(n, s, handle, expected, text)


def left_ideal_cs_family(n: int) -> FamilyInstance:
    """Semigroup of order 6(n-1)+1 with R-height n whose left ideal generated
    by {x, y} has relative R-height 2n-1; its J-classes form one chain."""
    if n < 2:
        raise ValueError("n must be at least 2")
    zeros = ["x" * n, "yy", "zz", "xz", "yx", "z" + "x" * (n - 1)]
    lines = ["letters: x y z", "zero: 0",
             "rule: xyz -> x", "rule: yzy -> y", "rule: zyz -> z"]
    lines += [f"rule: {w} -> 0" for w in zeros]
    text = "\n".join(lines) + "\n"
    rs = rewriting.parse_presentation(text)
    s = rewriting.semigroup_from_presentation(rs)
    gens = {rewriting.element_index(rs, s, w) for w in ("x", "y")}
    handle = ideals.generate(s, gens, "left_ideal")
    expected = {
        "order": 6 * (n - 1) + 1,
        "height_r": n,
        "relative_height": 2 * n - 1,
        "chain_param": n,
        "excluded": ("z", "yz"),
        "height_j": 2 * n - 1,
    }
    return FamilyInstance(n, s, handle, expected, text)


def brandt_extension(s: core.FiniteSemigroup, k: int) -> core.FiniteSemigroup:
    """Universe (I x S x I) | {0} with |I| = k: (i,a,j)(p,b,q) = (i,ab,q)
    when j = p, else 0. Element (i,a,j) sits at index ((i-1)m + a)k + (j-1);
    the zero is last."""
    if k < 1:
        raise ValueError("index set must be non-empty")
    m = s.order
    size = k * k * m + 1
    zero = size - 1
    names = []
    for i in range(1, k + 1):
        for a in range(m):
            for j in range(1, k + 1):
                names.append(f"({i},{s.names[a]},{j})")
    names.append("0")
    table = np.full((size, size), zero, dtype=np.int32)
    st = s.table

    def idx(i, a, j):
        return ((i - 1) * m + a) * k + (j - 1)

    for i in range(1, k + 1):
        for a in range(m):
            for j in range(1, k + 1):
                row = idx(i, a, j)
                for b in range(m):
                    ab = int(st[a, b])
                    for q in range(1, k + 1):
                        table[row, idx(j, b, q)] = idx(i, ab, q)
    return core.from_table(names, table)


def trivial_semigroup() -> core.FiniteSemigroup:
    return core.from_table(["e"], [[0]])


def left_zero_semigroup(k: int) -> core.FiniteSemigroup:
    """xy = x for all x, y."""
    if not 1 <= k <= 26:
        raise ValueError("order must be between 1 and 26")
    names = list(string.ascii_lowercase[:k])
    table = np.repeat(np.arange(k, dtype=np.int32)[:, None], k, axis=1)
    return core.from_table(names, table)


def null_semigroup(k: int) -> core.FiniteSemigroup:
    """All products equal the zero element; order k counting the zero."""
    if k < 1:
        raise ValueError("order must be positive")
    names = [f"n{i}" for i in range(1, k)] + ["0"]
    table = np.full((k, k), k - 1, dtype=np.int32)
    return core.from_table(names, table)


def brandt_example() -> core.FiniteSemigroup:
    """The 5-element Brandt semigroup: (i,j)(p,q) = (i,q) if j = p, else 0."""
    names = ["(1,1)", "(1,2)", "(2,1)", "(2,2)", "0"]
    table = np.full((5, 5), 4, dtype=np.int32)

    def idx(i, j):
        return (i - 1) * 2 + (j - 1)

    for i, j, p, q in itertools.product((1, 2), repeat=4):
        if j == p:
            table[idx(i, j), idx(p, q)] = idx(i, q)
    return core.from_table(names, table)


def right_ideal_tower(n: int) -> FamilyInstance:
    """Iterated Brandt extensions over the trivial semigroup: order obeys
    t(1) = 1, t(m+1) = 4 t(m) + 1; the principal right ideal of the nested
    element has relative R-height 2n-1 while the semigroup has R-height n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    s = trivial_semigroup()
    a = 0
    order = 1
    for _ in range(n - 1):
        a = 2 * a  # index of (1, a, 1) in the extension
        s = brandt_extension(s, 2)
        order = 4 * order + 1
    handle = ideals.generate(s, {a}, "right_ideal")
    expected = {
        "order": order,
        "height_r": n,
        "relative_height": 2 * n - 1,
        "chain_param": n,
    }
    return FamilyInstance(n, s, handle, expected)


def null_extension(t_sem: core.FiniteSemigroup):
    """Adjoin a null mirror: S = T | {x_a} | {0} with a*x_b = x_a*b = x_(ab)
    and all other new products 0. Returns (S, handle for N = {x_a} | {0}),
    a two-sided ideal with relative R-height 2 whose contained-class chain
    has length H_R(T) + 1."""
    m = t_sem.order
    size = 2 * m + 1
    zero = size - 1
    xprefix = "x_"
    while any(name.startswith(xprefix) for name in t_sem.names):
        xprefix = "x" + xprefix
    zname = "0"
    while zname in t_sem.names:
        zname = zname + "*"
    names = list(t_sem.names) + [xprefix + name for name in t_sem.names] + [zname]
    table = np.full((size, size), zero, dtype=np.int32)
    st = t_sem.table
    table[:m, :m] = st
    for a in range(m):
        for b in range(m):
            ab = int(st[a, b])
            table[a, m + b] = m + ab
            table[m + a, b] = m + ab
    s = core.from_table(names, table)
    handle = core.SubsetHandle(s, frozenset(range(m, size)), "two_sided_ideal")
    return s, handle


def full_transformation_monoid(n: int) -> core.FiniteSemigroup:
    """All self-maps of {0..n-1}, composing left to right: (fg)(x) = g(f(x))."""
    if not 1 <= n <= 4:
        raise ValueError("n must be between 1 and 4")
    maps = list(itertools.product(range(n), repeat=n))
    index = {f: i for i, f in enumerate(maps)}
    names = ["".join(str(v) for v in f) for f in maps]
    m = len(maps)
    table = np.zeros((m, m), dtype=np.int32)
    for i, f in enumerate(maps):
        for j, g in enumerate(maps):
            table[i, j] = index[tuple(g[f[x]] for x in range(n))]
    return core.from_table(names, table)


def symmetric_inverse_monoid(n: int) -> core.FiniteSemigroup:
    """All partial injections of {0..n-1}, composing left to right; image -1
    marks "undefined" and displays as '-'."""
    if not 1 <= n <= 3:
        raise ValueError("n must be between 1 and 3")
    maps = [
        f
        for f in itertools.product(range(-1, n), repeat=n)
        if len({v for v in f if v >= 0}) == sum(1 for v in f if v >= 0)
    ]
    index = {f: i for i, f in enumerate(maps)}
    names = ["".join(str(v) if v >= 0 else "-" for v in f) for f in maps]
    m = len(maps)
    table = np.zeros((m, m), dtype=np.int32)
    for i, f in enumerate(maps):
        for j, g in enumerate(maps):
            fg = tuple(-1 if f[x] < 0 else g[f[x]] for x in range(n))
            table[i, j] = index[fg]
    return core.from_table(names, table)


def baer_levi_semigroup(*_args, **_kwargs):
    """Right simple, idempotent-free; exists only on an infinite universe."""
    raise UnsupportedInfinite(
        "Baer-Levi semigroup",
        "right simple semigroups without idempotents are necessarily infinite",
    )


def left_ideal_generic_tower(*_args, **_kwargs):
    """The left-ideal analogue of the tower that realizes the generic 2n
    bound; it glues a right simple idempotent-free semigroup on top, so no
    finite instance exists (finite kernels are completely simple and cap
    left ideals at 2n-1)."""
    raise UnsupportedInfinite(
        "left-ideal tower over a Baer-Levi semigroup",
        "requires an infinite right simple semigroup with no idempotents",
    )


def bicyclic_monoid(*_args, **_kwargs):
    """Infinite monoid with J-height 1 but unbounded R-chains."""
    raise UnsupportedInfinite("bicyclic monoid", "the universe is infinite")
