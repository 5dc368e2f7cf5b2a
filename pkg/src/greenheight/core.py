"""Finite semigroups as total multiplication tables, plus subset handles.

Elements are indices 0..m-1 into an m-by-m int32 table; names are display
strings only. The formal identity of S^1 is a convention applied inside set
products and preorders, never a materialized element.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _accel
from .errors import NotAssociative, NotClosed, ParseError

ASSOC_EXHAUSTIVE_LIMIT = 256
ASSOC_SAMPLE_TRIPLES = 1_000_000

KINDS = ("bi_ideal", "right_ideal", "left_ideal", "two_sided_ideal", "subsemigroup")


class FiniteSemigroup:
    """Immutable semigroup on indices 0..m-1 with a verified table."""

    def __init__(self, names, table, parent_map=None):
        table = np.ascontiguousarray(table, dtype=np.int32)
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise ValueError(f"table must be square, got shape {table.shape}")
        m = table.shape[0]
        if m < 1:
            raise ValueError("semigroup must have at least one element")
        names = tuple(str(n) for n in names)
        if len(names) != m:
            raise ValueError(f"{len(names)} names for {m} elements")
        if len(set(names)) != m:
            raise ValueError("element names must be distinct")
        for n in names:
            if not n or any(ch.isspace() for ch in n):
                raise ValueError(f"bad element name {n!r}")
        if table.size and (table.min() < 0 or table.max() >= m):
            raise ValueError("table entries must be element indices")
        witness = _find_nonassoc(table)
        if witness is not None:
            raise NotAssociative(witness)
        table.setflags(write=False)
        self.names = names
        self.table = table
        self.identity = _find_identity(table)
        self.parent_map = None if parent_map is None else tuple(parent_map)
        self._name_index = {n: i for i, n in enumerate(names)}
        self._cache = {}

    @property
    def order(self) -> int:
        return len(self.names)

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._name_index[name]
        except KeyError:
            raise KeyError(f"no element named {name!r}") from None

    def product(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def __repr__(self):
        ident = "" if self.identity is None else f", identity={self.names[self.identity]!r}"
        return f"FiniteSemigroup(order={self.order}{ident})"


def _find_nonassoc(table):
    m = table.shape[0]
    if m <= ASSOC_EXHAUSTIVE_LIMIT:
        return _accel.assoc_witness(table)
    # too many triples; spot-check a fixed random sample
    rng = np.random.default_rng(0)
    idx = rng.integers(0, m, size=(3, ASSOC_SAMPLE_TRIPLES), dtype=np.int64)
    a, b, c = idx
    bad = np.nonzero(table[table[a, b], c] != table[a, table[b, c]])[0]
    if bad.size:
        k = int(bad[0])
        return int(a[k]), int(b[k]), int(c[k])
    return None


def _find_identity(table):
    m = table.shape[0]
    eye = np.arange(m, dtype=table.dtype)
    for e in range(m):
        if np.array_equal(table[e], eye) and np.array_equal(table[:, e], eye):
            return e
    return None


def from_table(names, table) -> FiniteSemigroup:
    """Build and validate a semigroup from names and a multiplication table."""
    return FiniteSemigroup(names, table)


def _as_index_array(s, xs, what):
    xs = sorted(set(int(x) for x in xs))
    if not xs:
        raise ValueError(f"empty {what}")
    if xs[0] < 0 or xs[-1] >= s.order:
        raise ValueError(f"{what} contains an invalid element index")
    return np.array(xs, dtype=np.int64)


def product_of_sets(s: FiniteSemigroup, xs, ys, through_identity: bool = False):
    """{x*y} for x in xs, y in ys; with through_identity, {x*u*y : u in S^1}.

    The formal identity of S^1 acts as a skip, so the flag adds X*S*Y on
    top of X*Y whether or not S has an identity element.
    """
    xa = _as_index_array(s, xs, "left operand")
    ya = _as_index_array(s, ys, "right operand")
    t = s.table
    out = set(t[np.ix_(xa, ya)].ravel().tolist())
    if through_identity:
        mids = np.unique(t[xa, :])
        out.update(t[np.ix_(mids, ya)].ravel().tolist())
    return frozenset(out)


def closure_violation(s: FiniteSemigroup, members, kind: str):
    """First product escaping the subset, or None if the kind's law holds.

    Witness shapes: ("product", a, b, ab) for pair closure, ("right", a, c, ac),
    ("left", c, a, ca), ("middle", a, u, b, aub) for the bi-ideal inner product.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    mem = _as_index_array(s, members, "member set")
    t = s.table
    m = s.order
    inside = np.zeros(m, dtype=bool)
    inside[mem] = True

    def first_escape(prods):
        bad = np.argwhere(~inside[prods])
        return None if bad.size == 0 else tuple(int(v) for v in bad[0])

    pair = t[np.ix_(mem, mem)]
    if kind in ("subsemigroup", "bi_ideal"):
        hit = first_escape(pair)
        if hit is not None:
            i, j = hit
            a, b = int(mem[i]), int(mem[j])
            return ("product", a, b, int(t[a, b]))
    if kind in ("right_ideal", "two_sided_ideal"):
        hit = first_escape(t[np.ix_(mem, np.arange(m))])
        if hit is not None:
            i, c = hit
            a = int(mem[i])
            return ("right", a, c, int(t[a, c]))
    if kind in ("left_ideal", "two_sided_ideal"):
        hit = first_escape(t[np.ix_(np.arange(m), mem)])
        if hit is not None:
            c, j = hit
            a = int(mem[j])
            return ("left", c, a, int(t[c, a]))
    if kind == "bi_ideal":
        mids = t[mem, :]  # mids[i, u] = mem[i]*u
        prods = t[mids.reshape(-1), :][:, mem].reshape(len(mem), m, len(mem))
        bad = np.argwhere(~inside[prods])
        if bad.size:
            i, u, j = (int(v) for v in bad[0])
            a, b = int(mem[i]), int(mem[j])
            return ("middle", a, u, b, int(prods[i, u, j]))
    return None


@dataclass(frozen=True)
class SubsetHandle:
    """A nonempty subset of a semigroup, tagged and closure-checked."""

    parent: FiniteSemigroup
    members: frozenset = field(hash=False)
    kind: str = "subsemigroup"

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(int(x) for x in self.members))
        witness = closure_violation(self.parent, self.members, self.kind)
        if witness is not None:
            raise NotClosed(
                self.kind,
                witness,
                f"subset is not a {self.kind.replace('_', ' ')}: witness {witness}",
            )

    @property
    def sorted_members(self):
        return tuple(sorted(self.members))

    @property
    def member_names(self):
        return tuple(self.parent.names[i] for i in self.sorted_members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, idx):
        return int(idx) in self.members


def restrict_to_subsemigroup(handle: SubsetHandle) -> FiniteSemigroup:
    """The handle's members as a standalone semigroup.

    Element i of the result is handle.sorted_members[i]; that tuple is kept
    on the result as parent_map. Names are inherited.
    """
    s = handle.parent
    mem = np.array(handle.sorted_members, dtype=np.int64)
    back = np.full(s.order, -1, dtype=np.int32)
    back[mem] = np.arange(len(mem), dtype=np.int32)
    sub = back[s.table[np.ix_(mem, mem)]]
    if (sub < 0).any():
        i, j = (int(v) for v in np.argwhere(sub < 0)[0])
        a, b = int(mem[i]), int(mem[j])
        raise NotClosed(
            handle.kind, ("product", a, b, int(s.table[a, b])),
            f"members not closed: {s.names[a]}*{s.names[b]} escapes",
        )
    names = [s.names[i] for i in handle.sorted_members]
    return FiniteSemigroup(names, sub, parent_map=handle.sorted_members)


def parse_table_text(text: str) -> FiniteSemigroup:
    """Parse the table text format: `order: m`, `names: ...`, then m rows."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if body.strip():
            lines.append((lineno, body))
    if not lines:
        raise ParseError(1, 1, "empty table text")

    def expect(idx, key):
        if idx >= len(lines):
            raise ParseError(lines[-1][0], 1, f"missing {key!r} line")
        lineno, body = lines[idx]
        head, sep, rest = body.partition(":")
        if not sep or head.strip() != key:
            raise ParseError(lineno, 1, f"expected {key!r} declaration")
        return lineno, rest

    lineno, rest = expect(0, "order")
    try:
        m = int(rest.strip())
    except ValueError:
        raise ParseError(lineno, len("order:") + 1, "order must be an integer") from None
    if m < 1:
        raise ParseError(lineno, 1, "order must be positive")
    lineno, rest = expect(1, "names")
    names = rest.split()
    if len(names) != m:
        raise ParseError(lineno, 1, f"expected {m} names, got {len(names)}")
    if len(lines) != 2 + m:
        raise ParseError(lines[-1][0], 1, f"expected {m} table rows, got {len(lines) - 2}")
    table = np.zeros((m, m), dtype=np.int32)
    for a in range(m):
        lineno, body = lines[2 + a]
        cells = body.split()
        if len(cells) != m:
            raise ParseError(lineno, 1, f"row has {len(cells)} entries, expected {m}")
        for b, cell in enumerate(cells):
            try:
                v = int(cell)
            except ValueError:
                raise ParseError(lineno, 1, f"bad table entry {cell!r}") from None
            if not 0 <= v < m:
                raise ParseError(lineno, 1, f"table entry {v} out of range")
            table[a, b] = v
    try:
        return FiniteSemigroup(names, table)
    except NotAssociative:
        raise
    except ValueError as e:
        raise ParseError(lines[0][0], 1, str(e)) from None


def format_table_text(s: FiniteSemigroup) -> str:
    lines = [f"order: {s.order}", "names: " + " ".join(s.names)]
    for a in range(s.order):
        lines.append(" ".join(str(int(v)) for v in s.table[a]))
    return "\n".join(lines) + "\n"
