"""Brute-force reference implementations used to cross-check the engine.

Everything here recomputes from first principles with plain loops, sets,
and dicts. No numpy, no shared code paths with the package: the only
interface is a multiplication table given as a list of lists of ints.
"""

from __future__ import annotations

import itertools


def as_rows(table):
    return [[int(x) for x in row] for row in table]


def check_associative(t) -> bool:
    m = len(t)
    return all(
        t[t[a][b]][c] == t[a][t[b][c]]
        for a in range(m)
        for b in range(m)
        for c in range(m)
    )


def principal_set(t, a: int, relation: str) -> frozenset:
    """{a} together with the products the relation quantifies over."""
    m = len(t)
    right = {t[a][x] for x in range(m)}
    left = {t[x][a] for x in range(m)}
    both = {t[x][t[a][y]] for x in range(m) for y in range(m)}
    if relation == "R":
        return frozenset({a} | right)
    if relation == "L":
        return frozenset({a} | left)
    if relation == "J":
        return frozenset({a} | right | left | both)
    raise ValueError(relation)


def naive_leq(t, a: int, b: int, relation: str) -> bool:
    if relation == "H":
        return naive_leq(t, a, b, "R") and naive_leq(t, a, b, "L")
    return a in principal_set(t, b, relation)


def naive_classes(t, relation: str):
    """Equivalence classes, each a frozenset, in no particular order."""
    m = len(t)
    seen = {}
    for a in range(m):
        if relation == "H":
            key = (principal_set(t, a, "R"), principal_set(t, a, "L"))
        else:
            key = principal_set(t, a, relation)
        seen.setdefault(key, set()).add(a)
    return [frozenset(v) for v in seen.values()]


def naive_class_leq(t, ca, cb, relation: str) -> bool:
    a = min(ca)
    b = min(cb)
    return naive_leq(t, a, b, relation)


def longest_chain(classes, leq) -> int:
    """Longest chain in the strict order induced by leq, by memoized DFS."""
    n = len(classes)
    strict = [
        [leq(classes[i], classes[j]) and not leq(classes[j], classes[i]) for j in range(n)]
        for i in range(n)
    ]
    memo = {}

    def up(i):
        if i not in memo:
            memo[i] = 1 + max((up(j) for j in range(n) if strict[i][j]), default=0)
        return memo[i]

    return max((up(i) for i in range(n)), default=0)


def naive_height(t, relation: str) -> int:
    classes = naive_classes(t, relation)
    return longest_chain(classes, lambda ca, cb: naive_class_leq(t, ca, cb, relation))


def naive_is_kind(t, members, kind: str) -> bool:
    m = len(t)
    mem = set(members)
    if not mem:
        return False
    if kind == "right_ideal":
        return all(t[a][x] in mem for a in mem for x in range(m))
    if kind == "left_ideal":
        return all(t[x][a] in mem for a in mem for x in range(m))
    if kind == "two_sided_ideal":
        return naive_is_kind(t, mem, "right_ideal") and naive_is_kind(t, mem, "left_ideal")
    if kind == "subsemigroup":
        return all(t[a][b] in mem for a in mem for b in mem)
    if kind == "bi_ideal":
        return naive_is_kind(t, mem, "subsemigroup") and all(
            t[t[a][x]][b] in mem for a in mem for b in mem for x in range(m)
        )
    raise ValueError(kind)


def sub_table(t, members):
    """Multiplication table of a multiplicatively closed subset."""
    mem = sorted(members)
    pos = {a: i for i, a in enumerate(mem)}
    return [[pos[t[a][b]] for b in mem] for a in mem]


def naive_relative_height(t, members, relation: str = "R") -> int:
    return naive_height(sub_table(t, members), relation)


def naive_chain_param(t, members, kind: str) -> int:
    """Longest chain of R-classes meeting the subset; containment for the
    right-sided kinds."""
    mem = set(members)
    classes = naive_classes(t, "R")
    if kind in ("bi_ideal", "left_ideal", "subsemigroup"):
        chosen = [c for c in classes if c & mem]
    else:
        chosen = [c for c in classes if c <= mem]
    return longest_chain(chosen, lambda ca, cb: naive_class_leq(t, ca, cb, "R"))


def all_subsets_of_kind(t, kind: str):
    m = len(t)
    for bits in range(1, 1 << m):
        members = frozenset(i for i in range(m) if bits >> i & 1)
        if naive_is_kind(t, members, kind):
            yield members


def naive_kernel(t) -> frozenset:
    """Minimal two-sided ideal, found by direct subset enumeration."""
    ideals = list(all_subsets_of_kind(t, "two_sided_ideal"))
    best = min(ideals, key=len)
    assert all(best <= i for i in ideals), "kernel must sit inside every ideal"
    return best


def naive_minimal_right_ideals(t):
    rights = list(all_subsets_of_kind(t, "right_ideal"))
    return [r for r in rights if not any(q < r for q in rights)]


def naive_regular(t) -> frozenset:
    m = len(t)
    return frozenset(a for a in range(m) if any(t[t[a][b]][a] == a for b in range(m)))


def naive_idempotents(t) -> frozenset:
    return frozenset(a for a in range(len(t)) if t[a][a] == a)


# ---------------------------------------------------------------------------
# rewriting oracles


def apply_rule_at(word, lhs, rhs, pos):
    return word[:pos] + rhs + word[pos + len(lhs):]


def all_redexes(rules, word):
    """Every (rule index, position) whose left side occurs at position."""
    out = []
    for i, (lhs, _) in enumerate(rules):
        start = 0
        while True:
            p = word.find(lhs, start)
            if p < 0:
                break
            out.append((i, p))
            start = p + 1
    return out


def random_reduce(rules, word, rng, zero_token="!"):
    """Reduce by repeatedly firing a randomly chosen redex. Rules are
    (lhs, rhs) string pairs; rhs == zero_token means the absorbing zero."""
    while True:
        if word == zero_token:
            return word
        redexes = all_redexes(rules, word)
        if not redexes:
            return word
        i, p = redexes[rng.randrange(len(redexes))]
        lhs, rhs = rules[i]
        if rhs == zero_token:
            return zero_token
        word = apply_rule_at(word, lhs, rhs, p)


def random_word(letters, rng, max_len: int) -> str:
    n = rng.randrange(1, max_len + 1)
    return "".join(rng.choice(letters) for _ in range(n))


# ---------------------------------------------------------------------------
# misc


def brute_force_tables(m: int):
    """Every associative table of order m, as tuples of row-tuples."""
    cells = m * m
    out = []
    for assignment in itertools.product(range(m), repeat=cells):
        t = [list(assignment[i * m:(i + 1) * m]) for i in range(m)]
        if check_associative(t):
            out.append(tuple(tuple(r) for r in t))
    return out


def transformation_table(maps):
    """Composition table for right actions: (f then g)(x) = g(f(x))."""
    index = {f: i for i, f in enumerate(maps)}
    size = len(maps)
    table = [[0] * size for _ in range(size)]
    for i, f in enumerate(maps):
        for j, g in enumerate(maps):
            table[i][j] = index[tuple(g[x] for x in f)]
    return table
