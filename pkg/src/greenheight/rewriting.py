"""Length-reducing string rewriting: reduction, critical pairs, completeness,
irreducible-word enumeration, and semigroup construction from presentations.

Internally a word is a plain str with one character per letter; alphabets
with multi-character tokens map onto private-use characters so matching is
ordinary substring search. ZERO is an absorbing sentinel, never a letter:
0w -> 0 and w0 -> 0 live in concatenation/reduction, not in the rule list.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import core
from .errors import CapExceeded, NotConfluent, ParseError

DEFAULT_CAP = 10_000

_PUA_BASE = 0xE000


class _ZeroType:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Zero"

    def __len__(self):
        return 0


ZERO = _ZeroType()


@dataclass(frozen=True)
class Rule:
    """One rewriting rule over internal symbols; rhs may be ZERO."""

    lhs: str
    rhs: object


@dataclass(frozen=True)
class CriticalPair:
    """Two distinct one-step reducts of one source word."""

    source: str
    left_result: object
    right_result: object
    overlap_kind: str  # "overlap" or "containment"


def _check_token(tok: str, what: str):
    if not isinstance(tok, str) or not tok:
        raise ValueError(f"{what} must be a non-empty string")
    if any(ch.isspace() or ch in "[]#" for ch in tok):
        raise ValueError(f"{what} {tok!r} contains whitespace or reserved characters")
    if len(tok) == 1 and _PUA_BASE <= ord(tok) <= 0xF8FF:
        raise ValueError(f"{what} {tok!r} is in the reserved private-use range")


class RewritingSystem:
    """An ordered alphabet, ordered length-reducing rules, optional zero."""

    def __init__(self, letters, rules, zero=None):
        letters = tuple(letters)
        if not letters:
            raise ValueError("alphabet must be non-empty")
        for tok in letters:
            _check_token(tok, "letter")
        if len(set(letters)) != len(letters):
            raise ValueError("duplicate letters")
        if zero is not None:
            _check_token(zero, "zero token")
            if zero in letters:
                raise ValueError("the zero token is not a letter")
        self.letters = letters
        self.zero_token = zero
        self._sym_of = {}
        self._tok_of = {}
        for i, tok in enumerate(letters):
            sym = tok if len(tok) == 1 else chr(_PUA_BASE + i)
            self._sym_of[tok] = sym
            self._tok_of[sym] = tok
        self._letter_syms = tuple(self._sym_of[t] for t in letters)

        built = []
        for item in rules:
            lhs, rhs = (item.lhs, item.rhs) if isinstance(item, Rule) else item
            lhs_w = self.word(lhs)
            if lhs_w is ZERO or not lhs_w:
                raise ValueError("rule lhs must be a non-empty word over the alphabet")
            rhs_w = ZERO if rhs is ZERO else self.word(rhs)
            if len(rhs_w) >= len(lhs_w):
                raise ValueError(
                    f"rule {self.display(lhs_w)} -> {self.display(rhs_w)}"
                    " is not length-reducing"
                )
            built.append(Rule(lhs_w, rhs_w))
        self.rules = tuple(built)
        if zero is None and any(r.rhs is ZERO for r in self.rules):
            raise ValueError("rules rewrite to zero but no zero token is declared")
        self.has_zero = zero is not None

    def word(self, w):
        """Internal form of a word given as tokens, text, or internal str."""
        if w is ZERO:
            return ZERO
        if isinstance(w, str):
            if all(c in self._tok_of for c in w):
                return w
            tokens = _tokenize(w, 0, 0)
        else:
            tokens = list(w)
        out = []
        for tok in tokens:
            sym = self._sym_of.get(tok)
            if sym is None:
                raise ValueError(f"symbol outside alphabet: {tok!r}")
            out.append(sym)
        return "".join(out)

    def display(self, w) -> str:
        """Human form: bracketed multi-character tokens, zero token for ZERO."""
        if w is ZERO:
            return self.zero_token if self.zero_token is not None else "0"
        parts = []
        for sym in w:
            tok = self._tok_of[sym]
            parts.append(tok if len(tok) == 1 else f"[{tok}]")
        return "".join(parts)

    def __repr__(self):
        z = "" if self.zero_token is None else f", zero={self.zero_token!r}"
        return f"RewritingSystem(letters={''.join(self.letters)!r}, {len(self.rules)} rules{z})"


def reduce_word(rs: RewritingSystem, w):
    """Normal form under the leftmost-match, lowest-rule-index strategy."""
    w = rs.word(w)
    if w is ZERO:
        return ZERO
    rules = rs.rules
    while True:
        best_pos = -1
        best_rule = None
        for r in rules:
            p = w.find(r.lhs)
            if p >= 0 and (best_pos < 0 or p < best_pos):
                best_pos = p
                best_rule = r
                if p == 0:
                    break
        if best_rule is None:
            return w
        if best_rule.rhs is ZERO:
            return ZERO
        w = w[:best_pos] + best_rule.rhs + w[best_pos + len(best_rule.lhs):]


def critical_pairs(rs: RewritingSystem):
    """All overlap/containment ambiguities with distinct one-step results,
    deduplicated by (source, unordered result pair)."""
    seen = set()
    out = []

    def key_of(r):
        return ("Z",) if r is ZERO else ("W", r)

    def emit(source, left, right, kind):
        if left == right:
            return
        key = (source, frozenset((key_of(left), key_of(right))))
        if key in seen:
            return
        seen.add(key)
        out.append(CriticalPair(source, left, right, kind))

    rules = rs.rules
    for i, ri in enumerate(rules):
        for j, rj in enumerate(rules):
            li, lj = ri.lhs, rj.lhs
            # proper overlap: a strict suffix of li is a strict prefix of lj
            for o in range(1, min(len(li), len(lj))):
                if li.endswith(lj[:o]):
                    source = li + lj[o:]
                    left = ZERO if ri.rhs is ZERO else ri.rhs + lj[o:]
                    right = ZERO if rj.rhs is ZERO else li[: len(li) - o] + rj.rhs
                    emit(source, left, right, "overlap")
            # containment: lj occurs inside li
            if i != j:
                start = 0
                while True:
                    p = li.find(lj, start)
                    if p < 0:
                        break
                    right = ZERO if rj.rhs is ZERO else li[:p] + rj.rhs + li[p + len(lj):]
                    emit(li, ri.rhs, right, "containment")
                    start = p + 1
    return out


def is_complete(rs: RewritingSystem):
    """(True, None) if every critical pair resolves, else (False, witness).

    Rules are length-reducing, so the system is noetherian and resolution
    of all critical pairs is exactly confluence; a pair resolves iff both
    results share one strategy-normal form.
    """
    for cp in critical_pairs(rs):
        if reduce_word(rs, cp.left_result) != reduce_word(rs, cp.right_result):
            return False, cp
    return True, None


def enumerate_irreducibles(rs: RewritingSystem, cap: int = DEFAULT_CAP):
    """Irreducible words in shortlex order, ZERO appended iff declared.

    Grows words letter by letter: every factor of an irreducible word is
    irreducible, so level k+1 extends level k and an empty level ends the
    walk. Raises CapExceeded past ``cap`` words (system likely infinite).
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    lhss = [r.lhs for r in rs.rules]
    words = []
    level = [""]
    total = 1 if rs.has_zero else 0
    while True:
        nxt = []
        for w in level:
            for c in rs._letter_syms:
                cand = w + c
                if any(cand.endswith(l) for l in lhss):
                    continue
                nxt.append(cand)
        if not nxt:
            break
        total += len(nxt)
        if total > cap:
            raise CapExceeded(cap, total)
        words.extend(nxt)
        level = nxt
    if rs.has_zero:
        words.append(ZERO)
    return words


def semigroup_from_presentation(rs, cap: int = DEFAULT_CAP) -> core.FiniteSemigroup:
    """Build the presented semigroup; elements are irreducible words.

    Accepts a RewritingSystem or presentation text. The system must be
    complete (raises NotConfluent with a witness otherwise); the table is
    reduce(u ++ v) re-verified associative by the core constructor.
    """
    if isinstance(rs, str):
        rs = parse_presentation(rs)
    ok, witness = is_complete(rs)
    if not ok:
        raise NotConfluent(
            witness,
            "presentation is not confluent: source "
            f"{rs.display(witness.source)} rewrites to both "
            f"{rs.display(reduce_word(rs, witness.left_result))} and "
            f"{rs.display(reduce_word(rs, witness.right_result))}",
        )
    words = enumerate_irreducibles(rs, cap)
    if not words:
        raise ValueError("presentation has no elements")
    index = {w: i for i, w in enumerate(words)}
    m = len(words)
    table = np.zeros((m, m), dtype=np.int32)
    for i, u in enumerate(words):
        for j, v in enumerate(words):
            if u is ZERO or v is ZERO:
                w = ZERO
            else:
                w = reduce_word(rs, u + v)
            k = index.get(w)
            if k is None:
                raise RuntimeError(
                    f"product {rs.display(u)}*{rs.display(v)} reduced to a word"
                    " outside the enumerated normal forms"
                )
            table[i, j] = k
    names = [rs.display(w) for w in words]
    return core.from_table(names, table)


def element_index(rs: RewritingSystem, s: core.FiniteSemigroup, w) -> int:
    """Index in s of the element the word w represents."""
    return s.index(rs.display(reduce_word(rs, w)))


def _tokenize(text: str, lineno: int, col0: int):
    """Split into tokens: one character each, or [multi char]; '#' never appears
    (comments are stripped before tokenizing)."""
    toks = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c == "[":
            j = text.find("]", i + 1)
            if j < 0:
                raise ParseError(lineno, col0 + i + 1, "unclosed '['")
            tok = text[i + 1 : j]
            if not tok or any(ch.isspace() or ch in "[]#" for ch in tok):
                raise ParseError(lineno, col0 + i + 1, f"bad bracketed token {tok!r}")
            toks.append(tok)
            i = j + 1
        elif c in "]#":
            raise ParseError(lineno, col0 + i + 1, f"unexpected {c!r}")
        else:
            toks.append(c)
            i += 1
    return toks


def parse_presentation(text: str) -> RewritingSystem:
    """Parse presentation text: `letters:`, optional `zero:`, `rule:` lines."""
    letters = None
    letters_line = 0
    zero = None
    raw_rules = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        head, sep, rest = body.partition(":")
        key = head.strip()
        col0 = len(head) + 1
        if not sep or key not in ("letters", "zero", "rule"):
            raise ParseError(lineno, 1, "expected 'letters:', 'zero:' or 'rule:'")
        if key == "letters":
            if letters is not None:
                raise ParseError(lineno, 1, "duplicate 'letters:' declaration")
            letters = _tokenize(rest, lineno, col0)
            letters_line = lineno
            if not letters:
                raise ParseError(lineno, col0 + 1, "empty alphabet")
        elif key == "zero":
            if zero is not None:
                raise ParseError(lineno, 1, "duplicate 'zero:' declaration")
            toks = _tokenize(rest, lineno, col0)
            if len(toks) != 1:
                raise ParseError(lineno, col0 + 1, "zero declaration needs exactly one token")
            zero = toks[0]
        else:
            lhs_txt, arrow, rhs_txt = rest.partition("->")
            if not arrow:
                raise ParseError(lineno, col0 + 1, "rule needs '->'")
            lhs = _tokenize(lhs_txt, lineno, col0)
            rhs = _tokenize(rhs_txt, lineno, col0 + len(lhs_txt) + 2)
            if not lhs:
                raise ParseError(lineno, col0 + 1, "empty rule lhs")
            if not rhs:
                raise ParseError(lineno, col0 + len(lhs_txt) + 3, "empty rule rhs")
            raw_rules.append((lineno, col0, lhs, rhs))
    if letters is None:
        raise ParseError(1, 1, "missing 'letters:' declaration")

    rules = []
    letter_set = set(letters)
    for lineno, col0, lhs, rhs in raw_rules:
        for tok in lhs:
            if tok not in letter_set:
                raise ParseError(lineno, col0 + 1, f"rule lhs uses non-letter {tok!r}")
        if zero is not None and rhs == [zero]:
            rules.append((lhs, ZERO))
            continue
        for tok in rhs:
            if tok not in letter_set:
                raise ParseError(lineno, col0 + 1, f"rule rhs uses non-letter {tok!r}")
        if len(rhs) >= len(lhs):
            raise ParseError(lineno, col0 + 1, "rule is not length-reducing")
        rules.append((lhs, rhs))
    try:
        return RewritingSystem(letters, rules, zero=zero)
    except ValueError as e:
        raise ParseError(letters_line or 1, 1, str(e)) from None


def format_presentation(rs: RewritingSystem) -> str:
    """Presentation text that parses back to an equivalent system."""

    def show(w):
        return rs.display(w)

    lines = ["letters: " + " ".join(
        tok if len(tok) == 1 else f"[{tok}]" for tok in rs.letters
    )]
    if rs.zero_token is not None:
        lines.append(f"zero: {rs.zero_token}")
    for r in rs.rules:
        lines.append(f"rule: {show(r.lhs)} -> {show(r.rhs)}")
    return "\n".join(lines) + "\n"
