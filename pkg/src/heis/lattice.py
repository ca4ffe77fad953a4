"""The integer Heisenberg group H_n(Z): generators, words, and normal forms.

H_n(Z) is the subgroup of H_n(R) with integer entries.  It is generated by
a_1, ..., a_n (unit steps in x), b_1, ..., b_n (unit steps in y) and the
central element c = (0, 0, 1), subject to

    a_i a_j = a_j a_i        b_i b_j = b_j b_i
    a_i c = c a_i            b_j c = c b_j
    a_i b_j = b_j a_i   (i != j)
    b_i a_i = a_i b_i c

Every element (k, l, m) equals the word a_1^k1 ... a_n^kn b_1^l1 ... b_n^ln c^m
and that expression is unique, so normalization proceeds by evaluating a word
to its triple and re-emitting the normal form.

Arithmetic uses Python integers throughout, so no overflow is possible.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .core import RealElement
from .errors import DimensionError, WordSyntaxError


@dataclass(frozen=True)
class LatticeElement:
    """An integer triple (k, l, m) in H_n(Z)."""

    k: Tuple[int, ...]
    l: Tuple[int, ...]
    m: int

    def __post_init__(self):
        object.__setattr__(self, "k", tuple(int(c) for c in self.k))
        object.__setattr__(self, "l", tuple(int(c) for c in self.l))
        object.__setattr__(self, "m", int(self.m))
        if len(self.k) == 0 or len(self.k) != len(self.l):
            raise DimensionError("k and l must have equal length n >= 1")

    @property
    def n(self) -> int:
        return len(self.k)

    @staticmethod
    def identity(n: int) -> "LatticeElement":
        if n < 1:
            raise DimensionError("n must be >= 1")
        return LatticeElement((0,) * n, (0,) * n, 0)


def lmul(g: LatticeElement, h: LatticeElement) -> LatticeElement:
    """The H_n(R) group law restricted to integer triples."""
    if g.n != h.n:
        raise DimensionError(f"dimension mismatch: {g.n} vs {h.n}")
    return LatticeElement(
        tuple(a + b for a, b in zip(g.k, h.k)),
        tuple(a + b for a, b in zip(g.l, h.l)),
        g.m + h.m + sum(a * b for a, b in zip(h.k, g.l)),
    )


def linverse(g: LatticeElement) -> LatticeElement:
    return LatticeElement(
        tuple(-c for c in g.k),
        tuple(-c for c in g.l),
        -g.m + sum(a * b for a, b in zip(g.k, g.l)),
    )


def embed(g: LatticeElement) -> RealElement:
    """The inclusion H_n(Z) -> H_n(R); a homomorphism by construction."""
    return RealElement(
        tuple(float(c) for c in g.k),
        tuple(float(c) for c in g.l),
        float(g.m),
    )


# --- generators -------------------------------------------------------------

def gen_a(j: int, n: int) -> LatticeElement:
    _check_index(j, n)
    return LatticeElement(tuple(1 if i == j - 1 else 0 for i in range(n)), (0,) * n, 0)


def gen_b(j: int, n: int) -> LatticeElement:
    _check_index(j, n)
    return LatticeElement((0,) * n, tuple(1 if i == j - 1 else 0 for i in range(n)), 0)


def gen_c(n: int) -> LatticeElement:
    return LatticeElement((0,) * n, (0,) * n, 1)


def _check_index(j: int, n: int) -> None:
    if not 1 <= j <= n:
        raise DimensionError(f"generator index {j} out of range [1, {n}]")


def token_element(tok: "GeneratorToken", n: int) -> LatticeElement:
    """The triple for a single generator power.

    a_j^e, b_j^e and c^e are just e steps along one coordinate (the central
    correction k' . l vanishes when only one of k, l is nonzero), so the
    closed form avoids |e| group multiplications.
    """
    e = tok.exponent
    if tok.kind == "a":
        _check_index(tok.index, n)
        return LatticeElement(
            tuple(e if i == tok.index - 1 else 0 for i in range(n)), (0,) * n, 0
        )
    if tok.kind == "b":
        _check_index(tok.index, n)
        return LatticeElement(
            (0,) * n, tuple(e if i == tok.index - 1 else 0 for i in range(n)), 0
        )
    return LatticeElement((0,) * n, (0,) * n, e)


# --- words ------------------------------------------------------------------

@dataclass(frozen=True)
class GeneratorToken:
    """A signed generator power: kind 'a'/'b' with index, or central 'c'."""

    kind: str  # 'a', 'b' or 'c'
    index: int  # 1-based; 0 for 'c'
    exponent: int

    def __str__(self) -> str:
        name = self.kind if self.kind == "c" else f"{self.kind}{self.index}"
        return name if self.exponent == 1 else f"{name}^{self.exponent}"


@dataclass(frozen=True)
class Word:
    """An ordered product of generator powers in dimension n."""

    n: int
    tokens: Tuple[GeneratorToken, ...]

    def __str__(self) -> str:
        return " ".join(str(tok) for tok in self.tokens)


_TOKEN_RE = re.compile(r"([abc])([0-9]*)(\^(-?[0-9]+))?")


def parse_word(text: str, n: int) -> Word:
    """Parse the surface syntax: space-separated terms `a<j>`, `b<j>`, `c`,
    each optionally followed by `^<int>`.  Exponent-0 terms are dropped."""
    if n < 1:
        raise DimensionError("n must be >= 1")
    tokens: List[GeneratorToken] = []
    pos = 0
    length = len(text)
    while pos < length:
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise WordSyntaxError(f"expected generator, found {text[pos]!r}", pos)
        kind, digits, _, exp = match.groups()
        if kind == "c":
            if digits:
                raise WordSyntaxError("the central generator c takes no index", pos + 1)
            index = 0
        else:
            if not digits:
                raise WordSyntaxError(f"generator {kind!r} requires an index", pos)
            index = int(digits)
            if not 1 <= index <= n:
                raise WordSyntaxError(f"index {index} out of range [1, {n}]", pos)
        exponent = 1 if exp is None else int(exp)
        end = match.end()
        if end < length and not text[end].isspace():
            raise WordSyntaxError(f"unexpected character {text[end]!r}", end)
        if exponent != 0:
            tokens.append(GeneratorToken(kind, index, exponent))
        pos = end
    return Word(n, tuple(tokens))


def evaluate_word(w: Word) -> LatticeElement:
    """Left-to-right product of the token powers under the group law."""
    acc = LatticeElement.identity(w.n)
    for tok in w.tokens:
        acc = lmul(acc, token_element(tok, w.n))
    return acc


def normal_form(g: LatticeElement) -> Word:
    """The unique word a_1^k1 ... a_n^kn b_1^l1 ... b_n^ln c^m, with
    zero-exponent factors omitted; the identity is the empty word."""
    tokens: List[GeneratorToken] = []
    for j, e in enumerate(g.k, start=1):
        if e != 0:
            tokens.append(GeneratorToken("a", j, e))
    for j, e in enumerate(g.l, start=1):
        if e != 0:
            tokens.append(GeneratorToken("b", j, e))
    if g.m != 0:
        tokens.append(GeneratorToken("c", 0, g.m))
    return Word(g.n, tuple(tokens))


def normalize_word(w: Word) -> Word:
    """Rewrite w to normal form (evaluate, then re-emit)."""
    return normal_form(evaluate_word(w))


# --- relation checking ------------------------------------------------------

@dataclass(frozen=True)
class RelationReport:
    """Outcome of exhaustively evaluating the defining relations."""

    n: int
    checked: int
    counterexamples: Tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def check_relations(n: int, bound: int = 0) -> RelationReport:
    """Evaluate both sides of every defining relation for all index pairs.

    `bound` is accepted for interface stability but the relations involve
    only generators, so the check is always exhaustive over index pairs.
    """
    if n < 1:
        raise DimensionError("n must be >= 1")
    checked = 0
    bad: List[str] = []

    def expect(label: str, lhs: LatticeElement, rhs: LatticeElement) -> None:
        nonlocal checked
        checked += 1
        if lhs != rhs:
            bad.append(f"{label}: {lhs} != {rhs}")

    c = gen_c(n)
    for i in range(1, n + 1):
        ai, bi = gen_a(i, n), gen_b(i, n)
        expect(f"a{i} c = c a{i}", lmul(ai, c), lmul(c, ai))
        expect(f"b{i} c = c b{i}", lmul(bi, c), lmul(c, bi))
        expect(f"b{i} a{i} = a{i} b{i} c", lmul(bi, ai), lmul(lmul(ai, bi), c))
        for j in range(1, n + 1):
            aj, bj = gen_a(j, n), gen_b(j, n)
            expect(f"a{i} a{j} = a{j} a{i}", lmul(ai, aj), lmul(aj, ai))
            expect(f"b{i} b{j} = b{j} b{i}", lmul(bi, bj), lmul(bj, bi))
            if i != j:
                expect(f"a{i} b{j} = b{j} a{i}", lmul(ai, bj), lmul(bj, ai))
    return RelationReport(n, checked, tuple(bad))
