"""Words, section invariants, and exact identity decision procedures.

A word is a finite sequence of letters a..z; an involutory word may mark
symbols with a star.  The engine revolves around two complete invariants:

* all left and right sections balanced: equivalent to equality of normal
  forms, where the normal form sorts every interior block of the extreme
  representation;
* all sections balanced mod 2 (plus balancedness): equivalent to equality
  of canonical forms, computed here as the lexicographically least word
  with the same section-parity data.

The canonical form is deliberately not the classical "reduce exponents
except in the leftmost block" construction: that construction distinguishes
yxxyyxx from yyyxxxx although both have identical section parities (and
are equal under every parity-twisted substitution), so it would be finer
than the decision procedure it is meant to mirror.

A generic substitution checker runs identities against finite tables
exhaustively and against infinite monoids over seeded witness pools.
"""

from __future__ import annotations

import itertools
import random
import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, NamedTuple, Optional, Union

from .errors import (
    EmptyWord,
    MissingLetter,
    NoInvolution,
    NotInteriorFactor,
    ParseError,
    RangeError,
)
from . import auxmonoids as am

__all__ = [
    "Word",
    "IWord",
    "Identity",
    "parse_word",
    "parse_iword",
    "parse_identity",
    "zimin",
    "occ",
    "content",
    "is_balanced",
    "is_balanced_mod2",
    "factor2_counts",
    "left_section",
    "right_section",
    "ExtremeRep",
    "extreme_rep",
    "normal_form",
    "canonical_form",
    "holds_in_M",
    "holds_in_N",
    "SortStep",
    "sort_step",
    "sort_to_normal",
    "delete_letters",
    "semigroup_family",
    "evaluate",
    "Monoid",
    "Verdict",
    "check_identity",
    "IDENTITY_REGISTRY",
    "identity_by_name",
    "zimin_sorted_pair",
    "star_mix_words",
    "monoid_M",
    "monoid_N",
    "monoid_A21",
    "monoid_SDP",
    "monoid_REES",
    "monoid_from_table",
]


_TOKEN = re.compile(r"([a-z])(\d*)(\*?)")


def _letter_key(name: str):
    m = re.fullmatch(r"([a-z]+)(\d*)", name)
    return (m.group(1), int(m.group(2) or 0))


@dataclass(frozen=True)
class Word:
    """Plain word; letters are single characters a..z."""

    letters: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        got = self.letters[i]
        return Word(got) if isinstance(i, slice) else got

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        out = []
        for ch, run in itertools.groupby(self.letters):
            n = len(list(run))
            out.append(ch if n == 1 else f"{ch}{n}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"Word({self})"


@dataclass(frozen=True)
class IWord:
    """Involutory word: symbols are (letter, starred) pairs."""

    symbols: tuple[tuple[str, bool], ...] = ()

    def __len__(self) -> int:
        return len(self.symbols)

    def star(self) -> "IWord":
        return IWord(tuple((ch, not s) for ch, s in reversed(self.symbols)))

    def plain(self) -> Word:
        """Forget the stars."""
        return Word(tuple(ch for ch, _ in self.symbols))

    def __str__(self) -> str:
        return "1" if not self.symbols else "".join(
            ch + ("*" if s else "") for ch, s in self.symbols
        )

    def __repr__(self) -> str:
        return f"IWord({self})"


def _parse_symbols(text: str) -> list[tuple[str, bool]]:
    text = text.strip()
    if text == "1":
        return []
    out: list[tuple[str, bool]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"bad word syntax at {text[pos:]!r}")
        ch, digits, star = m.groups()
        count = int(digits) if digits else 1
        if count < 1:
            raise ParseError(f"zero repeat in {m.group(0)!r}")
        out.extend([(ch, bool(star))] * count)
        pos = m.end()
    return out


def parse_word(text: str) -> Word:
    """Parse letters with optional repeat digits, e.g. x3yx = xxxyx."""
    syms = _parse_symbols(text)
    if any(s for _, s in syms):
        raise ParseError("starred symbols need an involutory context")
    return Word(tuple(ch for ch, _ in syms))


def parse_iword(text: str) -> IWord:
    return IWord(tuple(_parse_symbols(text)))


@dataclass(frozen=True)
class Identity:
    lhs: Union[Word, IWord]
    rhs: Union[Word, IWord]
    mode: str = "monoid"  # or "semigroup"

    def __post_init__(self):
        if isinstance(self.lhs, IWord) != isinstance(self.rhs, IWord):
            raise ParseError("both sides must share a flavor")
        if self.mode == "semigroup" and (len(self.lhs) == 0 or len(self.rhs) == 0):
            raise EmptyWord("semigroup identities need non-empty sides")

    @property
    def involutory(self) -> bool:
        return isinstance(self.lhs, IWord)

    def __str__(self) -> str:
        return f"{self.lhs} = {self.rhs}"


def parse_identity(text: str, mode: str = "monoid") -> Identity:
    if text.count("=") != 1:
        raise ParseError("an identity needs exactly one '='")
    left, right = text.split("=")
    if "*" in text:
        return Identity(parse_iword(left), parse_iword(right), mode)
    return Identity(parse_word(left), parse_word(right), mode)


def zimin(k: int) -> Word:
    """z(1) = a, z(k+1) = z(k) + next letter + z(k)."""
    if not 1 <= k <= 26:
        raise RangeError("need 1 <= k <= 26")
    letters: tuple[str, ...] = ("a",)
    for i in range(1, k):
        letters = letters + (chr(ord("a") + i),) + letters
    return Word(letters)


# -- counting and sections ---------------------------------------------------

def occ(w: Word, x: str) -> int:
    return w.letters.count(x)


def content(w: Word) -> frozenset[str]:
    return frozenset(w.letters)


def is_balanced(u: Word, v: Word) -> bool:
    return Counter(u.letters) == Counter(v.letters)


def is_balanced_mod2(u: Word, v: Word) -> bool:
    cu, cv = Counter(u.letters), Counter(v.letters)
    if set(cu) != set(cv):
        return False
    return all(cu[x] % 2 == cv[x] % 2 for x in cu)


def factor2_counts(w: Word) -> dict[tuple[str, str], int]:
    return dict(Counter(zip(w.letters, w.letters[1:])))


def left_section(w: Word, x: str) -> Word:
    """Longest prefix avoiding x; w itself when x does not occur."""
    try:
        return Word(w.letters[: w.letters.index(x)])
    except ValueError:
        return w


def right_section(x: str, w: Word) -> Word:
    """Longest suffix avoiding x."""
    for i in range(len(w.letters) - 1, -1, -1):
        if w.letters[i] == x:
            return Word(w.letters[i + 1 :])
    return w


# -- extreme representation and the two normal forms -------------------------

class ExtremeRep(NamedTuple):
    e: Word                      # word of extreme occurrences
    blocks: tuple[Word, ...]     # interior blocks, len(e) - 1 of them

    def reassemble(self) -> Word:
        out: tuple[str, ...] = (self.e.letters[0],)
        for z, block in zip(self.e.letters[1:], self.blocks):
            out += block.letters + (z,)
        return Word(out)

    def __str__(self) -> str:
        parts = [self.e.letters[0]]
        for z, block in zip(self.e.letters[1:], self.blocks):
            parts.append(str(block))
            parts.append(z)
        return ".".join(parts)


def _extreme_positions(w: Word) -> list[int]:
    first: dict[str, int] = {}
    last: dict[str, int] = {}
    for i, ch in enumerate(w.letters):
        first.setdefault(ch, i)
        last[ch] = i
    marks = set(first.values()) | set(last.values())
    return sorted(marks)


def extreme_rep(w: Word) -> ExtremeRep:
    """Split w at the leftmost and rightmost occurrence of each letter."""
    if not w.letters:
        raise EmptyWord("the empty word has no extreme representation")
    marks = _extreme_positions(w)
    e = Word(tuple(w.letters[i] for i in marks))
    blocks = tuple(
        Word(w.letters[a + 1 : b]) for a, b in zip(marks, marks[1:])
    )
    k = len(set(w.letters))
    n = len(e) - 1
    assert k - 1 <= n < 2 * k
    return ExtremeRep(e, blocks)


def _sorted_word(w: Word) -> Word:
    return Word(tuple(sorted(w.letters, key=_letter_key)))


def normal_form(w: Word) -> Word:
    """Sort every interior block."""
    rep = extreme_rep(w)
    return ExtremeRep(rep.e, tuple(_sorted_word(b) for b in rep.blocks)).reassemble()


def _section_data(letters: tuple[str, ...]):
    """The complete invariant behind the parity criterion: occurrence
    counts plus content-and-parity of every left and right section."""
    counts = Counter(letters)

    def side_sig(seg):
        c = Counter(seg)
        return tuple(sorted((y, c[y] % 2) for y in c))

    per_letter = []
    for x in sorted(counts):
        fi = letters.index(x)
        li = len(letters) - 1 - letters[::-1].index(x)
        per_letter.append(
            (x, side_sig(letters[:fi]), side_sig(letters[li + 1 :]))
        )
    return (tuple(sorted(counts.items())), tuple(per_letter))


def _multiset_perms(counts: dict[str, int], length: int):
    """Distinct arrangements in lexicographic order."""
    if length == 0:
        yield ()
        return
    for ch in sorted(counts, key=_letter_key):
        if counts[ch]:
            counts[ch] -= 1
            for rest in _multiset_perms(counts, length - 1):
                yield (ch,) + rest
            counts[ch] += 1


@lru_cache(maxsize=65536)
def _canonical_letters(letters: tuple[str, ...]) -> tuple[str, ...]:
    target = _section_data(letters)
    counts = dict(Counter(letters))
    for cand in _multiset_perms(counts, len(letters)):
        if _section_data(cand) == target:
            return cand
    raise AssertionError("unreachable: the word itself matches its data")


def canonical_form(w: Word) -> Word:
    """Lexicographically least word sharing w's section parities."""
    if not w.letters:
        raise EmptyWord("the empty word has no canonical form")
    return Word(_canonical_letters(w.letters))


def holds_in_M(u: Word, v: Word) -> bool:
    """All left and right sections balanced (and the identity itself,
    which is its own section at any unused letter)."""
    if not is_balanced(u, v):
        return False
    for x in content(u) | content(v):
        if not is_balanced(left_section(u, x), left_section(v, x)):
            return False
        if not is_balanced(right_section(x, u), right_section(x, v)):
            return False
    return True


def holds_in_N(u: Word, v: Word) -> bool:
    """Balanced, and all sections balanced mod 2."""
    if not is_balanced(u, v):
        return False
    for x in content(u) | content(v):
        if not is_balanced_mod2(left_section(u, x), left_section(v, x)):
            return False
        if not is_balanced_mod2(right_section(x, u), right_section(x, v)):
            return False
    return True


# -- the sorting rewriter ----------------------------------------------------

class SortStep(NamedTuple):
    word: Word
    rule: str        # "interior-swap-nested" or "interior-swap-crossed"
    direction: str   # "left-to-right" or "right-to-left"


def sort_step(w: Word, pos: int) -> SortStep:
    """Swap a descending adjacent interior pair at (pos, pos + 1).

    Which of the two basis identities justifies the swap, and in which
    direction it is read, depends on how the extreme occurrences of the
    two letters interleave.
    """
    if not 0 <= pos < len(w.letters) - 1:
        raise NotInteriorFactor(f"no adjacent pair at position {pos}")
    big, small = w.letters[pos], w.letters[pos + 1]
    if _letter_key(big) <= _letter_key(small):
        raise NotInteriorFactor(f"{big}{small} is not a descending pair")
    marks = set(_extreme_positions(w))
    if pos in marks or pos + 1 in marks:
        raise NotInteriorFactor("the pair touches an extreme occurrence")
    first_small = w.letters.index(small)
    first_big = w.letters.index(big)
    last_small = len(w.letters) - 1 - w.letters[::-1].index(small)
    last_big = len(w.letters) - 1 - w.letters[::-1].index(big)
    if first_small < first_big:
        rule, direction = (
            ("interior-swap-crossed", "right-to-left")
            if last_small < last_big
            else ("interior-swap-nested", "right-to-left")
        )
    else:
        rule, direction = (
            ("interior-swap-nested", "left-to-right")
            if last_small < last_big
            else ("interior-swap-crossed", "left-to-right")
        )
    swapped = list(w.letters)
    swapped[pos], swapped[pos + 1] = small, big
    return SortStep(Word(tuple(swapped)), rule, direction)


def sort_to_normal(w: Word, guard: int = 100_000) -> tuple[Word, int]:
    """Apply sort_step at the leftmost descending interior pair until
    none remains; returns the result and the number of steps."""
    steps = 0
    for _ in range(guard):
        marks = set(_extreme_positions(w))
        target = None
        for i in range(len(w.letters) - 1):
            if i in marks or i + 1 in marks:
                continue
            if _letter_key(w.letters[i]) > _letter_key(w.letters[i + 1]):
                target = i
                break
        if target is None:
            return w, steps
        w = sort_step(w, target).word
        steps += 1
    raise AssertionError("sorting did not terminate")


def delete_letters(w: Union[Word, IWord], letters) -> Union[Word, IWord]:
    drop = set(letters)
    if isinstance(w, IWord):
        return IWord(tuple(s for s in w.symbols if s[0] not in drop))
    return Word(tuple(ch for ch in w.letters if ch not in drop))


def semigroup_family(identity: Identity, deletable) -> list[Identity]:
    """Expand a monoid identity into the semigroup family obtained by
    deleting every subset of the given letters."""
    deletable = sorted(set(deletable))
    out = []
    for r in range(len(deletable) + 1):
        for subset in itertools.combinations(deletable, r):
            lhs = delete_letters(identity.lhs, subset)
            rhs = delete_letters(identity.rhs, subset)
            out.append(Identity(lhs, rhs, "semigroup"))
    return out


# -- evaluation and search ---------------------------------------------------

@dataclass(frozen=True, eq=False)
class Monoid:
    """Duck-typed multiplication context for evaluate/check_identity.

    elements, when given, makes the monoid finite and checks exhaustive;
    pool is the witness pool used for infinite monoids.
    """

    name: str
    mul: Callable
    one: object = None
    star: Optional[Callable] = None
    elements: Optional[tuple] = None
    pool: tuple = ()


def evaluate(w: Union[Word, IWord], subst, monoid: Monoid):
    symbols = w.symbols if isinstance(w, IWord) else tuple(
        (ch, False) for ch in w.letters
    )
    if not symbols:
        if monoid.one is None:
            raise EmptyWord(f"{monoid.name} has no designated identity")
        return monoid.one
    acc = None
    for ch, starred in symbols:
        if ch not in subst:
            raise MissingLetter(f"no value for letter {ch!r}")
        val = subst[ch]
        if starred:
            if monoid.star is None:
                raise NoInvolution(f"{monoid.name} has no involution")
            val = monoid.star(val)
        acc = val if acc is None else monoid.mul(acc, val)
    return acc


@dataclass(frozen=True)
class Verdict:
    status: str  # "holds", "fails", "unknown"
    evidence: str
    witness: Optional[dict] = None

    def __str__(self) -> str:
        if self.witness is None:
            return f"{self.status} ({self.evidence})"
        inside = ", ".join(f"{k}={v!r}" for k, v in sorted(self.witness.items()))
        return f"{self.status} ({self.evidence}; {inside})"


def _identity_letters(identity: Identity) -> list[str]:
    def letters(side):
        if isinstance(side, IWord):
            return [ch for ch, _ in side.symbols]
        return list(side.letters)

    return sorted(set(letters(identity.lhs) + letters(identity.rhs)), key=_letter_key)


def check_identity(
    identity: Identity,
    monoid: Monoid,
    budget: int = 200_000,
    seed: int = 0,
) -> Verdict:
    """Search substitutions for a counterexample.

    Finite monoids (elements given) are checked exhaustively when the
    substitution count fits the budget, yielding holds or fails; otherwise
    the witness pool is swept and then sampled, yielding fails or unknown.
    """
    letters = _identity_letters(identity)
    k = len(letters)

    def try_subst(values) -> Optional[Verdict]:
        subst = dict(zip(letters, values))
        lv = evaluate(identity.lhs, subst, monoid)
        rv = evaluate(identity.rhs, subst, monoid)
        if lv != rv:
            return Verdict("fails", "substitution witness", subst)
        return None

    domain = monoid.elements
    if domain is not None and len(domain) ** k <= budget:
        for values in itertools.product(domain, repeat=k):
            bad = try_subst(values)
            if bad:
                return bad
        return Verdict("holds", f"exhausted {len(domain)}^{k} substitutions")

    pool = tuple(monoid.pool) or (domain or ())
    if not pool:
        return Verdict("unknown", "no witness pool")
    spent = 0
    if len(pool) ** k <= budget:
        for values in itertools.product(pool, repeat=k):
            bad = try_subst(values)
            if bad:
                return bad
            spent += 1
    rng = random.Random(seed)
    while spent < budget:
        bad = try_subst([rng.choice(pool) for _ in range(k)])
        if bad:
            return bad
        spent += 1
    return Verdict("unknown", f"no witness within budget {budget}")


# -- registry ----------------------------------------------------------------

def _ident(lhs: str, rhs: str, mode: str = "monoid") -> Identity:
    if "*" in lhs or "*" in rhs:
        return Identity(parse_iword(lhs), parse_iword(rhs), mode)
    return Identity(parse_word(lhs), parse_word(rhs), mode)


IDENTITY_REGISTRY: dict[str, Identity] = {
    # swap an interior xy when the frame re-enters y then closes with x
    "interior-swap-nested": _ident("xtyuxyvywx", "xtyuyxvywx"),
    # swap an interior xy when the frame re-enters x then closes with y
    "interior-swap-crossed": _ident("xtyuxyvxwy", "xtyuyxvxwy"),
    # move a square of x across material between its extreme occurrences
    "cube-transport": _ident("x3yx", "xyx3"),
    # the depth-3 self-embedding word against its letter shuffle
    "zimin3-shuffle": _ident("abacaba", "acababa"),
    # candidate compression of the depth-4 word; registered, not assumed
    "zimin4-compression": _ident("abacabadabacaba", "abacbaadabacaba"),
    "commutation": _ident("xy", "yx"),
    # the inverse-like law that collapses involutory Zimin chains
    "star-sandwich": _ident("x", "xx*x"),
}


def identity_by_name(name: str) -> Identity:
    if name not in IDENTITY_REGISTRY:
        raise ParseError(f"unknown registered identity {name!r}")
    return IDENTITY_REGISTRY[name]


def zimin_sorted_pair(k: int) -> Identity:
    """The depth-k Zimin word against the sorted arrangement of the same
    letters; the sorted side contains a square of the first letter for
    k >= 2, which parity-position substitutions separate."""
    z = zimin(k)
    return Identity(z, _sorted_word(z))


def star_mix_words(t: int) -> list[IWord]:
    """Involutory one-letter words of length t starting and ending with
    the plain letter and carrying one starred occurrence inside."""
    out = []
    for i in range(1, t - 1):
        syms = [("x", False)] * t
        syms[i] = ("x", True)
        out.append(IWord(tuple(syms)))
    return out


# -- ready-made monoid contexts ---------------------------------------------

def monoid_M(bound: int = 2) -> Monoid:
    """Ideal extension of the integer-pair band by additive integers."""
    rng = range(-bound, bound + 1)
    pool = [am.je_s(am.JE_INT, s) for s in rng]
    pool += [am.je_pair(am.JE_INT, l, r) for l in rng for r in rng]
    return Monoid(
        name="M",
        mul=am.je_mul,
        one=am.je_s(am.JE_INT, 0),
        pool=tuple(pool),
    )


def monoid_N() -> Monoid:
    """Ideal extension of the two-point band by parity-acting integers."""
    pool = [am.je_s(am.JE_PARITY, s) for s in (0, 1, 2, 3)]
    pool += [am.je_pair(am.JE_PARITY, l, r) for l in (0, 1) for r in (0, 1)]
    return Monoid(
        name="N",
        mul=am.je_mul,
        one=am.je_s(am.JE_PARITY, 0),
        pool=tuple(pool),
    )


def monoid_A21() -> Monoid:
    return Monoid(
        name="A21",
        mul=am.a21_mul,
        one=am.A2_ONE,
        star=am.a21_star,
        elements=am.a21_elements(),
    )


def monoid_SDP() -> Monoid:
    c = am.CF_CIRCLE
    cc = c.enclose()
    pool = [
        am.SDP_ONE,
        am.SDPElement(c, am.CF_EMPTY, 1),
        am.SDPElement(am.CF_EMPTY, c, 1),
        am.SDPElement(cc, am.CF_EMPTY, 1),
        am.SDPElement(c, am.CF_EMPTY, 0),
        am.SDPElement(am.CF_EMPTY, am.CF_EMPTY, 1),
        am.SDPElement(am.CF_EMPTY, am.CF_EMPTY, -1),
        am.SDPElement(c, cc, 2),
    ]
    return Monoid(
        name="sdp",
        mul=am.sdp_mul,
        one=am.SDP_ONE,
        star=am.sdp_star,
        pool=tuple(pool),
    )


def monoid_REES() -> Monoid:
    z = am.CF_EMPTY
    c = am.CF_CIRCLE
    pool = [
        am.REES_ONE,
        am.ReesL2Element(z, z, z),
        am.ReesL2Element(z, z, c),
        am.ReesL2Element(c, z, z),
        am.ReesL2Element(c, z, c),
        am.ReesL2Element(z, c, z),
    ]
    return Monoid(
        name="rees",
        mul=am.rees_mul_1,
        one=am.REES_ONE,
        star=am.rees_star_1,
        pool=tuple(pool),
    )


def monoid_from_table(fm: am.FiniteMonoid, name: str = "table") -> Monoid:
    star = None
    if fm.star is not None:
        star = lambda i: fm.star[i]
    return Monoid(
        name=name,
        mul=fm.mul,
        one=fm.one,
        star=star,
        elements=tuple(range(fm.size)),
    )
