"""Reduction of positive braid words to the trivial word.

The workhorse is a recursive subword reduction: inside a marked region whose
letters do not exceed a given level ``n``, occurrences of ``σ_n`` are brought
together and eliminated pairwise, each elimination costing either one
crossing change (when nothing of index ``n-1`` separates the pair) or nothing
(when a single ``σ_{n-1}`` sits between them and the braid relation merges
the pair into one occurrence).  The region never grows, never spills, and
never acquires letters above ``n``; afterwards it contains at most one
``σ_n``.

Driving that reduction at the top index and destabilizing whenever exactly
one copy of the highest generator is left shrinks every knotted closure all
the way to the empty word on one strand, spending exactly one crossing change
per unit of the unknotting number.
"""

from __future__ import annotations

from .errors import BlockedByFreeStrand, DomainError, NoSingleGenerator
from .rules import CROSSING_CHANGE, RewriteTrace, TraceBuilder, replay
from .words import BraidWord, is_knot

__all__ = [
    "reduce_subword",
    "unknot",
    "unknotting_sequence",
    "reduce_single_generator",
    "generator_support_check",
]


def _reduce(tb: TraceBuilder, start: int, length: int, n: int) -> int:
    """Reduce ``word[start : start+length]`` at level ``n``; return its new length.

    Precondition: the region's letters are all ``<= n``.  Postcondition: the
    region contains at most one ``σ_n``, has not grown, and its letters are
    still ``<= n``.
    """
    if length <= 1 or n == 0:
        return length
    length = 1 + _reduce(tb, start + 1, length - 1, n)
    letters = tb.word.letters
    if letters[start] != n:
        return length
    second = None
    for q in range(start + 1, start + length):
        if letters[q] == n:
            second = q
            break
    if second is None:
        return length
    # Region reads σ_n γ σ_n δ with γ, δ free of σ_n.  Tidy γ one level down.
    gamma_len = second - (start + 1)
    new_gamma_len = _reduce(tb, start + 1, gamma_len, n - 1)
    length -= gamma_len - new_gamma_len
    second = start + 1 + new_gamma_len
    letters = tb.word.letters
    r = None
    for q in range(start + 1, second):
        if letters[q] == n - 1:
            r = q
            break
    if r is None:
        # Nothing in between interacts: slide the pair together and cancel it.
        for q in range(start, second - 1):
            tb.distant_swap(q)
        tb.crossing_change(second - 1)
        return length - 2
    # A single σ_{n-1} separates the pair: close in on it from both sides and
    # merge the pair into one occurrence by the braid relation.
    for q in range(start, r - 1):
        tb.distant_swap(q)
    for q in range(second - 1, r, -1):
        tb.distant_swap(q)
    tb.neighbor_braid(r - 1)
    return length


def reduce_subword(word: BraidWord, start: int, length: int, level: int) -> RewriteTrace:
    """Reduce a region of ``word`` at ``level``; return the rewrite trace.

    The region ``word[start : start+length]`` must contain only letters
    ``<= level``; afterwards it contains at most one ``σ_level``.  Steps never
    touch letters outside the region.
    """
    if not 0 <= start <= word.length or not 0 <= length <= word.length - start:
        raise DomainError(
            f"region [{start}, {start + length}) does not fit a word of length {word.length}"
        )
    if level < 0:
        raise DomainError(f"reduction level must be non-negative, got {level}")
    region = word.letters[start : start + length]
    if any(letter > level for letter in region):
        raise DomainError(f"region contains letters above level {level}")
    tb = TraceBuilder(word)
    _reduce(tb, start, length, level)
    return tb.snapshot()


def unknot(word: BraidWord) -> RewriteTrace:
    """Rewrite ``word`` down to the empty word, one crossing change per step of
    the unknotting number.

    Works for any word whose closure is a knot (and for links that happen to
    cancel completely).  A link with a generator used exactly once below the
    top strand cannot shed that strand; that situation raises
    :class:`~gordian.errors.BlockedByFreeStrand` and never occurs for knots.
    """
    tb = TraceBuilder(word)
    guard = 2 * word.length + word.strands + 4
    while tb.word.length:
        guard -= 1
        if guard < 0:  # pragma: no cover - the loop provably progresses
            raise AssertionError("reduction failed to make progress")
        m = max(tb.word.letters)
        _reduce(tb, 0, tb.word.length, m)
        remaining = tb.word.letters.count(m)
        if remaining == 0:
            continue
        if m == tb.word.strands - 1:
            tb.destabilize()
        else:
            raise BlockedByFreeStrand(
                f"σ_{m} occurs once but strand {tb.word.strands} is free; "
                "the closure is a split link"
            )
    return tb.snapshot()


def unknotting_sequence(trace: RewriteTrace) -> list[BraidWord]:
    """The words along a trace after each crossing change, initial word first.

    The initial closure must be a knot; the trace is replayed to validate it.
    """
    if not is_knot(trace.initial):
        raise DomainError("the initial closure is not a knot")
    replay(trace)
    sequence = [trace.initial]
    for step, word in trace.steps:
        if step.kind == CROSSING_CHANGE:
            sequence.append(word)
    return sequence


def reduce_single_generator(word: BraidWord) -> BraidWord:
    """Remove the largest generator index used exactly once and close the gap.

    Deleting a letter whose index appears only once merges the two strands it
    crossed, so the closure keeps its link type; all higher letters shift down
    by one and the word lives on one strand fewer.  Raises
    :class:`~gordian.errors.NoSingleGenerator` when every used index repeats.
    """
    for index in range(word.strands - 1, 0, -1):
        if word.letters.count(index) == 1:
            pos = word.letters.index(index)
            letters = tuple(
                x - 1 if x > index else x for x in word.letters[:pos] + word.letters[pos + 1 :]
            )
            return BraidWord(word.strands - 1, letters)
    raise NoSingleGenerator("every generator used in the word occurs at least twice")


def generator_support_check(word: BraidWord) -> bool:
    """Whether every generator index ``1 … strands-1`` occurs in the word."""
    used = set(word.letters)
    return all(index in used for index in range(1, word.strands))
