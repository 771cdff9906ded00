"""Composite rewriting maneuvers assembled from the five elementary rules.

Everything here ultimately emits elementary steps through a
:class:`~gordian.rules.TraceBuilder`, so every maneuver stays fully
machine-checkable by replay.  The module works with a few recurring letter
patterns on ``n`` strands (letters are generator indices, 1-based):

* ``descending_run(m)`` — ``σ_m ⋯ σ_1``, written ``R_m``.
* ``ascending_run(m)`` — ``σ_1 ⋯ σ_m``, written ``A_m``.
* ``wrap(j)`` — ``R_j A_j`` (2j letters): the strand entering at position
  ``j + 1`` dives under its ``j`` predecessors and comes back.
* ``full_twist_letters(n)`` — ``R_{n-1}^n`` (n(n-1) letters): the full twist
  on ``n`` strands, which commutes with every braid on those strands.

Two layers are built on top:

* **Step programs** — plain lists of relative steps (``("ds", q)``,
  ``("nb", q)``, …) that can be shifted to an offset, inverted, or mirrored,
  and then run through a builder.  The named programs (``move_b_prog``,
  ``move_d_prog``, ``move_z_prog``, ``ext_prog``, ``peel_prog``,
  ``conv_prog``) realize the letter-commutation identities the larger
  constructions are made of.
* **Regional programs** — step programs extended with a subword-rotation
  instruction, describing a rewrite of a suffix region *abstractly* so the
  same program can be replayed inside different ambient words
  (:func:`run_regional`).  The rotation is realized by walking letters around
  the closure, so the ambient prefix must be described by *block
  descriptors* the moving letters are known to commute past.

Block descriptors are tuples: ``("letter", m)`` a single letter,
``("wrap", j)`` the 2j-letter wrap, ``("twist", a)`` the full twist on ``a``
strands, ``("run", letters)`` an arbitrary literal block (movable, but not an
obstacle).  :func:`arrange_blocks` reorders a row of adjacent blocks into a
target order by bubbling, choosing for every adjacent swap whichever side can
legally commute past the other.
"""

from __future__ import annotations

from collections import Counter

from .errors import IllegalStep
from .rules import TraceBuilder
from .words import ascending_run, descending_run

__all__ = [
    "wrap",
    "full_twist_letters",
    "ascending_twist_letters",
    "form_letters",
    "revform_letters",
    "shift_program",
    "invert_program",
    "mirror_program",
    "run_program",
    "move_b_prog",
    "move_b1_prog",
    "move_d_prog",
    "move_z_prog",
    "ext_prog",
    "peel_prog",
    "conv_prog",
    "desc_len",
    "desc_letters",
    "can_cross",
    "cross_left_prog",
    "cross_right_prog",
    "cross_block_left",
    "cross_block_right",
    "arrange_blocks",
    "cascade",
    "cascade_mirror",
    "decompose_region_prog",
    "regional_invert",
    "regional_mirror",
    "run_regional",
    "expect_word",
]


# ---------------------------------------------------------------------------
# letter patterns
# ---------------------------------------------------------------------------


def wrap(j: int) -> tuple[int, ...]:
    """``σ_j ⋯ σ_1 σ_1 ⋯ σ_j`` — one strand wrapping its ``j`` predecessors."""
    return descending_run(j) + ascending_run(j)


def full_twist_letters(n: int) -> tuple[int, ...]:
    """``R_{n-1}^n`` — the full twist on ``n`` strands (descending form)."""
    return descending_run(n - 1) * n


def ascending_twist_letters(n: int) -> tuple[int, ...]:
    """``A_{n-1}^n`` — the full twist on ``n`` strands (ascending form)."""
    return ascending_run(n - 1) * n


def form_letters(n: int, k: int) -> tuple[int, ...]:
    """The layered normal form ``(V_{n-1})^k σ_{n-1} ⋯ (V_1)^k σ_1``."""
    out: tuple[int, ...] = ()
    for j in range(n - 1, 0, -1):
        out += wrap(j) * k + (j,)
    return out


def revform_letters(n: int, k: int) -> tuple[int, ...]:
    """The reversed layered form ``σ_1 (V_1)^k ⋯ σ_{n-1} (V_{n-1})^k``."""
    return tuple(reversed(form_letters(n, k)))


# ---------------------------------------------------------------------------
# step programs
# ---------------------------------------------------------------------------
#
# A program is a list of tuples with relative positions:
#   ("ds", q)   distant swap with the pair starting at q
#   ("nb", q)   braid-relation rewrite of the triple starting at q
#   ("cc", q)   crossing change deleting the equal pair at q
#   ("conj", a) whole-word rotation (only legal at offset 0)
#   ("destab",) destabilization (only legal at offset 0)


def shift_program(prog: list[tuple], offset: int) -> list[tuple]:
    """Translate the positional steps of a program by ``offset``."""
    out = []
    for step in prog:
        kind = step[0]
        if kind in ("ds", "nb", "cc"):
            out.append((kind, step[1] + offset))
        elif offset == 0:
            out.append(step)
        else:
            raise IllegalStep(f"cannot shift a {kind} step to offset {offset}")
    return out


def invert_program(prog: list[tuple]) -> list[tuple]:
    """Reverse an isotopy program (no crossing changes, no destabilization).

    Distant swaps are self-inverse in place; braid-relation rewrites invert in
    place because the opposite pattern sits at the same position afterwards;
    rotations invert by negating the amount.
    """
    out = []
    for step in reversed(prog):
        kind = step[0]
        if kind in ("ds", "nb"):
            out.append(step)
        elif kind == "conj":
            out.append(("conj", -step[1]))
        else:
            raise IllegalStep(f"a {kind} step cannot be inverted")
    return out


def mirror_program(prog: list[tuple], length: int) -> list[tuple]:
    """Conjugate a program by letter-order reversal.

    If ``prog`` rewrites a word ``w`` of the given length into ``w'``, the
    mirrored program rewrites ``reversed(w)`` into ``reversed(w')``.  The
    running length is tracked so crossing changes stay aligned.
    """
    out = []
    for step in prog:
        kind = step[0]
        if kind == "ds":
            out.append(("ds", length - 2 - step[1]))
        elif kind == "nb":
            out.append(("nb", length - 3 - step[1]))
        elif kind == "cc":
            out.append(("cc", length - 2 - step[1]))
            length -= 2
        elif kind == "conj":
            out.append(("conj", length - step[1]))
        else:
            raise IllegalStep(f"a {kind} step cannot be mirrored")
    return out


def run_program(tb: TraceBuilder, prog: list[tuple], offset: int = 0) -> None:
    """Apply a program through the builder, translating positions by ``offset``."""
    for step in prog:
        kind = step[0]
        if kind == "ds":
            tb.distant_swap(step[1] + offset)
        elif kind == "nb":
            tb.neighbor_braid(step[1] + offset)
        elif kind == "cc":
            tb.crossing_change(step[1] + offset)
        elif kind == "conj":
            if offset:
                raise IllegalStep("rotation steps are only legal at offset 0")
            tb.conjugate(step[1])
        elif kind == "destab":
            if offset:
                raise IllegalStep("destabilization steps are only legal at offset 0")
            tb.destabilize()
        else:
            raise IllegalStep(f"unknown program step {step!r}")


def expect_word(tb: TraceBuilder, letters) -> None:
    """Assert the builder's whole current word equals ``letters``."""
    letters = tuple(letters)
    if tb.word.letters != letters:
        raise AssertionError(
            f"expected word {letters}, found {tb.word.letters} on {tb.word.strands} strands"
        )


# ---------------------------------------------------------------------------
# named commutation programs
# ---------------------------------------------------------------------------


def move_b_prog(m: int, i: int) -> list[tuple]:
    """``R_m σ_i → σ_{i-1} R_m`` for ``2 ≤ i ≤ m`` (region of m+1 letters).

    The trailing letter rides left through the ascending tail of ``R_m`` by
    distant swaps, trades places at the single braid-relation spot, and the
    lowered letter rides out to the front.
    """
    if not 2 <= i <= m:
        raise IllegalStep(f"move-b needs 2 <= i <= m, got i={i}, m={m}")
    prog: list[tuple] = [("ds", q) for q in range(m - 1, m - i + 1, -1)]
    prog.append(("nb", m - i))
    prog += [("ds", q) for q in range(m - i - 1, -1, -1)]
    return prog


def move_b1_prog(m: int) -> list[tuple]:
    """``R_m R_m σ_1 → σ_m R_m R_m`` (region of 2m+1 letters).

    The trailing ``σ_1`` cannot lower any further, so it climbs: two braid
    relations around a recursive climb through the inner ``R_{m-1} R_{m-1} σ_1``
    turn it into a ``σ_m`` at the front.
    """
    if m < 1:
        raise IllegalStep(f"move-b1 needs m >= 1, got {m}")
    if m == 1:
        return []
    if m == 2:
        return [("nb", 1)]
    prog: list[tuple] = [("ds", q) for q in range(m - 1, 1, -1)]
    prog.append(("nb", 0))
    prog += shift_program(move_b1_prog(m - 1), 2)
    prog += [("nb", 0), ("nb", 1)]
    prog += [("ds", q) for q in range(3, m + 1)]
    return prog


def move_d_prog(j: int, i: int) -> list[tuple]:
    """``V_j σ_i → σ_i V_j`` for ``i ≤ j-1`` or ``i ≥ j+2`` (region 2j+1).

    A wrap commutes with every generator of the braid group it closes over;
    the letter passes the descending and ascending halves with one braid
    relation each, or by distant swaps alone when its index clears the wrap.
    """
    if i >= j + 2:
        return [("ds", q) for q in range(2 * j - 1, -1, -1)]
    if not 1 <= i <= j - 1:
        raise IllegalStep(f"move-d needs i <= j-1 or i >= j+2, got i={i}, j={j}")
    prog: list[tuple] = [("ds", q) for q in range(2 * j - 1, j + i, -1)]
    prog.append(("nb", j + i - 1))
    prog += [("ds", q) for q in range(j + i - 2, j - i, -1)]
    prog.append(("nb", j - i - 1))
    prog += [("ds", q) for q in range(j - i - 2, -1, -1)]
    return prog


def move_z_prog(a: int, i: int) -> list[tuple]:
    """``Δ²_a σ_i → σ_i Δ²_a`` for ``i ≤ a-1`` (region a(a-1)+1 letters).

    The full twist is central: the letter lowers once per descending run it
    crosses, climbs back to the top index through the double-run spot, and
    lowers again to come out unchanged.
    """
    if not 1 <= i <= a - 1:
        raise IllegalStep(f"move-z needs 1 <= i <= a-1, got i={i}, a={a}")
    m = a - 1
    prog: list[tuple] = []
    idx = i
    copy = a - 1
    for _ in range(i - 1):
        prog += shift_program(move_b_prog(m, idx), copy * m)
        idx -= 1
        copy -= 1
    prog += shift_program(move_b1_prog(m), (copy - 1) * m)
    idx = m
    copy -= 2
    for _ in range(a - i - 1):
        prog += shift_program(move_b_prog(m, idx), copy * m)
        idx -= 1
        copy -= 1
    return prog


def ext_prog(m: int, r: int) -> list[tuple]:
    """``R_m^r → (σ_{m-r+1} ⋯ σ_{m-1}) R_m R_{m-1}^{r-1}`` for ``1 ≤ r ≤ m``.

    The leading letter of the last run is pulled all the way to the front,
    lowering by one per run crossed, and the remainder recurses on the first
    ``r - 1`` runs.  The extracted ascending block records the pulls.
    """
    if not 1 <= r <= m:
        raise IllegalStep(f"run extraction needs 1 <= r <= m, got r={r}, m={m}")
    if r == 1:
        return []
    prog = shift_program(move_b_prog(m, m), (r - 2) * m)
    for j in range(r - 2, 0, -1):
        prog += shift_program(move_b_prog(m, m - r + 1 + j), (j - 1) * m)
    prog += shift_program(ext_prog(m, r - 1), 1)
    return prog


def peel_prog(n: int) -> list[tuple]:
    """``Δ²_n → V_{n-1} Δ²_{n-1}`` in place (region n(n-1) letters).

    Peeling the outermost strand off a full twist leaves its wrap around the
    others in front of the full twist one strand down.
    """
    if n <= 2:
        return []
    return shift_program(ext_prog(n - 1, n - 1), n - 1)


def conv_prog(m: int) -> list[tuple]:
    """``Δ²_m`` (descending form) ``→ A_{m-1}^m`` (ascending form) in place.

    Peel a wrap, convert the inner twist recursively, slide the converted
    inner twist through the wrap, and absorb the wrap from the other side by
    the mirror image of peeling.
    """
    if m <= 2:
        return []
    prog = list(peel_prog(m))
    prog += shift_program(conv_prog(m - 1), 2 * (m - 1))
    for c, letter in enumerate(ascending_twist_letters(m - 1)):
        prog += shift_program(cross_left_prog(("wrap", m - 1), letter), c)
    prog += invert_program(mirror_program(peel_prog(m), m * (m - 1)))
    return prog


# ---------------------------------------------------------------------------
# block descriptors and crossings
# ---------------------------------------------------------------------------


def desc_len(desc: tuple) -> int:
    kind = desc[0]
    if kind == "letter":
        return 1
    if kind == "wrap":
        return 2 * desc[1]
    if kind == "twist":
        return desc[1] * (desc[1] - 1)
    if kind == "run":
        return len(desc[1])
    raise IllegalStep(f"unknown block descriptor {desc!r}")


def desc_letters(desc: tuple) -> tuple[int, ...]:
    kind = desc[0]
    if kind == "letter":
        return (desc[1],)
    if kind == "wrap":
        return wrap(desc[1])
    if kind == "twist":
        return full_twist_letters(desc[1])
    if kind == "run":
        return tuple(desc[1])
    raise IllegalStep(f"unknown block descriptor {desc!r}")


def can_cross(desc: tuple, letter: int) -> bool:
    """Whether a single letter can commute past the descriptor block."""
    kind = desc[0]
    if kind == "letter":
        return abs(letter - desc[1]) >= 2
    if kind == "wrap":
        j = desc[1]
        return letter <= j - 1 or letter >= j + 2 or (j == 1 and letter == 1)
    if kind == "twist":
        a = desc[1]
        return letter != a
    return False


def cross_left_prog(desc: tuple, letter: int) -> list[tuple]:
    """Program for ``<block> σ_letter → σ_letter <block>``, relative to the block."""
    kind = desc[0]
    if kind == "letter":
        if abs(letter - desc[1]) < 2:
            raise IllegalStep(f"σ_{letter} cannot pass σ_{desc[1]}")
        return [("ds", 0)]
    if kind == "wrap":
        j = desc[1]
        if j == 1 and letter == 1:
            return []  # σ_1 σ_1 σ_1 reads the same from either side
        return move_d_prog(j, letter)
    if kind == "twist":
        a = desc[1]
        if letter >= a + 1:
            return [("ds", q) for q in range(a * (a - 1) - 1, -1, -1)]
        return move_z_prog(a, letter)
    raise IllegalStep(f"block {desc!r} cannot be crossed")


def cross_right_prog(desc: tuple, letter: int) -> list[tuple]:
    """Program for ``σ_letter <block> → <block> σ_letter``, relative to the letter."""
    return invert_program(cross_left_prog(desc, letter))


def cross_block_left(tb: TraceBuilder, obstacle_pos: int, desc: tuple, letters) -> None:
    """Move the letters sitting right after the obstacle to just before it."""
    for c, letter in enumerate(letters):
        run_program(tb, cross_left_prog(desc, letter), obstacle_pos + c)


def cross_block_right(tb: TraceBuilder, block_pos: int, desc: tuple, letters) -> None:
    """Move the letters sitting right before the obstacle to just after it."""
    letters = tuple(letters)
    for c in range(len(letters) - 1, -1, -1):
        run_program(tb, cross_right_prog(desc, letters[c]), block_pos + c)


def _swap_adjacent(tb: TraceBuilder, pos: int, left: tuple, right: tuple) -> None:
    """Exchange two adjacent blocks, the left one starting at ``pos``."""
    right_letters = desc_letters(right)
    if left[0] != "run" and all(can_cross(left, i) for i in right_letters):
        cross_block_left(tb, pos, left, right_letters)
        return
    left_letters = desc_letters(left)
    if right[0] != "run" and all(can_cross(right, i) for i in left_letters):
        cross_block_right(tb, pos, right, left_letters)
        return
    raise IllegalStep(f"blocks {left!r} and {right!r} cannot pass each other")


def arrange_blocks(tb: TraceBuilder, start: int, current, target) -> None:
    """Reorder a row of adjacent blocks at ``start`` into the target order.

    ``current`` and ``target`` are equal multisets of block descriptors; the
    row is rearranged by bubbling the next needed block leftwards, each
    adjacent exchange realized by whichever of the two blocks can legally
    commute past the other.  Word content outside the row is untouched.
    """
    cur = list(current)
    tgt = list(target)
    if Counter(cur) != Counter(tgt):
        raise IllegalStep("block rearrangement requires equal block multisets")
    offsets = [start]
    for desc in cur:
        offsets.append(offsets[-1] + desc_len(desc))
    for i, want in enumerate(tgt):
        if cur[i] == want:
            continue
        j = next(q for q in range(i + 1, len(cur)) if cur[q] == want)
        for s in range(j, i, -1):
            _swap_adjacent(tb, offsets[s - 1], cur[s - 1], cur[s])
            cur[s - 1], cur[s] = cur[s], cur[s - 1]
            offsets[s] = offsets[s - 1] + desc_len(cur[s - 1])


# ---------------------------------------------------------------------------
# wrap cascades (the only crossing-change emitters in this module)
# ---------------------------------------------------------------------------


def cascade(tb: TraceBuilder, pos: int, j: int, count: int) -> None:
    """``(V_j)^count σ_j → σ_j (V_{j-1})^count`` by ``count`` crossing changes.

    Each wrap's trailing ``σ_j`` meets the following ``σ_j`` head-on; changing
    one crossing cancels the pair and hands the spare ``σ_j`` to the wrap on
    the left.  ``pos`` is where the run of wraps starts.
    """
    for t in range(count, 0, -1):
        tb.crossing_change(pos + 2 * j * t - 1)


def cascade_mirror(tb: TraceBuilder, pos: int, j: int, count: int) -> None:
    """``σ_j (V_j)^count → (V_{j-1})^count σ_j`` by ``count`` crossing changes.

    The mirror image of :func:`cascade`: the leading ``σ_j`` eats into the
    wraps from the left.  ``pos`` is where the leading ``σ_j`` sits.
    """
    for t in range(count):
        tb.crossing_change(pos + 2 * (j - 1) * t)


# ---------------------------------------------------------------------------
# regional programs
# ---------------------------------------------------------------------------
#
# A regional program rewrites a suffix region of a word using region-relative
# steps ("ds", q) / ("nb", q) plus the rotation instruction
#
#   ("rconj", L, LB, RB)
#
# meaning: inside the region, whose first blocks match the descriptors LB and
# whose last blocks match RB, rotate the subword strictly between them left by
# L letters.  Running the program inside an ambient word realizes the
# rotation by walking the moved letters around the closure, commuting them
# through LB/RB and through the ambient prefix (also given as descriptors).


def decompose_region_prog(a: int, k: int) -> list[tuple]:
    """Regional program rewriting ``R_{a-1}^{ak+1}`` into the layered form.

    Level by level (``a' = a, a-1, …, 2``) the run power splits as
    ``(Δ²_{a'})^k R_{a'-1}``; the ``k`` full twists are peeled, gathered, sent
    to the end of the live subword by rotation, and absorbed into the next
    run power, leaving ``(V_{a'-1})^k σ_{a'-1}`` of the layered form behind.
    No crossing changes occur and the region keeps its length.
    """
    if a < 2 or k < 0:
        raise IllegalStep(f"decomposition needs a >= 2 and k >= 0, got a={a}, k={k}")
    prog: list[tuple] = []
    stack: list[tuple] = []
    base = 0
    for ap in range(a, 1, -1):
        lw = 2 * (ap - 1)
        lt = (ap - 1) * (ap - 2)
        tw = full_twist_letters(ap - 1) if ap >= 3 else ()
        for t in range(k):
            prog += shift_program(peel_prog(ap), base + t * ap * (ap - 1))
        for t in range(1, k + 1):
            pos = base + (t - 1) * lt + t * lw
            for _ in range(t):
                wstart = pos - lw
                for c, letter in enumerate(tw):
                    prog += shift_program(cross_left_prog(("wrap", ap - 1), letter), wstart + c)
                pos = wstart
        if k * lt:
            prog.append(("rconj", k * lt, tuple(stack), ()))
        rtail = descending_run(ap - 2)
        bpos = base + k * lw + 1
        for _ in range(k if rtail else 0):
            for c in range(len(rtail) - 1, -1, -1):
                prog += shift_program(cross_right_prog(("twist", ap - 1), rtail[c]), bpos + c)
            bpos += lt
        stack += [("wrap", ap - 1)] * k + [("letter", ap - 1)]
        base += k * lw + 1
    return prog


def _sub_length(region_len: int, lb, rb) -> int:
    s = region_len - sum(desc_len(d) for d in lb) - sum(desc_len(d) for d in rb)
    if s <= 0:
        raise IllegalStep("rotation delimiters leave no subword")
    return s


def regional_invert(prog: list[tuple], region_len: int) -> list[tuple]:
    """Reverse a regional program (length-preserving programs only)."""
    out = []
    for step in reversed(prog):
        if step[0] in ("ds", "nb"):
            out.append(step)
        elif step[0] == "rconj":
            _, amount, lb, rb = step
            out.append(("rconj", _sub_length(region_len, lb, rb) - amount, lb, rb))
        else:
            raise IllegalStep(f"regional step {step!r} cannot be inverted")
    return out


def _mirror_desc(desc: tuple) -> tuple:
    if desc[0] in ("letter", "wrap"):
        return desc
    if desc[0] == "run":
        return ("run", tuple(reversed(desc[1])))
    raise IllegalStep(f"block {desc!r} cannot delimit a mirrored rotation")


def regional_mirror(prog: list[tuple], region_len: int) -> list[tuple]:
    """Conjugate a regional program by reversal of the region's letters."""
    out = []
    for step in prog:
        if step[0] == "ds":
            out.append(("ds", region_len - 2 - step[1]))
        elif step[0] == "nb":
            out.append(("nb", region_len - 3 - step[1]))
        elif step[0] == "rconj":
            _, amount, lb, rb = step
            out.append(
                (
                    "rconj",
                    _sub_length(region_len, lb, rb) - amount,
                    tuple(_mirror_desc(d) for d in reversed(rb)),
                    tuple(_mirror_desc(d) for d in reversed(lb)),
                )
            )
        else:
            raise IllegalStep(f"regional step {step!r} cannot be mirrored")
    return out


def _stack_legal(movers, descs) -> bool:
    return all(can_cross(d, i) for d in descs for i in movers)


def _lift_rotation(tb, region_start, prefix, amount, lb, rb) -> None:
    """Realize one subword rotation inside the ambient word."""
    ell = tb.word.length
    region_len = ell - region_start
    lb_len = sum(desc_len(d) for d in lb)
    rb_len = sum(desc_len(d) for d in rb)
    s = _sub_length(region_len, lb, rb)
    if not 0 <= amount <= s:
        raise IllegalStep(f"rotation amount {amount} exceeds the subword length {s}")
    if amount in (0, s):
        return
    sub_start = region_start + lb_len
    letters = tb.word.letters
    movers_left = letters[sub_start : sub_start + amount]
    movers_right = letters[sub_start + amount : sub_start + s]
    if _stack_legal(movers_left, list(lb) + list(prefix) + list(rb)):
        # The first `amount` letters exit leftwards around the closure.
        for t in range(amount):
            q = t + region_start + lb_len
            letter = tb.word.letters[q]
            for desc in list(reversed(list(lb))) + list(reversed(list(prefix))):
                q -= desc_len(desc)
                run_program(tb, cross_left_prog(desc, letter), q)
            if q != t:
                raise AssertionError("rotation walk lost its position")
        tb.conjugate(amount)
        for t in range(amount):
            q = sub_start + (s - amount) + t + rb_len
            letter = tb.word.letters[q]
            for desc in reversed(list(rb)):
                q -= desc_len(desc)
                run_program(tb, cross_left_prog(desc, letter), q)
    elif _stack_legal(movers_right, list(rb) + list(prefix) + list(lb)):
        # The trailing letters exit rightwards around the closure instead.
        back = s - amount
        for c in range(back - 1, -1, -1):
            q = sub_start + amount + c
            letter = tb.word.letters[q]
            for desc in rb:
                run_program(tb, cross_right_prog(desc, letter), q)
                q += desc_len(desc)
        tb.conjugate(ell - back)
        for c in range(back - 1, -1, -1):
            q = c
            letter = tb.word.letters[q]
            for desc in list(prefix) + list(lb):
                run_program(tb, cross_right_prog(desc, letter), q)
                q += desc_len(desc)
            if q != c + sum(desc_len(d) for d in prefix) + lb_len:
                raise AssertionError("rotation walk lost its position")
    else:
        raise IllegalStep("neither side of the subword can walk around the closure")


def run_regional(tb: TraceBuilder, prog: list[tuple], region_start: int, prefix) -> None:
    """Run a regional program on the suffix region starting at ``region_start``.

    ``prefix`` is a list of block descriptors describing the whole word before
    the region; rotations walk their letters through these blocks and around
    the closure, so every prefix block must commute with the letters moved.
    """
    prefix = list(prefix)
    plen = sum(desc_len(d) for d in prefix)
    if plen != region_start:
        raise IllegalStep("prefix descriptors must cover the word before the region")
    for step in prog:
        kind = step[0]
        if kind == "ds":
            tb.distant_swap(region_start + step[1])
        elif kind == "nb":
            tb.neighbor_braid(region_start + step[1])
        elif kind == "rconj":
            _lift_rotation(tb, region_start, prefix, step[1], step[2], step[3])
        else:
            raise IllegalStep(f"unknown regional step {step!r}")
