"""The five rewriting rules on positive braid words, with replayable traces.

The calculus has exactly five rules, all preserving the closure's component
count:

* **distant-swap** — ``σ_i σ_j → σ_j σ_i`` when ``|i - j| ≥ 2`` (position = the
  left letter of the pair).  Length and strand count preserved; self-inverse.
* **neighbor-braid** — ``σ_i σ_{i+1} σ_i ↔ σ_{i+1} σ_i σ_{i+1}`` (position =
  the first letter of the triple).  The direction is inferred from the pattern
  and recorded: *forward* rewrites ``(i, i+1, i)`` to ``(i+1, i, i+1)``,
  *backward* the reverse.  Length and strand count preserved.
* **conjugate** — cyclic rotation left by ``amount`` (taken modulo the length):
  the first ``amount`` letters wrap to the end.  The closure is unchanged.
* **destabilize** — when the maximal used index equals ``strands - 1`` and
  occurs exactly once, delete that letter and drop the top strand.  It is
  accepted wherever the unique occurrence sits (rotation could always bring it
  to the end without changing the closure), so the rule takes no position and
  counts as one step.  Length and strand count both drop by 1.
* **crossing-change** — delete an adjacent equal pair ``σ_i σ_i`` (position =
  the left letter).  Switching one crossing of the pair makes it cancel, so
  this is the one rule that changes the knot: it lowers the unknotting number
  of a knot closure by exactly 1 (length drops by 2, strands unchanged).
  Recorded atomically — no negative letters ever materialize.

A :class:`RewriteTrace` stores the initial word, each step *with the word it
produced*, and the crossing-change total.  :func:`replay` re-applies every
step from the initial word and is the single source of truth for validity:
serialization and deserialization round-trip bit-exactly through it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import IllegalStep, ParseError, TraceCorrupt
from .words import BraidWord, format_word, parse_word

__all__ = [
    "DISTANT_SWAP",
    "NEIGHBOR_BRAID",
    "CONJUGATE",
    "DESTABILIZE",
    "CROSSING_CHANGE",
    "RewriteStep",
    "RewriteTrace",
    "TraceBuilder",
    "apply_distant_swap",
    "apply_neighbor_braid",
    "neighbor_braid_direction",
    "apply_conjugate",
    "apply_destabilize",
    "apply_crossing_change",
    "apply_step",
    "replay",
    "serialize_trace",
    "parse_trace",
]

DISTANT_SWAP = "distant-swap"
NEIGHBOR_BRAID = "neighbor-braid"
CONJUGATE = "conjugate"
DESTABILIZE = "destabilize"
CROSSING_CHANGE = "crossing-change"

FORWARD = "forward"
BACKWARD = "backward"


@dataclass(frozen=True)
class RewriteStep:
    """One rule application.

    ``position`` is meaningful for distant-swap / neighbor-braid /
    crossing-change, ``direction`` for neighbor-braid, ``amount`` for
    conjugate.  Positions always refer to the word *immediately before* the
    step.
    """

    kind: str
    position: int | None = None
    direction: str | None = None
    amount: int | None = None


@dataclass(frozen=True)
class RewriteTrace:
    """An initial word plus steps, each paired with the word it produced."""

    initial: BraidWord
    steps: tuple[tuple[RewriteStep, BraidWord], ...]
    crossing_changes: int = field(init=False)

    def __post_init__(self):
        count = sum(1 for step, _ in self.steps if step.kind == CROSSING_CHANGE)
        object.__setattr__(self, "crossing_changes", count)

    @property
    def final(self) -> BraidWord:
        return self.steps[-1][1] if self.steps else self.initial

    @property
    def words(self) -> tuple[BraidWord, ...]:
        """The full ride: initial word followed by the word after each step."""
        return (self.initial,) + tuple(word for _, word in self.steps)


def _check_position(word: BraidWord, position, width: int, kind: str) -> int:
    if position is None or not isinstance(position, int):
        raise IllegalStep(f"{kind} requires an integer position, got {position!r}")
    if not (0 <= position <= word.length - width):
        raise IllegalStep(
            f"{kind} at position {position} does not fit in a word of length {word.length}"
        )
    return position


def apply_distant_swap(word: BraidWord, position: int) -> BraidWord:
    """Swap the letters at ``position`` and ``position + 1`` when they commute."""
    position = _check_position(word, position, 2, DISTANT_SWAP)
    a, b = word.letters[position], word.letters[position + 1]
    if abs(a - b) < 2:
        raise IllegalStep(f"letters σ_{a} σ_{b} at position {position} are not distant")
    letters = list(word.letters)
    letters[position], letters[position + 1] = b, a
    return BraidWord(word.strands, tuple(letters))


def neighbor_braid_direction(word: BraidWord, position: int) -> str:
    """Direction of the braid-relation rewrite available at ``position``."""
    position = _check_position(word, position, 3, NEIGHBOR_BRAID)
    a, b, c = word.letters[position : position + 3]
    if a == c and b == a + 1:
        return FORWARD
    if a == c and b == a - 1:
        return BACKWARD
    raise IllegalStep(f"letters {(a, b, c)} at position {position} match no braid-relation pattern")


def apply_neighbor_braid(word: BraidWord, position: int) -> BraidWord:
    """Rewrite ``(i, i+1, i) ↔ (i+1, i, i+1)`` at ``position`` (pattern inferred)."""
    direction = neighbor_braid_direction(word, position)
    a = word.letters[position]
    if direction == FORWARD:
        triple = (a + 1, a, a + 1)
    else:
        triple = (a - 1, a, a - 1)
    letters = list(word.letters)
    letters[position : position + 3] = triple
    return BraidWord(word.strands, tuple(letters))


def apply_conjugate(word: BraidWord, amount: int) -> BraidWord:
    """Rotate left by ``amount`` (mod length); the empty word only admits 0."""
    if not isinstance(amount, int):
        raise IllegalStep(f"conjugate requires an integer amount, got {amount!r}")
    if word.length == 0:
        if amount != 0:
            raise IllegalStep("cannot rotate the empty word by a nonzero amount")
        return word
    amount %= word.length
    return BraidWord(word.strands, word.letters[amount:] + word.letters[:amount])


def apply_destabilize(word: BraidWord) -> BraidWord:
    """Remove the unique top-generator letter and drop the top strand."""
    if word.strands == 1:
        raise IllegalStep("cannot destabilize a word on one strand")
    top = word.strands - 1
    occurrences = [pos for pos, letter in enumerate(word.letters) if letter == top]
    if not word.letters or max(word.letters) != top:
        raise IllegalStep(f"destabilize requires σ_{top} to be the maximal used index")
    if len(occurrences) != 1:
        raise IllegalStep(f"destabilize requires exactly one σ_{top}, found {len(occurrences)}")
    letters = word.letters[: occurrences[0]] + word.letters[occurrences[0] + 1 :]
    return BraidWord(word.strands - 1, letters)


def apply_crossing_change(word: BraidWord, position: int) -> BraidWord:
    """Delete the adjacent equal pair at ``position`` (one crossing change)."""
    position = _check_position(word, position, 2, CROSSING_CHANGE)
    a, b = word.letters[position], word.letters[position + 1]
    if a != b:
        raise IllegalStep(f"letters σ_{a} σ_{b} at position {position} are not an equal pair")
    letters = word.letters[:position] + word.letters[position + 2 :]
    return BraidWord(word.strands, letters)


def apply_step(word: BraidWord, step: RewriteStep) -> BraidWord:
    """Apply one recorded step, checking its recorded parameters."""
    if step.kind == DISTANT_SWAP:
        return apply_distant_swap(word, step.position)
    if step.kind == NEIGHBOR_BRAID:
        direction = neighbor_braid_direction(word, step.position)
        if step.direction is not None and step.direction != direction:
            raise IllegalStep(
                f"recorded direction {step.direction!r} does not match the {direction} pattern"
            )
        return apply_neighbor_braid(word, step.position)
    if step.kind == CONJUGATE:
        return apply_conjugate(word, step.amount)
    if step.kind == DESTABILIZE:
        return apply_destabilize(word)
    if step.kind == CROSSING_CHANGE:
        return apply_crossing_change(word, step.position)
    raise IllegalStep(f"unknown rule kind {step.kind!r}")


def replay(trace: RewriteTrace) -> BraidWord:
    """Re-apply every step from the initial word, verifying each recorded word.

    Raises :class:`TraceCorrupt` with the index of the first failing step; a
    crossing-change total that disagrees with the steps fails at index
    ``len(steps)``.  Returns the final word.
    """
    word = trace.initial
    for index, (step, recorded) in enumerate(trace.steps):
        try:
            word = apply_step(word, step)
        except IllegalStep as exc:
            raise TraceCorrupt(f"step {index} ({step.kind}) is illegal: {exc}", index) from None
        if word != recorded:
            raise TraceCorrupt(
                f"step {index} ({step.kind}) produced {format_word(word)} "
                f"but the trace records {format_word(recorded)}",
                index,
            )
    recount = sum(1 for step, _ in trace.steps if step.kind == CROSSING_CHANGE)
    if recount != trace.crossing_changes:
        raise TraceCorrupt(
            f"crossing-change total {trace.crossing_changes} disagrees with steps ({recount})",
            len(trace.steps),
        )
    return word


class TraceBuilder:
    """Mutable helper that applies rules to a current word and records steps."""

    def __init__(self, initial: BraidWord):
        self.initial = initial
        self.word = initial
        self._steps: list[tuple[RewriteStep, BraidWord]] = []

    @property
    def steps(self) -> tuple[tuple[RewriteStep, BraidWord], ...]:
        return tuple(self._steps)

    @property
    def crossing_changes(self) -> int:
        return sum(1 for step, _ in self._steps if step.kind == CROSSING_CHANGE)

    def _record(self, step: RewriteStep, word: BraidWord) -> None:
        self._steps.append((step, word))
        self.word = word

    def distant_swap(self, position: int) -> None:
        word = apply_distant_swap(self.word, position)
        self._record(RewriteStep(DISTANT_SWAP, position=position), word)

    def neighbor_braid(self, position: int) -> None:
        direction = neighbor_braid_direction(self.word, position)
        word = apply_neighbor_braid(self.word, position)
        self._record(RewriteStep(NEIGHBOR_BRAID, position=position, direction=direction), word)

    def conjugate(self, amount: int) -> None:
        if self.word.length:
            amount %= self.word.length
        else:
            amount = 0
        if amount == 0:
            return  # a null rotation is not worth a step
        word = apply_conjugate(self.word, amount)
        self._record(RewriteStep(CONJUGATE, amount=amount), word)

    def destabilize(self) -> None:
        word = apply_destabilize(self.word)
        self._record(RewriteStep(DESTABILIZE), word)

    def crossing_change(self, position: int) -> None:
        word = apply_crossing_change(self.word, position)
        self._record(RewriteStep(CROSSING_CHANGE, position=position), word)

    def expect(self, letters: tuple[int, ...], at: int) -> None:
        """Assert that ``letters`` sits at position ``at`` of the current word.

        Composite maneuvers use this to pin the intermediate words they were
        derived with; a failure is a bug in the maneuver, not user error.
        """
        actual = self.word.letters[at : at + len(letters)]
        if actual != tuple(letters):
            raise AssertionError(
                f"expected {letters} at position {at}, found {actual} in {format_word(self.word)}"
            )

    def snapshot(self) -> RewriteTrace:
        return RewriteTrace(self.initial, tuple(self._steps))


def _format_step(step: RewriteStep, result: BraidWord) -> str:
    parts = [f"step: {step.kind}"]
    if step.position is not None:
        parts.append(f"pos={step.position}")
    if step.direction is not None:
        parts.append(f"direction={step.direction}")
    if step.amount is not None:
        parts.append(f"amount={step.amount}")
    return " ".join(parts) + f" -> {format_word(result)}"


def serialize_trace(trace: RewriteTrace) -> str:
    """Render a trace in the line format understood by :func:`parse_trace`."""
    lines = ["trace", f"initial: {format_word(trace.initial)}"]
    for step, result in trace.steps:
        lines.append(_format_step(step, result))
    lines.append(f"crossing_changes: {trace.crossing_changes}")
    lines.append("end")
    return "\n".join(lines) + "\n"


def _parse_step_line(line: str) -> tuple[RewriteStep, BraidWord]:
    body = line[len("step:") :].strip()
    before, sep, after = body.partition("->")
    if not sep:
        raise ParseError(f"step line has no '->' result: {line!r}")
    fields = before.split()
    if not fields:
        raise ParseError(f"step line names no rule: {line!r}")
    kind = fields[0]
    if kind not in (DISTANT_SWAP, NEIGHBOR_BRAID, CONJUGATE, DESTABILIZE, CROSSING_CHANGE):
        raise ParseError(f"unknown rule kind {kind!r}")
    position = direction = amount = None
    for piece in fields[1:]:
        key, eq, value = piece.partition("=")
        if not eq:
            raise ParseError(f"malformed step parameter {piece!r}")
        if key == "pos":
            position = int(value)
        elif key == "direction":
            if value not in (FORWARD, BACKWARD):
                raise ParseError(f"unknown direction {value!r}")
            direction = value
        elif key == "amount":
            amount = int(value)
        else:
            raise ParseError(f"unknown step parameter {key!r}")
    step = RewriteStep(kind, position=position, direction=direction, amount=amount)
    return step, parse_word(after.strip())


def parse_trace(text: str) -> RewriteTrace:
    """Parse the text format written by :func:`serialize_trace`.

    Parsing checks structure only; call :func:`replay` to validate the steps.
    """
    lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
    if not lines or lines[0] != "trace":
        raise ParseError("trace text must start with a 'trace' line")
    if lines[-1] != "end":
        raise ParseError("trace text must end with an 'end' line")
    if len(lines) < 4 or not lines[1].startswith("initial:"):
        raise ParseError("trace text must have an 'initial:' line")
    initial = parse_word(lines[1][len("initial:") :].strip())
    count_line = lines[-2]
    if not count_line.startswith("crossing_changes:"):
        raise ParseError("trace text must have a 'crossing_changes:' line before 'end'")
    try:
        declared = int(count_line[len("crossing_changes:") :].strip())
    except ValueError:
        raise ParseError(f"malformed crossing-change total: {count_line!r}") from None
    steps = []
    for line in lines[2:-2]:
        if not line.startswith("step:"):
            raise ParseError(f"unexpected line in trace body: {line!r}")
        steps.append(_parse_step_line(line))
    trace = RewriteTrace(initial, tuple(steps))
    if trace.crossing_changes != declared:
        raise ParseError(
            f"declared crossing-change total {declared} disagrees with steps "
            f"({trace.crossing_changes})"
        )
    return trace
