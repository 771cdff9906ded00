"""Certified crossing-change paths between torus-knot families.

A braid word whose closure is a knot K can sometimes be rewritten, by the five
rules, into a word for a *different* knot K′ using exactly
``u(K) − u(K′)`` crossing changes — the smallest number any path between them
could use, since each change moves the unknotting number by at most one.  Such
a word-level path certifies that K′ lies on a minimal unknotting sequence of
K.  This module builds those paths explicitly for several torus-knot families
and packages each as an :class:`AdjacencyCertificate`: a replayable trace plus
the claimed endpoints and crossing-change count, machine-checkable after the
fact by :func:`verify_certificate`.

The constructions all follow one strategy: write the source torus braid as a
stack of full twists plus a remainder, peel wraps off the twists, herd the
resulting blocks into cancelling positions (every block commutation is emitted
as elementary steps), spend the crossing changes in cascades where wraps meet
their own top letter head-on, destabilize away the freed top strand, and
tidy the remainder back into a literal (or length/Alexander-verified) torus
word one strand down.

:func:`adjacency_catalog` answers "is T(p₁,q₁) reachable this way from
T(p₂,q₂)?" by matching the implemented families and, where only a cited
inequality applies, returning a verdict without a certificate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .alexander import alexander
from .errors import DomainError, IllegalStep, ParseError, TraceCorrupt
from .moves import (
    arrange_blocks,
    cascade,
    cascade_mirror,
    conv_prog,
    cross_block_right,
    decompose_region_prog,
    expect_word,
    ext_prog,
    form_letters,
    full_twist_letters,
    peel_prog,
    regional_invert,
    regional_mirror,
    revform_letters,
    run_program,
    run_regional,
    wrap,
)
from .rules import RewriteTrace, TraceBuilder, parse_trace, replay, serialize_trace
from .unknotting import _reduce, unknot
from .words import (
    BraidWord,
    TorusParams,
    ascending_run,
    closure_info,
    descending_run,
    format_word,
    is_knot,
    parse_word,
    torus_braid,
    unknotting_number,
)

__all__ = [
    "full_twist",
    "wrap_commute",
    "peel_full_twist",
    "decompose_twists",
    "strip_top_strand",
    "adjacency_ci",
    "adjacency_cin",
    "adjacency_3_from_4",
    "adjacency_2_from_4",
    "delete_link_subword",
    "AdjacencyCertificate",
    "CertificateCheck",
    "verify_certificate",
    "serialize_certificate",
    "parse_certificate",
    "endpoint_word",
    "format_endpoint",
    "CLAIMED",
    "NOT_COVERED",
    "CatalogAnswer",
    "adjacency_catalog",
]


def full_twist(n: int) -> BraidWord:
    """``Δ²_n = (σ_{n-1}⋯σ_1)^n`` on ``n`` strands — the central full twist."""
    if n < 1:
        raise DomainError(f"strand count must be >= 1, got {n}")
    return BraidWord(n, full_twist_letters(n))


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AdjacencyCertificate:
    """A replayable witness that ``target`` sits ``claimed_cc`` crossing
    changes below ``source`` on a minimal unknotting sequence.

    Endpoints are torus parameters or explicit words; the trace runs from the
    source word to a word matching the target by strand count, length, and
    Alexander polynomial (checked by :func:`verify_certificate`).
    """

    source: TorusParams | BraidWord
    target: TorusParams | BraidWord
    trace: RewriteTrace
    claimed_cc: int


@dataclass(frozen=True)
class CertificateCheck:
    """Result of checking a certificate; ``alexander_match`` is None when the
    polynomial comparison was skipped."""

    replay_ok: bool
    source_match: bool
    strands_match: bool
    length_match: bool
    alexander_match: bool | None
    cc_match: bool

    @property
    def valid(self) -> bool:
        return (
            self.replay_ok
            and self.source_match
            and self.strands_match
            and self.length_match
            and self.alexander_match is not False
            and self.cc_match
        )


def endpoint_word(ref: TorusParams | BraidWord) -> BraidWord:
    """The braid word an endpoint refers to."""
    if isinstance(ref, TorusParams):
        return torus_braid(ref.p, ref.q)
    return ref


def format_endpoint(ref: TorusParams | BraidWord) -> str:
    if isinstance(ref, TorusParams):
        return f"torus {ref.p} {ref.q}"
    return f"word {format_word(ref)}"


def _parse_endpoint(text: str) -> TorusParams | BraidWord:
    if text.startswith("torus "):
        fields = text[len("torus ") :].split()
        if len(fields) != 2:
            raise ParseError(f"malformed torus endpoint: {text!r}")
        try:
            return TorusParams(int(fields[0]), int(fields[1]))
        except ValueError:
            raise ParseError(f"malformed torus endpoint: {text!r}") from None
    if text.startswith("word "):
        return parse_word(text[len("word ") :])
    raise ParseError(f"endpoint must start with 'torus' or 'word': {text!r}")


def verify_certificate(cert: AdjacencyCertificate, *, check_alexander: bool = True) -> CertificateCheck:
    """Replay the trace and compare endpoints and accounting.

    The final word is matched to the target by strand count, length, and
    (unless skipped) Alexander polynomial; the crossing-change count must
    equal the claim and, when both endpoint closures are knots, the gap in
    unknotting numbers.
    """
    src = endpoint_word(cert.source)
    tgt = endpoint_word(cert.target)
    try:
        final = replay(cert.trace)
    except TraceCorrupt:
        return CertificateCheck(False, False, False, False, None if not check_alexander else False, False)
    source_match = cert.trace.initial == src
    strands_match = final.strands == tgt.strands
    length_match = final.length == tgt.length
    alexander_match = (alexander(final) == alexander(tgt)) if check_alexander else None
    cc_match = cert.trace.crossing_changes == cert.claimed_cc
    if cc_match and is_knot(src) and is_knot(tgt):
        cc_match = cert.claimed_cc == unknotting_number(src) - unknotting_number(tgt)
    return CertificateCheck(
        replay_ok=True,
        source_match=source_match,
        strands_match=strands_match,
        length_match=length_match,
        alexander_match=alexander_match,
        cc_match=cc_match,
    )


def _format_check(check: CertificateCheck | None) -> str:
    if check is None:
        return "skipped"

    def word(flag) -> str:
        if flag is None:
            return "skipped"
        return "match" if flag else "mismatch"

    return (
        f"strands={word(check.strands_match)} "
        f"length={word(check.length_match)} "
        f"alexander={word(check.alexander_match)}"
    )


def serialize_certificate(cert: AdjacencyCertificate, check: CertificateCheck | None = None) -> str:
    """Render a certificate: header lines, an embedded trace block, ``end``.

    The ``verification:`` line records the check status at write time and is
    advisory; reading a certificate back and re-verifying is authoritative.
    """
    lines = [
        "certificate",
        f"source: {format_endpoint(cert.source)}",
        f"target: {format_endpoint(cert.target)}",
        f"claimed_cc: {cert.claimed_cc}",
        f"verification: {_format_check(check)}",
    ]
    return "\n".join(lines) + "\n" + serialize_trace(cert.trace) + "end\n"


def parse_certificate(text: str) -> AdjacencyCertificate:
    """Parse the format written by :func:`serialize_certificate`.

    Structure-only: call :func:`verify_certificate` to validate the content.
    """
    lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
    if not lines or lines[0] != "certificate":
        raise ParseError("certificate text must start with a 'certificate' line")
    if len(lines) < 7 or lines[-1] != "end":
        raise ParseError("certificate text must end with an 'end' line")
    header = {}
    for index, key in ((1, "source"), (2, "target"), (3, "claimed_cc"), (4, "verification")):
        prefix = key + ":"
        if not lines[index].startswith(prefix):
            raise ParseError(f"certificate line {index + 1} must start with {prefix!r}")
        header[key] = lines[index][len(prefix) :].strip()
    try:
        claimed_cc = int(header["claimed_cc"])
    except ValueError:
        raise ParseError(f"malformed crossing-change claim: {header['claimed_cc']!r}") from None
    trace = parse_trace("\n".join(lines[5:-1]))
    return AdjacencyCertificate(
        source=_parse_endpoint(header["source"]),
        target=_parse_endpoint(header["target"]),
        trace=trace,
        claimed_cc=claimed_cc,
    )


def _certify(
    source: TorusParams | BraidWord,
    target: TorusParams | BraidWord,
    tb: TraceBuilder,
    claimed_cc: int,
) -> AdjacencyCertificate:
    if tb.crossing_changes != claimed_cc:
        raise AssertionError(
            f"construction spent {tb.crossing_changes} crossing changes, claimed {claimed_cc}"
        )
    return AdjacencyCertificate(source, target, tb.snapshot(), claimed_cc)


# ---------------------------------------------------------------------------
# local maneuvers exposed as traced operations
# ---------------------------------------------------------------------------


def wrap_commute(word: BraidWord, pos: int, n: int) -> RewriteTrace:
    """Commute the prefix block past the σ_n-wrap that starts at ``pos``.

    The word must read ``β · σ_n⋯σ_1σ_1⋯σ_n · (rest)`` with the wrap at
    ``pos = len(β)``; β may not contain σ_n (or σ_{n+1}, which cannot pass).
    The trace turns it into ``σ_n⋯σ_1σ_1⋯σ_n · β · (rest)`` using only
    distant swaps and braid relations.
    """
    if n < 1:
        raise DomainError(f"wrap index must be >= 1, got {n}")
    pattern = wrap(n)
    if pos < 0 or pos + len(pattern) > word.length or word.letters[pos : pos + len(pattern)] != pattern:
        raise IllegalStep(f"no σ_{n}-wrap at position {pos}")
    beta = word.letters[:pos]
    for letter in beta:
        if letter in (n, n + 1):
            raise IllegalStep(f"σ_{letter} cannot commute past a σ_{n}-wrap")
    tb = TraceBuilder(word)
    cross_block_right(tb, 0, ("wrap", n), beta)
    tb.expect(pattern, at=0)
    tb.expect(beta, at=len(pattern))
    return tb.snapshot()


def peel_full_twist(word: BraidWord, pos: int, n: int) -> RewriteTrace:
    """Rewrite the full twist ``Δ²_n`` starting at ``pos`` into ``(σ_{n-1}⋯σ_1
    σ_1⋯σ_{n-1}) Δ²_{n-1}`` in place, by isotopy steps only."""
    if n < 1:
        raise DomainError(f"twist index must be >= 1, got {n}")
    pattern = full_twist_letters(n)
    if pos < 0 or pos + len(pattern) > word.length or word.letters[pos : pos + len(pattern)] != pattern:
        raise IllegalStep(f"no full twist on {n} strands at position {pos}")
    tb = TraceBuilder(word)
    run_program(tb, peel_prog(n), pos)
    if n >= 2:
        tb.expect(wrap(n - 1) + full_twist_letters(n - 1), at=pos)
    return tb.snapshot()


def decompose_twists(n: int, k: int) -> RewriteTrace:
    """Rewrite ``(σ_{n-1}⋯σ_1)^{nk+1}`` into the layered form
    ``(V_{n-1})^k σ_{n-1} ⋯ (V_1)^k σ_1`` with zero crossing changes.

    ``V_j`` is the 2j-letter wrap σ_j⋯σ_1σ_1⋯σ_j.  The trace uses isotopy and
    whole-word rotations only, so it is reversible step by step.
    """
    if n < 2 or k < 1:
        raise DomainError(f"decomposition needs n >= 2 and k >= 1, got n={n}, k={k}")
    tb = TraceBuilder(torus_braid(n, n * k + 1))
    run_regional(tb, decompose_region_prog(n, k), 0, [])
    expect_word(tb, form_letters(n, k))
    trace = tb.snapshot()
    if trace.crossing_changes:
        raise AssertionError("twist decomposition must not spend crossing changes")
    return trace


# ---------------------------------------------------------------------------
# strand-dropping constructions
# ---------------------------------------------------------------------------


def strip_top_strand(params: TorusParams) -> AdjacencyCertificate:
    """Drop the top strand of T(a, b): exactly ``⌊b/a⌋`` crossing changes, each
    cancelling a σ_{a-1} pair, then one destabilization.

    The target is the braid word that remains on ``a - 1`` strands (a positive
    braid knot, not in general a torus word).
    """
    a, b = params.p, params.q
    if a < 2:
        raise DomainError("a one-strand braid has no top strand to remove")
    if math.gcd(a, b) != 1:
        raise DomainError(f"T({a}, {b}) is a link, not a knot")
    c, r = divmod(b, a)  # coprimality gives 1 <= r <= a-1
    tb = TraceBuilder(torus_braid(a, b))
    run_program(tb, ext_prog(a - 1, r), c * a * (a - 1))
    for t in range(c):
        run_program(tb, peel_prog(a), t * a * (a - 1))
    if a >= 3 and c:
        arrange_blocks(
            tb,
            0,
            [("wrap", a - 1), ("twist", a - 1)] * c,
            [("twist", a - 1)] * c + [("wrap", a - 1)] * c,
        )
    ahead = tuple(range(a - r, a - 1))  # ascending block pulled out of the run power
    if ahead and c:
        arrange_blocks(
            tb,
            c * (a - 1) * (a - 2),
            [("wrap", a - 1)] * c + [("run", ahead)],
            [("run", ahead)] + [("wrap", a - 1)] * c,
        )
    cascade(tb, c * (a - 1) * (a - 2) + len(ahead), a - 1, c)
    tb.destabilize()
    return _certify(params, tb.word, tb, c)


def delete_link_subword(beta_prime: BraidWord, w: BraidWord) -> AdjacencyCertificate:
    """Delete an identity-permutation tail ``w`` from ``β′w``: exactly
    ``len(w)/2`` crossing changes, ending at ``β′`` letter for letter.

    The tail region is reduced level by level from the top generator down;
    at each level the region's identity permutation forces the surviving
    occurrence count to zero, so the region empties without ever touching
    ``β′``.
    """
    if beta_prime.strands != w.strands:
        raise DomainError(
            f"words live on different strand counts ({beta_prime.strands} vs {w.strands})"
        )
    info = closure_info(w)
    if info.permutation != tuple(range(1, w.strands + 1)):
        raise DomainError("the deleted subword must induce the identity permutation")
    if not is_knot(beta_prime):
        raise DomainError("the retained word must close to a knot")
    combined = BraidWord(beta_prime.strands, beta_prime.letters + w.letters)
    tb = TraceBuilder(combined)
    region_len = w.length
    for level in range(combined.strands - 1, 0, -1):
        region_len = _reduce(tb, beta_prime.length, region_len, level)
        region = tb.word.letters[beta_prime.length : beta_prime.length + region_len]
        if level in region:
            raise AssertionError(
                f"σ_{level} survived reduction of an identity-permutation region"
            )
    if region_len:
        raise AssertionError("identity-permutation region failed to empty")
    if tb.word != beta_prime:
        raise AssertionError("deletion disturbed the retained word")
    return _certify(combined, beta_prime, tb, w.length // 2)


# ---------------------------------------------------------------------------
# the two parametric families T(n+1, ·) → T(n, ·)
# ---------------------------------------------------------------------------


def adjacency_ci(n: int, k: int) -> AdjacencyCertificate:
    """Certificate from T(n+1, (n²−1)k+1) to T(n, n²k+1), spending exactly
    ``n(n−1)k/2`` crossing changes — the gap in unknotting numbers."""
    if n < 2 or k < 1:
        raise DomainError(f"family needs n >= 2 and k >= 1, got n={n}, k={k}")
    c = (n - 1) * k
    source = TorusParams(n + 1, (n * n - 1) * k + 1)
    target = TorusParams(n, n * n * k + 1)
    tb = TraceBuilder(torus_braid(source.p, source.q))
    # Peel the c full twists and gather them in front of their wraps.
    for t in range(c):
        run_program(tb, peel_prog(n + 1), t * n * (n + 1))
    arrange_blocks(
        tb,
        0,
        [("wrap", n), ("twist", n)] * c,
        [("twist", n)] * c + [("wrap", n)] * c,
    )
    # The wraps cascade into the run remainder's top letter and the freed top
    # strand comes off; then each level sheds its surplus wraps one index down.
    cascade(tb, c * n * (n - 1), n, c)
    tb.destabilize()
    tail = c * n * (n - 1)
    for j in range(n - 1, 1, -1):
        cascade(tb, tail + 2 * j * k, j, (j - 1) * k)
        tail += 2 * j * k + 1
    expect_word(tb, full_twist_letters(n) * c + form_letters(n, k))
    # Reassemble the layered remainder into a run power; with the twists it is
    # the literal target torus word.
    flen = (n - 1) * (n * k + 1)
    run_regional(
        tb,
        regional_invert(decompose_region_prog(n, k), flen),
        c * n * (n - 1),
        [("twist", n)] * c,
    )
    expect_word(tb, torus_braid(target.p, target.q).letters)
    return _certify(source, target, tb, n * (n - 1) * k // 2)


def adjacency_cin(n: int, k: int) -> AdjacencyCertificate:
    """Certificate from T(n+1, (n²−1)k+n) to T(n, n²k+n+1), spending exactly
    ``n(n−1)k/2`` crossing changes.

    The final word is the ascending representative ``(σ_1⋯σ_{n-1})^{n²k+n+1}``
    of the target; the certificate is verified by strand count, length, and
    Alexander polynomial.
    """
    if n < 2 or k < 1:
        raise DomainError(f"family needs n >= 2 and k >= 1, got n={n}, k={k}")
    c = (n - 1) * k
    source = TorusParams(n + 1, (n * n - 1) * k + n)
    target = TorusParams(n, n * n * k + n + 1)
    tb = TraceBuilder(torus_braid(source.p, source.q))
    # The trailing run power R_n^n regroups literally as A_n Δ²_n; the closing
    # twist rotates to the front to join the peeled stack.
    run_program(tb, ext_prog(n, n), c * n * (n + 1))
    for t in range(c):
        run_program(tb, peel_prog(n + 1), t * n * (n + 1))
    arrange_blocks(
        tb,
        0,
        [("wrap", n), ("twist", n)] * c,
        [("twist", n)] * c + [("wrap", n)] * c,
    )
    tb.conjugate(tb.word.length - n * (n - 1))
    arrange_blocks(
        tb,
        (c + 1) * n * (n - 1),
        [("wrap", n)] * c + [("run", ascending_run(n - 1))],
        [("run", ascending_run(n - 1))] + [("wrap", n)] * c,
    )
    cascade(tb, (c + 1) * n * (n - 1) + (n - 1), n, c)
    tb.destabilize()
    # Mirror-image cascades eat the ascending run into the wraps level by
    # level, producing the reversed layered form.
    base = (c + 1) * n * (n - 1)
    for j in range(n - 1, 1, -1):
        cascade_mirror(tb, base + (j - 1), j, (j - 1) * k)
    expect_word(tb, full_twist_letters(n) * (c + 1) + revform_letters(n, k))
    flen = (n - 1) * (n * k + 1)
    prog = regional_invert(regional_mirror(decompose_region_prog(n, k), flen), flen)
    run_regional(tb, prog, (c + 1) * n * (n - 1), [("twist", n)] * (c + 1))
    expect_word(tb, full_twist_letters(n) * (c + 1) + ascending_run(n - 1) * (n * k + 1))
    # Every descending twist converts in place to ascending form, leaving one
    # ascending run power.
    for t in range(c + 1):
        run_program(tb, conv_prog(n), t * n * (n - 1))
    expect_word(tb, ascending_run(n - 1) * (n * n * k + n + 1))
    return _certify(source, target, tb, n * (n - 1) * k // 2)


# ---------------------------------------------------------------------------
# the four congruence constructions T(4, b) → T(3, ·) and → T(2, ·)
# ---------------------------------------------------------------------------


def _three_from_four_8k5(k: int) -> AdjacencyCertificate:
    """T(4, 8k+5) → T(3, 9k+5) with 3k+2 crossing changes."""
    c = 2 * k + 1
    source = TorusParams(4, 8 * k + 5)
    target = TorusParams(3, 9 * k + 5)
    tb = TraceBuilder(torus_braid(source.p, source.q))
    for t in range(c):
        run_program(tb, peel_prog(4), t * 12)
    arrange_blocks(
        tb, 0, [("wrap", 3), ("twist", 3)] * c, [("twist", 3)] * c + [("wrap", 3)] * c
    )
    cascade(tb, 6 * c, 3, c)
    tb.destabilize()
    cascade(tb, 6 * c + 4 * (k + 1), 2, k)
    tb.crossing_change(6 * c + 4 * (k + 1) - 1)
    ell = tb.word.length  # 18k + 10, preserved from here on
    tb.conjugate(ell - (2 * k + 1))
    ones = ("run", (1,) * (2 * k + 1))
    arrange_blocks(
        tb,
        0,
        [ones] + [("twist", 3)] * c + [("wrap", 2)] * k,
        [("twist", 3)] * c + [("wrap", 2)] * k + [ones],
    )
    arrange_blocks(
        tb,
        6 * c,
        [("wrap", 2)] * k + [("wrap", 1)] * k,
        [("wrap", 2), ("wrap", 1)] * k,
    )
    # Each interleaved wrap pair closes into a full twist with one braid move.
    for t in range(k):
        tb.neighbor_braid(6 * c + 6 * t + 2)
    tb.neighbor_braid(ell - 4)
    expect_word(tb, torus_braid(target.p, target.q).letters)
    return _certify(source, target, tb, 3 * k + 2)


def _three_from_four_8k7(k: int) -> AdjacencyCertificate:
    """T(4, 8k+7) → T(3, 9k+8) with 3k+2 crossing changes."""
    c = 2 * k + 1
    source = TorusParams(4, 8 * k + 7)
    target = TorusParams(3, 9 * k + 8)
    tb = TraceBuilder(torus_braid(source.p, source.q))
    run_program(tb, ext_prog(3, 3), 12 * c)
    tb.conjugate(tb.word.length - 6)
    for t in range(c):
        run_program(tb, peel_prog(4), 6 + t * 12)
    arrange_blocks(
        tb, 6, [("wrap", 3), ("twist", 3)] * c, [("twist", 3)] * c + [("wrap", 3)] * c
    )
    arrange_blocks(
        tb,
        6 * (c + 1),
        [("wrap", 3)] * c + [("run", (1, 2))],
        [("run", (1, 2))] + [("wrap", 3)] * c,
    )
    cascade(tb, 6 * (c + 1) + 2, 3, c)
    tb.destabilize()
    p_mid = 6 * (c + 1) + 1
    cascade_mirror(tb, p_mid, 2, k)
    tb.crossing_change(p_mid + 2 * k)
    expect_word(
        tb,
        full_twist_letters(3) * (c + 1) + (1,) * (2 * k + 3) + (2,) + wrap(2) * k,
    )
    ell = tb.word.length  # 18k + 16, preserved from here on
    arrange_blocks(
        tb,
        0,
        [("twist", 3)] * (c + 1) + [("wrap", 1)] * k,
        [("wrap", 1)] * k + [("twist", 3)] * (c + 1),
    )
    tb.conjugate(2 * k)
    arrange_blocks(
        tb,
        6 * (c + 1) + 4,
        [("wrap", 2)] * k + [("wrap", 1)] * k,
        [("wrap", 2), ("wrap", 1)] * k,
    )
    for t in range(k):
        tb.neighbor_braid(6 * (c + 1) + 4 + 6 * t + 2)
    tb.conjugate(ell - 6 * k)
    big = 3 * k + 2
    arrange_blocks(
        tb,
        0,
        [("twist", 3)] * big + [("run", (1,))],
        [("run", (1,))] + [("twist", 3)] * big,
    )
    tb.conjugate(1)
    tb.neighbor_braid(6 * big + 1)
    arrange_blocks(
        tb,
        0,
        [("twist", 3)] * big + [("run", (1, 2, 1))],
        [("run", (1, 2, 1))] + [("twist", 3)] * big,
    )
    tb.conjugate(3)
    expect_word(tb, torus_braid(target.p, target.q).letters)
    return _certify(source, target, tb, 3 * k + 2)


def _two_from_four_4k1(k: int) -> AdjacencyCertificate:
    """T(4, 4k+1) → T(2, 6k+3) with 3k−1 crossing changes."""
    source = TorusParams(4, 4 * k + 1)
    target = TorusParams(2, 6 * k + 3)
    tb = TraceBuilder(torus_braid(source.p, source.q))
    for t in range(k):
        run_program(tb, peel_prog(4), t * 12)
    arrange_blocks(
        tb, 0, [("wrap", 3), ("twist", 3)] * k, [("twist", 3)] * k + [("wrap", 3)] * k
    )
    cascade(tb, 6 * k, 3, k)
    tb.destabilize()
    for t in range(k):
        run_program(tb, peel_prog(3), t * 6)
    arrange_blocks(
        tb,
        0,
        [("wrap", 2), ("wrap", 1)] * k + [("wrap", 2)] * k,
        [("wrap", 2), ("wrap", 1), ("wrap", 2)] * k,
    )
    # Adjacent sandwich blocks meet σ₂-to-σ₂ at their junctions.
    for t in range(k - 1, 0, -1):
        tb.crossing_change(10 * t - 1)
    tb.conjugate(1)
    tb.neighbor_braid(8 * k + 1)
    tb.neighbor_braid(8 * k)
    arrange_blocks(
        tb,
        0,
        [("wrap", 1), ("wrap", 2), ("wrap", 1)] * k,
        [("wrap", 1)] * k + [("wrap", 2)] * k + [("wrap", 1)] * k,
    )
    arrange_blocks(
        tb,
        2 * k,
        [("wrap", 2)] * k + [("run", (1,) * (2 * k + 1))],
        [("run", (1,) * (2 * k + 1))] + [("wrap", 2)] * k,
    )
    tb.conjugate(tb.word.length - 1)
    cascade(tb, 4 * k + 2, 2, k)
    tb.destabilize()
    expect_word(tb, (1,) * (6 * k + 3))
    return _certify(source, target, tb, 3 * k - 1)


def _two_from_four_4k3(k: int) -> AdjacencyCertificate:
    """T(4, 4k+3) → T(2, 6k+5) with 3k+1 crossing changes."""
    source = TorusParams(4, 4 * k + 3)
    target = TorusParams(2, 6 * k + 5)
    tb = TraceBuilder(torus_braid(source.p, source.q))
    run_program(tb, ext_prog(3, 3), 12 * k)
    tb.conjugate(tb.word.length - 6)
    for t in range(k):
        run_program(tb, peel_prog(4), 6 + t * 12)
    arrange_blocks(
        tb, 6, [("wrap", 3), ("twist", 3)] * k, [("twist", 3)] * k + [("wrap", 3)] * k
    )
    arrange_blocks(
        tb,
        6 * (k + 1),
        [("wrap", 3)] * k + [("run", (1, 2))],
        [("run", (1, 2))] + [("wrap", 3)] * k,
    )
    cascade(tb, 6 * (k + 1) + 2, 3, k)
    tb.destabilize()
    for t in range(k + 1):
        run_program(tb, peel_prog(3), t * 6)
    arrange_blocks(
        tb,
        6 * k,
        [("wrap", 2), ("run", (1, 1, 1))],
        [("run", (1, 1, 1)), ("wrap", 2)],
    )
    tb.crossing_change(6 * k + 6)
    expect_word(tb, (wrap(2) + wrap(1)) * k + (1, 1, 1, 2, 1, 1) + wrap(2) * k)
    arrange_blocks(
        tb,
        6 * k + 4,
        [("run", (1, 1))] + [("wrap", 2)] * k,
        [("wrap", 2)] * k + [("run", (1, 1))],
    )
    tb.conjugate(tb.word.length - 2)
    arrange_blocks(
        tb,
        2,
        [("wrap", 2), ("wrap", 1)] * k + [("run", (1, 1, 1))],
        [("run", (1, 1, 1))] + [("wrap", 2), ("wrap", 1)] * k,
    )
    tb.conjugate(tb.word.length - 4 * k)
    arrange_blocks(
        tb,
        0,
        [("wrap", 2)] * k + [("run", (1,) * 5)],
        [("run", (1,) * 5)] + [("wrap", 2)] * k,
    )
    arrange_blocks(
        tb,
        5,
        [("wrap", 2)] * k + [("wrap", 2), ("wrap", 1)] * k,
        [("wrap", 2), ("wrap", 1), ("wrap", 2)] * k,
    )
    for t in range(k, 0, -1):
        tb.crossing_change(5 + 10 * t - 1)
    arrange_blocks(
        tb,
        6,
        [("wrap", 1), ("wrap", 2), ("wrap", 1)] * k,
        [("wrap", 2)] * k + [("wrap", 1)] * (2 * k),
    )
    cascade_mirror(tb, 5, 2, k)
    tb.destabilize()
    expect_word(tb, (1,) * (6 * k + 5))
    return _certify(source, target, tb, 3 * k + 1)


def adjacency_3_from_4(b: int) -> AdjacencyCertificate:
    """Certificate from T(4, b) to the largest constructible T(3, a), chosen
    by the residue of ``b`` modulo 8; requires odd ``b >= 9``."""
    if b % 2 == 0:
        raise DomainError(f"T(4, {b}) is a link; b must be odd")
    if b < 9:
        raise DomainError(f"b = {b} falls below the constructions' domain (b >= 9)")
    residue = b % 8
    if residue == 1:
        return adjacency_ci(3, (b - 1) // 8)
    if residue == 3:
        return adjacency_cin(3, (b - 3) // 8)
    if residue == 5:
        return _three_from_four_8k5((b - 5) // 8)
    return _three_from_four_8k7((b - 7) // 8)


def adjacency_2_from_4(b: int) -> AdjacencyCertificate:
    """Certificate from T(4, b) to the matching T(2, a), chosen by the residue
    of ``b`` modulo 4; requires odd ``b >= 5``."""
    if b % 2 == 0:
        raise DomainError(f"T(4, {b}) is a link; b must be odd")
    if b < 5:
        raise DomainError(f"b = {b} falls below the constructions' domain (b >= 5)")
    if b % 4 == 1:
        return _two_from_four_4k1((b - 1) // 4)
    return _two_from_four_4k3((b - 3) // 4)


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------

CLAIMED = "claimed"
NOT_COVERED = "not-covered"


@dataclass(frozen=True)
class CatalogAnswer:
    """Catalog verdict: whether the queried adjacency is one this library
    claims, on what basis, and with what constructive evidence (a certificate
    when the pair matches an implemented family exactly, None when the claim
    rests on a cited inequality)."""

    verdict: str
    basis: str | None
    certificate: AdjacencyCertificate | None


def _normalize_params(params: TorusParams) -> TorusParams:
    p, q = params.p, params.q
    if math.gcd(p, q) != 1:
        raise DomainError(f"T({p}, {q}) is a link; the catalog covers knots only")
    if p > q:
        p, q = q, p
    if p == 1:
        return TorusParams(1, 1)  # every T(1, q) is the unknot
    return TorusParams(p, q)


def _exact_divisor(value: int, divisor: int) -> int | None:
    k, rem = divmod(value, divisor)
    return k if rem == 0 and k >= 1 else None


def adjacency_catalog(lower: TorusParams, upper: TorusParams) -> CatalogAnswer:
    """Answer whether T(lower) lies ``u(upper) − u(lower)`` crossing changes
    below T(upper), i.e. on a minimal unknotting sequence of it.

    Exact family matches come with a constructive certificate; claims resting
    on cited inequalities come as verdict-only; everything else is
    ``not-covered`` (which is *not* a refutation).
    """
    lo = _normalize_params(lower)
    hi = _normalize_params(upper)
    p1, q1 = lo.p, lo.q
    p2, q2 = hi.p, hi.q

    if (p1, q1) == (p2, q2):
        trace = RewriteTrace(torus_braid(p2, q2), ())
        cert = AdjacencyCertificate(hi, lo, trace, 0)
        return CatalogAnswer(CLAIMED, "equal-parameters", cert)

    if p1 == 1:
        tb_trace = unknot(torus_braid(p2, q2))
        cert = AdjacencyCertificate(hi, lo, tb_trace, tb_trace.crossing_changes)
        return CatalogAnswer(CLAIMED, "unknotting-sequence", cert)

    if p2 == p1 + 1:
        n = p1
        k = _exact_divisor(q1 - 1, n * n)
        if k is not None and q2 == (n * n - 1) * k + 1:
            return CatalogAnswer(CLAIMED, "square-plus-one-family", adjacency_ci(n, k))
        k = _exact_divisor(q1 - n - 1, n * n)
        if k is not None and q2 == (n * n - 1) * k + n:
            return CatalogAnswer(
                CLAIMED, "square-plus-n-plus-one-family", adjacency_cin(n, k)
            )

    if p1 == 3 and p2 == 4 and q2 % 2 == 1 and q2 >= 9:
        k, residue = divmod(q2, 8)
        expected = {1: 9 * k + 1, 3: 9 * k + 4, 5: 9 * k + 5, 7: 9 * k + 8}[residue]
        if q1 == expected:
            return CatalogAnswer(
                CLAIMED, "three-vs-four-strand-bound", adjacency_3_from_4(q2)
            )

    if p1 == 2 and p2 == 4 and q2 % 2 == 1 and q2 >= 5:
        k, residue = divmod(q2, 4)
        expected = 6 * k + 3 if residue == 1 else 6 * k + 5
        if q1 == expected:
            return CatalogAnswer(
                CLAIMED, "two-vs-four-strand-bound", adjacency_2_from_4(q2)
            )

    if p1 == p2 and q2 > q1 and (q2 - q1) % p1 == 0:
        tail = BraidWord(p1, descending_run(p1 - 1) * (q2 - q1))
        cert = delete_link_subword(torus_braid(p1, q1), tail)
        return CatalogAnswer(CLAIMED, "full-twist-deletion", cert)

    if p1 <= p2 and q1 <= q2:
        return CatalogAnswer(CLAIMED, "parameter-monotonicity", None)
    if p1 == 2 and p2 == 3 and 3 * q1 <= 4 * q2 + 1:
        return CatalogAnswer(CLAIMED, "two-vs-three-strand-bound", None)
    if p1 == 3 and p2 == 4 and 8 * q1 <= 9 * q2 + 5:
        return CatalogAnswer(CLAIMED, "three-vs-four-strand-bound", None)
    if p1 == 2 and p2 == 4 and 2 * q1 <= 3 * q2 + 3:
        return CatalogAnswer(CLAIMED, "two-vs-four-strand-bound", None)

    return CatalogAnswer(NOT_COVERED, None, None)
