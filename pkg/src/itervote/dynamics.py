"""Iterative plurality best-response dynamics.

States are anonymous: a 6x3 matrix counts how many agents of each ranking
currently vote for each alternative.  A legal step moves one agent whose
current vote is not winning to the alternative in the potential-winner set
that yields their best strictly-improved outcome; that alternative becomes
the new winner.

Two routes compute the equilibrium-winner set of a histogram's truthful
profile: an exhaustive search over all schedulers (the oracle) and a
closed form built on pairwise majorities.  They must agree; the test
suite enforces this exhaustively for small n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    ALTERNATIVES,
    Histogram,
    RANK_OF,
    TOP,
    UtilityVector,
    pairwise_counts_from_counts,
    potential_winners_from_scores,
    scores_from_counts,
    welfare_from_counts,
    winner_from_scores,
)

DEFAULT_ORACLE_BOUND = 14


class ResourceLimitError(Exception):
    """Raised when an input exceeds a configured enumeration/search bound."""


@dataclass(frozen=True)
class BrMove:
    """One best-response step by an agent class (ranking, current vote)."""

    ranking_index: int
    frm: int
    to: int


@dataclass(frozen=True)
class OracleResult:
    winners: frozenset[int]
    states_explored: int
    max_path_length: int


def truthful_state(h: Histogram) -> tuple[tuple[int, int, int], ...]:
    """6x3 votes-by-ranking matrix of the truthful profile."""
    rows = []
    for i in range(6):
        row = [0, 0, 0]
        row[TOP[i] - 1] = h.counts[i]
        rows.append(tuple(row))
    return tuple(rows)


def _state_scores(state) -> tuple[int, int, int]:
    s1 = s2 = s3 = 0
    for row in state:
        s1 += row[0]
        s2 += row[1]
        s3 += row[2]
    return (s1, s2, s3)


def legal_moves_state(state) -> list[BrMove]:
    """Legal best-response steps available in ``state``.

    For an agent of ranking r voting v != winner, the attainable outcomes
    are the current winner (status quo) and every member of PW minus the
    winner minus v; the step targets the most preferred attainable outcome
    when that beats the status quo strictly.
    """
    scores = _state_scores(state)
    f = winner_from_scores(scores)
    pw = potential_winners_from_scores(scores)
    targets = [c for c in pw if c != f]
    if not targets:
        return []
    moves = []
    for i in range(6):
        prefs = RANK_OF[i]
        for v in ALTERNATIVES:
            if v == f or state[i][v - 1] == 0:
                continue
            best = f
            for c in targets:
                if c != v and prefs[c - 1] < prefs[best - 1]:
                    best = c
            if best != f:
                moves.append(BrMove(i + 1, v, best))
    return moves


def legal_moves(state, h: Histogram) -> list[BrMove]:
    for i in range(6):
        if sum(state[i]) != h.counts[i]:
            raise ValueError("state row sums do not match the histogram")
    return legal_moves_state(state)


def apply_move(state, move: BrMove):
    i = move.ranking_index - 1
    row = list(state[i])
    if row[move.frm - 1] == 0:
        raise ValueError("no agent of that class votes for the source")
    row[move.frm - 1] -= 1
    row[move.to - 1] += 1
    return state[:i] + (tuple(row),) + state[i + 1:]


def br_equilibrium_winners_oracle(
    h: Histogram, bound: int = DEFAULT_ORACLE_BOUND
) -> OracleResult:
    """Winners of every Nash equilibrium reachable from the truthful profile.

    Depth-first search over the reachable state graph with memoisation.
    Asserts PW-monotonicity on every transition and that the graph is
    acyclic (every scheduler terminates); path lengths are capped at
    10*n*m as a termination budget.
    """
    n = h.n
    if n > bound:
        raise ResourceLimitError(f"oracle limited to n <= {bound}, got n = {n}")
    budget = 10 * n * 3
    start = truthful_state(h)

    memo: dict = {}
    on_stack: set = set()
    explored = 0

    def visit(state) -> tuple[frozenset[int], int]:
        nonlocal explored
        cached = memo.get(state)
        if cached is not None:
            return cached
        if state in on_stack:
            raise AssertionError("cycle in best-response dynamics")
        on_stack.add(state)
        explored += 1
        pw = potential_winners_from_scores(_state_scores(state))
        moves = legal_moves_state(state)
        if not moves:
            result = (frozenset({winner_from_scores(_state_scores(state))}), 0)
        else:
            winners: set[int] = set()
            depth = 0
            for mv in moves:
                nxt = apply_move(state, mv)
                if not potential_winners_from_scores(_state_scores(nxt)).issubset(pw):
                    raise AssertionError("PW grew along a best-response step")
                sub_winners, sub_depth = visit(nxt)
                winners |= sub_winners
                depth = max(depth, sub_depth + 1)
            if depth > budget:
                raise AssertionError("best-response path exceeded 10*n*m steps")
            result = (frozenset(winners), depth)
        on_stack.discard(state)
        memo[state] = result
        return result

    winners, depth = visit(start)
    return OracleResult(winners, explored, depth)


def _truthful_movers_exist(counts, f: int, pw) -> bool:
    """Whether any legal best-response step exists at the truthful profile."""
    for i in range(6):
        v = TOP[i]
        if counts[i] == 0 or v == f:
            continue
        prefs = RANK_OF[i]
        for c in pw:
            if c != f and c != v and prefs[c - 1] < prefs[f - 1]:
                return True
    return False


def equilibrium_winners_counts(counts) -> frozenset[int]:
    """Closed-form equilibrium-winner set on a raw counts tuple.

    |PW| = 1: the truthful winner.  |PW| = 2: the truthful winner if the
    truthful state is already an equilibrium, else the pairwise-majority
    winner of the tied pair (lexicographic ties).  |PW| = 3: a challenger
    joins under its mover-exists + strict-majority condition; the truthful
    winner stays in whenever some available first move starts a run-off
    that it wins back under weak majority, or no move exists at all.
    """
    x1, x2, x3, x4, x5, x6 = counts
    scores = (x1 + x5, x2 + x6, x3 + x4)
    f = winner_from_scores(scores)
    pw = potential_winners_from_scores(scores)

    if len(pw) == 1:
        return frozenset((f,))

    if len(pw) == 2:
        if not _truthful_movers_exist(counts, f, pw):
            return frozenset((f,))
        a, b = sorted(pw)
        if pairwise_counts_from_counts(counts, a, b) >= pairwise_counts_from_counts(counts, b, a):
            return frozenset((a,))
        return frozenset((b,))

    def beats(a: int, b: int) -> bool:
        return pairwise_counts_from_counts(counts, a, b) > pairwise_counts_from_counts(counts, b, a)

    winners: set[int] = set()
    if f == 1:
        # movers: R3 agents lift 2, R2 agents lift 3
        if x3 > 0:
            winners.add(2 if beats(2, 1) else 1)
        if x2 > 0:
            winners.add(3 if beats(3, 1) else 1)
    elif f == 2:
        # movers: R4 agents lift 1, R5 agents lift 3
        if x4 > 0:
            winners.add(2 if beats(2, 1) else 1)
        if x5 > 0:
            winners.add(3 if beats(3, 2) else 2)
    else:
        # movers: R6 agents lift 1, R1 agents lift 2
        if x6 > 0:
            winners.add(3 if beats(3, 1) else 1)
        if x1 > 0:
            winners.add(3 if beats(3, 2) else 2)
    if not winners:
        winners.add(f)
    return frozenset(winners)


def equilibrium_winners(h: Histogram) -> frozenset[int]:
    return equilibrium_winners_counts(h.counts)


def adversarial_loss_counts(counts, uvec):
    """Adversarial loss on raw tuples; hot path for enumeration and sampling."""
    u1, u2, u3 = uvec
    if u1 == u2 == u3:
        return u1 - u1
    f = winner_from_scores(scores_from_counts(counts))
    ew = equilibrium_winners_counts(counts)
    base = welfare_from_counts(counts, uvec, f)
    if ew == frozenset((f,)):
        return base - base
    worst = min(welfare_from_counts(counts, uvec, c) for c in ew)
    return base - worst


def adversarial_loss(h: Histogram, u: UtilityVector):
    """Truthful winner's welfare minus the worst equilibrium winner's welfare."""
    return adversarial_loss_counts(h.counts, u.as_tuple())
