"""Static voting-theory primitives for plurality elections among three alternatives.

Everything here is a pure function of immutable values.  The number of
alternatives is fixed at three, with lexicographic tie-breaking order
1 < 2 < 3.  Rankings are indexed 1..6 in the canonical order

    R1 = 1>2>3   R2 = 2>3>1   R3 = 3>2>1
    R4 = 3>1>2   R5 = 1>3>2   R6 = 2>1>3

and a histogram is a 6-vector of ranking counts in that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Number = Union[int, Fraction, float]

ALTERNATIVES = (1, 2, 3)

#: RANKINGS[i-1] is the preference order of ranking i (best first).
RANKINGS = (
    (1, 2, 3),
    (2, 3, 1),
    (3, 2, 1),
    (3, 1, 2),
    (1, 3, 2),
    (2, 1, 3),
)

#: TOP[i-1] is the favourite alternative of ranking i.
TOP = tuple(order[0] for order in RANKINGS)

#: RANK_OF[i-1][c-1] is the 1-based position of alternative c in ranking i.
RANK_OF = tuple(
    tuple(order.index(c) + 1 for c in ALTERNATIVES) for order in RANKINGS
)

#: TOP_GROUP[c-1] lists the ranking indices whose favourite is alternative c.
TOP_GROUP = tuple(
    tuple(i + 1 for i in range(6) if TOP[i] == c) for c in ALTERNATIVES
)

#: ABOVE[a-1][b-1] lists the ranking indices that place a strictly above b.
ABOVE = tuple(
    tuple(
        tuple(
            i + 1
            for i in range(6)
            if a != b and RANK_OF[i][a - 1] < RANK_OF[i][b - 1]
        )
        for b in ALTERNATIVES
    )
    for a in ALTERNATIVES
)


@dataclass(frozen=True)
class Histogram:
    """Anonymous preference profile: counts per canonical ranking index."""

    counts: tuple[int, int, int, int, int, int]

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        if len(counts) != 6:
            raise ValueError("histogram needs exactly 6 ranking counts")
        if any(c < 0 for c in counts):
            raise ValueError("ranking counts must be non-negative")
        if sum(counts) < 1:
            raise ValueError("histogram must contain at least one agent")
        object.__setattr__(self, "counts", counts)

    @property
    def n(self) -> int:
        return sum(self.counts)


@dataclass(frozen=True)
class VoteState:
    """Current plurality scores per alternative."""

    scores: tuple[int, int, int]

    def __post_init__(self):
        scores = tuple(int(s) for s in self.scores)
        if len(scores) != 3 or any(s < 0 for s in scores):
            raise ValueError("scores must be 3 non-negative integers")
        object.__setattr__(self, "scores", scores)


@dataclass(frozen=True)
class UtilityVector:
    """Rank-based utilities (u1, u2, u3) with u1 >= u2 >= u3 >= 0.

    The fully degenerate u1 = u2 = u3 case is allowed; price-of-anarchy
    operations short-circuit it to zero.
    """

    u1: Number
    u2: Number
    u3: Number

    def __post_init__(self):
        u1, u2, u3 = self.u1, self.u2, self.u3
        if not (u1 >= u2 >= u3 >= 0):
            raise ValueError("utilities must satisfy u1 >= u2 >= u3 >= 0")
        if u1 == u3 and u1 != u2:
            raise ValueError("inconsistent utility ordering")

    @property
    def degenerate(self) -> bool:
        return self.u1 == self.u2 == self.u3

    def as_tuple(self) -> tuple[Number, Number, Number]:
        return (self.u1, self.u2, self.u3)


def scores_from_counts(counts) -> tuple[int, int, int]:
    """Truthful plurality scores: each ranking's count goes to its favourite."""
    x1, x2, x3, x4, x5, x6 = counts
    return (x1 + x5, x2 + x6, x3 + x4)


def truthful_votes(h: Histogram) -> VoteState:
    """Vote state of the truthful profile of ``h``."""
    return VoteState(scores_from_counts(h.counts))


def winner_from_scores(scores) -> int:
    """Plurality winner: lowest-index alternative with maximal score."""
    best = max(scores)
    for c in ALTERNATIVES:
        if scores[c - 1] == best:
            return c
    raise AssertionError("unreachable")


def plurality_winner(state: VoteState) -> int:
    return winner_from_scores(state.scores)


def potential_winners_from_scores(scores) -> frozenset[int]:
    """Winner plus the approximately-tied alternatives.

    An alternative ordered before the winner qualifies with a one-vote
    deficit; one ordered after the winner only with an exact tie.
    """
    f = winner_from_scores(scores)
    sf = scores[f - 1]
    pw = {f}
    for c in ALTERNATIVES:
        if c == f:
            continue
        if c < f and scores[c - 1] == sf - 1:
            pw.add(c)
        elif c > f and scores[c - 1] == sf:
            pw.add(c)
    return frozenset(pw)


def potential_winners(state: VoteState) -> frozenset[int]:
    return potential_winners_from_scores(state.scores)


def pairwise_count(h: Histogram, a: int, b: int) -> int:
    """Number of agents that prefer a to b."""
    if a == b:
        raise ValueError("pairwise comparison needs two distinct alternatives")
    return sum(h.counts[i - 1] for i in ABOVE[a - 1][b - 1])


def pairwise_counts_from_counts(counts, a: int, b: int) -> int:
    return sum(counts[i - 1] for i in ABOVE[a - 1][b - 1])


def social_welfare(h: Histogram, u: UtilityVector, c: int) -> Number:
    """Sum over agents of the utility of alternative c's rank."""
    vec = u.as_tuple()
    return sum(
        h.counts[i] * vec[RANK_OF[i][c - 1] - 1] for i in range(6)
    )


def welfare_from_counts(counts, uvec, c: int) -> Number:
    """social_welfare on a raw counts tuple with a raw (u1,u2,u3) tuple."""
    return sum(counts[i] * uvec[RANK_OF[i][c - 1] - 1] for i in range(6))
