"""Deciding whether a game's mixed extension is strictly competitive.

A game is strictly competitive (adversarial) when one player's weak
preference between any two profiles is always the reverse of the other's.
For the mixed extension of a finite game this holds exactly when the second
payoff matrix is a negatively sloped affine image of the first, so the
decision procedure is constructive: solve for the unique candidate slope and
intercept from one anchor pair of cells, then verify every cell.  The
verdict therefore always comes with a certificate: the affine transform on
success, or a concrete failing cell or profile pair otherwise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import AlphaNonpositiveError
from .games import (
    BimatrixGame,
    Cell,
    MixedProfile,
    expected_utility,
    new_game,
    pure_profile,
    random_strategy,
    uniform_strategy,
)
from .rational import format_rational


@dataclass(frozen=True)
class AffineTransform:
    """The pair (alpha, beta) with alpha > 0 linking the two payoffs.

    For an adversarial game, ``u2 == -alpha * u1 + beta`` on every cell.
    """

    alpha: Fraction
    beta: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))
        if self.alpha <= 0:
            raise AlphaNonpositiveError(f"alpha must be > 0, got {self.alpha}")

    def apply(self, value: Fraction) -> Fraction:
        """The second payoff this transform predicts for a first payoff."""
        return -self.alpha * value + self.beta


@dataclass(frozen=True)
class AffineMismatch:
    """A cell where the candidate affine relation fails."""

    cell: Cell
    expected: Fraction
    actual: Fraction


@dataclass(frozen=True)
class OrdinalViolation:
    """A pure profile pair on which the two preferences do not reverse."""

    sigma: Cell
    tau: Cell


@dataclass(frozen=True)
class AlphaNonpositive:
    """Anchors whose induced slope is not positive."""

    anchors: tuple[Cell, Cell]
    alpha: Fraction
    beta: Fraction


Witness = AffineMismatch | OrdinalViolation | AlphaNonpositive

ADVERSARIAL = "adversarial"
DEGENERATE = "degenerate"
NOT_ADVERSARIAL = "not_adversarial"


@dataclass(frozen=True)
class DetectionResult:
    """Outcome of the adversariality decision, with certificate."""

    status: str
    transform: AffineTransform | None = None
    witness: Witness | None = None
    note: str | None = None

    @classmethod
    def adversarial(cls, t: AffineTransform) -> "DetectionResult":
        return cls(ADVERSARIAL, transform=t)

    @classmethod
    def degenerate(cls, t: AffineTransform) -> "DetectionResult":
        return cls(DEGENERATE, transform=t, note="both payoffs constant")

    @classmethod
    def not_adversarial(cls, w: Witness) -> "DetectionResult":
        return cls(NOT_ADVERSARIAL, witness=w)

    @property
    def is_adversarial(self) -> bool:
        return self.status in (ADVERSARIAL, DEGENERATE)

    def to_json_dict(self) -> dict:
        out: dict = {"status": self.status}
        if self.transform is not None:
            out["alpha"] = format_rational(self.transform.alpha)
            out["beta"] = format_rational(self.transform.beta)
        if self.note is not None:
            out["note"] = self.note
        if self.witness is not None:
            out["witness"] = witness_to_json_dict(self.witness)
        return out


def witness_to_json_dict(w: Witness) -> dict:
    if isinstance(w, AffineMismatch):
        return {
            "kind": "affine_mismatch",
            "cell": list(w.cell),
            "expected": format_rational(w.expected),
            "actual": format_rational(w.actual),
        }
    if isinstance(w, OrdinalViolation):
        return {
            "kind": "ordinal_violation",
            "sigma": list(w.sigma),
            "tau": list(w.tau),
        }
    return {
        "kind": "alpha_nonpositive",
        "anchors": [list(c) for c in w.anchors],
        "alpha": format_rational(w.alpha),
        "beta": format_rational(w.beta),
    }


def pure_ordinal_competitive(game: BimatrixGame) -> bool | OrdinalViolation:
    """Check the strict-competitiveness biconditional on pure profiles only.

    Scans all ordered pairs of cells in row-major order and returns the
    first pair where ``u1(sigma) >= u1(tau)`` and ``u2(sigma) <= u2(tau)``
    disagree, or True if none exists.  Passing this check does not imply the
    mixed extension is adversarial.
    """
    cells = game.cells()
    for sigma in cells:
        for tau in cells:
            ge1 = game.u1[sigma[0]][sigma[1]] >= game.u1[tau[0]][tau[1]]
            le2 = game.u2[sigma[0]][sigma[1]] <= game.u2[tau[0]][tau[1]]
            if ge1 != le2:
                return OrdinalViolation(sigma, tau)
    return True


def _solve_anchor_pair(
    game: BimatrixGame, p1: Cell, p2: Cell
) -> tuple[Fraction, Fraction]:
    """The unique (alpha, beta) with u2 = -alpha*u1 + beta on both anchors."""
    a1 = game.u1[p1[0]][p1[1]]
    a2 = game.u1[p2[0]][p2[1]]
    b1 = game.u2[p1[0]][p1[1]]
    b2 = game.u2[p2[0]][p2[1]]
    alpha = -(b1 - b2) / (a1 - a2)
    beta = b1 + alpha * a1
    return alpha, beta


def detect_affine(
    game: BimatrixGame, anchors: tuple[Cell, Cell] | None = None
) -> DetectionResult:
    """Decide adversariality of the mixed extension, with certificate.

    When ``u1`` is constant the game is adversarial exactly when ``u2`` is
    also constant; the canonical transform (alpha=1, beta=c2+c1) is reported.
    Otherwise the unique candidate (alpha, beta) is solved from the first
    row-major anchor pair with distinct ``u1`` values (or from ``anchors``
    when given, mainly to exercise anchor independence), rejected if
    alpha <= 0, and verified on every cell.  An entrywise affine relation
    extends to all mixed profiles by linearity of expectation, so this
    decides the mixed extension, not just the pure game.
    """
    cells = game.cells()
    first = cells[0]
    u1_first = game.u1[first[0]][first[1]]
    distinct = next(
        (c for c in cells if game.u1[c[0]][c[1]] != u1_first), None
    )

    if distinct is None:
        u2_first = game.u2[first[0]][first[1]]
        off = next(
            (c for c in cells if game.u2[c[0]][c[1]] != u2_first), None
        )
        if off is None:
            return DetectionResult.degenerate(
                AffineTransform(Fraction(1), u2_first + u1_first)
            )
        # u1 ties every pair, so any two cells with different u2 break the
        # biconditional; orient sigma toward the larger u2.
        sigma, tau = (
            (first, off) if game.u2[first[0]][first[1]] > game.u2[off[0]][off[1]]
            else (off, first)
        )
        return DetectionResult.not_adversarial(OrdinalViolation(sigma, tau))

    if anchors is None:
        anchors = (first, distinct)
    elif game.u1[anchors[0][0]][anchors[0][1]] == game.u1[anchors[1][0]][anchors[1][1]]:
        raise ValueError("anchor cells must have distinct u1 values")

    alpha, beta = _solve_anchor_pair(game, anchors[0], anchors[1])
    if alpha <= 0:
        return DetectionResult.not_adversarial(
            AlphaNonpositive(anchors, alpha, beta)
        )
    for cell in cells:
        expected = -alpha * game.u1[cell[0]][cell[1]] + beta
        actual = game.u2[cell[0]][cell[1]]
        if expected != actual:
            return DetectionResult.not_adversarial(
                AffineMismatch(cell, expected, actual)
            )
    return DetectionResult.adversarial(AffineTransform(alpha, beta))


def is_adversarial(game: BimatrixGame) -> bool:
    return detect_affine(game).is_adversarial


def three_profile_compatibility(
    game: BimatrixGame,
    p1: MixedProfile,
    p2: MixedProfile,
    p3: MixedProfile,
) -> AffineTransform | None:
    """Find (alpha, beta), alpha > 0, linking the three profiles' payoffs.

    Solves from the first two profiles with distinct first-player expected
    utilities and verifies all three.  If all three first-player values
    coincide, a compatible pair exists only when the second-player values
    also coincide; the canonical (1, e2+e1) of the first profile is returned
    in that case.
    """
    profiles = (p1, p2, p3)
    e1 = [expected_utility(game, 1, p) for p in profiles]
    e2 = [expected_utility(game, 2, p) for p in profiles]

    pair = next(
        ((k, l) for k in range(3) for l in range(k + 1, 3) if e1[k] != e1[l]),
        None,
    )
    if pair is None:
        if e2[0] == e2[1] == e2[2]:
            return AffineTransform(Fraction(1), e2[0] + e1[0])
        return None
    k, l = pair
    alpha = -(e2[k] - e2[l]) / (e1[k] - e1[l])
    if alpha <= 0:
        return None
    beta = e2[k] + alpha * e1[k]
    if all(e2[m] == -alpha * e1[m] + beta for m in range(3)):
        return AffineTransform(alpha, beta)
    return None


def _violates(game: BimatrixGame, sigma: MixedProfile, tau: MixedProfile) -> bool:
    ge1 = expected_utility(game, 1, sigma) >= expected_utility(game, 1, tau)
    le2 = expected_utility(game, 2, sigma) <= expected_utility(game, 2, tau)
    return ge1 != le2


def find_mixed_violation(
    game: BimatrixGame, budget: int, seed: int
) -> tuple[MixedProfile, MixedProfile] | None:
    """Randomized search for a profile pair breaking strict competitiveness.

    Draws up to ``budget`` pairs, cycling three pools with equal weight:
    pure vs pure, pure vs random, and random vs random.  Random coordinates
    are bounded-denominator mixtures, with the uniform strategy mixed in so
    that pure-versus-barycenter witnesses are reachable.  Returning None
    proves nothing; :func:`is_adversarial` is the decision procedure.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    rng = random.Random(seed)
    cells = game.cells()

    def pure() -> MixedProfile:
        return pure_profile(rng.choice(cells), game)

    def rand() -> MixedProfile:
        def side(n: int):
            if rng.randrange(4) == 0:
                return uniform_strategy(n)
            return random_strategy(rng, n)

        return MixedProfile(side(game.rows), side(game.cols))

    pools = ((pure, pure), (pure, rand), (rand, rand))
    for k in range(budget):
        make_sigma, make_tau = pools[k % 3]
        sigma, tau = make_sigma(), make_tau()
        if _violates(game, sigma, tau):
            return sigma, tau
    return None


def to_zero_sum(game: BimatrixGame, t: AffineTransform) -> BimatrixGame:
    """Replace u1 by ``alpha*u1 - beta`` so the sum with u2 cancels.

    When ``t`` comes from :func:`detect_affine` on the same game, the result
    is zero-sum entrywise, exactly.
    """
    if t.alpha <= 0:
        raise AlphaNonpositiveError(f"alpha must be > 0, got {t.alpha}")
    v1 = tuple(
        tuple(t.alpha * entry - t.beta for entry in row) for row in game.u1
    )
    return new_game(v1, game.u2)
