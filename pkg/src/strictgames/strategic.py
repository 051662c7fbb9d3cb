"""Strategic zero-sum equivalence by exact linear feasibility.

A bimatrix game is strategically equivalent to a zero-sum game when some
positive combination of the two payoff matrices separates into a row offset
plus a column offset: lambda1*u1 + lambda2*u2 = a_i + b_j on every cell.
Such offsets never change a player's best replies, so these games inherit
the zero-sum solution structure even when no affine relation between the
payoffs exists.  This strictly extends affine adversariality detection.

The decomposition is only determined up to positive scaling of the lambdas
and a constant shift between the offset vectors, so the reported
certificate is normalized: lambda1 = 1 and a[0] = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .games import BimatrixGame
from .rational import format_rational


@dataclass(frozen=True)
class MvDecomposition:
    """Certificate that lambda1*u1 + lambda2*u2 separates by player action."""

    lambda1: Fraction
    lambda2: Fraction
    row_offsets: tuple[Fraction, ...]
    col_offsets: tuple[Fraction, ...]

    def to_json_dict(self) -> dict:
        return {
            "status": "strategically_zero_sum",
            "lambda1": format_rational(self.lambda1),
            "lambda2": format_rational(self.lambda2),
            "row_offsets": [format_rational(v) for v in self.row_offsets],
            "col_offsets": [format_rational(v) for v in self.col_offsets],
        }

    def verifies(self, game: BimatrixGame) -> bool:
        """Re-check the defining cell equations exactly."""
        if self.lambda1 <= 0 or self.lambda2 <= 0:
            return False
        for i in range(game.rows):
            for j in range(game.cols):
                lhs = self.lambda1 * game.u1[i][j] + self.lambda2 * game.u2[i][j]
                if lhs != self.row_offsets[i] + self.col_offsets[j]:
                    return False
        return True


def strategically_zero_sum_detect(game: BimatrixGame) -> MvDecomposition | None:
    """Find the normalized decomposition, or None when infeasible.

    With lambda1 fixed to 1, separability of M = u1 + lambda2*u2 is
    equivalent to the double differences M[i][j] - M[i][0] - M[0][j] +
    M[0][0] all vanishing.  Each cell's double difference is linear in
    lambda2, so every cell either holds for all lambda2, rules out every
    lambda2, or forces a single candidate; all forced candidates must agree
    and be positive.  When no cell constrains lambda2, lambda2 = 1 is the
    canonical representative.
    """
    lam2: Fraction | None = None
    for i in range(1, game.rows):
        for j in range(1, game.cols):
            p = (
                game.u1[i][j] - game.u1[i][0] - game.u1[0][j] + game.u1[0][0]
            )
            q = (
                game.u2[i][j] - game.u2[i][0] - game.u2[0][j] + game.u2[0][0]
            )
            if q == 0:
                if p != 0:
                    return None
                continue
            forced = -p / q
            if lam2 is None:
                lam2 = forced
            elif lam2 != forced:
                return None
    if lam2 is None:
        lam2 = Fraction(1)
    if lam2 <= 0:
        return None

    m = [
        [game.u1[i][j] + lam2 * game.u2[i][j] for j in range(game.cols)]
        for i in range(game.rows)
    ]
    col_offsets = tuple(m[0][j] for j in range(game.cols))
    row_offsets = tuple(m[i][0] - m[0][0] for i in range(game.rows))
    decomposition = MvDecomposition(
        lambda1=Fraction(1),
        lambda2=lam2,
        row_offsets=row_offsets,
        col_offsets=col_offsets,
    )
    if not decomposition.verifies(game):
        return None
    return decomposition
