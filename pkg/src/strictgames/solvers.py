"""Exact game solving: minimax by simplex and a support-enumeration oracle.

The minimax path shifts the row payoff matrix positive, reduces the value
problem to a standard-form linear program, and runs a dense simplex over
rationals with Bland's anti-cycling pivot rule, so every solve terminates
and both players' optimal strategies come out of one tableau (primal
solution and dual prices).  The support-enumeration oracle independently
finds all equilibria of small bimatrix games by solving the indifference
system of every equal-size support pair; it is complete for nondegenerate
games and is used to cross-validate the LP path and the claim that
normalizing a strictly competitive game preserves its equilibria.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .detection import AffineTransform, to_zero_sum
from .errors import NotZeroSum, TooLarge
from .games import (
    BimatrixGame,
    MixedProfile,
    MixedStrategy,
    expected_utility,
)
from .rational import format_rational

DEFAULT_MAX_DIM = 5


@dataclass(frozen=True)
class MinimaxSolution:
    """Exact value and one optimal strategy per player for a zero-sum game.

    The row strategy guarantees at least ``value`` against every pure
    column; the column strategy concedes at most ``value`` against every
    pure row.  Both inequalities hold exactly.
    """

    value: Fraction
    row_strategy: MixedStrategy
    col_strategy: MixedStrategy

    def to_json_dict(self) -> dict:
        return {
            "value": format_rational(self.value),
            "row_strategy": [format_rational(p) for p in self.row_strategy],
            "col_strategy": [format_rational(p) for p in self.col_strategy],
        }


@dataclass(frozen=True)
class Equilibrium:
    x: MixedStrategy
    y: MixedStrategy
    payoffs: tuple[Fraction, Fraction]

    def to_json_dict(self) -> dict:
        return {
            "row_strategy": [format_rational(p) for p in self.x],
            "col_strategy": [format_rational(p) for p in self.y],
            "payoffs": [format_rational(v) for v in self.payoffs],
        }


@dataclass(frozen=True)
class EquilibriumSet:
    equilibria: tuple[Equilibrium, ...]

    def __len__(self) -> int:
        return len(self.equilibria)

    def __iter__(self):
        return iter(self.equilibria)

    def strategy_set(self) -> frozenset:
        return frozenset((e.x.probs, e.y.probs) for e in self.equilibria)

    def to_json_dict(self) -> dict:
        return {"equilibria": [e.to_json_dict() for e in self.equilibria]}


class _Simplex:
    """Exact simplex for max c*v subject to A v <= b, v >= 0, with integer
    data and b >= 0.

    The slack basis is immediately feasible, so no phase-one is needed.
    Entering variable: smallest index with negative reduced cost; leaving:
    minimum ratio, ties broken by smallest basic variable index (Bland).
    The tableau is kept fraction-free by integer pivoting: every update
    divides exactly by the previous pivot, so entries stay integers (minor
    values) and the basic columns all hold the current divisor.
    """

    def __init__(
        self,
        a: list[list[int]],
        b: list[int],
        c: list[int],
    ) -> None:
        self.m = len(a)
        self.n = len(c)
        self.rows = [list(ai) for ai in a]
        for i, row in enumerate(self.rows):
            row.extend(int(k == i) for k in range(self.m))
            row.append(b[i])
        self.obj = [-cj for cj in c] + [0] * (self.m + 1)
        self.basis = [self.n + i for i in range(self.m)]
        self.div = 1

    def _entering(self) -> int | None:
        for j in range(self.n + self.m):
            if self.obj[j] < 0:
                return j
        return None

    def _leaving(self, col: int) -> int:
        # ratios compared by cross-multiplication; coefficients are positive
        best_num = best_den = 0
        best_row = -1
        for i in range(self.m):
            coef = self.rows[i][col]
            if coef > 0:
                num = self.rows[i][-1]
                if (
                    best_row < 0
                    or num * best_den < best_num * coef
                    or (
                        num * best_den == best_num * coef
                        and self.basis[i] < self.basis[best_row]
                    )
                ):
                    best_num, best_den, best_row = num, coef, i
        if best_row < 0:
            raise ArithmeticError("unbounded linear program")
        return best_row

    def _pivot(self, row: int, col: int) -> None:
        pivot = self.rows[row][col]
        prow = self.rows[row]
        d = self.div
        for i in range(self.m):
            if i != row:
                old = self.rows[i]
                f = old[col]
                self.rows[i] = [
                    (pivot * v - f * w) // d for v, w in zip(old, prow)
                ]
        f = self.obj[col]
        self.obj = [(pivot * v - f * w) // d for v, w in zip(self.obj, prow)]
        self.div = pivot
        self.basis[row] = col

    def solve(self) -> tuple[Fraction, list[Fraction], list[Fraction]]:
        """Optimal value, primal solution, and dual prices."""
        while True:
            col = self._entering()
            if col is None:
                break
            self._pivot(self._leaving(col), col)
        primal = [Fraction(0)] * self.n
        for i, var in enumerate(self.basis):
            if var < self.n:
                primal[var] = Fraction(self.rows[i][-1], self.div)
        dual = [Fraction(self.obj[self.n + i], self.div) for i in range(self.m)]
        return Fraction(self.obj[-1], self.div), primal, dual


def _check_zero_sum(game: BimatrixGame) -> None:
    for i in range(game.rows):
        for j in range(game.cols):
            if game.u1[i][j] + game.u2[i][j] != 0:
                raise NotZeroSum(
                    f"u1 + u2 is {game.u1[i][j] + game.u2[i][j]} at cell ({i}, {j})"
                )


def minimax_solve(game: BimatrixGame) -> MinimaxSolution:
    """Exact minimax value and optimal strategies of a zero-sum game.

    The row matrix is shifted by ``1 - min`` when its minimum is <= 0 and
    scaled to integers, the positive-matrix value LP is solved once, and
    the column player's optimum is read off the dual prices.  Guarantee
    inequalities are re-verified exactly before returning.
    """
    _check_zero_sum(game)
    v = game.u1
    m, n = game.rows, game.cols
    min_entry = min(min(row) for row in v)
    shift = 1 - min_entry if min_entry <= 0 else Fraction(0)
    # scaling a positive matrix scales its value and keeps optima unchanged,
    # so the LP can run on integers
    scale = 1
    for row in v:
        for entry in row:
            scale = math.lcm(scale, (entry + shift).denominator)
    a = [
        [int((v[i][j] + shift) * scale) for j in range(n)] for i in range(m)
    ]

    total, q, p = _Simplex(a, [1] * m, [1] * n).solve()
    value_scaled = 1 / total
    y = MixedStrategy(tuple(qj * value_scaled for qj in q))
    x = MixedStrategy(tuple(pi * value_scaled for pi in p))
    value = value_scaled / scale - shift

    for j in range(n):
        if sum(x[i] * v[i][j] for i in range(m)) < value:
            raise AssertionError("row guarantee certificate failed")
    for i in range(m):
        if sum(v[i][j] * y[j] for j in range(n)) > value:
            raise AssertionError("column guarantee certificate failed")
    return MinimaxSolution(value=value, row_strategy=x, col_strategy=y)


def _solve_linear(
    a: list[list[Fraction]], b: list[Fraction]
) -> list[Fraction] | None:
    """Solve a square system exactly; None when the matrix is singular."""
    n = len(a)
    m = [list(row) + [rhs] for row, rhs in zip(a, b)]
    for col in range(n):
        pivot_row = next(
            (r for r in range(col, n) if m[r][col] != 0), None
        )
        if pivot_row is None:
            return None
        m[col], m[pivot_row] = m[pivot_row], m[col]
        inv = 1 / m[col][col]
        m[col] = [v * inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [v - f * w for v, w in zip(m[r], m[col])]
    return [m[r][-1] for r in range(n)]


def support_enumeration(
    game: BimatrixGame, max_dim: int = DEFAULT_MAX_DIM
) -> EquilibriumSet:
    """All equilibria found by equal-size support enumeration.

    For each support pair the two indifference systems are solved exactly;
    candidates must put strictly positive weight on their support and
    survive the exact best-response inequalities.  Singular systems are
    skipped, so completeness is claimed only for nondegenerate games.
    """
    if game.rows > max_dim or game.cols > max_dim:
        raise TooLarge(
            f"{game.rows}x{game.cols} exceeds the enumeration cap {max_dim}"
        )
    m, n = game.rows, game.cols
    found = []
    for k in range(1, min(m, n) + 1):
        for rows_sup in combinations(range(m), k):
            for cols_sup in combinations(range(n), k):
                eq = _try_support(game, rows_sup, cols_sup)
                if eq is not None:
                    found.append(eq)
    return EquilibriumSet(tuple(found))


def _try_support(
    game: BimatrixGame,
    rows_sup: tuple[int, ...],
    cols_sup: tuple[int, ...],
) -> Equilibrium | None:
    k = len(rows_sup)
    one = Fraction(1)
    zero = Fraction(0)

    # column strategy y and v1 from the row player's indifference over rows_sup
    a = [
        [game.u1[i][j] for j in cols_sup] + [-one]
        for i in rows_sup
    ]
    a.append([one] * k + [zero])
    sol = _solve_linear(a, [zero] * k + [one])
    if sol is None:
        return None
    y_sup, v1 = sol[:k], sol[k]

    # row strategy x and v2 from the column player's indifference over cols_sup
    a = [
        [game.u2[i][j] for i in rows_sup] + [-one]
        for j in cols_sup
    ]
    a.append([one] * k + [zero])
    sol = _solve_linear(a, [zero] * k + [one])
    if sol is None:
        return None
    x_sup, v2 = sol[:k], sol[k]

    if any(p <= 0 for p in x_sup) or any(p <= 0 for p in y_sup):
        return None

    x = [zero] * game.rows
    for i, p in zip(rows_sup, x_sup):
        x[i] = p
    y = [zero] * game.cols
    for j, p in zip(cols_sup, y_sup):
        y[j] = p

    for i in range(game.rows):
        if sum(game.u1[i][j] * y[j] for j in cols_sup) > v1:
            return None
    for j in range(game.cols):
        if sum(game.u2[i][j] * x[i] for i in rows_sup) > v2:
            return None

    xs = MixedStrategy(tuple(x))
    ys = MixedStrategy(tuple(y))
    profile = MixedProfile(xs, ys)
    payoffs = (
        expected_utility(game, 1, profile),
        expected_utility(game, 2, profile),
    )
    return Equilibrium(xs, ys, payoffs)


def equilibrium_invariance_check(
    game: BimatrixGame, t: AffineTransform, max_dim: int = DEFAULT_MAX_DIM
) -> bool:
    """Normalizing with ``t`` must leave the equilibrium set untouched.

    Enumerates equilibria of the game and of its zero-sum normalization,
    requires the two strategy sets to be identical, and checks that each
    original row payoff is recovered exactly from the normalized one via
    ``u1 = (v1 + beta) / alpha``.
    """
    original = support_enumeration(game, max_dim)
    normalized_game = to_zero_sum(game, t)
    normalized = support_enumeration(normalized_game, max_dim)
    if original.strategy_set() != normalized.strategy_set():
        return False
    by_strategies = {
        (e.x.probs, e.y.probs): e for e in normalized.equilibria
    }
    for e in original.equilibria:
        z = by_strategies[(e.x.probs, e.y.probs)]
        if e.payoffs[0] != (z.payoffs[0] + t.beta) / t.alpha:
            return False
    return True
