"""Randomized audit of the ordered bilinear mixture-space axioms.

The bridge from strict competitiveness to the affine certificate runs
through a preference on profiles represented either by the negated row
payoff or by the column payoff.  Because both representations are bilinear
expectations, that preference satisfies the five mixture-space axioms (a
total preorder, commutativity and distributivity of mixing, solvability,
and interdimensional independence) for every game.  This module makes each
axiom executable: samples are drawn with seeded bounded-denominator
mixtures, every comparison is exact, and the existential axioms are checked
by constructing explicit witnesses rather than by search.

MS4 and MS5 have preconditions that random draws may miss; those samples
are counted as vacuous, separately from failures.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction

from .games import (
    BimatrixGame,
    MixedProfile,
    MixedStrategy,
    expected_utility,
    mix,
    pure_strategy,
    random_profile,
    random_strategy,
)
from .rational import random_open_weight, random_weight

AXIOM_NAMES = ("MS1", "MS2", "MS3", "MS4", "MS5")


class Lens(enum.Enum):
    """Which utility represents the audited preference."""

    NEG_U1 = "neg_u1"
    U2 = "u2"


@dataclass(frozen=True)
class InducedPreference:
    """Profile preference represented by a bilinear utility of the game."""

    game: BimatrixGame
    lens: Lens

    def utility(self, p: MixedProfile) -> Fraction:
        if self.lens is Lens.NEG_U1:
            return -expected_utility(self.game, 1, p)
        return expected_utility(self.game, 2, p)

    def precedes(self, sigma: MixedProfile, tau: MixedProfile) -> bool:
        """Whether sigma is weakly dispreferred to tau."""
        return self.utility(sigma) <= self.utility(tau)


@dataclass(frozen=True)
class AxiomStats:
    samples: int
    checked: int
    vacuous: int
    failures: int
    first_counterexample: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "samples": self.samples,
            "checked": self.checked,
            "vacuous": self.vacuous,
            "failures": self.failures,
            "first_counterexample": self.first_counterexample,
        }


@dataclass(frozen=True)
class AxiomReport:
    lens: Lens
    samples: int
    seed: int
    axioms: dict[str, AxiomStats]

    @property
    def overall_pass(self) -> bool:
        return all(s.failures == 0 for s in self.axioms.values())

    def to_json_dict(self) -> dict:
        return {
            "lens": self.lens.value,
            "samples": self.samples,
            "seed": self.seed,
            "overall_pass": self.overall_pass,
            "axioms": {k: v.to_json_dict() for k, v in self.axioms.items()},
        }


class _Tally:
    def __init__(self) -> None:
        self.checked = 0
        self.vacuous = 0
        self.failures = 0
        self.first: str | None = None

    def ok(self) -> None:
        self.checked += 1

    def skip(self) -> None:
        self.vacuous += 1

    def fail(self, description: str) -> None:
        self.checked += 1
        self.failures += 1
        if self.first is None:
            self.first = description

    def stats(self, samples: int) -> AxiomStats:
        return AxiomStats(samples, self.checked, self.vacuous, self.failures, self.first)


def _with_coord(profile: MixedProfile, i: int, s: MixedStrategy) -> MixedProfile:
    """The profile with coordinate ``i`` replaced by strategy ``s``."""
    if i == 1:
        return MixedProfile(s, profile.y)
    return MixedProfile(profile.x, s)


def _coord(profile: MixedProfile, i: int) -> MixedStrategy:
    return profile.x if i == 1 else profile.y


def ms4_witness(
    up: Fraction, uq: Fraction, urp: Fraction
) -> tuple[Fraction, Fraction]:
    """Mixture weights hitting the midpoints of (up, uq) and (uq, urp).

    Requires up < uq < urp.  With a linear represented utility, weight w on
    the low endpoint gives value w*up + (1-w)*urp, so solving for the two
    midpoint targets yields weights strictly inside (0, 1).
    """
    if not up < uq < urp:
        raise ValueError("requires up < uq < urp")
    t1 = (up + uq) / 2
    t2 = (uq + urp) / 2
    alpha = (urp - t1) / (urp - up)
    beta = (urp - t2) / (urp - up)
    return alpha, beta


def _audit_ms1(pref: InducedPreference, rng: random.Random, samples: int) -> _Tally:
    t = _Tally()
    g = pref.game
    for _ in range(samples):
        tri = [random_profile(rng, g) for _ in range(3)]
        a, b, c = (pref.utility(p) for p in tri)
        if not (a <= b or b <= a):
            t.fail(f"totality broken at {a} vs {b}")
            continue
        if a <= b <= c and not a <= c:
            t.fail(f"transitivity broken at ({a}, {b}, {c})")
            continue
        t.ok()
    return t


def _audit_ms2(pref: InducedPreference, rng: random.Random, samples: int) -> _Tally:
    t = _Tally()
    g = pref.game
    for _ in range(samples):
        p, q, r = (random_profile(rng, g) for _ in range(3))
        i = rng.choice((1, 2))
        a = random_weight(rng)
        left = _with_coord(r, i, mix(_coord(p, i), _coord(q, i), a))
        right = _with_coord(r, i, mix(_coord(q, i), _coord(p, i), 1 - a))
        if pref.utility(left) == pref.utility(right):
            t.ok()
        else:
            t.fail(f"commutativity broken at weight {a}, coordinate {i}")
    return t


def _audit_ms3(pref: InducedPreference, rng: random.Random, samples: int) -> _Tally:
    t = _Tally()
    g = pref.game
    for _ in range(samples):
        p, q, r = (random_profile(rng, g) for _ in range(3))
        i = rng.choice((1, 2))
        a = random_weight(rng)
        b = random_weight(rng)
        pi, qi = _coord(p, i), _coord(q, i)
        left = _with_coord(r, i, mix(mix(pi, qi, a), qi, b))
        right = _with_coord(r, i, mix(pi, qi, a * b))
        if pref.utility(left) == pref.utility(right):
            t.ok()
        else:
            t.fail(f"distributivity broken at weights ({a}, {b}), coordinate {i}")
    return t


def _audit_ms4(pref: InducedPreference, rng: random.Random, samples: int) -> _Tally:
    t = _Tally()
    g = pref.game
    for _ in range(samples):
        p = random_profile(rng, g)
        q = random_profile(rng, g)
        i = rng.choice((1, 2))
        ri = random_strategy(rng, g.rows if i == 1 else g.cols)
        up = pref.utility(p)
        uq = pref.utility(q)
        urp = pref.utility(_with_coord(p, i, ri))
        if up < uq < urp:
            base, top = _coord(p, i), ri
        elif urp < uq < up:
            # the premise fires with the roles of p_i and r_i exchanged
            base, top = ri, _coord(p, i)
            p = _with_coord(p, i, ri)
            up, urp = urp, up
        else:
            t.skip()
            continue
        alpha, beta = ms4_witness(up, uq, urp)
        low = pref.utility(_with_coord(p, i, mix(base, top, alpha)))
        high = pref.utility(_with_coord(p, i, mix(base, top, beta)))
        if 0 < alpha < 1 and 0 < beta < 1 and low < uq < high:
            t.ok()
        else:
            t.fail(f"solvability witness failed at ({up}, {uq}, {urp})")
    return t


def _indifferent_strategy(
    pref: InducedPreference, q: MixedProfile, j: int, target: Fraction
) -> MixedStrategy | None:
    """A strategy s with utility(s, q_{-j}) == target, or None if unreachable.

    The utility is linear in the j-coordinate, so its range over the simplex
    is the interval spanned by the pure strategies; any achievable target is
    hit exactly by a two-point mixture.
    """
    n = pref.game.rows if j == 1 else pref.game.cols
    values = [
        pref.utility(_with_coord(q, j, pure_strategy(k, n))) for k in range(n)
    ]
    lo, hi = min(values), max(values)
    if not lo <= target <= hi:
        return None
    if lo == hi:
        return pure_strategy(0, n)
    k_lo = values.index(lo)
    k_hi = values.index(hi)
    w = (hi - target) / (hi - lo)
    return mix(pure_strategy(k_lo, n), pure_strategy(k_hi, n), w)


def _audit_ms5(pref: InducedPreference, rng: random.Random, samples: int) -> _Tally:
    t = _Tally()
    g = pref.game
    for _ in range(samples):
        p = random_profile(rng, g)
        q = random_profile(rng, g)
        if pref.utility(p) == pref.utility(q):
            t.skip()
            continue
        if pref.utility(p) > pref.utility(q):
            p, q = q, p
        i = rng.choice((1, 2))
        j = rng.choice((1, 2))
        ri = random_strategy(rng, g.rows if i == 1 else g.cols)
        target = pref.utility(_with_coord(p, i, ri))
        sj = _indifferent_strategy(pref, q, j, target)
        if sj is None:
            t.skip()
            continue
        a = random_open_weight(rng)
        left = _with_coord(p, i, mix(_coord(p, i), ri, a))
        right = _with_coord(q, j, mix(_coord(q, j), sj, a))
        if pref.utility(left) < pref.utility(right):
            t.ok()
        else:
            t.fail(
                f"independence broken at weight {a}, coordinates ({i}, {j})"
            )
    return t


_AUDITORS = {
    "MS1": _audit_ms1,
    "MS2": _audit_ms2,
    "MS3": _audit_ms3,
    "MS4": _audit_ms4,
    "MS5": _audit_ms5,
}


def audit_mixture_axioms(
    game: BimatrixGame, lens: Lens, samples: int, seed: int
) -> AxiomReport:
    """Run the five axiom audits with an independent seed stream per axiom."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    pref = InducedPreference(game, lens)
    stats: dict[str, AxiomStats] = {}
    for k, name in enumerate(AXIOM_NAMES):
        rng = random.Random(seed * 8 + k)
        stats[name] = _AUDITORS[name](pref, rng, samples).stats(samples)
    return AxiomReport(lens=lens, samples=samples, seed=seed, axioms=stats)
