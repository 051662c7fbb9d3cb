import random
from fractions import Fraction as F

import pytest

from strictgames.errors import FormatError
from strictgames.games import new_game
from strictgames.generators import Family, GenSpec, gen
from strictgames.io import (
    dumps_game,
    game_from_json_dict,
    game_to_json_dict,
    loads_game,
)
from strictgames.rational import format_rational, parse_rational


def test_parse_rational_forms():
    assert parse_rational(5) == F(5)
    assert parse_rational("-7/2") == F(-7, 2)
    assert parse_rational("+3") == F(3)
    assert parse_rational("4/6") == F(2, 3)


@pytest.mark.parametrize(
    "bad", ["1.5", "1e3", "1/-2", "1/0", " 1/2", "", "a", 1.5, None, True]
)
def test_parse_rational_rejects(bad):
    with pytest.raises(FormatError):
        parse_rational(bad)


def test_format_rational_always_shows_denominator():
    assert format_rational(F(3)) == "3/1"
    assert format_rational(F(-1, 2)) == "-1/2"


def test_round_trip_handwritten():
    g = new_game([[F(1, 2), -1]], [[F(-1, 2), 1]])
    assert loads_game(dumps_game(g)) == g
    d = game_to_json_dict(g)
    assert d["u1"] == [["1/2", -1]]


def test_round_trip_generated():
    rng = random.Random(71)
    for family in Family:
        for _ in range(5):
            spec = GenSpec(family, rng.randint(2, 5), rng.randint(2, 5),
                           seed=rng.randint(0, 10**6))
            g = gen(spec)
            assert loads_game(dumps_game(g)) == g


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.pop("rows"),
        lambda d: d.update(rows=0),
        lambda d: d.update(rows="2"),
        lambda d: d.update(u1=[[1, 2]]),
        lambda d: d.update(u2=[[1], [2]]),
        lambda d: d.update(u1=[[1.5, 2], [3, 4]]),
        lambda d: d.update(u1=[["1/0", 2], [3, 4]]),
    ],
)
def test_reject_malformed(mutate):
    d = game_to_json_dict(new_game([[1, 2], [3, 4]], [[4, 3], [2, 1]]))
    mutate(d)
    with pytest.raises(FormatError):
        game_from_json_dict(d)


def test_reject_non_object():
    with pytest.raises(FormatError):
        loads_game("[1, 2]")
    with pytest.raises(FormatError):
        loads_game("not json")
