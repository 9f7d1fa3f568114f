from __future__ import annotations

import random
from dataclasses import dataclass

import pytest

from sutratrace.digits import DigitString, parse_operand, value_of

CASES_PER_OPERATION = 1000
SEED = 20240811


def _random_operand(rng: random.Random, max_len: int = 9) -> DigitString:
    length = rng.randint(1, max_len)
    return parse_operand("".join(rng.choice("0123456789") for _ in range(length)))


@dataclass(frozen=True)
class Corpus:
    """Seeded operand sets per operation, lengths 1..9, 1000 cases each."""

    add: list[tuple[DigitString, ...]]
    subtract: list[tuple[DigitString, DigitString]]
    multiply: list[tuple[DigitString, DigitString]]
    sqrt: list[tuple[DigitString]]

    def for_operation(self, operation: str):
        return getattr(self, operation)


@pytest.fixture(scope="session")
def corpus() -> Corpus:
    rng = random.Random(SEED)
    add = [
        tuple(_random_operand(rng) for _ in range(rng.randint(2, 10)))
        for _ in range(CASES_PER_OPERATION)
    ]
    subtract = []
    for _ in range(CASES_PER_OPERATION):
        a, b = _random_operand(rng), _random_operand(rng)
        if value_of(a) < value_of(b):
            a, b = b, a
        subtract.append((a, b))
    multiply = [
        (_random_operand(rng), _random_operand(rng))
        for _ in range(CASES_PER_OPERATION)
    ]
    sqrt = [(_random_operand(rng),) for _ in range(CASES_PER_OPERATION)]
    return Corpus(add=add, subtract=subtract, multiply=multiply, sqrt=sqrt)
