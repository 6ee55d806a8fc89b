"""Independent oracles used to cross-check library results.

Each of these computes a value by a route the library deliberately does not
use: closed-form counting formulas and the fully expanded quartic invariant.
Agreement with the library is then a genuine two-route check.
"""

import itertools
import math
from fractions import Fraction

from schurdet import Partition, Tensor


def hook_length_count(lam: Partition) -> int:
    """Standard tableau count through the hook length product formula."""
    parts = lam.parts
    conj = lam.conjugate().parts
    prod = 1
    for i, row in enumerate(parts):
        for j in range(row):
            prod *= (row - j) + (conj[j] - i) - 1
    return math.factorial(lam.weight) // prod


def ssyt_count(lam: Partition, dim: int) -> int:
    """Semistandard tableaux of shape lam with entries in 1..dim, by brute force.

    Rows weakly increase left to right, columns strictly increase downward.
    """
    parts = lam.parts
    if not parts:
        return 1
    rows: list[list[int]] = []

    def fill(row_index: int) -> int:
        if row_index == len(parts):
            return 1
        length = parts[row_index]
        total = 0
        for values in itertools.combinations_with_replacement(range(1, dim + 1), length):
            if row_index > 0 and any(
                values[j] <= rows[row_index - 1][j] for j in range(length)
            ):
                continue
            rows.append(list(values))
            total += fill(row_index + 1)
            rows.pop()
        return total

    return fill(0)


def expanded_quartic_invariant(tensor: Tensor) -> Fraction:
    """The 2x2x2 invariant as the classical fully expanded degree-4 polynomial."""
    a = {idx: tensor.entry(idx) for idx in itertools.product(range(2), repeat=3)}
    value = (
        a[0, 0, 0] ** 2 * a[1, 1, 1] ** 2
        + a[0, 0, 1] ** 2 * a[1, 1, 0] ** 2
        + a[0, 1, 0] ** 2 * a[1, 0, 1] ** 2
        + a[0, 1, 1] ** 2 * a[1, 0, 0] ** 2
    )
    value -= 2 * (
        a[0, 0, 0] * a[0, 0, 1] * a[1, 1, 0] * a[1, 1, 1]
        + a[0, 0, 0] * a[0, 1, 0] * a[1, 0, 1] * a[1, 1, 1]
        + a[0, 0, 0] * a[0, 1, 1] * a[1, 0, 0] * a[1, 1, 1]
        + a[0, 0, 1] * a[0, 1, 0] * a[1, 0, 1] * a[1, 1, 0]
        + a[0, 0, 1] * a[0, 1, 1] * a[1, 1, 0] * a[1, 0, 0]
        + a[0, 1, 0] * a[0, 1, 1] * a[1, 0, 1] * a[1, 0, 0]
    )
    value += 4 * (
        a[0, 0, 0] * a[0, 1, 1] * a[1, 0, 1] * a[1, 1, 0]
        + a[0, 0, 1] * a[0, 1, 0] * a[1, 0, 0] * a[1, 1, 1]
    )
    return value
