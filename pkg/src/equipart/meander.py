"""Direct partition construction for the two divisibility base cases.

When ``2k`` divides ``n`` (n even) or ``n + 1`` (n odd), set ``j`` can be
filled directly by interleaving two arithmetic progressions of stride
``2k``: a descending-anchored line (I) and an ascending line (II).

even case, block i = 1 .. n/2k:       (I) 2ki - (j-1)    (II) 2k(i-1) + j
odd case,  block i = 1 .. (n+1)/2k:   (I) 2ki - j        (II) 2k(i-1) + (j-1)

The odd case generates the value 0 once (block 1 of set 1, line II) purely
as bookkeeping; it is counted as an insertion but dropped from the output,
so both cases place each element of {1..n} exactly once.
"""

from __future__ import annotations

from itertools import chain
from typing import Iterator, NamedTuple

from .core import InvariantError, Partition, PreconditionError, ProblemInstance


class MeanderAssignment(NamedTuple):
    """One generated element: set index j, block i (both 1-based), line label."""

    set_index: int
    block: int
    label: str  # "I" or "II"
    value: int


def even_assignments(n: int, k: int) -> Iterator[MeanderAssignment]:
    """Yield the even-case assignments in nested loop order (j outer, i inner)."""
    two_k = 2 * k
    blocks = n // two_k
    for j in range(1, k + 1):
        for i in range(1, blocks + 1):
            yield MeanderAssignment(j, i, "I", two_k * i - (j - 1))
            yield MeanderAssignment(j, i, "II", two_k * (i - 1) + j)


def odd_assignments(n: int, k: int) -> Iterator[MeanderAssignment]:
    """Yield the odd-case assignments, including the bookkeeping 0."""
    two_k = 2 * k
    blocks = (n + 1) // two_k
    for j in range(1, k + 1):
        for i in range(1, blocks + 1):
            yield MeanderAssignment(j, i, "I", two_k * i - j)
            yield MeanderAssignment(j, i, "II", two_k * (i - 1) + (j - 1))


def build_even(n: int, k: int) -> tuple[list[list[int]], int]:
    """Fill the k sets for the even case; returns (sets, insertion count).

    Equivalent to consuming :func:`even_assignments`, but built from range
    objects per set: within one set, line II of block i precedes line I of
    block i, which precedes line II of block i + 1, so zipping the two
    progressions already yields ascending order.
    """
    two_k = 2 * k
    sets: list[list[int]] = []
    insertions = 0
    for j in range(1, k + 1):
        ascending = range(j, n - two_k + j + 1, two_k)  # line II
        descending_anchor = range(two_k - j + 1, n - j + 2, two_k)  # line I
        members = list(chain.from_iterable(zip(ascending, descending_anchor)))
        insertions += len(members)
        sets.append(members)
    return sets, insertions


def build_odd(n: int, k: int) -> tuple[list[list[int]], int]:
    """Fill the k sets for the odd case; returns (sets, insertion count).

    The count includes the generated 0, which is removed from set 1 before
    returning, so the count is n + 1 while the output covers {1..n}.
    """
    two_k = 2 * k
    sets: list[list[int]] = []
    insertions = 0
    for j in range(1, k + 1):
        ascending = range(j - 1, n - two_k + j + 1, two_k)  # line II
        descending_anchor = range(two_k - j, n - j + 2, two_k)  # line I
        members = list(chain.from_iterable(zip(ascending, descending_anchor)))
        insertions += len(members)
        sets.append(members)
    if not sets[0] or sets[0][0] != 0:
        raise InvariantError("odd-case bookkeeping element 0 not generated first")
    del sets[0][0]
    return sets, insertions


def meander_even(instance: ProblemInstance) -> Partition:
    """Solve an instance with n even and 2k | n in exactly n insertions."""
    n, k = instance.n, instance.k
    if n % 2 != 0 or n % (2 * k) != 0:
        raise PreconditionError(f"even meander needs 2k | n, got n={n}, k={k}")
    sets, _ = build_even(n, k)
    return Partition(instance, tuple(tuple(s) for s in sets))


def meander_odd(instance: ProblemInstance) -> Partition:
    """Solve an instance with n odd and 2k | n + 1 in n + 1 insertions."""
    n, k = instance.n, instance.k
    if n % 2 != 1 or (n + 1) % (2 * k) != 0:
        raise PreconditionError(f"odd meander needs 2k | n+1, got n={n}, k={k}")
    sets, _ = build_odd(n, k)
    return Partition(instance, tuple(tuple(s) for s in sets))
