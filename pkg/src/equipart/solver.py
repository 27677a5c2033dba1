"""Recursive solver: classify, reduce to a smaller instance, merge back.

Every valid instance falls into exactly one case, checked in this order:

  meander       2k | n or 2k | n+1; fill all sets directly and stop.
  smaller       t >= 2n; pin the pair {n-2k+j, n-(j-1)} into every set j
                (each pair sums to 2(n-k)+1) and recurse on
                (n-2k, k, t-2(n-k)-1), whose sets complete the same k sets.
  greater-even  t < 2n, t even; sets 1..(2n-t)/2 are finished whole as
                {t-n+(j-1), n-(j-1)} (sum t), the element t/2 sits alone in
                one half of the next set, and the recursion on
                (t-n-1, 2(k-n)+t-1, t/2) fills the remaining half-slots,
                two child sets per remaining parent set.
  greater-odd   t < 2n, t odd; sets 1..(2n-t+1)/2 are finished whole the
                same way and the recursion on (t-n-1, k-(2n-t+1)/2, t)
                fills each remaining set in one piece.

The chain of reductions is evaluated iteratively (each step has exactly
one child), with every child re-checked against the input contract, and
elements are written straight into their final set through a composed
slot map, so each of the n elements is placed exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import InvariantError, Partition, PreconditionError, ProblemInstance
from .meander import meander_even, meander_odd
from .trace import Trace, TraceSymbol

# merge_plan half markers: a child set lands either in one half of a split
# parent set or fills the parent set whole.
HALF_FIRST = 1
HALF_SECOND = 2
WHOLE = None


@dataclass(frozen=True)
class Reduction:
    """One non-meander step: pinned elements plus the child instance.

    fixed       (parent set index, element pair) assignments, 0-based
    pivot       (parent set index, element) for the lone middle element
                of the greater-even case, else None
    child       instance handed to the recursive call
    merge_plan  child set index -> (parent set index, half slot)
    """

    label: TraceSymbol
    fixed: tuple[tuple[int, tuple[int, int]], ...]
    pivot: tuple[int, int] | None
    child: ProblemInstance
    merge_plan: tuple[tuple[int, int | None], ...]


@dataclass(frozen=True)
class SolveResult:
    partition: Partition
    trace: Trace
    insertions: int


def classify_case(instance: ProblemInstance) -> TraceSymbol:
    """Return the case label, meander taking precedence."""
    n, k, t = instance.n, instance.k, instance.t
    two_k = 2 * k
    if n % two_k == 0 or (n + 1) % two_k == 0:
        return TraceSymbol.MEANDER
    if t >= 2 * n:
        return TraceSymbol.SMALLER
    return TraceSymbol.GREATER_EVEN if t % 2 == 0 else TraceSymbol.GREATER_ODD


def _require_case(instance: ProblemInstance, expected: TraceSymbol, op: str) -> None:
    actual = classify_case(instance)
    if actual is not expected:
        raise PreconditionError(
            f"{op} applies to case {expected.value}, "
            f"but ({instance.n}, {instance.k}, {instance.t}) is case {actual.value}"
        )


def _exact_div(numerator: int, denominator: int) -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise InvariantError(f"{numerator} is not divisible by {denominator}")
    return quotient


def reduce_smaller(instance: ProblemInstance) -> Reduction:
    """Case t >= 2n: one pair into each of the k sets, child keeps k."""
    _require_case(instance, TraceSymbol.SMALLER, "reduce_smaller")
    n, k, t = instance.n, instance.k, instance.t
    low = range(n - 2 * k + 1, n - k + 1)  # n - 2k + j
    high = range(n, n - k, -1)  # n - (j - 1)
    fixed = tuple(zip(range(k), zip(low, high)))
    child = ProblemInstance(n - 2 * k, k, t - 2 * (n - k) - 1)
    merge_plan = tuple((j, HALF_SECOND) for j in range(k))
    return Reduction(TraceSymbol.SMALLER, fixed, None, child, merge_plan)


def reduce_greater_even(instance: ProblemInstance) -> Reduction:
    """Case t < 2n, t even: finish (2n-t)/2 sets, pin t/2, split the rest."""
    _require_case(instance, TraceSymbol.GREATER_EVEN, "reduce_greater_even")
    n, k, t = instance.n, instance.k, instance.t
    filled = _exact_div(2 * n - t, 2)
    low = range(t - n, t - n + filled)  # t - n + (j - 1)
    high = range(n, n - filled, -1)  # n - (j - 1)
    fixed = tuple(zip(range(filled), zip(low, high)))
    pivot = (filled, _exact_div(t, 2))
    child = ProblemInstance(t - n - 1, 2 * (k - n) + t - 1, t // 2)
    plan: list[tuple[int, int | None]] = [(filled, HALF_SECOND)]
    for j in range(filled + 1, k):
        plan.append((j, HALF_FIRST))
        plan.append((j, HALF_SECOND))
    return Reduction(TraceSymbol.GREATER_EVEN, fixed, pivot, child, tuple(plan))


def reduce_greater_odd(instance: ProblemInstance) -> Reduction:
    """Case t < 2n, t odd: finish (2n-t+1)/2 sets, child fills whole sets."""
    _require_case(instance, TraceSymbol.GREATER_ODD, "reduce_greater_odd")
    n, k, t = instance.n, instance.k, instance.t
    filled = _exact_div(2 * n - t + 1, 2)
    low = range(t - n, t - n + filled)
    high = range(n, n - filled, -1)
    fixed = tuple(zip(range(filled), zip(low, high)))
    child = ProblemInstance(t - n - 1, k - filled, t)
    merge_plan = tuple((filled + c, WHOLE) for c in range(k - filled))
    return Reduction(TraceSymbol.GREATER_ODD, fixed, None, child, merge_plan)


def _check_reduction(parent: ProblemInstance, red: Reduction) -> None:
    """Inline feasibility gate for every recursive descent."""
    child = red.child
    placed = 2 * len(red.fixed) + (1 if red.pivot is not None else 0)
    if placed + child.n != parent.n:
        raise InvariantError(
            f"reduction of ({parent.n}, {parent.k}, {parent.t}) places {placed} "
            f"elements but leaves n'={child.n}"
        )
    if child.n == 0 and child.k == 0:
        return  # nothing left to place; unreachable from valid input
    if child.n < 1 or child.k < 1 or child.t < 1:
        raise InvariantError(
            f"child of ({parent.n}, {parent.k}, {parent.t}) is not positive: "
            f"({child.n}, {child.k}, {child.t})"
        )
    if child.t < child.n:
        raise InvariantError(
            f"child target {child.t} below child size {child.n} "
            f"(parent ({parent.n}, {parent.k}, {parent.t}))"
        )
    if 2 * child.k * child.t != child.n * (child.n + 1):
        raise InvariantError(
            f"child sum mismatch: ({child.n}, {child.k}, {child.t}) "
            f"from parent ({parent.n}, {parent.k}, {parent.t})"
        )
    if len(red.merge_plan) != child.k:
        raise InvariantError(
            f"merge plan covers {len(red.merge_plan)} child sets, expected {child.k}"
        )


def solve_detailed(instance: ProblemInstance, *, record_steps: bool = False) -> SolveResult:
    """Solve an instance and report the trace and total element placements."""
    steps: list[tuple[ProblemInstance, TraceSymbol]] = []
    reductions: list[Reduction] = []
    current = instance
    exhausted = False
    while True:
        label = classify_case(current)
        steps.append((current, label))
        if label is TraceSymbol.MEANDER:
            break
        if label is TraceSymbol.SMALLER:
            red = reduce_smaller(current)
        elif label is TraceSymbol.GREATER_EVEN:
            red = reduce_greater_even(current)
        else:
            red = reduce_greater_odd(current)
        _check_reduction(current, red)
        reductions.append(red)
        current = red.child
        if current.n == 0:
            exhausted = True
            break

    # slot[i] is the final top-level set receiving set i of the current level
    sets: list[list[int]] = [[] for _ in range(instance.k)]
    slot = list(range(instance.k))
    insertions = 0
    for red in reductions:
        for parent, pair in red.fixed:
            sets[slot[parent]].extend(pair)
            insertions += len(pair)
        if red.pivot is not None:
            parent, value = red.pivot
            sets[slot[parent]].append(value)
            insertions += 1
        slot = [slot[parent] for parent, _half in red.merge_plan]

    if not exhausted:
        base = steps[-1][0]
        fill = meander_even if base.n % (2 * base.k) == 0 else meander_odd
        for child_index, members in enumerate(fill(base).sets):
            sets[slot[child_index]].extend(members)
            insertions += len(members)

    for members in sets:
        members.sort()
    partition = Partition(instance, tuple(tuple(members) for members in sets))
    trace = Trace(
        symbols=tuple(label for _, label in steps),
        per_step=tuple(inst for inst, _ in steps) if record_steps else None,
    )
    return SolveResult(partition, trace, insertions)


def solve(instance: ProblemInstance, *, record_steps: bool = False) -> tuple[Partition, Trace]:
    """Solve an instance, returning the partition and its trace."""
    result = solve_detailed(instance, record_steps=record_steps)
    return result.partition, result.trace
