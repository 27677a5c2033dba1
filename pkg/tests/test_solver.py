import pytest

from equipart.core import (
    PreconditionError,
    ProblemInstance,
    enumerate_instances,
    validate_instance,
    verify_partition,
)
from equipart.solver import (
    HALF_FIRST,
    HALF_SECOND,
    WHOLE,
    classify_case,
    reduce_greater_even,
    reduce_greater_odd,
    reduce_smaller,
    solve,
    solve_detailed,
)
from equipart.trace import TraceSymbol, render_trace


def inst(n, k, t):
    return validate_instance(n, k, t)


# --- classification -------------------------------------------------------


@pytest.mark.parametrize(
    "triple,expected",
    [
        ((1337, 3, 298151), TraceSymbol.MEANDER),
        ((1337, 7, 127779), TraceSymbol.SMALLER),
        ((9, 3, 15), TraceSymbol.GREATER_ODD),
        ((15, 6, 20), TraceSymbol.GREATER_EVEN),
        ((25, 5, 65), TraceSymbol.SMALLER),
        ((15, 5, 24), TraceSymbol.GREATER_EVEN),
        ((77, 21, 143), TraceSymbol.GREATER_ODD),
        ((4, 2, 5), TraceSymbol.MEANDER),  # 4 | 4 preempts the odd-target case
    ],
)
def test_classify_case(triple, expected):
    assert classify_case(inst(*triple)) is expected


# --- reductions -----------------------------------------------------------


def test_reduce_smaller_golden():
    red = reduce_smaller(inst(25, 5, 65))
    assert red.fixed == (
        (0, (16, 25)),
        (1, (17, 24)),
        (2, (18, 23)),
        (3, (19, 22)),
        (4, (20, 21)),
    )
    assert all(a + b == 2 * (25 - 5) + 1 for _, (a, b) in red.fixed)
    assert red.pivot is None
    assert (red.child.n, red.child.k, red.child.t) == (15, 5, 24)
    assert red.merge_plan == tuple((j, HALF_SECOND) for j in range(5))


def test_reduce_smaller_deep_chain_head():
    red = reduce_smaller(inst(1337, 7, 127779))
    assert (red.child.n, red.child.k, red.child.t) == (1323, 7, 125118)


def test_reduce_greater_even_golden():
    red = reduce_greater_even(inst(15, 6, 20))
    assert red.fixed == ((0, (5, 15)), (1, (6, 14)), (2, (7, 13)), (3, (8, 12)), (4, (9, 11)))
    assert all(a + b == 20 for _, (a, b) in red.fixed)
    assert red.pivot == (5, 10)
    assert (red.child.n, red.child.k, red.child.t) == (4, 1, 10)
    assert red.merge_plan == ((5, HALF_SECOND),)


def test_reduce_greater_even_split_sets():
    red = reduce_greater_even(inst(15, 5, 24))
    assert red.fixed == ((0, (9, 15)), (1, (10, 14)), (2, (11, 13)))
    assert red.pivot == (3, 12)
    assert (red.child.n, red.child.k, red.child.t) == (8, 3, 12)
    # pivot companion first, then both halves of each following set
    assert red.merge_plan == ((3, HALF_SECOND), (4, HALF_FIRST), (4, HALF_SECOND))

    red = reduce_greater_even(inst(8, 3, 12))
    assert red.fixed == ((0, (4, 8)), (1, (5, 7)))
    assert red.pivot == (2, 6)
    assert (red.child.n, red.child.k, red.child.t) == (3, 1, 6)
    assert red.merge_plan == ((2, HALF_SECOND),)


def test_reduce_greater_odd_golden():
    red = reduce_greater_odd(inst(9, 3, 15))
    assert red.fixed == ((0, (6, 9)), (1, (7, 8)))
    assert red.pivot is None
    assert (red.child.n, red.child.k, red.child.t) == (5, 1, 15)
    assert red.merge_plan == ((2, WHOLE),)


def test_reduce_greater_odd_large_instance():
    red = reduce_greater_odd(inst(1337, 573, 1561))
    assert (red.child.n, red.child.k, red.child.t) == (223, 16, 1561)
    # the child is itself a direct meander instance: 32 | 224
    assert classify_case(red.child) is TraceSymbol.MEANDER


@pytest.mark.parametrize(
    "reducer", [reduce_smaller, reduce_greater_even, reduce_greater_odd]
)
def test_reducers_reject_meander_case(reducer):
    with pytest.raises(PreconditionError):
        reducer(inst(11, 3, 22))


def test_reducers_reject_each_others_cases():
    with pytest.raises(PreconditionError):
        reduce_smaller(inst(9, 3, 15))
    with pytest.raises(PreconditionError):
        reduce_greater_even(inst(9, 3, 15))
    with pytest.raises(PreconditionError):
        reduce_greater_odd(inst(15, 5, 24))


def test_reductions_conserve_elements_and_sums():
    # fixed elements + pivot + child universe {1..n'} == {1..n}, exactly
    for n in range(2, 121):
        for k, t in enumerate_instances(n):
            instance = inst(n, k, t)
            label = classify_case(instance)
            if label is TraceSymbol.MEANDER:
                continue
            if label is TraceSymbol.SMALLER:
                red = reduce_smaller(instance)
                pair_sum = 2 * (n - k) + 1
            elif label is TraceSymbol.GREATER_EVEN:
                red = reduce_greater_even(instance)
                pair_sum = t
            else:
                red = reduce_greater_odd(instance)
                pair_sum = t
            assert all(a + b == pair_sum for _, (a, b) in red.fixed)
            pool = [x for _, pair in red.fixed for x in pair]
            if red.pivot is not None:
                pool.append(red.pivot[1])
            pool.extend(range(1, red.child.n + 1))
            assert sorted(pool) == list(range(1, n + 1)), (n, k, t)
            # children always satisfy the full input contract
            validate_instance(red.child.n, red.child.k, red.child.t)
            assert len(red.merge_plan) == red.child.k
            assert all(0 <= parent < k for parent, _ in red.merge_plan)


# --- full solves ----------------------------------------------------------


def test_solve_greater_odd_then_meander():
    partition, trace = solve(inst(9, 3, 15))
    assert partition.sets == ((6, 9), (7, 8), (1, 2, 3, 4, 5))
    assert render_trace(trace) == "go m"


def test_solve_chain_through_all_reduction_kinds():
    partition, trace = solve(inst(25, 5, 65))
    assert trace.symbols == (
        TraceSymbol.SMALLER,
        TraceSymbol.GREATER_EVEN,
        TraceSymbol.GREATER_EVEN,
        TraceSymbol.MEANDER,
    )
    assert render_trace(trace) == "s ge^2 m"
    assert verify_partition(partition.instance, partition).ok


def test_solve_golden_traces():
    _, trace = solve(inst(1337, 223, 4011))
    assert render_trace(trace) == "m"
    partition, trace = solve(inst(1337, 7, 127779))
    assert render_trace(trace) == "s^94 go m"
    assert verify_partition(partition.instance, partition).ok


def test_solve_records_steps_on_request():
    _, trace = solve(inst(25, 5, 65))
    assert trace.per_step is None
    _, trace = solve(inst(25, 5, 65), record_steps=True)
    assert trace.per_step is not None
    assert len(trace.per_step) == len(trace.symbols)
    assert trace.per_step[0] == ProblemInstance(25, 5, 65)
    # n strictly decreases along the chain
    sizes = [step.n for step in trace.per_step]
    assert sizes == sorted(sizes, reverse=True) and len(set(sizes)) == len(sizes)


def test_solve_sound_and_linear_for_all_small_instances():
    for n in range(1, 151):
        for k, t in enumerate_instances(n):
            instance = inst(n, k, t)
            result = solve_detailed(instance)
            assert result.insertions == n
            report = verify_partition(instance, result.partition)
            assert report.ok, (n, k, t, report.first_violation)
            assert result.trace.symbols[-1] is TraceSymbol.MEANDER


def test_solve_sets_are_ascending_and_in_construction_order():
    partition, _ = solve(inst(15, 5, 24))
    assert all(list(s) == sorted(s) for s in partition.sets)
    # first sets are the ones fixed first by the reduction
    assert partition.sets[0] == (9, 15)
    assert partition.sets[1] == (10, 14)
    assert partition.sets[2] == (11, 13)
    assert 12 in partition.sets[3]
