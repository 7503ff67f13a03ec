"""State-feedback synthesis for observability, and the controllability verdict.

Whether any state feedback (any number of new inputs) can make an
unobservable network observable is decided by searching closed-loop
controllers only: slicing one column per block out of a general
controller yields a closed loop whose pair-graph edges are a subset of
the general feedback system's, so if some feedback works, some closed
loop works too. The closed-loop space is finite, and two controllers
inducing the same transition map are interchangeable, so the search
enumerates transition maps directly:

* every choice assigns each state a successor from the columns of its
  own transition block;
* two equal-output states must get distinct successors, otherwise their
  pair merges into the diagonal and the closed loop is unobservable --
  so choices are restricted to be injective within each output class.

The number of such choices per class (``injective_choice_count``)
multiplies into the refined candidate bound; the unrestricted product
of block column counts is the naive bound. A class with zero injective
choices, or a structural obstruction (two equal-output states with
identical constant blocks, or a pair locked onto itself), proves that
no state feedback whatsoever can help.

Controllability is the opposite story: feedback only ever removes
transition-graph edges, so an uncontrollable network can never be made
controllable and the only verdicts are "already controllable" (which
feedback may still destroy) and "never synthesizable".
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import prod
from types import MappingProxyType
from typing import Iterator, Mapping

from . import kernel
from .analysis import is_controllable, is_observable
from .feedback import ClosedLoopController
from .model import Lcn


@dataclass(frozen=True)
class OutputClass:
    """States sharing one output value, ascending."""

    output_index: int
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class OutputClassPartition:
    """Partition of the state set by output value, classes in ascending
    output order."""

    classes: tuple[OutputClass, ...]


class Verdict(enum.Enum):
    SYNTHESIZED = "SYNTHESIZED"
    NOT_SYNTHESIZABLE = "NOT_SYNTHESIZABLE"
    DECISION_INCOMPLETE = "DECISION_INCOMPLETE"


class ControllabilityVerdict(enum.Enum):
    #: Controllable as given; note feedback can still destroy this.
    ALREADY_CONTROLLABLE = "ALREADY_CONTROLLABLE"
    #: Uncontrollable, and no state feedback of any size can help.
    NEVER_SYNTHESIZABLE = "NEVER_SYNTHESIZABLE"


@dataclass(frozen=True)
class Obstruction:
    """Two equal-output states whose blocks rule out synthesis outright.

    kind "constant_blocks": both blocks are the same constant map onto
    ``target`` (their pair always merges). kind "locked_pair": each
    block constantly maps onto one of the two states (their pair loops
    forever).
    """

    kind: str
    j: int
    k: int
    target: int | None = None


@dataclass(frozen=True)
class SynthesisReport:
    verdict: Verdict
    witness: ClosedLoopController | None
    naive_bound: int
    refined_bound: int
    num_factors: tuple[int, ...]
    candidates_checked: int
    pruned_by: Mapping[str, int] = field(default_factory=dict)
    already_observable: bool = False
    obstruction: Obstruction | None = None
    zero_choice_class: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "pruned_by", MappingProxyType(dict(self.pruned_by)))


def output_partition(lcn: Lcn) -> OutputClassPartition:
    by_output: dict[int, list[int]] = {}
    for x in range(1, lcn.state_dim + 1):
        by_output.setdefault(lcn.output(x), []).append(x)
    classes = tuple(
        OutputClass(y, tuple(members)) for y, members in sorted(by_output.items())
    )
    return OutputClassPartition(classes)


def _successor_options(lcn: Lcn, state: int) -> list[int]:
    """Distinct columns of the state's block, ascending."""
    return sorted(set(lcn.block(state).col_indices))


def structural_obstruction(lcn: Lcn) -> Obstruction | None:
    """First obstruction over state pairs (j, k), j < k, in order;
    "constant_blocks" is checked before "locked_pair" for each pair."""
    n, m = lcn.state_dim, lcn.input_dim
    const = []  # constant target of each block, or None
    for x in range(1, n + 1):
        cols = set(lcn.block(x).col_indices)
        const.append(next(iter(cols)) if len(cols) == 1 else None)
    for j in range(1, n):
        for k in range(j + 1, n + 1):
            if lcn.output(j) != lcn.output(k):
                continue
            cj, ck = const[j - 1], const[k - 1]
            if cj is None or ck is None:
                continue
            if cj == ck:
                return Obstruction("constant_blocks", j, k, cj)
            if (cj == j and ck == k) or (cj == k and ck == j):
                return Obstruction("locked_pair", j, k)
    return None


def injective_choice_count(lcn: Lcn, partition: OutputClassPartition, i: int) -> int:
    """Number of ways to give class i's members pairwise-distinct
    successors, each drawn from its own block columns (class index
    1-based). Depth-first count with a used-value set."""
    members = partition.classes[i - 1].members
    options = [_successor_options(lcn, x) for x in members]
    used: set[int] = set()

    def count(pos: int) -> int:
        if pos == len(members):
            return 1
        total = 0
        for v in options[pos]:
            if v in used:
                continue
            used.add(v)
            total += count(pos + 1)
            used.discard(v)
        return total

    return count(0)


def candidate_bounds(lcn: Lcn) -> tuple[int, int]:
    """(naive, refined) candidate counts: product of block column counts
    versus product of per-class injective choice counts."""
    naive = prod(len(_successor_options(lcn, x)) for x in range(1, lcn.state_dim + 1))
    part = output_partition(lcn)
    refined = prod(
        injective_choice_count(lcn, part, i) for i in range(1, len(part.classes) + 1)
    )
    return naive, refined


def find_zero_choice_class(lcn: Lcn, partition: OutputClassPartition) -> int | None:
    """1-based index of the first class admitting no injective choice."""
    for i in range(1, len(partition.classes) + 1):
        if injective_choice_count(lcn, partition, i) == 0:
            return i
    return None


def _sweep_arguments(lcn: Lcn, partition: OutputClassPartition):
    out = [lcn.output(x) for x in range(1, lcn.state_dim + 1)]
    members: list[int] = []
    class_sizes: list[int] = []
    options_flat: list[int] = []
    option_offsets = [0]
    for cls in partition.classes:
        class_sizes.append(cls.size)
        for x in cls.members:
            members.append(x)
            options_flat.extend(_successor_options(lcn, x))
            option_offsets.append(len(options_flat))
    return out, members, class_sizes, options_flat, option_offsets


def _min_input_for(lcn: Lcn, state: int, target: int) -> int:
    for u in range(1, lcn.input_dim + 1):
        if lcn.step(state, u) == target:
            return u
    raise ValueError(f"state {state} never reaches {target}")


def controller_for_map(lcn: Lcn, successors) -> ClosedLoopController:
    """Canonical closed loop realizing a transition map: per state, the
    least input producing the wanted successor."""
    return ClosedLoopController(
        tuple(_min_input_for(lcn, x, t) for x, t in enumerate(successors, start=1))
    )


def enumerate_candidates(lcn: Lcn,
                         partition: OutputClassPartition | None = None
                         ) -> Iterator[ClosedLoopController]:
    """All within-class-injective closed-loop candidates, one per distinct
    transition map, in lexicographic order of chosen successor values
    (classes in ascending output order, members ascending, values
    ascending). Yields exactly the refined bound."""
    if partition is None:
        partition = output_partition(lcn)
    for succ in _assignments(lcn, partition):
        yield controller_for_map(lcn, succ)


def _assignments(lcn: Lcn, partition: OutputClassPartition) -> Iterator[tuple[int, ...]]:
    """Successor tuples (indexed by state) in sweep order."""
    n = lcn.state_dim
    order: list[int] = []
    boundaries: list[int] = [0]
    for cls in partition.classes:
        order.extend(cls.members)
        boundaries.append(len(order))
    options = [_successor_options(lcn, x) for x in order]
    class_of = [0] * n
    for c in range(len(partition.classes)):
        for pos in range(boundaries[c], boundaries[c + 1]):
            class_of[pos] = c
    used: list[set[int]] = [set() for _ in partition.classes]
    succ = [0] * (n + 1)

    def rec(pos: int) -> Iterator[tuple[int, ...]]:
        if pos == n:
            yield tuple(succ[1:])
            return
        u = used[class_of[pos]]
        for v in options[pos]:
            if v in u:
                continue
            u.add(v)
            succ[order[pos]] = v
            yield from rec(pos + 1)
            u.discard(v)

    return rec(0)


def synthesize_observability(lcn: Lcn, max_candidates: int | None = None,
                             backend: str = "auto") -> SynthesisReport:
    """Decide whether observability is enforceable by state feedback.

    Already-observable networks short-circuit to SYNTHESIZED with the
    constant-first-input controller as witness (restricting every pair
    to one input removes edges only, so it preserves observability).
    Otherwise the structural obstructions and the zero-choice class test
    run first; then candidates are swept in order until one verifies
    observable. Exhausting them proves no state feedback of any size can
    help. A candidate cap (``max_candidates``) turns exhaustion into
    DECISION_INCOMPLETE instead of guessing.
    """
    part = output_partition(lcn)
    nums = tuple(
        injective_choice_count(lcn, part, i) for i in range(1, len(part.classes) + 1)
    )
    naive = prod(len(_successor_options(lcn, x)) for x in range(1, lcn.state_dim + 1))
    refined = prod(nums)

    if is_observable(lcn):
        witness = ClosedLoopController((1,) * lcn.state_dim)
        return SynthesisReport(Verdict.SYNTHESIZED, witness, naive, refined, nums,
                               candidates_checked=0, already_observable=True)

    pruned: dict[str, int] = {}
    obstruction = structural_obstruction(lcn)
    if obstruction is not None:
        pruned[obstruction.kind] = 1
    zero_class = next((i + 1 for i, v in enumerate(nums) if v == 0), None)
    if zero_class is not None:
        pruned["zero_choice_class"] = 1
    if obstruction is not None or zero_class is not None:
        return SynthesisReport(Verdict.NOT_SYNTHESIZABLE, None, naive, refined, nums,
                               candidates_checked=0, pruned_by=pruned,
                               obstruction=obstruction, zero_choice_class=zero_class)

    impl = kernel.get_backend(backend)
    cap = -1 if max_candidates is None else max_candidates
    status, checked, assignment = impl.sweep_first_observable(
        *_sweep_arguments(lcn, part), cap
    )
    if status == kernel.FOUND:
        return SynthesisReport(Verdict.SYNTHESIZED, controller_for_map(lcn, assignment),
                               naive, refined, nums, candidates_checked=checked)
    if status == kernel.CAP_REACHED:
        return SynthesisReport(Verdict.DECISION_INCOMPLETE, None, naive, refined, nums,
                               candidates_checked=checked)
    return SynthesisReport(Verdict.NOT_SYNTHESIZABLE, None, naive, refined, nums,
                           candidates_checked=checked)


def controllability_synthesis_verdict(lcn: Lcn) -> ControllabilityVerdict:
    """Feedback never adds transition edges, so there is nothing to search."""
    if is_controllable(lcn):
        return ControllabilityVerdict.ALREADY_CONTROLLABLE
    return ControllabilityVerdict.NEVER_SYNTHESIZABLE
