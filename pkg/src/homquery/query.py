"""
Query algorithms over hom counts: non-adaptive algorithms as a fixed
query tuple plus an acceptance predicate, adaptive algorithms as decision
callbacks over the transcript of answers so far.

Orientation LEFT asks hom(F, input); RIGHT asks hom(input, F).  Answers
are exact integers under the counting semiring and 0/1 under the Boolean
one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Union

from .homs import BOOLEAN, COUNT, hom_value
from .structures import GuardExceeded, Structure

LEFT = "left"
RIGHT = "right"

YES = True
NO = False

Transcript = tuple[int, ...]


class StrategyContractError(Exception):
    "The strategy violated the decision-tree contract (leaf condition etc.)."


class StepLimitExceeded(Exception):
    "An adaptive run issued more queries than its step cap allows."


@dataclass(frozen=True)
class Query:
    structure: Structure


@dataclass(frozen=True)
class Halt:
    verdict: bool


StrategyDecision = Union[Query, Halt]
Strategy = Callable[[Transcript], StrategyDecision]


@dataclass(frozen=True)
class NonAdaptiveAlgorithm:
    orientation: str
    queries: tuple[Structure, ...]
    # either a finite set of accepted answer vectors or a predicate
    accept: Union[frozenset, Callable[[Transcript], bool]]

    def __post_init__(self):
        if self.orientation not in (LEFT, RIGHT):
            raise ValueError("orientation must be left or right")
        if len(self.queries) < 1:
            raise ValueError("at least one query is required")

    def accepts(self, answers: Transcript) -> bool:
        if callable(self.accept):
            return bool(self.accept(answers))
        return tuple(answers) in self.accept


@dataclass(frozen=True)
class RunReport:
    verdict: bool
    transcript: Transcript
    queries_issued: tuple[Structure, ...] = field(hash=False)

    @property
    def query_count(self) -> int:
        return len(self.transcript)


def _answer(query: Structure, input_structure: Structure,
            orientation: str, semiring: str) -> int:
    if query.signature != input_structure.signature:
        raise ValueError("query signature does not match the input")
    if orientation == LEFT:
        return hom_value(query, input_structure, semiring)
    return hom_value(input_structure, query, semiring)


def run_non_adaptive(alg: NonAdaptiveAlgorithm, input_structure: Structure,
                     semiring: str = COUNT) -> RunReport:
    answers = tuple(_answer(q, input_structure, alg.orientation, semiring)
                    for q in alg.queries)
    return RunReport(alg.accepts(answers), answers, alg.queries)


def default_step_cap(input_structure: Structure) -> int:
    n = input_structure.domain_size
    return 2 * n + n * n


def run_adaptive(strategy: Strategy, input_structure: Structure,
                 orientation: str, semiring: str = COUNT,
                 max_steps: Optional[int] = None,
                 use_default_cap: bool = True) -> RunReport:
    """
    Iterate the strategy on the growing transcript until it halts.
    max_steps=None with use_default_cap=True applies the built-in cap
    2*|input| + |input|^2; exceeding the cap is an error, never a verdict.
    """
    if max_steps is None and use_default_cap:
        max_steps = default_step_cap(input_structure)
    transcript: Transcript = ()
    issued: list[Structure] = []
    while True:
        try:
            decision = strategy(transcript)
        except (StrategyContractError, GuardExceeded):
            raise
        except Exception as exc:
            raise StrategyContractError(
                f"strategy undefined on reachable transcript {transcript}") from exc
        if isinstance(decision, Halt):
            return RunReport(decision.verdict, transcript, tuple(issued))
        if not isinstance(decision, Query):
            raise StrategyContractError(f"invalid decision {decision!r}")
        if max_steps is not None and len(issued) >= max_steps:
            raise StepLimitExceeded(f"exceeded step cap {max_steps}")
        answer = _answer(decision.structure, input_structure, orientation, semiring)
        issued.append(decision.structure)
        transcript = transcript + (answer,)


def bounded_depth_check(strategy: Strategy, inputs, orientation: str,
                        semiring: str, k: int) -> bool:
    "Empirically: do all runs on the given inputs use at most k queries?"
    for s in inputs:
        report = run_adaptive(strategy, s, orientation, semiring,
                              max_steps=max(k + 1, default_step_cap(s)))
        if report.query_count > k:
            return False
    return True


def lift_non_adaptive(alg: NonAdaptiveAlgorithm) -> Strategy:
    "The adaptive strategy issuing the fixed queries in order, then halting."
    def strategy(transcript: Transcript) -> StrategyDecision:
        if len(transcript) < len(alg.queries):
            return Query(alg.queries[len(transcript)])
        if len(transcript) == len(alg.queries):
            return Halt(alg.accepts(transcript))
        raise StrategyContractError("probed past the halting transcript")
    return strategy


def flatten_adaptive_boolean(strategy: Strategy, k: int,
                             orientation: str) -> NonAdaptiveAlgorithm:
    """
    Turn a depth-<=k Boolean adaptive strategy into a non-adaptive
    algorithm by materializing every query reachable within k steps
    (at most 2^k - 1 of them, one per internal tree node).
    """
    nodes: dict[Transcript, Structure] = {}

    def explore(transcript: Transcript):
        try:
            decision = strategy(transcript)
        except Exception as exc:
            raise StrategyContractError(
                f"strategy undefined on transcript {transcript}") from exc
        if isinstance(decision, Halt):
            return
        if len(transcript) >= k:
            raise StrategyContractError(
                f"strategy exceeds depth {k} on transcript {transcript}")
        nodes[transcript] = decision.structure
        for bit in (0, 1):
            explore(transcript + (bit,))

    explore(())
    ordered = sorted(nodes)  # breadth-like, deterministic
    ordered.sort(key=len)
    index = {t: i for i, t in enumerate(ordered)}
    queries = tuple(nodes[t] for t in ordered)

    def accept(answers: Transcript) -> bool:
        transcript: Transcript = ()
        while True:
            decision = strategy(transcript)
            if isinstance(decision, Halt):
                return decision.verdict
            transcript = transcript + (answers[index[transcript]],)

    return NonAdaptiveAlgorithm(orientation, queries, accept)
