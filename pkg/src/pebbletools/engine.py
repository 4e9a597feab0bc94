"""Exact pebbling reachability and solvability.

A pebbling move removes two pebbles from a vertex and places one pebble on
an adjacent vertex.  A vertex t is *reachable* from a distribution if some
move sequence (possibly empty) ends with a pebble on t; a distribution is
*solvable* if every vertex is reachable.

The decision procedure is a depth-first search over distribution states
(each move strictly decreases the pebble count, so the state graph is a
DAG) with two exact ingredients:

* memoization of failed states, keyed on the full count vector, and
* a weight-function prune: with integer weights 2^(D - dist(v, t)) a move
  never increases the total weight, and a pebble on t alone weighs 2^D, so
  any state of total weight below 2^D is hopeless and is cut immediately.

Both are sound, so verdicts are exact.  Witness move sequences are the
first found under a fixed order (sources ascending, then neighbors
ascending), which makes all outputs deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetError, IllegalMoveError, ReplayError, SizeLimitError
from .graphs import Graph, is_canonical_path

MAX_ENGINE_VERTICES = 20
MAX_ENGINE_PEBBLES = 64


@dataclass(frozen=True)
class Distribution:
    """Immutable pebble counts, one non-negative integer per vertex."""

    counts: tuple[int, ...]

    def __post_init__(self):
        cleaned = tuple(int(c) for c in self.counts)
        if any(c < 0 for c in cleaned):
            raise ValueError(f"negative pebble count in {cleaned}")
        object.__setattr__(self, "counts", cleaned)

    @property
    def size(self) -> int:
        return sum(self.counts)

    def occupied(self, v: int) -> bool:
        return self.counts[v] >= 1

    def __len__(self) -> int:
        return len(self.counts)

    def __getitem__(self, v: int) -> int:
        return self.counts[v]

    def __iter__(self):
        return iter(self.counts)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Distribution":
        """Parse 'c0,c1,...' into a distribution; n, if given, fixes the length."""
        parts = [p.strip() for p in text.split(",")]
        try:
            counts = tuple(int(p) for p in parts)
        except ValueError:
            raise ValueError(f"distribution {text!r} is not a comma-separated "
                             "list of integers") from None
        if any(c < 0 for c in counts):
            raise ValueError(f"distribution {text!r} has a negative count")
        if n is not None and len(counts) != n:
            raise ValueError(f"distribution has {len(counts)} entries, "
                             f"graph has {n} vertices")
        return cls(counts)

    def format(self) -> str:
        return ",".join(str(c) for c in self.counts)


@dataclass(frozen=True)
class Move:
    """One pebbling move: take 2 pebbles from `source`, put 1 on `target`."""

    source: int
    target: int

    def __str__(self) -> str:
        return f"{self.source}->{self.target}"


MoveSequence = tuple[Move, ...]


@dataclass(frozen=True)
class SolveReport:
    """Outcome of a reachability query.

    `witness` is a replayable move sequence when the verdict is true and
    None otherwise; `states_explored` counts search-tree expansions.
    """

    verdict: bool
    witness: MoveSequence | None
    states_explored: int


# ---------------------------------------------------------------------------
# moves


def _moved(state: tuple[int, ...], v: int, u: int) -> tuple[int, ...]:
    if v < u:
        return (state[:v] + (state[v] - 2,) + state[v + 1:u]
                + (state[u] + 1,) + state[u + 1:])
    return (state[:u] + (state[u] + 1,) + state[u + 1:v]
            + (state[v] - 2,) + state[v + 1:])


def apply_move(g: Graph, d: Distribution, m: Move) -> Distribution:
    """Apply one move, returning a new distribution."""
    if not (0 <= m.source < g.n and 0 <= m.target < g.n):
        raise ValueError(f"move {m} out of range for {g.n} vertices")
    if d.counts[m.source] < 2:
        raise IllegalMoveError(
            f"move {m}: source has {d.counts[m.source]} pebbles, needs 2")
    if not g.has_edge(m.source, m.target):
        raise IllegalMoveError(f"move {m}: vertices are not adjacent")
    return Distribution(_moved(d.counts, m.source, m.target))


def replay(g: Graph, d: Distribution, moves: MoveSequence) -> Distribution:
    """Apply a whole move sequence; fails atomically on the first bad move."""
    current = d
    for step, m in enumerate(moves):
        try:
            current = apply_move(g, current, m)
        except (IllegalMoveError, ValueError) as exc:
            raise ReplayError(step, str(exc)) from None
    return current


# ---------------------------------------------------------------------------
# reachability


def _check_engine_inputs(g: Graph, d: Distribution,
                         max_vertices: int, max_pebbles: int) -> None:
    if len(d.counts) != g.n:
        raise ValueError(f"distribution has {len(d.counts)} entries, "
                         f"graph has {g.n} vertices")
    if g.n > max_vertices:
        raise SizeLimitError(f"{g.n} vertices exceeds engine cap {max_vertices}")
    if d.size > max_pebbles:
        raise SizeLimitError(f"{d.size} pebbles exceeds engine cap {max_pebbles}")


def _target_weights(g: Graph, target: int) -> tuple[list[int], int]:
    """Integer weights 2^(D - dist(v, target)) and the threshold 2^D."""
    dist = g.distances_from(target)
    depth = max(dist)
    weights = [0 if dv < 0 else 1 << (depth - dv) for dv in dist]
    return weights, depth


def is_reachable(g: Graph, d: Distribution, target: int, *,
                 max_vertices: int = MAX_ENGINE_VERTICES,
                 max_pebbles: int = MAX_ENGINE_PEBBLES,
                 state_budget: int | None = None) -> SolveReport:
    """Decide whether some move sequence puts a pebble on `target`."""
    _check_engine_inputs(g, d, max_vertices, max_pebbles)
    if not 0 <= target < g.n:
        raise ValueError(f"target {target} out of range for {g.n} vertices")
    counts = d.counts
    if counts[target] >= 1:
        return SolveReport(True, (), 0)

    weights, depth = _target_weights(g, target)
    threshold = 1 << depth
    potential = sum(c * w for c, w in zip(counts, weights))
    if potential < threshold:
        return SolveReport(False, None, 0)

    n = g.n
    nbrs = [g.neighbors(v) for v in range(n)]
    failed: set[tuple[int, ...]] = set()
    states = 0

    def search(state: tuple[int, ...], pot: int) -> MoveSequence | None:
        nonlocal states
        states += 1
        if state_budget is not None and states > state_budget:
            raise BudgetError(f"reachability search exceeded {state_budget} states",
                              examined=states)
        for v in range(n):
            if state[v] < 2:
                continue
            loss = 2 * weights[v]
            for u in nbrs[v]:
                if u == target:
                    return (Move(v, u),)
                child_pot = pot - loss + weights[u]
                if child_pot < threshold:
                    continue
                child = _moved(state, v, u)
                if child in failed:
                    continue
                tail = search(child, child_pot)
                if tail is not None:
                    return (Move(v, u),) + tail
                failed.add(child)
        return None

    witness = search(counts, potential)
    return SolveReport(witness is not None, witness, states)


def is_solvable(g: Graph, d: Distribution, *,
                max_vertices: int = MAX_ENGINE_VERTICES,
                max_pebbles: int = MAX_ENGINE_PEBBLES,
                state_budget: int | None = None) -> bool:
    """Decide whether every vertex is reachable from d.

    Starts with a cheap sufficient test (every vertex occupied or next to a
    vertex holding two or more pebbles); falls back to per-target search,
    targets in increasing index with early exit on the first failure.
    """
    _check_engine_inputs(g, d, max_vertices, max_pebbles)
    counts = d.counts
    covered = True
    for v in range(g.n):
        if counts[v] >= 1:
            continue
        if not any(counts[u] >= 2 for u in g.neighbors(v)):
            covered = False
            break
    if covered:
        return True
    for t in range(g.n):
        if counts[t] >= 1:
            continue
        report = is_reachable(g, d, t, max_vertices=max_vertices,
                              max_pebbles=max_pebbles, state_budget=state_budget)
        if not report.verdict:
            return False
    return True


def max_pebbles_to(g: Graph, d: Distribution, target: int, *,
                   max_vertices: int = MAX_ENGINE_VERTICES,
                   max_pebbles: int = MAX_ENGINE_PEBBLES) -> int:
    """Largest pebble count any move sequence can accumulate on `target`.

    Exact branch-and-bound: the weight function gives the admissible upper
    bound floor(potential / 2^D), and exploration of a state stops as soon
    as its best found value meets that bound.
    """
    _check_engine_inputs(g, d, max_vertices, max_pebbles)
    if not 0 <= target < g.n:
        raise ValueError(f"target {target} out of range for {g.n} vertices")

    weights, depth = _target_weights(g, target)
    n = g.n
    nbrs = [g.neighbors(v) for v in range(n)]
    memo: dict[tuple[int, ...], int] = {}

    def best(state: tuple[int, ...], pot: int) -> int:
        current = state[target]
        bound = pot >> depth
        if bound <= current:
            return current
        achieved = current
        for v in range(n):
            if state[v] < 2:
                continue
            loss = 2 * weights[v]
            for u in nbrs[v]:
                child_pot = pot - loss + weights[u]
                child = _moved(state, v, u)
                value = memo.get(child)
                if value is None:
                    value = best(child, child_pot)
                    memo[child] = value
                if value > achieved:
                    achieved = value
                    if achieved >= bound:
                        return achieved
        return achieved

    potential = sum(c * w for c, w in zip(d.counts, weights))
    return best(d.counts, potential)


def max_pebbles_to_path_greedy(g: Graph, d: Distribution, target: int) -> int:
    """Closed-form transport maximum on a canonically indexed path.

    Fold pebbles inward from each end: carry = (carry + counts[i]) // 2 at
    every vertex strictly between an end and the target.  The two carries
    plus the target's own pebbles give the exact maximum; agreement with
    the generic engine is enforced by the test suite.
    """
    if not is_canonical_path(g):
        raise ValueError("greedy transport requires a canonically indexed path")
    if len(d.counts) != g.n:
        raise ValueError(f"distribution has {len(d.counts)} entries, "
                         f"graph has {g.n} vertices")
    if not 0 <= target < g.n:
        raise ValueError(f"target {target} out of range for {g.n} vertices")
    counts = d.counts
    left = 0
    for i in range(target):
        left = (left + counts[i]) // 2
    right = 0
    for i in range(g.n - 1, target, -1):
        right = (right + counts[i]) // 2
    return left + right + counts[target]
