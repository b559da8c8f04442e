"""A small, complete, deterministic DPLL solver.

Plain chronological DPLL over two watched literals per clause: no clause
learning, no restarts, no randomness, no heuristics beyond the fixed rule
"branch on the lowest-index unassigned variable, try true first".  The
point is reproducibility, not raw speed: identical formulas always produce
identical results, models included.

Internally a literal is coded as 2*var for the positive and 2*var+1 for
the negative phase, so `code ^ 1` negates and `code >> 1` recovers the
variable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .cnf import CnfFormula

DEFAULT_DECISION_BUDGET = 10_000_000


class SolveStatus(enum.Enum):
    SAT = "sat"
    UNSAT = "unsat"
    BUDGET_EXCEEDED = "budget exceeded"


@dataclass(frozen=True)
class SolveResult:
    """Solver outcome; `model` is a total assignment only for SAT."""

    status: SolveStatus
    model: Optional[dict[int, bool]]
    decisions: int

    @property
    def is_sat(self) -> bool:
        return self.status is SolveStatus.SAT


def _code(lit: int) -> int:
    return lit << 1 if lit > 0 else (-lit << 1) | 1


def solve(formula: CnfFormula, budget: int = DEFAULT_DECISION_BUDGET) -> SolveResult:
    """Decide the formula, counting every branch assignment as a decision.

    Both phases of a branch variable count (the flip after a conflict is a
    decision too).  Once the count passes `budget` the search stops with
    BUDGET_EXCEEDED, which is an "I don't know", never an UNSAT.
    """
    n = formula.num_vars
    # truth value per literal code: 0 unassigned, 1 true, 2 false
    val = [0] * (2 * n + 2)
    watches: list[list[list[int]]] = [[] for _ in range(2 * n + 2)]
    trail: list[int] = []
    qhead = 0
    decisions = 0

    def assign(code: int) -> None:
        val[code] = 1
        val[code ^ 1] = 2
        trail.append(code)

    units: list[int] = []
    for clause in formula.clauses:
        if not clause:
            return SolveResult(SolveStatus.UNSAT, None, 0)
        codes = [_code(lit) for lit in clause]
        if len(codes) == 1:
            units.append(codes[0])
        else:
            # positions 0 and 1 are the watched literals
            watches[codes[0]].append(codes)
            watches[codes[1]].append(codes)

    for code in units:
        if val[code] == 2:
            return SolveResult(SolveStatus.UNSAT, None, 0)
        if val[code] == 0:
            assign(code)

    def propagate() -> bool:
        """Run unit propagation to fixpoint; False means conflict."""
        nonlocal qhead
        while qhead < len(trail):
            falsified = trail[qhead] ^ 1
            qhead += 1
            watchlist = watches[falsified]
            kept: list[list[int]] = []
            for ci, cl in enumerate(watchlist):
                if cl[0] == falsified:
                    cl[0] = cl[1]
                    cl[1] = falsified
                other = cl[0]
                if val[other] == 1:
                    kept.append(cl)
                    continue
                for k in range(2, len(cl)):
                    if val[cl[k]] != 2:
                        cl[1] = cl[k]
                        cl[k] = falsified
                        watches[cl[1]].append(cl)
                        break
                else:
                    kept.append(cl)
                    if val[other] == 2:
                        kept.extend(watchlist[ci + 1 :])
                        watches[falsified] = kept
                        return False
                    assign(other)
            watches[falsified] = kept
        return True

    # decision stack entries: (trail length at decision, literal code, flipped?)
    stack: list[tuple[int, int, bool]] = []
    search_from = 1

    while True:
        if propagate():
            if len(trail) == n:
                model = {v: val[v << 1] == 1 for v in range(1, n + 1)}
                return SolveResult(SolveStatus.SAT, model, decisions)
            var = search_from
            while val[var << 1]:
                var += 1
            decisions += 1
            if decisions > budget:
                return SolveResult(SolveStatus.BUDGET_EXCEEDED, None, decisions)
            stack.append((len(trail), var << 1, False))
            assign(var << 1)
            search_from = var + 1
        else:
            while stack and stack[-1][2]:
                stack.pop()
            if not stack:
                return SolveResult(SolveStatus.UNSAT, None, decisions)
            height, code, _ = stack.pop()
            while len(trail) > height:
                undone = trail.pop()
                val[undone] = 0
                val[undone ^ 1] = 0
            qhead = height
            decisions += 1
            if decisions > budget:
                return SolveResult(SolveStatus.BUDGET_EXCEEDED, None, decisions)
            stack.append((height, code ^ 1, True))
            assign(code ^ 1)
            # variables below the decision variable are all still assigned
            search_from = (code >> 1) + 1
