"""Exhaustive search for two-sided p-multiple factorizations of torsion modules.

Given direct sums S = (+) Z/p^{a_k} and T = (+) Z/p^{b_i}, the search decides
whether homomorphisms A: S -> T and U: T -> S exist with both composites equal
to requested multiplication-by-p^c diagonal endomorphisms (AU on T, UA on S).
Such a pair is what a gold-pair multiplication between two odd TF groups with
different summand counts would provide; a subgroup of a rank-two group has
rank at most two, so when T has three summands of exponent >= 2 the problem is
infeasible, and the search confirms this exhaustively.

A homomorphism Z/p^a -> Z/p^b is cyclic of order p^{min(a,b)}, generated by
x |-> p^{max(b-a,0)} x; each matrix entry is stored as the coefficient t of
that generator, so the raw search space is the product of the p^{min(a,b)}.
The search itself runs digit by digit: solutions modulo p are enumerated in
bulk, and each later p-adic digit is obtained by solving the linearized
constraint system over F_p, which is exhaustive because every solution of the
full system reduces to a solution chain through the stages.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import ContractViolation, SearchSpaceExceeded

__all__ = ["ObstructionProblem", "ObstructionResult", "obstruction_search", "raw_space"]


@dataclass(frozen=True, slots=True)
class ObstructionProblem:
    """Exponent data for the search.

    ``composite_au`` lists the exponent c_i of the requested diagonal p^{c_i}
    on the i-th target summand (the composite A then U measured on T);
    ``composite_ua`` likewise on the source.  ``working_modulus`` optionally
    raises the internal precision; it never affects the answer because every
    congruence is capped at its own modulus, and exists to make simulations of
    torsion-free coefficients explicit.
    """

    source_exponents: tuple[int, ...]
    target_exponents: tuple[int, ...]
    composite_au: tuple[int, ...]
    composite_ua: tuple[int, ...]
    p: int
    working_modulus: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "source_exponents", tuple(self.source_exponents))
        object.__setattr__(self, "target_exponents", tuple(self.target_exponents))
        object.__setattr__(self, "composite_au", tuple(self.composite_au))
        object.__setattr__(self, "composite_ua", tuple(self.composite_ua))
        if not self.source_exponents or not self.target_exponents:
            raise ContractViolation("exponent lists must be nonempty")
        if any(a < 1 for a in self.source_exponents + self.target_exponents):
            raise ContractViolation("cyclic orders must be p^a with a >= 1")
        if len(self.composite_au) != len(self.target_exponents):
            raise ContractViolation("composite_au must list one exponent per target summand")
        if len(self.composite_ua) != len(self.source_exponents):
            raise ContractViolation("composite_ua must list one exponent per source summand")
        if any(c < 0 for c in self.composite_au + self.composite_ua):
            raise ContractViolation("composite exponents must be >= 0")
        if not _is_prime(self.p):
            raise ContractViolation(f"p must be prime, got {self.p}")
        if self.working_modulus is not None and self.working_modulus < max(
            self.source_exponents + self.target_exponents
        ):
            raise ContractViolation("working_modulus below the largest module exponent")


@dataclass(frozen=True, slots=True)
class ObstructionResult:
    feasible: bool
    witness_a: tuple[tuple[int, ...], ...] | None
    witness_u: tuple[tuple[int, ...], ...] | None
    raw_space: int
    states_explored: int


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True, slots=True)
class _Var:
    side: str  # "A" or "U"
    row: int
    col: int
    vshift: int  # forced p-divisibility p^{max(out-in, 0)}
    cap: int  # coefficient lives mod p^cap, cap = min(in, out)


def _variables(prob: ObstructionProblem) -> list[_Var]:
    avars = [
        _Var("A", i, j, max(b - a, 0), min(a, b))
        for i, b in enumerate(prob.target_exponents)
        for j, a in enumerate(prob.source_exponents)
    ]
    uvars = [
        _Var("U", k, l, max(a - b, 0), min(b, a))
        for k, a in enumerate(prob.source_exponents)
        for l, b in enumerate(prob.target_exponents)
    ]
    return avars + uvars


def raw_space(prob: ObstructionProblem) -> int:
    """Number of (A, U) pairs enumerated by the naive coefficient search."""
    total = 1
    for v in _variables(prob):
        total *= prob.p**v.cap
    return total


def _entry_value(prob: ObstructionProblem, var: _Var, t: int) -> int:
    return prob.p**var.vshift * t


def _constraints(prob: ObstructionProblem):
    """All congruences as (kind, row, col, modulus exponent, rhs exponent | None)."""
    m, n = len(prob.target_exponents), len(prob.source_exponents)
    out = []
    for i in range(m):
        for l in range(m):
            rhs = prob.composite_au[i] if i == l else None
            out.append(("AU", i, l, prob.target_exponents[i], rhs))
    for k in range(n):
        for j in range(n):
            rhs = prob.composite_ua[k] if k == j else None
            out.append(("UA", k, j, prob.source_exponents[k], rhs))
    return out


def _stage1_states(prob: ObstructionProblem, variables, ceiling: int) -> np.ndarray:
    """Enumerate all first digits satisfying every congruence modulo p."""
    p = prob.p
    m, n = len(prob.target_exponents), len(prob.source_exponents)
    a_new = [idx for idx, v in enumerate(variables) if v.side == "A" and v.vshift == 0]
    u_new = [idx for idx, v in enumerate(variables) if v.side == "U" and v.vshift == 0]
    if p ** len(a_new) > ceiling or p ** len(u_new) > ceiling:
        raise SearchSpaceExceeded(
            "first-digit enumeration exceeds the ceiling", p ** (len(a_new) + len(u_new))
        )

    def digit_grid(count: int) -> np.ndarray:
        if count == 0:
            return np.zeros((1, 0), dtype=np.int64)
        grid = np.indices((p,) * count).reshape(count, -1).T
        return np.ascontiguousarray(grid[np.lexsort(grid.T[::-1])], dtype=np.int64)

    a_digits = digit_grid(len(a_new))
    u_digits = digit_grid(len(u_new))
    amats = np.zeros((len(a_digits), m, n), dtype=np.int64)
    for pos, idx in enumerate(a_new):
        v = variables[idx]
        amats[:, v.row, v.col] = a_digits[:, pos]
    umats = np.zeros((len(u_digits), n, m), dtype=np.int64)
    for pos, idx in enumerate(u_new):
        v = variables[idx]
        umats[:, v.row, v.col] = u_digits[:, pos]

    rhs_au = np.zeros((m, m), dtype=np.int64)
    for i in range(m):
        rhs_au[i, i] = pow(p, prob.composite_au[i]) % p
    rhs_ua = np.zeros((n, n), dtype=np.int64)
    for k in range(n):
        rhs_ua[k, k] = pow(p, prob.composite_ua[k]) % p

    states = []
    chunk = max(1, 10_000_000 // max(1, len(u_digits) * m * m))
    for lo in range(0, len(a_digits), chunk):
        asub = amats[lo : lo + chunk]
        au = np.einsum("xij,yjk->xyik", asub, umats) % p
        ua = np.einsum("yki,xij->xykj", umats, asub) % p
        ok = np.all(au == rhs_au, axis=(2, 3)) & np.all(ua == rhs_ua, axis=(2, 3))
        xs, ys = np.nonzero(ok)
        for x, y in zip(xs, ys):
            row = np.zeros(len(variables), dtype=np.int64)
            for pos, idx in enumerate(a_new):
                row[idx] = a_digits[lo + x, pos]
            for pos, idx in enumerate(u_new):
                row[idx] = u_digits[y, pos]
            states.append(row)
        if len(states) > ceiling:
            raise SearchSpaceExceeded("state count exceeds the ceiling", len(states))
    if states:
        return np.stack(states)
    return np.zeros((0, len(variables)), dtype=np.int64)


def _solve_gf_p(rows: list[list[int]], rhs: list[int], nvars: int, p: int):
    """Row-reduce over F_p; return (pivots, free columns, reduced system) or None."""
    aug = [row[:] + [r % p] for row, r in zip(rows, rhs)]
    pivots: list[tuple[int, int]] = []
    rank = 0
    for col in range(nvars):
        pivot = next((r for r in range(rank, len(aug)) if aug[r][col] % p), None)
        if pivot is None:
            continue
        aug[rank], aug[pivot] = aug[pivot], aug[rank]
        inv = pow(aug[rank][col], p - 2, p)
        aug[rank] = [(x * inv) % p for x in aug[rank]]
        for r in range(len(aug)):
            if r != rank and aug[r][col] % p:
                factor = aug[r][col]
                aug[r] = [(x - factor * y) % p for x, y in zip(aug[r], aug[rank])]
        pivots.append((rank, col))
        rank += 1
    for r in range(rank, len(aug)):
        if aug[r][nvars] % p:
            return None
    free = [c for c in range(nvars) if c not in {c for _, c in pivots}]
    return pivots, free, aug


def _enumerate_solutions(pivots, free, aug, nvars: int, p: int):
    for assignment in itertools.product(range(p), repeat=len(free)):
        sol = [0] * nvars
        for c, val in zip(free, assignment):
            sol[c] = val
        for r, c in pivots:
            val = aug[r][nvars]
            for fc, fval in zip(free, assignment):
                val -= aug[r][fc] * fval
            sol[c] = val % p
        yield sol


def _verify(prob: ObstructionProblem, variables, state) -> bool:
    p = prob.p
    m, n = len(prob.target_exponents), len(prob.source_exponents)
    aval = [[0] * n for _ in range(m)]
    uval = [[0] * m for _ in range(n)]
    for v, t in zip(variables, state):
        if v.side == "A":
            aval[v.row][v.col] = _entry_value(prob, v, int(t))
        else:
            uval[v.row][v.col] = _entry_value(prob, v, int(t))
    for kind, r, c, mod_exp, rhs_exp in _constraints(prob):
        mod = p**mod_exp
        if kind == "AU":
            total = sum(aval[r][j] * uval[j][c] for j in range(n))
        else:
            total = sum(uval[r][i] * aval[i][c] for i in range(m))
        rhs = pow(p, rhs_exp) if rhs_exp is not None else 0
        if (total - rhs) % mod:
            return False
    return True


def obstruction_search(
    prob: ObstructionProblem, state_ceiling: int = 2_000_000
) -> ObstructionResult:
    """Decide feasibility and return the lexicographically first witness.

    The enumeration order is fixed: coefficient matrices are compared as the
    flattened tuple (A row-major, then U row-major), so the result is
    deterministic for a given problem.
    """
    p = prob.p
    variables = _variables(prob)
    depth = max(prob.source_exponents + prob.target_exponents)
    explored = 0

    states = _stage1_states(prob, variables, state_ceiling)
    explored += len(states)
    for stage in range(2, depth + 1):
        new_vars = [
            idx for idx, v in enumerate(variables) if v.vshift < stage <= v.vshift + v.cap
        ]
        active = [c for c in _constraints(prob) if c[3] >= stage]
        if not new_vars and not active:
            break
        next_states: list[np.ndarray] = []
        mvals = {idx: p ** (stage - 1 - variables[idx].vshift) for idx in new_vars}
        m, n = len(prob.target_exponents), len(prob.source_exponents)
        for state in states:
            aval = [[0] * n for _ in range(m)]
            uval = [[0] * m for _ in range(n)]
            for v, t in zip(variables, state):
                if v.side == "A":
                    aval[v.row][v.col] = _entry_value(prob, v, int(t))
                else:
                    uval[v.row][v.col] = _entry_value(prob, v, int(t))
            rows, rhs = [], []
            for kind, r, c, mod_exp, rhs_exp in active:
                if kind == "AU":
                    total = sum(aval[r][j] * uval[j][c] for j in range(n))
                else:
                    total = sum(uval[r][i] * aval[i][c] for i in range(m))
                target = pow(p, rhs_exp) if rhs_exp is not None else 0
                f = total - target
                lead = p ** (stage - 1)
                # earlier stages enforced this congruence mod p^(stage-1)
                assert f % lead == 0, (kind, r, c, stage)
                coeffs = [0] * len(new_vars)
                for pos, idx in enumerate(new_vars):
                    v = variables[idx]
                    if kind == "AU" and v.side == "A" and v.row == r:
                        coeffs[pos] = uval[v.col][c] % p
                    elif kind == "AU" and v.side == "U" and v.col == c:
                        coeffs[pos] = aval[r][v.row] % p
                    elif kind == "UA" and v.side == "U" and v.row == r:
                        coeffs[pos] = aval[v.col][c] % p
                    elif kind == "UA" and v.side == "A" and v.col == c:
                        coeffs[pos] = uval[r][v.row] % p
                rows.append(coeffs)
                rhs.append((-(f // lead)) % p)
            solved = _solve_gf_p(rows, rhs, len(new_vars), p)
            if solved is None:
                continue
            pivots, free, aug = solved
            if len(next_states) + p ** len(free) > state_ceiling:
                raise SearchSpaceExceeded(
                    "state count exceeds the ceiling", len(next_states) + p ** len(free)
                )
            for sol in _enumerate_solutions(pivots, free, aug, len(new_vars), p):
                new_state = state.copy()
                for pos, idx in enumerate(new_vars):
                    new_state[idx] += mvals[idx] * sol[pos]
                next_states.append(new_state)
        states = (
            np.stack(next_states)
            if next_states
            else np.zeros((0, len(variables)), dtype=np.int64)
        )
        explored += len(states)

    solutions = [tuple(int(x) for x in s) for s in states if _verify(prob, variables, s)]
    if not solutions:
        return ObstructionResult(False, None, None, raw_space(prob), explored)
    best = min(solutions)
    m, n = len(prob.target_exponents), len(prob.source_exponents)
    wa = [[0] * n for _ in range(m)]
    wu = [[0] * m for _ in range(n)]
    for v, t in zip(variables, best):
        if v.side == "A":
            wa[v.row][v.col] = t
        else:
            wu[v.row][v.col] = t
    return ObstructionResult(
        True,
        tuple(tuple(r) for r in wa),
        tuple(tuple(r) for r in wu),
        raw_space(prob),
        explored,
    )
