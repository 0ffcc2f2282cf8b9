"""Closed-form evaluation of RO(T)-graded TF, without the spectral sequence.

For a transversal perfect prism the odd part of TF is a sum of cyclic modules
indexed by the maximal nonnegative contiguous subsequences of the dimension
sequence; for a crystalline prism it is indexed by chains of positive entries
glued across gaps whose dimension sums cancel.  The even part is a free
rank-one module whenever d_inf >= 0.  These formulas are implemented directly
on the dimension sequence and serve as the independent oracle for the
spectral-sequence engine in :mod:`tfstar.hotfss`; the two routes are compared
sample by sample in :mod:`tfstar.consistency`.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import ContractViolation
from .gold import GoldMonomial, theta
from .groups import GradedGroup, GroupSummand
from .prism import CyclicIdeal, PrismKind, PrismScalar
from .rep import VirtualRep

__all__ = [
    "ESequence",
    "e_sequence",
    "subsequences_transversal",
    "chains_crystalline",
    "closed_tf",
]


@dataclass(frozen=True, slots=True)
class ESequence:
    """The crystalline differential-image bookkeeping sequences.

    Computed right to left: s_r sums -e_i over i > r (so s_{L-1} = 0) and
    e_r = min(d_r, s_r).  s_r is the p-exponent of the image of the
    differential hitting level r; e_r the p-length surviving there.
    """

    e: tuple[int, ...]
    s: tuple[int, ...]


def e_sequence(alpha: VirtualRep) -> ESequence:
    if alpha.d_inf < 0:
        raise ContractViolation("the e-recursion applies only when d_inf >= 0")
    L = alpha.length
    e = [0] * L
    s = [0] * L
    acc = 0
    for r in range(L - 1, -1, -1):
        s[r] = acc
        e[r] = min(alpha.dims[r], s[r])
        acc += -e[r]
    return ESequence(tuple(e), tuple(s))


def subsequences_transversal(alpha: VirtualRep) -> list[tuple[int, int]]:
    """Index pairs (s, r) of the maximal nonnegative runs contributing summands.

    A run must start the sequence or follow a negative entry, and end the
    sequence or precede one.  When d_inf >= 0 a run ending at the top index
    contributes nothing (its summand is killed by the differential off the
    even column), so it is excluded.
    """
    dims = alpha.dims
    L = len(dims)
    out = []
    i = 0
    while i < L:
        if dims[i] < 0:
            i += 1
            continue
        s = i
        while i < L and dims[i] >= 0:
            i += 1
        r = i - 1
        if alpha.d_inf >= 0 and r == L - 1:
            continue
        out.append((s, r))
    return out


def _build_chains(
    qualifying: list[int], cond, variant: str = "both"
) -> list[tuple[int, ...]]:
    """Greedy left-to-right chain construction over qualifying indices.

    A chain extends from its current end x to the nearest unused qualifying y
    with cond(x, y), unless some qualifying index strictly between x and y
    could itself pair with either endpoint (cond(x, i) or cond(i, y)); such an
    index claims the extension and the chain closes instead.  ``variant``
    selects which of the two blocking clauses is enforced ("left", "right" or
    "both"); divergences between variants are surfaced by the consistency
    harness, never silently resolved.
    """
    used: set[int] = set()
    chains: list[tuple[int, ...]] = []
    for start in qualifying:
        if start in used:
            continue
        chain = [start]
        used.add(start)
        end = start
        while True:
            nxt = None
            for y in qualifying:
                if y > end and y not in used and cond(end, y):
                    nxt = y
                    break
            if nxt is None:
                break
            blocked = False
            for i in qualifying:
                if end < i < nxt:
                    left = cond(end, i) if variant in ("left", "both") else False
                    right = cond(i, nxt) if variant in ("right", "both") else False
                    if left or right:
                        blocked = True
                        break
            if blocked:
                break
            chain.append(nxt)
            used.add(nxt)
            end = nxt
        chains.append(tuple(chain))
    return chains


def chains_crystalline(alpha: VirtualRep, variant: str = "both") -> list[tuple[int, ...]]:
    """Maximal gluing chains of the crystalline odd part.

    With d_inf < 0 the qualifying indices are those with d_i > 0 and two
    consecutive chain members must have vanishing dimension sum strictly
    between them.  With d_inf >= 0 qualifying means e_i > 0 and the gap
    condition reads sum(d_i for x < i <= y) = e_y.  Chains partition the
    qualifying indices.
    """
    dims = alpha.dims
    if alpha.d_inf < 0:
        qualifying = [i for i, d in enumerate(dims) if d > 0]

        def cond(x: int, y: int) -> bool:
            return sum(dims[x + 1 : y]) == 0

    else:
        es = e_sequence(alpha)
        qualifying = [i for i, e in enumerate(es.e) if e > 0]

        def cond(x: int, y: int) -> bool:
            return sum(dims[x + 1 : y + 1]) == es.e[y]

    return _build_chains(qualifying, cond, variant)


def _o_scalar(alpha: VirtualRep, s: int, r: int) -> PrismScalar:
    """prod phi^i(xi)^{d_i} over the run s..r (zero entries contribute nothing)."""
    return PrismScalar.from_exponents(
        PrismKind.TRANSVERSAL, {i: alpha.dims[i] for i in range(s, r + 1)}
    )


def _f_scalar(alpha: VirtualRep, r: int) -> PrismScalar:
    """prod phi^i(xi)^{-d_i} over the negative entries strictly above r."""
    return PrismScalar.from_exponents(
        PrismKind.TRANSVERSAL,
        {i: -d for i, d in enumerate(alpha.dims) if i > r and d < 0},
    )


def _free_generator_transversal(alpha: VirtualRep) -> GoldMonomial:
    u = {i: d for i, d in enumerate(alpha.dims) if d > 0}
    a = {i: -d for i, d in enumerate(alpha.dims) if d < 0}
    return GoldMonomial.make(a=a, u=u, ulam={alpha.length - 1: alpha.d_inf})


def _free_generator_crystalline(alpha: VirtualRep) -> GoldMonomial:
    # Per index: the differential at level r consumes d_r - e_r gold pairs,
    # leaving u_r^{d_r - e_r} a_r^{-e_r}; negative e_r keeps a-factors.
    es = e_sequence(alpha)
    u = {i: alpha.dims[i] - es.e[i] for i in range(alpha.length)}
    a = {i: -es.e[i] for i in range(alpha.length)}
    return GoldMonomial.make(a=a, u=u, ulam={alpha.length - 1: alpha.d_inf})


def closed_tf(alpha: VirtualRep, kind: PrismKind) -> GradedGroup:
    """Evaluate TF in the grading carried by ``alpha`` (its shift included)."""
    if alpha.shift == 0:
        if alpha.d_inf < 0:
            return GradedGroup(alpha, kind, ())
        if kind is PrismKind.TRANSVERSAL:
            gen = _free_generator_transversal(alpha)
        else:
            gen = _free_generator_crystalline(alpha)
        return GradedGroup(alpha, kind, (GroupSummand(CyclicIdeal.free(), gen),))

    grading = replace(alpha, shift=-1)
    summands: list[GroupSummand] = []
    if kind is PrismKind.TRANSVERSAL:
        for s, r in subsequences_transversal(alpha):
            o = _o_scalar(alpha, s, r)
            if o.is_one:
                continue  # run of zeros only: the summand is the zero module
            if alpha.d_inf >= 0:
                ideal = CyclicIdeal.of(o, _f_scalar(alpha, r))
            else:
                ideal = CyclicIdeal.of(o)
            summands.append(GroupSummand(ideal, theta(alpha, r).suspend(-1)))
    else:
        if alpha.d_inf >= 0:
            weights = e_sequence(alpha).e
        else:
            weights = alpha.dims
        for chain in chains_crystalline(alpha):
            o = sum(weights[i] for i in chain)
            ideal = CyclicIdeal.of(PrismScalar.p_power(o))
            summands.append(GroupSummand(ideal, theta(alpha, chain[-1]).suspend(-1)))
    return GradedGroup(grading, kind, tuple(summands))
