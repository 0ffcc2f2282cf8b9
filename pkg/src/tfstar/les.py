"""Finite-level TR reports through the a_{lambda_n} long exact sequence.

TR at level n + 1 sits in the exact sequence

    TF_{*+lambda_n} --a_{lambda_n}--> TF_* --> TR^{n+1}_* --> TF_{*+lambda_n-1}
        --a_{lambda_n}--> TF_{*-1},

so TR^{n+1} in an even grading is an extension of the kernel of the odd-degree
multiplication by the cokernel of the even-degree one.  The even map is a map
of free rank-one modules and its scalar is computed exactly by name division
(a_{lambda_n} telescopes to a_0 a_1 ... a_n).  Odd-degree torsion-to-torsion
maps are only trusted when name matching pins the map on every summand
unambiguously; otherwise the kernel is reported as undetermined with the
reason, never guessed.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .closedform import closed_tf
from .errors import ContractViolation, NamesIncomparable
from .gold import GoldMonomial, divide_names, monomial_mul
from .groups import GradedGroup, GroupSummand
from .prism import CyclicIdeal, PrismKind, PrismScalar
from .rep import VirtualRep, add_lambda

__all__ = [
    "PrefixedSummand",
    "OddKernel",
    "TrReport",
    "a_lambda_mul_even",
    "tr_report",
]


def _a_telescope(n: int) -> GoldMonomial:
    """a_{lambda_n} written in gold elements: a_0 a_1 ... a_n."""
    return GoldMonomial.make(a={i: 1 for i in range(n + 1)})


@dataclass(frozen=True, slots=True)
class PrefixedSummand:
    """A cyclic summand whose generator carries a scalar prefix (e.g. p^c m)."""

    ideal: CyclicIdeal
    prefix: PrismScalar | None
    generator: GoldMonomial


@dataclass(frozen=True, slots=True)
class OddKernel:
    """Kernel of the odd a_{lambda_n}-multiplication, or the reason it is unknown."""

    status: str  # "exact" or "undetermined"
    summands: tuple[PrefixedSummand, ...] = ()
    reason: str | None = None


@dataclass(frozen=True, slots=True)
class TrReport:
    """All four TF groups around TR^{n+1} in grading alpha, plus the two maps."""

    alpha: VirtualRep
    level: int
    kind: PrismKind
    tf_plus: GradedGroup  # TF_{alpha + lambda_n}
    tf_even: GradedGroup  # TF_alpha
    tf_odd_source: GradedGroup  # TF_{alpha + lambda_n - 1}
    tf_odd_target: GradedGroup  # TF_{alpha - 1}
    even_scalar: PrismScalar | None  # None encodes the zero map
    cokernel: GradedGroup
    kernel: OddKernel


def a_lambda_mul_even(alpha: VirtualRep, n: int, kind: PrismKind) -> PrismScalar | None:
    """Scalar of a_{lambda_n}: TF_{alpha+lambda_n} -> TF_alpha on free generators.

    Returns None (the zero map) when either group vanishes or the names are
    incomparable in the gold monoid.
    """
    if alpha.shift != 0:
        raise ContractViolation("a_lambda_mul_even requires an even grading (shift 0)")
    if n < 0:
        raise ContractViolation(f"level must be >= 0, got {n}")
    source = closed_tf(add_lambda(alpha, n), kind)
    target = closed_tf(alpha, kind)
    if source.is_zero or target.is_zero:
        return None
    moved = monomial_mul(source.summands[0].generator, _a_telescope(n))
    try:
        return divide_names(moved, target.summands[0].generator, kind)
    except NamesIncomparable:
        return None


def _odd_kernel(
    source: GradedGroup, target: GradedGroup, n: int, kind: PrismKind
) -> OddKernel:
    """Kernel of a_{lambda_n} on the odd groups, when names determine the map.

    The map is pinned when it is diagonal under name matching: every source
    summand is comparable to at most one target summand and no target is hit
    twice.  Crystalline cyclic kernels are then computed by valuation; for a
    transversal map with both sides nonzero the two-generator annihilators
    leave the kernel outside the formal calculus, so it is undetermined.
    """
    if source.is_zero:
        return OddKernel("exact", ())
    if target.is_zero:
        return OddKernel(
            "exact",
            tuple(PrefixedSummand(s.ideal, None, s.generator) for s in source.summands),
        )
    if kind is PrismKind.TRANSVERSAL:
        return OddKernel(
            "undetermined",
            reason="odd-degree transversal torsion maps are not determined by "
            "name bookkeeping (names can collide across the gold relation)",
        )
    tele = _a_telescope(n)
    assignments: list[tuple[GroupSummand, GroupSummand | None, PrismScalar | None]] = []
    hit_targets: list[int] = []
    for s in source.summands:
        moved = monomial_mul(s.generator, tele)
        matches = []
        for idx, t in enumerate(target.summands):
            try:
                c = divide_names(moved, t.generator, kind)
            except NamesIncomparable:
                continue
            matches.append((idx, t, c))
        if len(matches) > 1:
            return OddKernel(
                "undetermined",
                reason=f"source summand {s.generator} matches several targets; "
                "name matching does not separate them",
            )
        if matches:
            idx, t, c = matches[0]
            hit_targets.append(idx)
            assignments.append((s, t, c))
        else:
            assignments.append((s, None, None))
    if len(set(hit_targets)) != len(hit_targets):
        return OddKernel(
            "undetermined",
            reason="two source summands hit the same target; the kernel is not "
            "a sum of componentwise kernels",
        )
    out = []
    for s, t, c in assignments:
        a = s.ideal.gens[0].pk
        if t is None:
            if a > 0:
                out.append(PrefixedSummand(s.ideal, None, s.generator))
            continue
        b = t.ideal.gens[0].pk
        m = min(a, max(b - c.pk, 0))
        if a - m <= 0:
            continue
        prefix = PrismScalar.p_power(m) if m else None
        out.append(
            PrefixedSummand(CyclicIdeal.of(PrismScalar.p_power(a - m)), prefix, s.generator)
        )
    return OddKernel("exact", tuple(out))


def tr_report(alpha: VirtualRep, n: int, kind: PrismKind) -> TrReport:
    """Assemble the four TF groups and the extension data for TR^{n+1}_alpha."""
    if alpha.shift != 0:
        raise ContractViolation("tr_report requires an even grading (shift 0)")
    plus = add_lambda(alpha, n)
    tf_plus = closed_tf(plus, kind)
    tf_even = closed_tf(alpha, kind)
    tf_odd_source = closed_tf(replace(plus, shift=-1), kind)
    tf_odd_target = closed_tf(replace(alpha, shift=-1), kind)
    scalar = a_lambda_mul_even(alpha, n, kind)
    if tf_even.is_zero:
        cokernel = GradedGroup(alpha, kind, ())
    elif scalar is None:
        cokernel = tf_even
    else:
        gen = tf_even.summands[0].generator
        ideal = CyclicIdeal.of(scalar)
        summands = () if ideal.is_zero_module else (GroupSummand(ideal, gen),)
        cokernel = GradedGroup(alpha, kind, summands)
    kernel = _odd_kernel(tf_odd_source, tf_odd_target, n, kind)
    return TrReport(
        alpha,
        n,
        kind,
        tf_plus,
        tf_even,
        tf_odd_source,
        tf_odd_target,
        scalar,
        cokernel,
        kernel,
    )
