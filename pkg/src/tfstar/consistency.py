"""Cross-validation harness: spectral-sequence engine against the closed forms.

The two evaluation routes share nothing but the name algebra, so random
agreement over both backends and both parities is strong evidence for each.
The harness draws seeded random gradings, compares the two answers as
multisets of (annihilator, generator) pairs, and also exercises the degree
and padding invariants on every sample.  Mismatches are collected as data,
never raised: odd-degree name bookkeeping is known to have subtle failure
modes, and a reproducible report is worth more than an abort.

The obstruction search over cyclic p-group homomorphisms lives in
:mod:`tfstar.obstruction` and is re-exported here.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace

from .closedform import chains_crystalline, closed_tf
from .errors import TfStarError
from .gold import canonicalize_top, monomial_key
from .groups import GradedGroup
from .hotfss import tf
from .obstruction import (  # noqa: F401  (re-exported surface)
    ObstructionProblem,
    ObstructionResult,
    obstruction_search,
    raw_space,
)
from .prism import PrismKind, ideal_key
from .rep import VirtualRep, pad_rep

__all__ = [
    "CheckConfig",
    "Mismatch",
    "CheckReport",
    "sample_rep",
    "crosscheck",
    "ObstructionProblem",
    "ObstructionResult",
    "obstruction_search",
]


@dataclass(frozen=True, slots=True)
class CheckConfig:
    samples: int = 1000
    seed: int = 0
    max_len: int = 8
    max_coeff: int = 5
    max_dinf: int = 3
    kinds: tuple[PrismKind, ...] = (PrismKind.TRANSVERSAL, PrismKind.CRYSTALLINE)

    def __post_init__(self):
        if min(self.samples, self.max_len, self.max_coeff, self.max_dinf) < 1:
            raise TfStarError("all bounds must be >= 1")
        if not self.kinds:
            raise TfStarError("at least one prism kind is required")


@dataclass(frozen=True, slots=True)
class Mismatch:
    sample: int
    rep: str
    shift: int
    kind: str
    check: str
    detail: str


@dataclass(slots=True)
class CheckReport:
    config: CheckConfig
    comparisons: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    findings: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_json_obj(self) -> dict:
        return {
            "samples": self.config.samples,
            "seed": self.config.seed,
            "max_len": self.config.max_len,
            "max_coeff": self.config.max_coeff,
            "max_dinf": self.config.max_dinf,
            "kinds": [k.value for k in self.config.kinds],
            "comparisons": self.comparisons,
            "mismatch_count": len(self.mismatches),
            "mismatches": [
                {
                    "sample": m.sample,
                    "rep": m.rep,
                    "shift": m.shift,
                    "kind": m.kind,
                    "check": m.check,
                    "detail": m.detail,
                }
                for m in self.mismatches
            ],
            "findings": list(self.findings),
        }


def sample_rep(cfg: CheckConfig, index: int) -> VirtualRep:
    """Deterministic sample: each index draws from its own seeded stream."""
    rng = random.Random(f"{cfg.seed}:{index}")
    length = rng.randint(1, cfg.max_len)
    dims = tuple(rng.randint(-cfg.max_coeff, cfg.max_coeff) for _ in range(length))
    return VirtualRep(dims, rng.randint(-cfg.max_dinf, cfg.max_dinf))


def _group_key(g: GradedGroup) -> tuple:
    return g.multiset_key()


def _padded_key(g: GradedGroup, top: int) -> tuple:
    """Multiset of (annihilator, generator) after renaming u_lambda up to ``top``."""
    return tuple(
        sorted(
            (ideal_key(s.ideal), monomial_key(canonicalize_top(s.generator, top)))
            for s in g.summands
        )
    )


def crosscheck(cfg: CheckConfig) -> CheckReport:
    """Run the engine and the closed forms over seeded random gradings.

    Per sample, per configured kind, per shift: compare the two groups as
    multisets, then compare against the once-padded encoding after the
    u_lambda renaming.  The degree invariant is enforced by GradedGroup
    construction, so a violation surfaces here as a recorded failure of the
    route that produced it.  Chain-selection ambiguities between the two
    blocking-clause variants of the crystalline gluing rule are reported as
    findings.
    """
    report = CheckReport(cfg)
    for i in range(cfg.samples):
        base = sample_rep(cfg, i)
        for kind in cfg.kinds:
            if kind is PrismKind.CRYSTALLINE:
                both = chains_crystalline(base, variant="both")
                for variant in ("left", "right"):
                    alt = chains_crystalline(base, variant=variant)
                    if alt != both:
                        report.findings.append(
                            f"sample {i} {base}: blocking-clause variant {variant} "
                            f"selects chains {alt} instead of {both}"
                        )
            for shift in (0, -1):
                alpha = replace(base, shift=shift)
                report.comparisons += 1
                try:
                    engine = tf(alpha, kind)
                    closed = closed_tf(alpha, kind)
                except TfStarError as exc:
                    report.mismatches.append(
                        Mismatch(i, str(base), shift, kind.value, "evaluation", str(exc))
                    )
                    continue
                if _group_key(engine) != _group_key(closed):
                    report.mismatches.append(
                        Mismatch(
                            i,
                            str(base),
                            shift,
                            kind.value,
                            "engine-vs-closed",
                            f"engine {_group_key(engine)} != closed {_group_key(closed)}",
                        )
                    )
                try:
                    padded = tf(pad_rep(alpha, alpha.length + 1), kind)
                except TfStarError as exc:
                    report.mismatches.append(
                        Mismatch(i, str(base), shift, kind.value, "padding-eval", str(exc))
                    )
                    continue
                top = alpha.length
                if _padded_key(engine, top) != _padded_key(padded, top):
                    report.mismatches.append(
                        Mismatch(
                            i,
                            str(base),
                            shift,
                            kind.value,
                            "padding",
                            f"{_padded_key(engine, top)} != {_padded_key(padded, top)}",
                        )
                    )
    return report
