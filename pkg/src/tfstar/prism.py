"""Exact scalar and cyclic-module calculus over a perfect prism A.

Two backends share one interface.  In the transversal backend a scalar is a
formal monomial in the Frobenius twists phi^i(xi) of the distinguished
element; distinct twists are treated as mutually regular elements and no
further arithmetic is performed.  In the crystalline backend every twist is
identified with p, so a scalar is just a power p^k.

Cyclic modules A/I are carried as unreduced ideals with zero, one or two
listed generators; no divisibility between generators is ever detected or
simplified.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import ContractViolation

__all__ = [
    "PrismKind",
    "PrismScalar",
    "CyclicIdeal",
    "q_analog",
    "scalar_mul",
    "specialize",
    "kernel_cokernel",
]


class PrismKind(enum.Enum):
    TRANSVERSAL = "transversal"
    CRYSTALLINE = "crystalline"

    @classmethod
    def from_string(cls, name: str) -> "PrismKind":
        for kind in cls:
            if kind.value == name:
                return kind
        raise ContractViolation(f"unknown prism kind {name!r}")

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, slots=True)
class PrismScalar:
    """A monomial scalar: prod phi^i(xi)^{e_i} (transversal) or p^k (crystalline).

    ``phi`` holds (index, exponent) pairs sorted by index with exponents > 0;
    ``pk`` is the p-exponent and is only meaningful in the crystalline kind.
    """

    kind: PrismKind
    phi: tuple[tuple[int, int], ...] = ()
    pk: int = 0

    def __post_init__(self):
        if self.kind is PrismKind.TRANSVERSAL:
            if self.pk != 0:
                raise ContractViolation("transversal scalar cannot carry a p-power")
            prev = -1
            for i, e in self.phi:
                if i <= prev:
                    raise ContractViolation("phi factors must be sorted by index")
                if i < 0 or e <= 0:
                    raise ContractViolation(f"bad phi factor phi^{i}(xi)^{e}")
                prev = i
        else:
            if self.phi:
                raise ContractViolation("crystalline scalar cannot carry phi factors")
            if self.pk < 0:
                raise ContractViolation(f"negative p-exponent {self.pk}")

    @classmethod
    def one(cls, kind: PrismKind) -> "PrismScalar":
        return cls(kind)

    @classmethod
    def phi_power(cls, i: int, exp: int = 1) -> "PrismScalar":
        if exp == 0:
            return cls(PrismKind.TRANSVERSAL)
        return cls(PrismKind.TRANSVERSAL, ((i, exp),))

    @classmethod
    def p_power(cls, k: int) -> "PrismScalar":
        return cls(PrismKind.CRYSTALLINE, (), k)

    @classmethod
    def from_exponents(cls, kind: PrismKind, exps: dict[int, int]) -> "PrismScalar":
        items = tuple(sorted((i, e) for i, e in exps.items() if e != 0))
        if kind is PrismKind.CRYSTALLINE:
            return cls(kind, (), sum(e for _, e in items))
        return cls(kind, items)

    @property
    def is_one(self) -> bool:
        return not self.phi and self.pk == 0

    def exponent(self, i: int) -> int:
        """Exponent of phi^i(xi); zero in the crystalline kind."""
        for j, e in self.phi:
            if j == i:
                return e
        return 0

    def p_length(self) -> int:
        """p-adic length of A/(self): pk, or the total phi-degree pre-specialization."""
        if self.kind is PrismKind.CRYSTALLINE:
            return self.pk
        return sum(e for _, e in self.phi)

    def __mul__(self, other: "PrismScalar") -> "PrismScalar":
        return scalar_mul(self, other)

    def __str__(self) -> str:
        return render_scalar(self)


def scalar_mul(x: PrismScalar, y: PrismScalar) -> PrismScalar:
    if x.kind is not y.kind:
        raise ContractViolation(f"cannot multiply {x.kind} scalar by {y.kind} scalar")
    if x.kind is PrismKind.CRYSTALLINE:
        return PrismScalar(x.kind, (), x.pk + y.pk)
    exps: dict[int, int] = {}
    for i, e in x.phi:
        exps[i] = exps.get(i, 0) + e
    for i, e in y.phi:
        exps[i] = exps.get(i, 0) + e
    return PrismScalar.from_exponents(x.kind, exps)


def specialize(x: PrismScalar) -> PrismScalar:
    """Collapse every phi^i(xi) to p, turning a transversal scalar crystalline."""
    if x.kind is PrismKind.CRYSTALLINE:
        return x
    return PrismScalar.p_power(sum(e for _, e in x.phi))


def q_analog(n: int, kind: PrismKind) -> PrismScalar:
    """The q-analogue of p^n: xi phi(xi) ... phi^{n-1}(xi), or p^n when crystalline."""
    if n < 0:
        raise ContractViolation(f"q_analog needs n >= 0, got {n}")
    if kind is PrismKind.CRYSTALLINE:
        return PrismScalar.p_power(n)
    return PrismScalar(kind, tuple((i, 1) for i in range(n)))


def frobenius_q_analog(n: int, kind: PrismKind) -> PrismScalar:
    """phi applied to the q-analogue of p^n: phi(xi) ... phi^n(xi), or p^n."""
    if n < 0:
        raise ContractViolation(f"frobenius_q_analog needs n >= 0, got {n}")
    if kind is PrismKind.CRYSTALLINE:
        return PrismScalar.p_power(n)
    return PrismScalar(kind, tuple((i, 1) for i in range(1, n + 1)))


@dataclass(frozen=True, slots=True)
class CyclicIdeal:
    """The annihilator ideal of a cyclic module A/(gens); at most two generators."""

    gens: tuple[PrismScalar, ...] = ()

    def __post_init__(self):
        if len(self.gens) > 2:
            raise ContractViolation("cyclic ideals carry at most two generators")
        kinds = {g.kind for g in self.gens}
        if len(kinds) > 1:
            raise ContractViolation("ideal generators must share a prism kind")

    @classmethod
    def free(cls) -> "CyclicIdeal":
        return cls(())

    @classmethod
    def of(cls, *gens: PrismScalar) -> "CyclicIdeal":
        return cls(tuple(gens))

    @property
    def is_free(self) -> bool:
        return not self.gens

    @property
    def is_zero_module(self) -> bool:
        """A/(gens) = 0 exactly when some listed generator is a unit."""
        return any(g.is_one for g in self.gens)

    def __str__(self) -> str:
        return render_module(self)


def kernel_cokernel(
    map_scalar: PrismScalar, target_exp: tuple[int, int]
) -> tuple[PrismScalar, CyclicIdeal]:
    """Kernel and surviving quotient of multiplication into a cyclic target.

    The target is A/phi^r(xi)^d (transversal) or A/p^d (crystalline) with
    ``target_exp = (r, d)``; the map is multiplication by ``map_scalar`` from a
    free rank-one module.  Transversally the map scalar must not involve
    phi^r(xi): distinct twists are mutually regular, so the kernel is exactly
    (phi^r(xi)^d) and the quotient keeps both the old annihilator and the new
    image generator.  Crystalline kernels and images follow p-adic valuations.
    """
    r, d = target_exp
    if map_scalar.kind is PrismKind.TRANSVERSAL:
        if map_scalar.exponent(r) != 0:
            raise ContractViolation(
                f"transversal map scalar {map_scalar} involves phi^{r}(xi); "
                "the engine only produces scalars supported above the target level"
            )
        kernel = PrismScalar.phi_power(r, d)
        quotient = CyclicIdeal.of(kernel, map_scalar)
        return kernel, quotient
    s = map_scalar.pk
    kernel = PrismScalar.p_power(max(d - s, 0))
    quotient = CyclicIdeal.of(PrismScalar.p_power(min(d, s)))
    return kernel, quotient


def render_scalar(x: PrismScalar, latex: bool = False) -> str:
    """Render 'xi', 'phi^i(xi)', 'p' with caret exponents; products space-joined."""
    if x.is_one:
        return "1"
    if x.kind is PrismKind.CRYSTALLINE:
        if latex:
            return "p" if x.pk == 1 else f"p^{{{x.pk}}}"
        return "p" if x.pk == 1 else f"p^{x.pk}"
    parts = []
    for i, e in x.phi:
        if latex:
            base = r"\xi" if i == 0 else (r"\phi(\xi)" if i == 1 else rf"\phi^{{{i}}}(\xi)")
            parts.append(base if e == 1 else base + f"^{{{e}}}")
        else:
            base = "xi" if i == 0 else ("phi(xi)" if i == 1 else f"phi^{i}(xi)")
            parts.append(base if e == 1 else base + f"^{e}")
    return "".join(parts) if latex else " ".join(parts)


def render_ideal(ideal: CyclicIdeal, latex: bool = False) -> str:
    """Comma-joined generator list in parentheses."""
    return "(" + ", ".join(render_scalar(g, latex) for g in ideal.gens) + ")"


def render_module(ideal: CyclicIdeal, latex: bool = False) -> str:
    """'A' for the free module, 'A/x', or 'A/(x, y)'; '0' for a killed module."""
    if ideal.is_free:
        return "A"
    if ideal.is_zero_module:
        return "0"
    if len(ideal.gens) == 1:
        return "A/" + render_scalar(ideal.gens[0], latex)
    return "A/" + render_ideal(ideal, latex)


def ideal_key(ideal: CyclicIdeal) -> tuple:
    """Canonical hashable form for multiset comparisons."""
    out = []
    for g in ideal.gens:
        if g.kind is PrismKind.CRYSTALLINE:
            out.append(("p", g.pk))
        else:
            out.append(("phi",) + g.phi)
    return tuple(out)
