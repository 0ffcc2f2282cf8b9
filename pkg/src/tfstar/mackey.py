"""Mackey-functor symbols, level evaluation, and the Mackey-valued E1 pages.

Values of the genuine theory assemble into Mackey functors over the circle: a
system of groups indexed by the orbits T/C_{p^n} with restriction and transfer
maps.  The basic functor W has value A/[p^{n+1}]_A at level n (the q-analogue
bracket; p^{n+1} in the crystalline case).  The symbols tracked here are the
shapes the charts use:

    W,   tr_m W  (the sub generated by transfers from level m),
    Phi_r W = W / tr_r W,   Phi_r W / s  (a further scalar quotient),
    tr_m Phi_r W.

Crystalline evaluation is complete; transversally only the shapes the charts
pin down bit-exactly are evaluated (W, tr_0 W, Phi_0 W and its scalar
quotients), and the rest return a symbolic :class:`NotPinned` marker rather
than a guess.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractViolation
from .gold import GoldMonomial, theta
from .prism import (
    CyclicIdeal,
    PrismKind,
    PrismScalar,
    frobenius_q_analog,
    q_analog,
    render_scalar,
    specialize,
)
from .rep import VirtualRep

__all__ = [
    "MackeySymbol",
    "NotPinned",
    "MackeyCell",
    "MackeyRow",
    "MackeyPage",
    "mackey_e1",
    "evaluate_level",
    "erase_to_annihilator",
    "warmup_tables",
    "WarmupTables",
    "LevelGroup",
    "LewisDiagram",
    "lewis_diagram",
]


@dataclass(frozen=True, slots=True)
class MackeySymbol:
    """One of the chart shapes: tr_m applied to Phi_r W, quotiented by a scalar.

    ``tr`` is the transfer level m or None; ``phi`` the quotient level r or
    None (Phi_{-1} W is W itself and is normalized away); ``quot`` an optional
    scalar quotient, only allowed without a transfer part.
    """

    tr: int | None = None
    phi: int | None = None
    quot: PrismScalar | None = None

    def __post_init__(self):
        if self.phi == -1:
            object.__setattr__(self, "phi", None)
        if self.phi is not None and self.phi < 0:
            raise ContractViolation(f"Phi level must be >= 0, got {self.phi}")
        if self.tr is not None and self.tr < 0:
            raise ContractViolation(f"transfer level must be >= 0, got {self.tr}")
        if self.quot is not None and (self.tr is not None or self.phi is None):
            raise ContractViolation("scalar quotients only apply to Phi-shapes")

    @classmethod
    def w(cls) -> "MackeySymbol":
        return cls()

    @classmethod
    def tr_w(cls, m: int) -> "MackeySymbol":
        return cls(tr=m)

    @classmethod
    def phi_w(cls, r: int) -> "MackeySymbol":
        return cls(phi=r)

    @classmethod
    def phi_w_mod(cls, r: int, s: PrismScalar) -> "MackeySymbol":
        return cls(phi=r, quot=s)

    @classmethod
    def tr_phi_w(cls, m: int, r: int) -> "MackeySymbol":
        return cls(tr=m, phi=r)

    def __str__(self) -> str:
        core = "W" if self.phi is None else f"Phi^{self.phi} W"
        if self.quot is not None:
            core += "/" + render_scalar(self.quot)
        if self.tr is not None:
            core = f"tr_{self.tr} " + core
        return core

    def latex(self) -> str:
        core = r"\underline{W}" if self.phi is None else rf"\Phi^{{{self.phi}}}\underline{{W}}"
        if self.quot is not None:
            core += "/" + render_scalar(self.quot, latex=True)
        if self.tr is not None:
            core = rf"\mathrm{{tr}}_{{{self.tr}}}" + core
        return core


@dataclass(frozen=True, slots=True)
class NotPinned:
    """Marker for transversal level values the charts do not determine."""

    reason: str


def evaluate_level(sym: MackeySymbol, n: int, kind: PrismKind) -> CyclicIdeal | NotPinned:
    """The value at T/C_{p^n}, as A modulo the returned ideal.

    Crystalline values: W is A/p^{n+1}; tr_m W is p^{max(n-m,0)} A/p^{n+1},
    cyclic of length min(n, m) + 1; Phi_r W is A/p^{max(n-r,0)}; scalar and
    transfer modifiers compose by valuation.  Transversally only W, tr_0 W,
    Phi_0 W and scalar quotients of Phi_0 W are pinned; anything else yields
    NotPinned.
    """
    if n < 0:
        raise ContractViolation(f"level must be >= 0, got {n}")
    if kind is PrismKind.CRYSTALLINE:
        r = sym.phi if sym.phi is not None else -1
        length = max(n - r, 0) if r >= 0 else n + 1
        if sym.tr is not None:
            length = max(length - max(n - sym.tr, 0), 0)
        if sym.quot is not None:
            length = min(length, specialize(sym.quot).pk)
        return CyclicIdeal.of(PrismScalar.p_power(length))
    if sym.tr is None and sym.phi is None and sym.quot is None:
        return CyclicIdeal.of(q_analog(n + 1, kind))
    if sym.tr == 0 and sym.phi is None:
        return CyclicIdeal.of(q_analog(1, kind))
    if sym.tr is None and sym.phi == 0:
        base = frobenius_q_analog(n, kind)
        if sym.quot is None:
            return CyclicIdeal.of(base)
        return CyclicIdeal.of(base, sym.quot)
    return NotPinned(f"transversal level value of {sym} is not pinned by the charts")


def erase_to_annihilator(sym: MackeySymbol) -> CyclicIdeal:
    """Forget Mackey structure: a scalar quotient of a Phi-shape becomes A/(s)."""
    if sym.quot is None:
        return CyclicIdeal.free()
    return CyclicIdeal.of(sym.quot)


@dataclass(frozen=True, slots=True)
class MackeyCell:
    symbol: MackeySymbol
    generator: GoldMonomial


@dataclass(frozen=True, slots=True)
class MackeyRow:
    """transfer: even part with generator theta_{r-1}; torsion: odd part on S^-1 theta_r."""

    transfer: MackeyCell | None
    torsion: MackeyCell | None


@dataclass(frozen=True, slots=True)
class MackeyPage:
    rows: tuple[MackeyRow | None, ...]


def mackey_e1(alpha: VirtualRep, kind: PrismKind) -> MackeyPage:
    """The Mackey-valued first page.

    For 0 <= r < L with d_r > 0, filtration L - r holds the pair

        tr_r Phi^{r-1} W < theta_{r-1} >  (+)  Phi^r W / phi^r(xi)^{d_r} < S^-1 theta_r >

    with the transfer level raised to r + d_r in the crystalline case (and the
    quotient by p^{d_r}).  Filtration 0 holds Phi^{L-1} W < theta_{L-1} > when
    d_inf >= 0.
    """
    L = alpha.length
    rows: list[MackeyRow | None] = [None] * (L + 1)
    if alpha.d_inf >= 0:
        rows[0] = MackeyRow(
            MackeyCell(MackeySymbol.phi_w(L - 1), theta(alpha, L - 1)), None
        )
    for r in range(L):
        d = alpha.dims[r]
        if d <= 0:
            continue
        if kind is PrismKind.TRANSVERSAL:
            tr_level = r
            quot = PrismScalar.phi_power(r, d)
        else:
            tr_level = r + d
            quot = PrismScalar.p_power(d)
        transfer = MackeyCell(MackeySymbol(tr=tr_level, phi=r - 1), theta(alpha, r - 1))
        torsion = MackeyCell(
            MackeySymbol.phi_w_mod(r, quot), theta(alpha, r).suspend(-1)
        )
        rows[L - r] = MackeyRow(transfer, torsion)
    return MackeyPage(tuple(rows))


@dataclass(frozen=True, slots=True)
class LevelGroup:
    """A cyclic level value with its generator, optionally scaled by a prism scalar."""

    ideal: CyclicIdeal
    generator: GoldMonomial
    prefix: PrismScalar | None = None

    @property
    def is_zero(self) -> bool:
        return self.ideal.is_zero_module


@dataclass(frozen=True, slots=True)
class WarmupTables:
    """Level-n values of the one-digit isotropy square pieces in grading (d_0; d_inf)."""

    homotopy_fixed: LevelGroup
    tate: LevelGroup
    orbit_even: LevelGroup | None
    orbit_odd: LevelGroup | None


def warmup_tables(alpha: VirtualRep, n: int, kind: PrismKind) -> WarmupTables:
    """The length-one tables: T^h, T^t and the two graded pieces of Sigma T_h.

    For d_0 >= 0 the homotopy-fixed generator is u_0^{d_0} u_{lambda_0}^{d_inf}
    on A/[p^{n+1}]_A; for d_0 < 0 it is a_0^{-d_0} u_{lambda_0}^{d_inf} on
    A/phi([p^n]_A) (crystalline A/p^n).  The orbit pieces vanish for d_0 < 0;
    otherwise the even one is the transfer part, generated by phi([p^n]_A)
    times the u-form name (crystalline: by p^{n - min(n, d_0)}), and the odd
    one is the displayed cokernel on S^-1 a_0^{-d_0} u_{lambda_0}^{d_inf}.
    """
    if alpha.length != 1:
        raise ContractViolation("warmup tables require an encoding of length one")
    if n < 0:
        raise ContractViolation(f"level must be >= 0, got {n}")
    d0, dinf = alpha.dims[0], alpha.d_inf
    u_name = GoldMonomial.make(u={0: d0}, ulam={0: dinf})
    a_name = GoldMonomial.make(a={0: -d0}, ulam={0: dinf})
    tate = LevelGroup(CyclicIdeal.of(frobenius_q_analog(n, kind)), a_name)
    if d0 >= 0:
        hfixed = LevelGroup(CyclicIdeal.of(q_analog(n + 1, kind)), u_name)
    else:
        hfixed = LevelGroup(CyclicIdeal.of(frobenius_q_analog(n, kind)), a_name)
        return WarmupTables(hfixed, tate, None, None)
    if kind is PrismKind.TRANSVERSAL:
        orbit_even = LevelGroup(
            CyclicIdeal.of(q_analog(1, kind)), u_name, frobenius_q_analog(n, kind)
        )
        orbit_odd = LevelGroup(
            CyclicIdeal.of(frobenius_q_analog(n, kind), PrismScalar.phi_power(0, d0)),
            a_name.suspend(-1),
        )
    else:
        m = min(n, d0)
        orbit_even = LevelGroup(
            CyclicIdeal.of(PrismScalar.p_power(m + 1)), u_name, PrismScalar.p_power(n - m)
        )
        orbit_odd = LevelGroup(CyclicIdeal.of(PrismScalar.p_power(m)), a_name.suspend(-1))
    return WarmupTables(hfixed, tate, orbit_even, orbit_odd)


@dataclass(frozen=True, slots=True)
class LewisDiagram:
    """Two-level Lewis diagram at C_p: the value at T/C_p over the value at T/e."""

    top: CyclicIdeal
    bottom: CyclicIdeal
    res: str | None
    tr: str | None


_LEWIS_MAPS: dict[tuple[int | None, int | None, bool], tuple[str | None, str | None]] = {
    (None, None, False): ("1", "phi(xi)"),
    (0, None, False): ("p", "1"),
    (None, 0, False): (None, None),
    (None, 0, True): (None, None),
}


def lewis_diagram(sym: MackeySymbol) -> LewisDiagram:
    """Transversal C_p Lewis diagram for the four pinned chart shapes.

    Restriction and transfer labels are only emitted for these shapes; any
    other symbol is a contract violation.
    """
    key = (sym.tr, sym.phi, sym.quot is not None)
    if key not in _LEWIS_MAPS:
        raise ContractViolation(f"no pinned Lewis diagram for {sym}")
    res, tr = _LEWIS_MAPS[key]
    top = evaluate_level(sym, 1, PrismKind.TRANSVERSAL)
    bottom = evaluate_level(sym, 0, PrismKind.TRANSVERSAL)
    assert not isinstance(top, NotPinned) and not isinstance(bottom, NotPinned)
    return LewisDiagram(top, bottom, res, tr)
