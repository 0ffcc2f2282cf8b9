"""The homotopy-orbits-to-TF spectral sequence (HOTFSS) engine.

The isotropy filtration of the sphere induces a spectral sequence computing
TF of a perfectoid ring from Frobenius-twisted homotopy-orbit groups.  For a
grading encoded at length L the chart has filtrations 0..L and two columns:
the even column holds a single free summand at filtration 0 (present when
d_inf >= 0), and the odd column holds at filtration L - r a cyclic summand

    A / phi^r(xi)^{d_r} < S^{-1} theta_r >      (crystalline: A / p^{d_r})

whenever d_r > 0.  Homotopy orbits are even, so every differential originates
at filtration 0; the engine runs them in increasing page order, shrinking the
torsion rows and renaming the free generator through the q-gold relation, and
finally glues extensions between surviving torsion rows by matching names.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import EngineInvariantError, NamesIncomparable
from .gold import GoldMonomial, divide_names, monomial_mul, theta
from .groups import GradedGroup, GroupSummand
from .prism import CyclicIdeal, PrismKind, PrismScalar, kernel_cokernel, scalar_mul
from .rep import VirtualRep

__all__ = [
    "Summand",
    "SpectralPage",
    "e1_page",
    "run_pages",
    "rename_kernel_generator",
    "resolve_extensions",
    "tf",
]


@dataclass(frozen=True, slots=True)
class Summand:
    ideal: CyclicIdeal
    generator: GoldMonomial
    filtration: int


@dataclass(frozen=True, slots=True)
class SpectralPage:
    """One page of the HOTFSS chart.

    ``rows[f]`` is the summand at filtration f or None; row 0 is the even
    column's free summand, rows 1..L the odd column.  ``extension_links``
    (populated on the last page only) lists glued pairs as
    (higher filtration, lower filtration).
    """

    page_index: int
    rows: tuple[Summand | None, ...]
    extension_links: tuple[tuple[int, int], ...] = ()

    @property
    def free(self) -> Summand | None:
        return self.rows[0]

    def torsion(self) -> list[Summand]:
        return [s for s in self.rows[1:] if s is not None]


def e1_page(alpha: VirtualRep, kind: PrismKind) -> SpectralPage:
    """The first page: twisted homotopy-orbit groups on theta names."""
    L = alpha.length
    rows: list[Summand | None] = [None] * (L + 1)
    if alpha.d_inf >= 0:
        rows[0] = Summand(CyclicIdeal.free(), theta(alpha, L - 1), 0)
    for r in range(L):
        d = alpha.dims[r]
        if d > 0:
            if kind is PrismKind.TRANSVERSAL:
                ann = PrismScalar.phi_power(r, d)
            else:
                ann = PrismScalar.p_power(d)
            rows[L - r] = Summand(CyclicIdeal.of(ann), theta(alpha, r).suspend(-1), L - r)
    return SpectralPage(1, tuple(rows))


def rename_kernel_generator(g: GoldMonomial, r: int, kernel: PrismScalar) -> GoldMonomial:
    """Multiply the free generator by the kernel scalar, realized at index r.

    The kernel of the page-(L-r) differential is principal; its generator
    times g is written as g * (a_r u_r)^e through the q-gold relation, raising
    both the a_r- and u_r-exponents by e.  Transversally e = d_r, replacing
    a_r^{-d_r} by u_r^{d_r} outright; in the crystalline case
    e = max(d_r - s_r, 0), a partial replacement leaving a_r^{-e_r}.  The
    rewrite has degree zero, so the generator's grading is unchanged.
    """
    e = kernel.pk if kernel.kind is PrismKind.CRYSTALLINE else kernel.exponent(r)
    if e == 0:
        return g
    return monomial_mul(g, GoldMonomial.make(a={r: e}, u={r: e}))


def run_pages(alpha: VirtualRep, kind: PrismKind) -> list[SpectralPage]:
    """Run all differentials in increasing page order; return pages E^1..E^{L+1}.

    At page k the differential targets filtration k (torsion level r = L - k).
    Its scalar is the name ratio of the current free generator to the row's
    theta name; transversality (or p-adic valuation) then gives the kernel and
    the surviving quotient.  With d_inf < 0 there is no even column and every
    page equals the first.  The final page carries the extension links.
    """
    L = alpha.length
    first = e1_page(alpha, kind)
    rows = list(first.rows)
    pages = [first]
    for k in range(1, L + 1):
        r = L - k
        free = rows[0]
        target = rows[k]
        if free is not None and target is not None:
            try:
                map_scalar = divide_names(free.generator, target.generator.suspend(0), kind)
            except NamesIncomparable as exc:
                raise EngineInvariantError(
                    f"differential scalar undefined at page {k} for {alpha} ({kind}): "
                    f"{exc}; free generator {free.generator}, rows "
                    f"{[(s.filtration, str(s.generator)) for s in rows[1:] if s]}"
                ) from exc
            kernel, quotient = kernel_cokernel(map_scalar, (r, alpha.dims[r]))
            rows[k] = (
                None
                if quotient.is_zero_module
                else Summand(quotient, target.generator, k)
            )
            rows[0] = Summand(
                free.ideal, rename_kernel_generator(free.generator, r, kernel), 0
            )
        pages.append(SpectralPage(k + 1, tuple(rows)))
    links = tuple(
        (L - chain[j], L - chain[j + 1])
        for chain in _gluing_chains(pages[-1], kind)
        for j in range(len(chain) - 1)
    )
    pages[-1] = replace(pages[-1], extension_links=links)
    return pages


def _gluing_chains(einf: SpectralPage, kind: PrismKind) -> list[tuple[int, ...]]:
    """Greedy nearest-neighbor gluing of surviving torsion rows, by name matching.

    Rows are scanned from the highest filtration downward.  A pair (s, r) of
    levels glues exactly when the ratio theta_s / theta_r is a scalar equal to
    the principal annihilator of the lower row: the extension's name relation
    is (that annihilator) * theta_r = theta_s.  An extension is withheld when
    a surviving level strictly between could pair with either endpoint; that
    level claims the gluing, which keeps chains canonical.
    """
    L = len(einf.rows) - 1
    summand_at = {L - s.filtration: s for s in einf.torsion()}
    levels = sorted(summand_at)

    def cond(x: int, y: int) -> bool:
        lower = summand_at[y]
        try:
            ratio = divide_names(
                summand_at[x].generator.suspend(0), lower.generator.suspend(0), kind
            )
        except NamesIncomparable:
            return False
        return ratio == lower.ideal.gens[0]

    used: set[int] = set()
    chains: list[tuple[int, ...]] = []
    for start in levels:
        if start in used:
            continue
        chain = [start]
        used.add(start)
        end = start
        while True:
            nxt = next(
                (y for y in levels if y > end and y not in used and cond(end, y)), None
            )
            if nxt is None:
                break
            if any(end < i < nxt and (cond(end, i) or cond(i, nxt)) for i in levels):
                break
            chain.append(nxt)
            used.add(nxt)
            end = nxt
        chains.append(tuple(chain))
    return chains


def resolve_extensions(
    einf: SpectralPage, alpha: VirtualRep, kind: PrismKind
) -> GradedGroup:
    """Glue the final page's torsion rows into the odd graded group.

    Each chain contributes one summand: the principal annihilators multiply,
    the second (image) generator of a two-generator ideal is shared along the
    chain and kept, and the generator is the theta name of the chain's lowest
    filtration, the largest level.  Summands are ordered by descending top
    filtration of the chain.
    """
    L = alpha.length
    summand_at = {L - s.filtration: s for s in einf.torsion()}
    summands = []
    for chain in _gluing_chains(einf, kind):
        members = [summand_at[level] for level in chain]
        o = members[0].ideal.gens[0]
        for m in members[1:]:
            o = scalar_mul(o, m.ideal.gens[0])
        f_parts = {m.ideal.gens[1:] for m in members}
        if len(f_parts) != 1:
            raise EngineInvariantError(
                f"glued rows disagree on image generators for {alpha} ({kind}): "
                f"{[str(m.ideal) for m in members]}"
            )
        ideal = CyclicIdeal.of(o, *members[-1].ideal.gens[1:])
        summands.append(GroupSummand(ideal, members[-1].generator))
    return GradedGroup(replace(alpha, shift=-1), kind, tuple(summands))


def tf(alpha: VirtualRep, kind: PrismKind) -> GradedGroup:
    """TF in the grading carried by ``alpha``, by running the full HOTFSS."""
    pages = run_pages(alpha, kind)
    einf = pages[-1]
    if alpha.shift == 0:
        grading = replace(alpha, shift=0)
        if einf.free is None:
            return GradedGroup(grading, kind, ())
        return GradedGroup(
            grading, kind, (GroupSummand(einf.free.ideal, einf.free.generator),)
        )
    return resolve_extensions(einf, alpha, kind)
