"""The gold-element monomial algebra.

Generators of RO(T)-graded TF groups are named by monomials in the gold
elements: Euler-type classes a_i, orientation-type classes u_i, and the
orientation classes u_{lambda_j} of the irreducibles themselves (index -1
names the Bokstedt generator in degree 2).  Their effect on a dimension
sequence is local,

    a_i lowers d_i by one,    u_i raises d_i by one,
    u_{lambda_j} raises d_r for every r > j and raises d_inf,

and all generator names produced by the calculators are products of these
together with a suspension flag marking odd summands.

The q-gold relation a_i u_i = phi^i(xi) turns matched a/u pairs into prism
scalars; :func:`normalize` extracts such pairs index by index, and
:func:`divide_names` decides whether a ratio of two names is a scalar.  In
the crystalline backend the extra relation a_i^{-1} a_j = u_i u_j^{-1} lets
matched pairs migrate between indices, so there only the total pair count
must be nonnegative.  No other rewriting is ever performed implicitly; the
cross-index relation is applied by the spectral-sequence engine's explicit
rename step alone, since uncontrolled use of it makes names non-canonical.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import ContractViolation, NamesIncomparable
from .prism import PrismKind, PrismScalar
from .rep import VirtualRep

__all__ = [
    "GoldMonomial",
    "monomial_mul",
    "degree",
    "theta",
    "normalize",
    "divide_names",
    "canonicalize_top",
    "render_monomial",
    "monomial_latex",
]

_Items = tuple[tuple[int, int], ...]


def _as_items(exps: dict[int, int] | None) -> _Items:
    if not exps:
        return ()
    return tuple(sorted((i, e) for i, e in exps.items() if e != 0))


@dataclass(frozen=True, slots=True)
class GoldMonomial:
    """Sparse exponent vector over the a_i, u_i and u_{lambda_j}, plus suspension.

    Arbitrary integer exponents are allowed; zero exponents are never stored.
    """

    a: _Items = ()
    u: _Items = ()
    ulam: _Items = ()
    suspension: int = 0

    def __post_init__(self):
        for name, items, low in (("a", self.a, 0), ("u", self.u, 0), ("ulam", self.ulam, -1)):
            prev = None
            for i, e in items:
                if e == 0:
                    raise ContractViolation(f"{name}-exponent map stores a zero entry")
                if i < low:
                    raise ContractViolation(f"{name}-index {i} below minimum {low}")
                if prev is not None and i <= prev:
                    raise ContractViolation(f"{name}-exponent map not sorted")
                prev = i
        if self.suspension not in (0, -1):
            raise ContractViolation(f"suspension must be 0 or -1, got {self.suspension}")

    @classmethod
    def make(
        cls,
        a: dict[int, int] | None = None,
        u: dict[int, int] | None = None,
        ulam: dict[int, int] | None = None,
        suspension: int = 0,
    ) -> "GoldMonomial":
        return cls(_as_items(a), _as_items(u), _as_items(ulam), suspension)

    @classmethod
    def one(cls) -> "GoldMonomial":
        return cls()

    def a_dict(self) -> dict[int, int]:
        return dict(self.a)

    def u_dict(self) -> dict[int, int]:
        return dict(self.u)

    def ulam_dict(self) -> dict[int, int]:
        return dict(self.ulam)

    @property
    def is_one(self) -> bool:
        return not self.a and not self.u and not self.ulam and self.suspension == 0

    def suspend(self, shift: int) -> "GoldMonomial":
        """Return this name carrying the given suspension flag."""
        return replace(self, suspension=shift)

    def __mul__(self, other: "GoldMonomial") -> "GoldMonomial":
        return monomial_mul(self, other)

    def __str__(self) -> str:
        return render_monomial(self)


def _merge(x: _Items, y: _Items, sign: int = 1) -> _Items:
    exps = dict(x)
    for i, e in y:
        exps[i] = exps.get(i, 0) + sign * e
    return tuple(sorted((i, e) for i, e in exps.items() if e != 0))


def monomial_mul(x: GoldMonomial, y: GoldMonomial) -> GoldMonomial:
    """Exponentwise product; suspensions add and must stay in {0, -1}."""
    susp = x.suspension + y.suspension
    if susp < -1:
        raise ContractViolation("product of two suspended names has no grading in scope")
    return GoldMonomial(_merge(x.a, y.a), _merge(x.u, y.u), _merge(x.ulam, y.ulam), susp)


def degree(m: GoldMonomial) -> VirtualRep:
    """The grading of a name, including its suspension as the shift.

    The output length is one more than the largest index mentioned (at least
    one), so equality with a longer requested grading is equality of gradings,
    not of encodings.
    """
    top = 0
    for i, _ in m.a:
        top = max(top, i)
    for i, _ in m.u:
        top = max(top, i)
    for j, _ in m.ulam:
        top = max(top, j)
    length = top + 1
    dims = [0] * length
    for i, e in m.a:
        dims[i] -= e
    for i, e in m.u:
        dims[i] += e
    d_inf = 0
    for j, e in m.ulam:
        for r in range(j + 1, length):
            dims[r] += e
        d_inf += e
    return VirtualRep(tuple(dims), d_inf, m.suspension)


def theta(alpha: VirtualRep, r: int) -> GoldMonomial:
    """The canonical generator name with a-factors through index r.

    theta(alpha, r) = a_0^{-d_0} ... a_r^{-d_r} u_{r+1}^{d_{r+1}} ... u_{L-1}^{d_{L-1}}
    u_{lambda_{L-1}}^{d_inf}; r = -1 yields the all-u name.  The shift of
    ``alpha`` is ignored and the result carries suspension 0.
    """
    L = alpha.length
    if not -1 <= r <= L - 1:
        raise ContractViolation(f"theta level {r} out of range [-1, {L - 1}]")
    a = {i: -alpha.dims[i] for i in range(0, r + 1)}
    u = {i: alpha.dims[i] for i in range(r + 1, L)}
    ulam = {L - 1: alpha.d_inf}
    return GoldMonomial.make(a=a, u=u, ulam=ulam)


def normalize(m: GoldMonomial) -> tuple[PrismScalar, GoldMonomial]:
    """Extract matched a_i/u_i pairs as a transversal scalar, index by index.

    Only indices where both exponents are positive are reduced; no cross-index
    rewriting happens here.  Specialize the scalar for crystalline use.
    """
    a = m.a_dict()
    u = m.u_dict()
    exps: dict[int, int] = {}
    for i in set(a) & set(u):
        if a[i] > 0 and u[i] > 0:
            c = min(a[i], u[i])
            exps[i] = c
            a[i] -= c
            u[i] -= c
    scalar = PrismScalar.from_exponents(PrismKind.TRANSVERSAL, exps)
    return scalar, GoldMonomial.make(a=a, u=u, ulam=m.ulam_dict(), suspension=m.suspension)


def divide_names(num: GoldMonomial, den: GoldMonomial, kind: PrismKind) -> PrismScalar:
    """Express num/den as a prism scalar through the q-gold relation, or fail.

    The exponentwise difference must be a product of gold pairs (a_i u_i)^{k_i}
    with no u_{lambda} factors left over.  Transversally every k_i must be
    nonnegative, since distinct phi^i(xi) are unrelated.  Crystalline names
    also satisfy a_i^{-1} a_j = u_i u_j^{-1}, which moves pairs between
    indices, so only the total sum of the k_i must be nonnegative and the
    result is p to that sum.  Failure raises :class:`NamesIncomparable`,
    the normal signal that a candidate map or extension does not exist.
    """
    if num.suspension != den.suspension:
        raise ContractViolation("divide_names requires equal suspensions")
    if _merge(num.ulam, den.ulam, -1):
        raise NamesIncomparable(f"u_lambda factors do not cancel in {num} / {den}")
    a_diff = dict(_merge(num.a, den.a, -1))
    u_diff = dict(_merge(num.u, den.u, -1))
    if set(a_diff) != set(u_diff) or any(a_diff[i] != u_diff[i] for i in a_diff):
        raise NamesIncomparable(f"{num} / {den} is not a product of gold pairs")
    ks = a_diff
    if kind is PrismKind.CRYSTALLINE:
        total = sum(ks.values())
        if total < 0:
            raise NamesIncomparable(f"{num} / {den} has negative total pair count {total}")
        return PrismScalar.p_power(total)
    if any(k < 0 for k in ks.values()):
        raise NamesIncomparable(f"{num} / {den} has a negative pair exponent")
    return PrismScalar.from_exponents(PrismKind.TRANSVERSAL, ks)


def canonicalize_top(m: GoldMonomial, top: int) -> GoldMonomial:
    """Rewrite every u_{lambda_j} with j < top via u_{lambda_j} = u_{j+1} u_{lambda_{j+1}}.

    Used to compare names produced at different encoding lengths; the result
    mentions u_{lambda} only at index ``top``.
    """
    u = m.u_dict()
    acc = 0
    for j, e in m.ulam:
        if j > top:
            raise ContractViolation(f"name mentions u_lambda_{j} above requested top {top}")
        acc += e
        if j < top:
            for i in range(j + 1, top + 1):
                u[i] = u.get(i, 0) + e
    ulam = {top: acc} if acc else {}
    return GoldMonomial.make(a=m.a_dict(), u=u, ulam=ulam, suspension=m.suspension)


def _render_factor(base: str, e: int, latex: bool) -> str:
    if latex:
        return base if e == 1 else base + f"^{{{e}}}"
    return base if e == 1 else base + f"^{e}"


def render_monomial(m: GoldMonomial) -> str:
    """ASCII form: 'S^-1 a_0^-2 u_1 u_2^-2 u_3^3 u_l3'; the empty name is '1'."""
    parts = []
    if m.suspension == -1:
        parts.append("S^-1")
    for i, e in m.a:
        parts.append(_render_factor(f"a_{i}", e, False))
    for i, e in m.u:
        parts.append(_render_factor(f"u_{i}", e, False))
    for j, e in m.ulam:
        parts.append(_render_factor(f"u_l{j}", e, False))
    if not parts:
        return "1"
    if parts == ["S^-1"]:
        return "S^-1 1"
    return " ".join(parts)


def monomial_latex(m: GoldMonomial) -> str:
    """LaTeX form matching chart conventions, e.g. \\Sigma^{-1}a_{0}^{-2}u_{1}."""
    parts = []
    if m.suspension == -1:
        parts.append(r"\Sigma^{-1}")
    body = []
    for i, e in m.a:
        body.append(_render_factor(f"a_{{{i}}}", e, True))
    for i, e in m.u:
        body.append(_render_factor(f"u_{{{i}}}", e, True))
    for j, e in m.ulam:
        body.append(_render_factor(rf"u_{{\lambda_{{{j}}}}}", e, True))
    if not body:
        body = ["1"]
    return "".join(parts + body)


def monomial_key(m: GoldMonomial) -> tuple:
    """Canonical hashable form for multiset comparisons."""
    return (m.a, m.u, m.ulam, m.suspension)
