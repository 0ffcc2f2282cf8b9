"""Virtual circle-representation gradings in dimension-sequence form.

A p-typical virtual representation of the circle group T is recorded by the
complex dimensions of the fixed parts of its restrictions: writing d_r for
the dimension of the C_{p^r}-fixed part (transported back along the root
isomorphism) and d_inf for the T-fixed dimension, the grading is

    alpha = (d_0, ..., d_{L-1}; d_inf)

together with a shift in {0, -1} selecting the even grading alpha or the odd
grading alpha - 1.  The encoding length L is significant: appending a copy of
d_inf names the same virtual representation but drives a different (larger)
spectral sequence, so ``VirtualRep`` equality is equality of encodings and
:func:`equal_as_gradings` provides the coarser comparison.

The irreducible decomposition alpha = k_0 lambda_0 + ... + k_{L-1} lambda_{L-1}
+ k_inf lambda_inf is related to the dimension sequence by

    d_r = k_inf + sum(k_i for i >= r),

inverted by :func:`irreducible_coeffs`.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import ContractViolation, ParseError

__all__ = [
    "VirtualRep",
    "IrredDecomp",
    "parse_rep",
    "render_rep",
    "irreducible_coeffs",
    "from_irreducible",
    "fixed_part",
    "add_rep",
    "add_lambda",
    "pad_rep",
    "lambda_rep",
    "equal_as_gradings",
]


@dataclass(frozen=True, slots=True)
class VirtualRep:
    """A virtual T-representation grading (d_0, ..., d_{L-1}; d_inf) + shift."""

    dims: tuple[int, ...]
    d_inf: int
    shift: int = 0

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        if len(self.dims) < 1:
            raise ContractViolation("dimension sequence must have at least one entry")
        if self.shift not in (0, -1):
            raise ContractViolation(f"shift must be 0 or -1, got {self.shift}")

    @property
    def length(self) -> int:
        return len(self.dims)

    def d(self, r: int) -> int:
        """Dimension function d_r, reading d_inf for r beyond the encoding."""
        if r < 0:
            raise ContractViolation(f"negative level {r}")
        return self.dims[r] if r < len(self.dims) else self.d_inf

    def __str__(self) -> str:
        return render_rep(self)


@dataclass(frozen=True, slots=True)
class IrredDecomp:
    """Coefficients of the irreducible decomposition; k_inf multiplies lambda_inf."""

    coeffs: tuple[int, ...]
    k_inf: int


def render_rep(rep: VirtualRep) -> str:
    """Canonical text form: dims comma-separated, then ';', then d_inf."""
    return "(" + ",".join(str(d) for d in rep.dims) + ";" + str(rep.d_inf) + ")"


def parse_rep(text: str) -> VirtualRep:
    """Parse ``'(' int (',' int)* ';' int ')'`` with optional ASCII whitespace.

    The shift is not part of the grammar; callers supply it separately and the
    result defaults to shift 0.
    """
    pos = 0
    n = len(text)

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos] in " \t":
            pos += 1

    def expect(ch: str):
        nonlocal pos
        skip_ws()
        if pos >= n or text[pos] != ch:
            raise ParseError(f"expected '{ch}'", pos)
        pos += 1

    def read_int() -> int:
        nonlocal pos
        skip_ws()
        start = pos
        if pos < n and text[pos] == "-":
            pos += 1
        digits = pos
        while pos < n and text[pos].isdigit():
            pos += 1
        if pos == digits:
            raise ParseError("expected an integer", start)
        return int(text[start:pos])

    expect("(")
    dims = [read_int()]
    while True:
        skip_ws()
        if pos < n and text[pos] == ",":
            pos += 1
            dims.append(read_int())
        else:
            break
    expect(";")
    d_inf = read_int()
    expect(")")
    skip_ws()
    if pos != n:
        raise ParseError("trailing input after ')'", pos)
    return VirtualRep(tuple(dims), d_inf)


def irreducible_coeffs(rep: VirtualRep) -> IrredDecomp:
    """Invert d_r = k_inf + sum(k_i for i >= r)."""
    dims = rep.dims
    ks = [dims[i] - dims[i + 1] for i in range(len(dims) - 1)]
    ks.append(dims[-1] - rep.d_inf)
    return IrredDecomp(tuple(ks), rep.d_inf)


def from_irreducible(dec: IrredDecomp, shift: int = 0) -> VirtualRep:
    """Rebuild the dimension sequence from irreducible coefficients."""
    dims = []
    acc = dec.k_inf
    for k in reversed(dec.coeffs):
        acc += k
        dims.append(acc)
    dims.reverse()
    return VirtualRep(tuple(dims), dec.k_inf, shift)


def fixed_part(rep: VirtualRep, r: int) -> VirtualRep:
    """The grading of the C_{p^r}-fixed part, (d_r, ..., d_{L-1}; d_inf)."""
    if not 0 <= r <= rep.length - 1:
        raise ContractViolation(f"fixed_part level {r} out of range for length {rep.length}")
    return VirtualRep(rep.dims[r:], rep.d_inf, rep.shift)


def pad_rep(rep: VirtualRep, new_length: int) -> VirtualRep:
    """Append copies of d_inf; the padded encoding names the same grading."""
    if new_length < rep.length:
        raise ContractViolation(f"cannot pad length {rep.length} down to {new_length}")
    return VirtualRep(rep.dims + (rep.d_inf,) * (new_length - rep.length), rep.d_inf, rep.shift)


def add_rep(x: VirtualRep, y: VirtualRep) -> VirtualRep:
    """Entrywise sum after padding to a common length; shifts must be 0."""
    if x.shift != 0 or y.shift != 0:
        raise ContractViolation("add_rep requires shift 0 on both operands")
    length = max(x.length, y.length)
    xp, yp = pad_rep(x, length), pad_rep(y, length)
    return VirtualRep(
        tuple(a + b for a, b in zip(xp.dims, yp.dims)), x.d_inf + y.d_inf, 0
    )


def lambda_rep(i: int) -> VirtualRep:
    """The irreducible lambda_i as a dimension sequence: d_r = 1 for r <= i."""
    if i < 0:
        raise ContractViolation(f"lambda index must be nonnegative, got {i}")
    return VirtualRep((1,) * (i + 1), 0)


def add_lambda(rep: VirtualRep, i: int) -> VirtualRep:
    """Add lambda_i: raise d_0..d_i by one, padding first when i >= L."""
    if i < 0:
        raise ContractViolation(f"lambda index must be nonnegative, got {i}")
    base = pad_rep(rep, i + 1) if i >= rep.length else rep
    dims = tuple(d + 1 if r <= i else d for r, d in enumerate(base.dims))
    return VirtualRep(dims, base.d_inf, base.shift)


def equal_as_gradings(x: VirtualRep, y: VirtualRep) -> bool:
    """Equality after padding to a common length; shifts must agree."""
    if x.shift != y.shift:
        return False
    length = max(x.length, y.length)
    return pad_rep(x, length).dims == pad_rep(y, length).dims and x.d_inf == y.d_inf


def _replace_shift(rep: VirtualRep, shift: int) -> VirtualRep:
    return replace(rep, shift=shift)
