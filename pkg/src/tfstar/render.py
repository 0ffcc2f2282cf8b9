"""Text, LaTeX and JSON renderers for groups, chart pages and reports.

Text output mirrors chart notation in ASCII names: ``A/p^3⟨S^-1 a_0^-2 u_1⟩``
with summands joined by ``⊕`` and the zero group printed ``0``.  LaTeX output
reproduces the chart tabular layout, one row per filtration, torsion column
left of the free column; extensions appear as a brace column (transversal) or
as textual connection lines (crystalline).  JSON output follows a fixed-order
schema and is byte-stable for identical inputs; integers outside the 53-bit
range are emitted as decimal strings and flagged by a top-level ``exts``
marker.
"""

from __future__ import annotations

import json

from .consistency import CheckReport
from .gold import GoldMonomial, monomial_latex, render_monomial
from .groups import GradedGroup
from .hotfss import SpectralPage, resolve_extensions, run_pages
from .les import TrReport
from .mackey import MackeyPage
from .obstruction import ObstructionProblem, ObstructionResult
from .prism import (
    CyclicIdeal,
    PrismKind,
    PrismScalar,
    render_module,
    render_scalar,
)
from .rep import VirtualRep

__all__ = [
    "render_group_text",
    "render_group_latex",
    "render_json",
    "group_json_obj",
    "render_page_text",
    "render_pages_text",
    "render_pages_latex",
    "e1_json_obj",
    "pages_json_obj",
    "render_mackey_text",
    "render_mackey_latex",
    "mackey_json_obj",
    "render_tr_text",
    "tr_json_obj",
    "render_check_text",
    "render_obstruction_text",
    "obstruction_json_obj",
]

_MAX_JSON_INT = 2**53 - 1


# ---------------------------------------------------------------- groups


def _summand_text(ideal: CyclicIdeal, gen: GoldMonomial) -> str:
    return f"{render_module(ideal)}⟨{render_monomial(gen)}⟩"


def _summand_latex(ideal: CyclicIdeal, gen: GoldMonomial) -> str:
    return f"{render_module(ideal, latex=True)}\\langle {monomial_latex(gen)}\\rangle"


def render_group_text(group: GradedGroup) -> str:
    if group.is_zero:
        return "0"
    return " ⊕ ".join(_summand_text(s.ideal, s.generator) for s in group.summands)


def render_group_latex(group: GradedGroup) -> str:
    if group.is_zero:
        return "$0$"
    return "$" + " \\oplus ".join(
        _summand_latex(s.ideal, s.generator) for s in group.summands
    ) + "$"


# ---------------------------------------------------------------- JSON helpers


def _scalar_json(s: PrismScalar) -> list:
    if s.kind is PrismKind.CRYSTALLINE:
        return [["p", s.pk]]
    return [["phi", i, e] for i, e in s.phi]


def _ideal_json(ideal: CyclicIdeal) -> list:
    return [_scalar_json(g) for g in ideal.gens]


def _exp_json(items: tuple[tuple[int, int], ...]) -> dict:
    return {str(i): e for i, e in items}


def _generator_json(m: GoldMonomial) -> dict:
    return {
        "a": _exp_json(m.a),
        "u": _exp_json(m.u),
        "u_lambda": _exp_json(m.ulam),
        "suspension": m.suspension,
    }


def _grading_json(rep: VirtualRep) -> dict:
    return {"dims": list(rep.dims), "d_inf": rep.d_inf, "shift": rep.shift}


def group_json_obj(group: GradedGroup) -> dict:
    return {
        "grading": _grading_json(group.grading),
        "kind": group.kind.value,
        "summands": [
            {
                "annihilator": _ideal_json(s.ideal),
                "generator": _generator_json(s.generator),
            }
            for s in group.summands
        ],
    }


def _guard_big(obj, flag: list):
    if isinstance(obj, dict):
        return {k: _guard_big(v, flag) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_guard_big(v, flag) for v in obj]
    if isinstance(obj, int) and not isinstance(obj, bool) and abs(obj) > _MAX_JSON_INT:
        flag.append(True)
        return str(obj)
    return obj


def render_json(obj: dict) -> bytes:
    """Stable UTF-8 JSON with fixed key order and big-integer stringification."""
    flag: list = []
    guarded = _guard_big(obj, flag)
    if flag:
        guarded["exts"] = ["bigint-as-string"]
    return json.dumps(guarded, separators=(",", ":"), ensure_ascii=False).encode()


# ---------------------------------------------------------------- pages


def _page_cells(page: SpectralPage) -> list[tuple[int, str, str]]:
    """(filtration, torsion cell, free cell) rows from the top filtration down."""
    out = []
    top = len(page.rows) - 1
    for f in range(top, -1, -1):
        s = page.rows[f]
        torsion = _summand_text(s.ideal, s.generator) if s and f > 0 else ""
        free = _summand_text(s.ideal, s.generator) if s and f == 0 else ""
        out.append((f, torsion, free))
    return out


def render_page_text(page: SpectralPage, label: str) -> str:
    lines = [label]
    for f, torsion, free in _page_cells(page):
        lines.append(f"  {f} | {torsion} | {free}")
    lines.append("    |  -1 column | 0 column")
    if page.extension_links:
        joined = ", ".join(f"{hi}~{lo}" for hi, lo in page.extension_links)
        lines.append(f"  extensions: {joined}")
    return "\n".join(lines)


def _glued_summands(alpha: VirtualRep, kind: PrismKind, einf: SpectralPage):
    """Chains of filtrations together with the glued group, in output order."""
    group = resolve_extensions(einf, alpha, kind)
    chains: list[list[int]] = []
    linked = dict(einf.extension_links)
    seen: set[int] = set()
    for s in sorted(einf.torsion(), key=lambda s: -s.filtration):
        f = s.filtration
        if f in seen:
            continue
        chain = [f]
        seen.add(f)
        while chain[-1] in linked:
            nxt = linked[chain[-1]]
            chain.append(nxt)
            seen.add(nxt)
        chains.append(chain)
    assert len(chains) == len(group.summands), (chains, len(group.summands))
    return list(zip(chains, group.summands))


def render_pages_text(alpha: VirtualRep, kind: PrismKind) -> str:
    pages = run_pages(alpha, kind)
    blocks = [
        render_page_text(pages[0], f"HOTFSS E^1 for {alpha}, {kind.value}"),
        render_page_text(pages[-1], f"HOTFSS E^inf for {alpha}, {kind.value}"),
    ]
    glued = [
        (chain, s)
        for chain, s in _glued_summands(alpha, kind, pages[-1])
        if len(chain) > 1
    ]
    for chain, s in glued:
        blocks.append(
            "  glue " + "+".join(str(f) for f in chain) + " -> "
            + _summand_text(s.ideal, s.generator)
        )
    return "\n".join(blocks)


def _latex_tabular(page: SpectralPage, page_label: str, brace: dict[int, str]) -> str:
    top = len(page.rows) - 1
    cols = "c|ccl" if brace else "c|cc"
    lines = [f"\\begin{{tabular}}{{{cols}}}"]
    for f in range(top, -1, -1):
        s = page.rows[f]
        torsion = f"${_summand_latex(s.ideal, s.generator)}$" if s and f > 0 else ""
        free = f"${_summand_latex(s.ideal, s.generator)}$" if s and f == 0 else ""
        cells = [str(f), torsion, free]
        if brace:
            cells.append(brace.get(f, ""))
        lines.append(" & ".join(cells) + r" \\")
    footer = [f"${page_label}$", "$-1$", "$0$"] + ([""] if brace else [])
    lines.append("\\hline")
    lines.append(" & ".join(footer))
    lines.append("\\end{tabular}")
    return "\n".join(lines)


def render_pages_latex(alpha: VirtualRep, kind: PrismKind, first_only: bool = False) -> str:
    """Chart reproduction: E^1 tabular, then E^infty with extension decorations.

    Transversal extensions are drawn as a brace column next to the rows they
    span; crystalline extensions are described by textual connection lines
    after the tabular.
    """
    pages = run_pages(alpha, kind)
    header = f"% HOTFSS for alpha={alpha}, {kind.value}"
    e1 = _latex_tabular(pages[0], "E^1", {})
    if first_only:
        return "\n".join([header, e1, ""])
    einf = pages[-1]
    glued = [(c, s) for c, s in _glued_summands(alpha, kind, einf) if len(c) > 1]
    brace: dict[int, str] = {}
    trailing: list[str] = []
    if kind is PrismKind.TRANSVERSAL:
        for chain, s in glued:
            brace[chain[0]] = (
                rf"$\left.\rule{{0pt}}{{{len(chain)}.2em}}\right\}}\,"
                + _summand_latex(s.ideal, s.generator)
                + "$"
            )
    else:
        for chain, s in glued:
            joined = "+".join(str(f) for f in chain)
            trailing.append(
                rf"\quad\text{{extension {joined}:}}\ ${_summand_latex(s.ideal, s.generator)}$"
            )
    einf_block = _latex_tabular(einf, r"E^\infty", brace)
    parts = [header, e1, einf_block] + trailing
    return "\n".join(parts) + "\n"


def _page_json(page: SpectralPage) -> dict:
    rows = []
    for f in range(len(page.rows) - 1, -1, -1):
        s = page.rows[f]
        if s is None:
            continue
        rows.append(
            {
                "filtration": f,
                "column": 0 if f == 0 else -1,
                "annihilator": _ideal_json(s.ideal),
                "generator": _generator_json(s.generator),
            }
        )
    return {
        "page": page.page_index,
        "rows": rows,
        "extension_links": [list(link) for link in page.extension_links],
    }


def e1_json_obj(alpha: VirtualRep, kind: PrismKind, page: SpectralPage) -> dict:
    return {
        "grading": _grading_json(alpha),
        "kind": kind.value,
        **_page_json(page),
    }


def pages_json_obj(alpha: VirtualRep, kind: PrismKind) -> dict:
    pages = run_pages(alpha, kind)
    einf = pages[-1]
    extensions = [
        {
            "filtrations": list(chain),
            "annihilator": _ideal_json(s.ideal),
            "generator": _generator_json(s.generator),
        }
        for chain, s in _glued_summands(alpha, kind, einf)
        if len(chain) > 1
    ]
    return {
        "grading": _grading_json(alpha),
        "kind": kind.value,
        "pages": [_page_json(p) for p in pages],
        "extensions": extensions,
    }


# ---------------------------------------------------------------- mackey


def render_mackey_text(alpha: VirtualRep, kind: PrismKind, page: MackeyPage) -> str:
    lines = [f"Mackey E^1 for {alpha}, {kind.value}"]
    for f in range(len(page.rows) - 1, -1, -1):
        row = page.rows[f]
        if row is None:
            lines.append(f"  {f} |  | ")
            continue
        torsion = (
            f"{row.torsion.symbol}⟨{render_monomial(row.torsion.generator)}⟩"
            if row.torsion
            else ""
        )
        transfer = (
            f"{row.transfer.symbol}⟨{render_monomial(row.transfer.generator)}⟩"
            if row.transfer
            else ""
        )
        lines.append(f"  {f} | {torsion} | {transfer}")
    lines.append("    |  -1 column | 0 column")
    return "\n".join(lines)


def render_mackey_latex(alpha: VirtualRep, kind: PrismKind, page: MackeyPage) -> str:
    lines = [
        f"% Mackey E^1 for alpha={alpha}, {kind.value}",
        "\\begin{tabular}{c|cc}",
    ]
    for f in range(len(page.rows) - 1, -1, -1):
        row = page.rows[f]
        torsion = transfer = ""
        if row is not None:
            if row.torsion:
                torsion = f"${row.torsion.symbol.latex()}\\langle {monomial_latex(row.torsion.generator)}\\rangle$"
            if row.transfer:
                transfer = f"${row.transfer.symbol.latex()}\\langle {monomial_latex(row.transfer.generator)}\\rangle$"
        lines.append(f"{f} & {torsion} & {transfer} \\\\")
    lines.append("\\hline")
    lines.append("$E^1$ & $-1$ & $0$")
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


def _cell_json(cell) -> dict | None:
    if cell is None:
        return None
    return {"symbol": str(cell.symbol), "generator": _generator_json(cell.generator)}


def mackey_json_obj(alpha: VirtualRep, kind: PrismKind, page: MackeyPage) -> dict:
    rows = []
    for f in range(len(page.rows) - 1, -1, -1):
        row = page.rows[f]
        if row is None:
            continue
        rows.append(
            {
                "filtration": f,
                "transfer": _cell_json(row.transfer),
                "torsion": _cell_json(row.torsion),
            }
        )
    return {"grading": _grading_json(alpha), "kind": kind.value, "rows": rows}


# ---------------------------------------------------------------- TR reports


def render_tr_text(report: TrReport) -> str:
    n = report.level
    lines = [
        f"TR^{n + 1} report in grading {report.alpha}, {report.kind.value}",
        f"  TF(+lambda_{n})      : {render_group_text(report.tf_plus)}",
        f"  TF                   : {render_group_text(report.tf_even)}",
        f"  TF(+lambda_{n}, odd) : {render_group_text(report.tf_odd_source)}",
        f"  TF(odd)              : {render_group_text(report.tf_odd_target)}",
        "  even multiplication  : "
        + (render_scalar(report.even_scalar) if report.even_scalar else "0"),
        f"  cokernel             : {render_group_text(report.cokernel)}",
    ]
    if report.kernel.status == "exact":
        if report.kernel.summands:
            parts = []
            for s in report.kernel.summands:
                prefix = f"{render_scalar(s.prefix)} " if s.prefix else ""
                parts.append(
                    f"{render_module(s.ideal)}⟨{prefix}{render_monomial(s.generator)}⟩"
                )
            lines.append("  odd kernel           : " + " ⊕ ".join(parts))
        else:
            lines.append("  odd kernel           : 0")
        lines.append(f"  TR^{n + 1} = extension of the odd kernel by the cokernel")
    else:
        lines.append(f"  odd kernel           : undetermined ({report.kernel.reason})")
    return "\n".join(lines)


def tr_json_obj(report: TrReport) -> dict:
    if report.kernel.status == "exact":
        kernel_status: dict = {
            "status": "exact",
            "summands": [
                {
                    "annihilator": _ideal_json(s.ideal),
                    "prefix": _scalar_json(s.prefix) if s.prefix else None,
                    "generator": _generator_json(s.generator),
                }
                for s in report.kernel.summands
            ],
        }
    else:
        kernel_status = {"status": "undetermined", "reason": report.kernel.reason}
    return {
        "grading": _grading_json(report.alpha),
        "kind": report.kind.value,
        "level": report.level,
        "tf_plus": group_json_obj(report.tf_plus),
        "tf_even": group_json_obj(report.tf_even),
        "tf_odd_source": group_json_obj(report.tf_odd_source),
        "tf_odd_target": group_json_obj(report.tf_odd_target),
        "even_scalar": _scalar_json(report.even_scalar) if report.even_scalar else None,
        "cokernel": group_json_obj(report.cokernel),
        "kernel_status": kernel_status,
    }


# ---------------------------------------------------------------- reports


def render_check_text(report: CheckReport) -> str:
    lines = [
        f"crosscheck: {report.config.samples} samples, seed {report.config.seed}, "
        f"{report.comparisons} comparisons",
        f"mismatches: {len(report.mismatches)}",
    ]
    for m in report.mismatches:
        lines.append(f"  [{m.check}] sample {m.sample} {m.rep} shift {m.shift} "
                     f"{m.kind}: {m.detail}")
    if report.findings:
        lines.append(f"findings: {len(report.findings)}")
        for f in report.findings:
            lines.append(f"  {f}")
    return "\n".join(lines)


def render_obstruction_text(prob: ObstructionProblem, result: ObstructionResult) -> str:
    src = ", ".join(f"p^{a}" for a in prob.source_exponents)
    tgt = ", ".join(f"p^{b}" for b in prob.target_exponents)
    lines = [
        f"obstruction search: source ({src}) <-> target ({tgt}), p = {prob.p}",
        f"raw coefficient space: {result.raw_space}",
    ]
    if result.feasible:
        lines.append("feasible; witness coefficient matrices (A then U):")
        lines.append("  A = " + str([list(r) for r in result.witness_a]))
        lines.append("  U = " + str([list(r) for r in result.witness_u]))
    else:
        lines.append("infeasible: no homomorphism pair realizes both composites")
    return "\n".join(lines)


def obstruction_json_obj(prob: ObstructionProblem, result: ObstructionResult) -> dict:
    return {
        "problem": {
            "source_exponents": list(prob.source_exponents),
            "target_exponents": list(prob.target_exponents),
            "composite_au": list(prob.composite_au),
            "composite_ua": list(prob.composite_ua),
            "p": prob.p,
        },
        "feasible": result.feasible,
        "witness": (
            {
                "A": [list(r) for r in result.witness_a],
                "U": [list(r) for r in result.witness_u],
            }
            if result.feasible
            else None
        ),
        "raw_space": result.raw_space,
        "states_explored": result.states_explored,
    }
