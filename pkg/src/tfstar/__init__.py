"""Exact calculator for RO(T)-graded TF of perfectoid rings.

Gradings are virtual circle representations in dimension-sequence form;
values are finite sums of cyclic modules over the prism A with generators
named by gold-element monomials.  Two independent routes produce every
answer: the homotopy-orbit spectral sequence engine (:mod:`tfstar.hotfss`)
and the closed forms (:mod:`tfstar.closedform`); :mod:`tfstar.consistency`
cross-validates them on randomized inputs.
"""

from .rep import VirtualRep, parse_rep
from .prism import PrismKind, PrismScalar, CyclicIdeal
from .gold import GoldMonomial, theta, degree
from .groups import GradedGroup, GroupSummand
from .hotfss import tf, e1_page, run_pages
from .closedform import closed_tf, e_sequence
from .mackey import mackey_e1, evaluate_level, warmup_tables
from .les import tr_report, a_lambda_mul_even
from .consistency import CheckConfig, crosscheck, ObstructionProblem, obstruction_search

__version__ = "0.1.0"

__all__ = [
    "VirtualRep",
    "parse_rep",
    "PrismKind",
    "PrismScalar",
    "CyclicIdeal",
    "GoldMonomial",
    "theta",
    "degree",
    "GradedGroup",
    "GroupSummand",
    "tf",
    "e1_page",
    "run_pages",
    "closed_tf",
    "e_sequence",
    "mackey_e1",
    "evaluate_level",
    "warmup_tables",
    "tr_report",
    "a_lambda_mul_even",
    "CheckConfig",
    "crosscheck",
    "ObstructionProblem",
    "obstruction_search",
]
