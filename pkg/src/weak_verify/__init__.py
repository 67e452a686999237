from .bump import TestFunction, random_test_functions
from .quadrature import GAUSS_ORDER, QuadratureRule, reference_rule, integrate_interval
from .dirac import DiracOnCurve, dirac_pairing
from .residual import WeakResidual, integral_weak_residual, measure_weak_residual
from .entropy import EntropyReport, FamilyLax, entropy_check, lax_report
from .report import ResidualReport, verify_solution, weak_residual
