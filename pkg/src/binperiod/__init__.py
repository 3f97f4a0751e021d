"""Periodicity analysis of binary discrete-time and real-time signals."""
from .bridge import embed, sample
from .core import Point, TimeSet, format_rat, parse_rat, point_componentwise, pt
from .dsignal import (DiscreteSignal, EvPeriodicIntSet, d_canonicalize, d_forget,
                      d_summarize, d_support_set, d_value_at)
from .errors import (ConstantSignal, DomainError, EditConflict, GridMismatch, HorizonError,
                     NotEventuallyPeriodic, NotInOrbit, ParseError, RepresentationError,
                     SignalError, WidthError, WindowError)
from .flowgen import BooleanFunction, ComputationFunction, parse_phi, run_flow
from .oracle import WindowSignal, agree, brute_point_check, brute_signal_check
from .periodicity import (LimitSet, PeriodSet, accessibility_check, analyze_point,
                          analyze_signal, classify_constancy, decompose_support,
                          hypothesis_p_report, periodicity_window_point, recompose_support)
from .perturb import d_edit, r_edit
from .report import characterization_report
from .rsignal import (EvPeriodicIntervalSet, RealSignal, Tail, r_canonicalize, r_forget,
                      r_limits, r_summarize, r_support_set, r_value_at)

__all__ = [
    "embed", "sample",
    "Point", "TimeSet", "format_rat", "parse_rat", "point_componentwise", "pt",
    "DiscreteSignal", "EvPeriodicIntSet", "d_canonicalize", "d_forget", "d_summarize",
    "d_support_set", "d_value_at",
    "ConstantSignal", "DomainError", "EditConflict", "GridMismatch", "HorizonError",
    "NotEventuallyPeriodic", "NotInOrbit", "ParseError", "RepresentationError",
    "SignalError", "WidthError", "WindowError",
    "BooleanFunction", "ComputationFunction", "parse_phi", "run_flow",
    "WindowSignal", "agree", "brute_point_check", "brute_signal_check",
    "LimitSet", "PeriodSet", "accessibility_check", "analyze_point", "analyze_signal",
    "classify_constancy", "decompose_support", "hypothesis_p_report",
    "periodicity_window_point", "recompose_support",
    "d_edit", "r_edit", "characterization_report",
    "EvPeriodicIntervalSet", "RealSignal", "Tail", "r_canonicalize", "r_forget", "r_limits",
    "r_summarize", "r_support_set", "r_value_at",
]
