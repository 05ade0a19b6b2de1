"""Scenario runner reproducing the worked examples, plus the Chern parity check."""

from .chern import chern_closed_form, chern_parity
from .report import Fact, Report
from .runner import load_scenario, run_all, run_scenario, scenario_ids

__all__ = ["chern_closed_form", "chern_parity", "Fact", "Report", "load_scenario", "run_all",
           "run_scenario", "scenario_ids"]
