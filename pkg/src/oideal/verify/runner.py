"""Load scenario files and run them against the toolkits."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from importlib import resources

from ..gb import ResourceLimitError
from .instances import REGISTRY
from .report import Fact, Report, judge


def scenario_ids() -> list[str]:
    return sorted(REGISTRY)


def load_scenario(scenario_id: str) -> dict:
    if scenario_id not in REGISTRY:
        raise KeyError(f"unknown scenario {scenario_id!r}; known: {', '.join(scenario_ids())}")
    text = resources.files(__package__).joinpath("scenarios", f"{scenario_id}.json").read_text()
    return json.loads(text)


def _instance_for(data: dict, parameters: dict) -> dict:
    for inst in data["instances"]:
        if all(inst["parameters"].get(k) == v for k, v in parameters.items()):
            return {"parameters": {**inst["parameters"], **parameters}, "expected": inst["expected"]}
    # unseen parameters: reuse the most general instance (the last one listed)
    last = data["instances"][-1]
    return {"parameters": {**last["parameters"], **parameters}, "expected": last["expected"]}


def run_instance(scenario_id: str, parameters: dict, expected: list, seed: int) -> Report:
    report = Report(scenario_id, {k: v for k, v in parameters.items() if k != "modules"}, seed)
    start = time.perf_counter()
    try:
        values = REGISTRY[scenario_id](parameters, seed)
    except ResourceLimitError as exc:
        report.facts = [Fact(e["name"], "SKIP", provenance=e.get("provenance", {}),
                             reason=f"resource: {exc.limit}") for e in expected]
        report.seconds = time.perf_counter() - start
        return report
    report.values = values
    report.facts = [judge(e, values) for e in expected]
    report.seconds = time.perf_counter() - start
    return report


def run_scenario(scenario_id: str, parameters: dict | None = None, seed: int = 42) -> list[Report]:
    """Run one scenario: every listed instance, or only the one matching ``parameters``."""
    data = load_scenario(scenario_id)
    if parameters:
        inst = _instance_for(data, parameters)
        return [run_instance(scenario_id, inst["parameters"], inst["expected"], seed)]
    return [run_instance(scenario_id, inst["parameters"], inst["expected"], seed) for inst in data["instances"]]


def _run_one(args):
    scenario_id, seed = args
    return run_scenario(scenario_id, None, seed)


def run_all(seed: int = 42, jobs: int = 1) -> list[Report]:
    """All scenarios, ordered by id whatever the completion order."""
    ids = scenario_ids()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, [(i, seed) for i in ids]))
    else:
        results = [_run_one((i, seed)) for i in ids]
    return [r for group in results for r in group]
