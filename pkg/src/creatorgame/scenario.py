"""Scenario files: strict JSON ingestion plus named presets.

A scenario document is a JSON object with sections:

    table       optional; {"collaboration": {...}, "beefing": {...}} with
                clicks / watch_time / shares / drama_risk per strategy
                (defaults to the built-in table)
    weights     required; {"alpha": x, "beta": x, "gamma": x}
    creator     required; {"delta": x, "model": "linear" | "nonlinear"}
                (model defaults to "linear")
    population  optional; {"deltas": [...]} or
                {"grid": {"min": x, "max": x, "count": n}}
                (defaults to the single creator above)
    rule        optional; "exact" | {"quantal": {"lambda": x}}
                | {"satisficing": {"aspiration": x}} (defaults to "exact")
    domain      optional; {"simplex": {"total": x, "resolution": n}} or
                {"box": {"alpha_max": x, "beta_max": x, "gamma_max": x,
                "resolution": n}} (defaults to the unit simplex at
                resolution 100)

Parsing is strict: unknown keys anywhere raise ScenarioError with the
offending key path. A typo in an incentive parameter must never silently
fall back to a default.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .core import (
    AlgorithmWeights,
    CreatorParams,
    DEFAULT_TABLE,
    EngagementProfile,
    GameTable,
    InvalidScenarioError,
    Strategy,
    UtilityModel,
)
from .leader import BoxDomain, SimplexDomain, WeightDomain
from .population import Population, make_delta_grid_population
from .response import Exact, Quantal, ResponseRule, Satisficing


class ScenarioError(ValueError):
    """The scenario document failed validation; the message carries the key path."""


@dataclass(frozen=True)
class Scenario:
    """A fully resolved scenario, defaults applied."""

    weights: AlgorithmWeights
    creator: CreatorParams
    table: GameTable
    population: Population
    rule: ResponseRule
    domain: WeightDomain


# Built-in presets: the three worked examples plus two platform archetypes
# (short-form viral platforms overweight clicks and shares; long-form
# platforms overweight watch time).
PRESETS: dict[str, dict] = {
    "example1": {
        "weights": {"alpha": 1.0, "beta": 2.0, "gamma": 1.5},
        "creator": {"delta": 1.0, "model": "linear"},
    },
    "example2": {
        "weights": {"alpha": 1.0, "beta": 2.0, "gamma": 1.5},
        "creator": {"delta": 2.5, "model": "linear"},
    },
    "example3": {
        "weights": {"alpha": 2.5, "beta": 0.5, "gamma": 2.0},
        "creator": {"delta": 1.0, "model": "linear"},
    },
    "tiktok-like": {
        "weights": {"alpha": 3.0, "beta": 0.5, "gamma": 2.5},
        "creator": {"delta": 1.0, "model": "linear"},
    },
    "youtube-like": {
        "weights": {"alpha": 0.5, "beta": 3.0, "gamma": 1.0},
        "creator": {"delta": 1.0, "model": "linear"},
    },
}


def _expect_object(doc: object, path: str) -> dict:
    if not isinstance(doc, dict):
        raise ScenarioError(f"{path}: expected an object, got {type(doc).__name__}")
    return doc


def _check_keys(obj: dict, allowed: set[str], path: str) -> None:
    unknown = sorted(set(obj) - allowed)
    if unknown:
        raise ScenarioError(f"{path}.{unknown[0]}: unknown key")


def _number(obj: dict, key: str, path: str, required: bool = True, default: float | None = None):
    if key not in obj:
        if required:
            raise ScenarioError(f"{path}.{key}: missing required value")
        return default
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ScenarioError(f"{path}.{key}: expected a number, got {value!r}")
    return float(value)


def _integer(obj: dict, key: str, path: str, required: bool = True, default: int | None = None):
    if key not in obj:
        if required:
            raise ScenarioError(f"{path}.{key}: missing required value")
        return default
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ScenarioError(f"{path}.{key}: expected an integer, got {value!r}")
    return value


def _parse_weights(obj: object, path: str) -> AlgorithmWeights:
    obj = _expect_object(obj, path)
    _check_keys(obj, {"alpha", "beta", "gamma"}, path)
    try:
        return AlgorithmWeights(
            alpha=_number(obj, "alpha", path),
            beta=_number(obj, "beta", path),
            gamma=_number(obj, "gamma", path),
        )
    except InvalidScenarioError as exc:
        raise ScenarioError(f"{path}: {exc}") from exc


def _parse_model(obj: dict, path: str) -> UtilityModel:
    raw = obj.get("model", "linear")
    if raw not in ("linear", "nonlinear"):
        raise ScenarioError(f'{path}.model: expected "linear" or "nonlinear", got {raw!r}')
    return UtilityModel(raw)


def _parse_creator(obj: object, path: str) -> CreatorParams:
    obj = _expect_object(obj, path)
    _check_keys(obj, {"delta", "model"}, path)
    try:
        return CreatorParams(delta=_number(obj, "delta", path), model=_parse_model(obj, path))
    except InvalidScenarioError as exc:
        raise ScenarioError(f"{path}: {exc}") from exc


def _parse_table(obj: object, path: str) -> GameTable:
    obj = _expect_object(obj, path)
    strategy_keys = {"collaboration": Strategy.COLLABORATION, "beefing": Strategy.BEEFING}
    _check_keys(obj, set(strategy_keys), path)
    profiles = {}
    for key, strategy in strategy_keys.items():
        if key not in obj:
            raise ScenarioError(f"{path}.{key}: missing required section")
        sub_path = f"{path}.{key}"
        sub = _expect_object(obj[key], sub_path)
        _check_keys(sub, {"clicks", "watch_time", "shares", "drama_risk"}, sub_path)
        try:
            profiles[strategy] = EngagementProfile(
                clicks=_number(sub, "clicks", sub_path),
                watch_time=_number(sub, "watch_time", sub_path),
                shares=_number(sub, "shares", sub_path),
                drama_risk=_number(sub, "drama_risk", sub_path),
            )
        except InvalidScenarioError as exc:
            raise ScenarioError(f"{sub_path}: {exc}") from exc
    return GameTable(profiles)


def _parse_population(obj: object, path: str, creator: CreatorParams) -> Population:
    obj = _expect_object(obj, path)
    _check_keys(obj, {"deltas", "grid"}, path)
    if ("deltas" in obj) == ("grid" in obj):
        raise ScenarioError(f'{path}: give exactly one of "deltas" or "grid"')
    try:
        if "deltas" in obj:
            raw = obj["deltas"]
            if not isinstance(raw, list) or not raw:
                raise ScenarioError(f"{path}.deltas: expected a non-empty list")
            members = []
            for i, value in enumerate(raw):
                if isinstance(value, bool) or not isinstance(value, (int, float)):
                    raise ScenarioError(f"{path}.deltas[{i}]: expected a number, got {value!r}")
                members.append(CreatorParams(delta=float(value), model=creator.model))
            return Population(tuple(members))
        grid_path = f"{path}.grid"
        grid = _expect_object(obj["grid"], grid_path)
        _check_keys(grid, {"min", "max", "count"}, grid_path)
        return make_delta_grid_population(
            delta_min=_number(grid, "min", grid_path),
            delta_max=_number(grid, "max", grid_path),
            count=_integer(grid, "count", grid_path),
            model=creator.model,
        )
    except InvalidScenarioError as exc:
        raise ScenarioError(f"{path}: {exc}") from exc


def _parse_rule(obj: object, path: str) -> ResponseRule:
    if obj == "exact":
        return Exact()
    obj = _expect_object(obj, path)
    _check_keys(obj, {"quantal", "satisficing"}, path)
    if len(obj) != 1:
        raise ScenarioError(f'{path}: expected "exact" or exactly one of quantal/satisficing')
    try:
        if "quantal" in obj:
            sub_path = f"{path}.quantal"
            sub = _expect_object(obj["quantal"], sub_path)
            _check_keys(sub, {"lambda"}, sub_path)
            return Quantal(lam=_number(sub, "lambda", sub_path))
        sub_path = f"{path}.satisficing"
        sub = _expect_object(obj["satisficing"], sub_path)
        _check_keys(sub, {"aspiration"}, sub_path)
        return Satisficing(aspiration=_number(sub, "aspiration", sub_path))
    except InvalidScenarioError as exc:
        raise ScenarioError(f"{path}: {exc}") from exc


def _parse_domain(obj: object, path: str) -> WeightDomain:
    obj = _expect_object(obj, path)
    _check_keys(obj, {"simplex", "box"}, path)
    if len(obj) != 1:
        raise ScenarioError(f"{path}: expected exactly one of simplex/box")
    try:
        if "simplex" in obj:
            sub_path = f"{path}.simplex"
            sub = _expect_object(obj["simplex"], sub_path)
            _check_keys(sub, {"total", "resolution"}, sub_path)
            return SimplexDomain(
                total=_number(sub, "total", sub_path, required=False, default=1.0),
                resolution=_integer(sub, "resolution", sub_path, required=False, default=100),
            )
        sub_path = f"{path}.box"
        sub = _expect_object(obj["box"], sub_path)
        _check_keys(sub, {"alpha_max", "beta_max", "gamma_max", "resolution"}, sub_path)
        return BoxDomain(
            alpha_max=_number(sub, "alpha_max", sub_path),
            beta_max=_number(sub, "beta_max", sub_path),
            gamma_max=_number(sub, "gamma_max", sub_path),
            resolution=_integer(sub, "resolution", sub_path, required=False, default=100),
        )
    except InvalidScenarioError as exc:
        raise ScenarioError(f"{path}: {exc}") from exc


def parse_scenario(doc: object) -> Scenario:
    """Validate a scenario document (a parsed JSON object) and apply defaults."""
    doc = _expect_object(doc, "scenario")
    _check_keys(doc, {"table", "weights", "creator", "population", "rule", "domain"}, "scenario")
    if "weights" not in doc:
        raise ScenarioError("scenario.weights: missing required section")
    if "creator" not in doc:
        raise ScenarioError("scenario.creator: missing required section")

    weights = _parse_weights(doc["weights"], "scenario.weights")
    creator = _parse_creator(doc["creator"], "scenario.creator")
    table = _parse_table(doc["table"], "scenario.table") if "table" in doc else DEFAULT_TABLE
    if "population" in doc:
        population = _parse_population(doc["population"], "scenario.population", creator)
    else:
        population = Population((creator,))
    rule = _parse_rule(doc["rule"], "scenario.rule") if "rule" in doc else Exact()
    domain = _parse_domain(doc["domain"], "scenario.domain") if "domain" in doc else SimplexDomain()
    return Scenario(
        weights=weights,
        creator=creator,
        table=table,
        population=population,
        rule=rule,
        domain=domain,
    )


def preset_scenario(name: str) -> Scenario:
    """One of the built-in presets, fully resolved."""
    if name not in PRESETS:
        raise ScenarioError(f"unknown preset {name!r}; available: {sorted(PRESETS)}")
    return parse_scenario(PRESETS[name])


def load_scenario(path: str | Path) -> Scenario:
    """Parse a scenario from a JSON file.

    Raises OSError for I/O problems and ScenarioError for content problems.
    """
    with open(path, "rb") as handle:
        raw = handle.read()
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"scenario: invalid JSON: {exc}") from exc
    return parse_scenario(doc)
