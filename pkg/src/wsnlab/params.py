"""Configuration-parameter catalog: bounds, validation, and uniform sampling.

Eight sampled parameters drive every experiment. All remaining quantities of
the energy taxonomy (packet counters, geometry, harvested energy) are owned by
the simulator as measured state, not as configuration.
"""

import hashlib
import json
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import ConfigError

SAMPLE_STREAM = 0  # numpy SeedSequence sub-stream used for config sampling


class Constituent(str, Enum):
    """The five task-based energy categories a parameter or counter maps to."""

    INDIVIDUAL = "individual"
    LOCAL = "local"
    GLOBAL = "global"
    ENVIRONMENT = "environment"
    SINK = "sink"


@dataclass(frozen=True)
class ParameterDescriptor:
    """One configuration parameter with its inclusive sampling boundary."""

    name: str
    symbol: str
    constituent: Constituent
    kind: str  # "continuous" | "integer"
    lower: float
    upper: float
    default: float
    sampled: bool = True

    def __post_init__(self):
        if self.kind not in ("continuous", "integer"):
            raise ConfigError(f"{self.name}: unknown kind {self.kind!r}")
        if not self.lower <= self.default <= self.upper:
            raise ConfigError(
                f"{self.name}: default {self.default} outside [{self.lower}, {self.upper}]"
            )
        if self.kind == "integer":
            for label, v in (("lower", self.lower), ("upper", self.upper), ("default", self.default)):
                if float(v) != int(v):
                    raise ConfigError(f"{self.name}: integer {label} bound {v} is not integral")

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "symbol": self.symbol,
            "constituent": self.constituent.value,
            "kind": self.kind,
            "lower": self.lower,
            "upper": self.upper,
            "default": self.default,
            "sampled": self.sampled,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ParameterDescriptor":
        return cls(
            name=d["name"],
            symbol=d["symbol"],
            constituent=Constituent(d["constituent"]),
            kind=d["kind"],
            lower=float(d["lower"]),
            upper=float(d["upper"]),
            default=float(d["default"]),
            sampled=bool(d["sampled"]),
        )


# Canonical column order of every dataset; fixed independently of ranges.
PARAM_ORDER = (
    "transmission_interval",
    "num_hops",
    "sensor_interval",
    "sense_radius",
    "net_density",
    "transmission_radius",
    "num_sinks",
    "num_neighbors",
)


@dataclass(frozen=True)
class ConfigSpace:
    """Ordered parameter descriptors plus the world defaults they run under."""

    descriptors: tuple[ParameterDescriptor, ...]
    world: "WorldConfig | None" = None  # set by default_space(); optional for custom spaces

    def __post_init__(self):
        names = [d.name for d in self.descriptors]
        if len(set(names)) != len(names):
            raise ConfigError("duplicate parameter names in config space")

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(d.name for d in self.descriptors)

    def descriptor(self, name: str) -> ParameterDescriptor:
        for d in self.descriptors:
            if d.name == name:
                return d
        raise KeyError(name)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def to_json(self) -> str:
        doc = {"descriptors": [d.to_dict() for d in self.descriptors]}
        if self.world is not None:
            doc["world_defaults"] = self.world.to_dict()
        return json.dumps(doc, sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "ConfigSpace":
        from .simulator import WorldConfig

        doc = json.loads(text)
        descriptors = tuple(ParameterDescriptor.from_dict(d) for d in doc["descriptors"])
        world = None
        if doc.get("world_defaults") is not None:
            world = WorldConfig.from_dict(doc["world_defaults"])
        return cls(descriptors=descriptors, world=world)

    def digest(self) -> str:
        """Stable hash of the serialized space, for dataset provenance."""
        return hashlib.sha256(self.to_json().encode()).hexdigest()


@dataclass(frozen=True)
class ExperimentConfig:
    """Sampled values for one run, in ConfigSpace order, plus its seed."""

    values: tuple[float, ...]
    seed: int

    def as_dict(self, space: ConfigSpace) -> dict[str, float]:
        if len(self.values) != len(space.descriptors):
            raise ConfigError(
                f"config has {len(self.values)} values, space has {len(space.descriptors)}"
            )
        return dict(zip(space.names, self.values))

    def named(self) -> dict[str, float]:
        """Values keyed by the canonical parameter order."""
        if len(self.values) != len(PARAM_ORDER):
            raise ConfigError(
                f"config has {len(self.values)} values, expected {len(PARAM_ORDER)}"
            )
        return dict(zip(PARAM_ORDER, self.values))


def default_space() -> ConfigSpace:
    """The eight sampled parameters with their study ranges and defaults."""
    from .simulator import WorldConfig

    c = Constituent
    descriptors = (
        ParameterDescriptor("transmission_interval", "g_Tx", c.GLOBAL, "continuous", 1.0, 15.0, 2.5),
        ParameterDescriptor("num_hops", "h_iD", c.GLOBAL, "integer", 0, 8, 3),
        ParameterDescriptor("sensor_interval", "g_sense", c.INDIVIDUAL, "continuous", 0.5, 5.0, 2.5),
        ParameterDescriptor("sense_radius", "r_sense", c.INDIVIDUAL, "continuous", 5.0, 30.0, 15.0),
        ParameterDescriptor("net_density", "net_dens", c.GLOBAL, "integer", 20, 150, 60),
        ParameterDescriptor("transmission_radius", "r_Tx", c.LOCAL, "continuous", 10.0, 60.0, 30.0),
        ParameterDescriptor("num_sinks", "Snk", c.GLOBAL, "integer", 1, 5, 2),
        ParameterDescriptor("num_neighbors", "n", c.LOCAL, "integer", 1, 10, 5),
    )
    return ConfigSpace(descriptors=descriptors, world=WorldConfig())


def sample_config(space: ConfigSpace, seed: int) -> ExperimentConfig:
    """Draw one configuration uniformly from the space, deterministically in seed.

    Continuous parameters are uniform on [lower, upper]; integer parameters are
    uniform on the integer lattice. num_hops is resampled until it satisfies
    h_iD < net_dens - 1. Non-sampled descriptors take their default.
    """
    rng = np.random.default_rng([int(seed), SAMPLE_STREAM])
    values: dict[str, float] = {}
    for d in space.descriptors:
        values[d.name] = _draw(rng, d) if d.sampled else float(d.default)

    if "num_hops" in values and "net_density" in values:
        hop_desc = space.descriptor("num_hops")
        limit = values["net_density"] - 1
        if hop_desc.lower >= limit:
            raise ConfigError(
                f"num_hops lower bound {hop_desc.lower} incompatible with net_density {values['net_density']}"
            )
        while hop_desc.sampled and values["num_hops"] >= limit:
            values["num_hops"] = _draw(rng, hop_desc)

    return ExperimentConfig(values=tuple(values[d.name] for d in space.descriptors), seed=int(seed))


def _draw(rng: np.random.Generator, d: ParameterDescriptor) -> float:
    if d.kind == "integer":
        return float(rng.integers(int(d.lower), int(d.upper) + 1))
    return float(rng.uniform(d.lower, d.upper))


def validate(config: ExperimentConfig, space: ConfigSpace) -> list[str]:
    """Boundary and cross-parameter checks; empty list means valid.

    An arity mismatch between config and space is a structural error, raised
    as ConfigError rather than reported as a violation.
    """
    if len(config.values) != len(space.descriptors):
        raise ConfigError(
            f"config has {len(config.values)} values, space expects {len(space.descriptors)}"
        )
    violations = []
    values = dict(zip(space.names, config.values))
    for d, v in zip(space.descriptors, config.values):
        if not np.isfinite(v):
            violations.append(f"{d.name}: non-finite value {v}")
            continue
        if v < d.lower or v > d.upper:
            violations.append(f"{d.name}: {v} outside [{d.lower}, {d.upper}]")
        if d.kind == "integer" and float(v) != int(v):
            violations.append(f"{d.name}: {v} is not integral")
    if "num_hops" in values and "net_density" in values:
        if values["num_hops"] >= values["net_density"] - 1:
            violations.append(
                f"num_hops: {values['num_hops']} violates h_iD < net_dens - 1 "
                f"(net_density = {values['net_density']})"
            )
    return violations
