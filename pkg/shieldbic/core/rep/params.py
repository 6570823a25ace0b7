from enum import Enum
from pathlib import Path

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from shieldbic.core.error import ConfigError

DEFAULT_DELTA = 300.0
DEFAULT_ALPHA = 1.2
DEFAULT_PHI = 4.0
DEFAULT_K = 50
DEFAULT_REPEATS = 10
DEFAULT_SENTINEL = -1.0
DEFAULT_IMPUTE_RANGE = (0.0, 800.0)
MASK_STREAM = 1


class Strategy(str, Enum):
    RANDOM_MASK = "random-mask"
    SHIELD = "shield"


class MatrixFormat(str, Enum):
    YEAST_RAW = "yeast-raw"
    CSV = "csv"
    TSV = "tsv"


class _Params(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    @classmethod
    def build(cls, **kwargs):
        try:
            return cls(**kwargs)
        except ValidationError as e:
            problems = ["%s: %s" % (".".join(str(p) for p in err["loc"]) or cls.__name__, err["msg"])
                        for err in e.errors()]
            raise ConfigError("invalid %s: %s" % (cls.__name__, "; ".join(problems)))


class GreedyParams(_Params):
    delta: float = Field(DEFAULT_DELTA, ge=0, allow_inf_nan=False)
    alpha: float = Field(DEFAULT_ALPHA, gt=1, allow_inf_nan=False)
    rng_seed: int = Field(0, ge=0)

    def rng(self):
        """Generator of the random-mask draws."""
        return np.random.default_rng(self.rng_seed)


class ShieldParams(_Params):
    phi: float = Field(DEFAULT_PHI, ge=1, allow_inf_nan=False)
    alpha: float = Field(DEFAULT_ALPHA, gt=1, allow_inf_nan=False)
    delta: float = Field(DEFAULT_DELTA, ge=0, allow_inf_nan=False)


class RunConfig(_Params):
    strategy: Strategy = Strategy.SHIELD
    k_target: int = Field(DEFAULT_K, ge=1)
    delta: float = Field(DEFAULT_DELTA, ge=0, allow_inf_nan=False)
    alpha: float = Field(DEFAULT_ALPHA, gt=1, allow_inf_nan=False)
    phi: float = Field(DEFAULT_PHI, ge=1, allow_inf_nan=False)
    seed: int = Field(0, ge=0)
    repeats: int = Field(DEFAULT_REPEATS, ge=1)

    def greedy_params(self, repeat=None):
        """Search parameters; with ``repeat`` the masking seed is that repeat's own."""
        if repeat is None:
            return GreedyParams(delta=self.delta, alpha=self.alpha, rng_seed=self.seed)
        mask_stream = np.random.SeedSequence(self.seed, spawn_key=(repeat, MASK_STREAM))
        return GreedyParams(delta=self.delta, alpha=self.alpha,
                            rng_seed=int(mask_stream.generate_state(1, np.uint64)[0]))

    def shield_params(self):
        return ShieldParams(phi=self.phi, alpha=self.alpha, delta=self.delta)

    def with_strategy(self, strategy):
        return self.model_copy(update={"strategy": Strategy(strategy)})

    def seed_sequence(self, repeat):
        """Independent stream for one repeat, keyed by (seed, repeat)."""
        return np.random.SeedSequence(self.seed, spawn_key=(repeat,))


class DatasetSpec(_Params):
    path: Path
    format: MatrixFormat = MatrixFormat.TSV
    missing_sentinel: float = Field(DEFAULT_SENTINEL, allow_inf_nan=False)
    impute_low: float = Field(DEFAULT_IMPUTE_RANGE[0], allow_inf_nan=False)
    impute_high: float = Field(DEFAULT_IMPUTE_RANGE[1], allow_inf_nan=False)

    @model_validator(mode="after")
    def _check_range(self):
        if self.impute_low > self.impute_high:
            raise ValueError("impute range is empty: low %g > high %g"
                             % (self.impute_low, self.impute_high))
        if self.impute_low <= self.missing_sentinel <= self.impute_high:
            raise ValueError("missing sentinel %g lies inside the impute range [%g, %g]"
                             % (self.missing_sentinel, self.impute_low, self.impute_high))
        return self

    @property
    def impute_range(self):
        return self.impute_low, self.impute_high
