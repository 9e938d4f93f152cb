from .constants import (
    DEFAULT_CANDIDATE_CAP,
    DEFAULT_ENUMERATION_CAP,
    DEFAULT_MAX_RESAMPLES,
    DEFAULT_MAX_ROUNDS,
)
from .errors import ConfigError
from ..decoders.estimates import default_t, minimum_m_intersect, minimum_m_multiset

from dataclasses import dataclass, field, replace, asdict
from pathlib import Path
from json import load
from typing import Any
import galois

ALGORITHMS = ("basic", "multiset", "intersect")
OUTPUT_FORMATS = ("json", "csv")


@dataclass
class WorkspaceParameters:
    """Parameters describing the core paths used by the Workspace

    Attributes
    ----------
    workspace_path: str
        Path to the project Workspace
    """

    workspace_path: str = "./workspace"


@dataclass
class CodeParameters:
    """Parameters of the LRPC code and the planted errors

    Attributes
    ----------
    q: int
        Prime size of the base field
    m: int
        Extension degree
    n: int | None
        Code length. If None, n = rd - c + k
    k: int
        Code dimension
    r: int
        Rank of the planted errors
    d: int
        Dual rank weight of the code
    c: int | None
        Target codimension of the syndrome support in A.E. If None it is implied
        by n - k = rd - c
    """

    q: int = 2
    m: int = 41
    n: int | None = None
    k: int = 1
    r: int = 5
    d: int = 5
    c: int | None = 1


@dataclass
class DecoderParameters:
    """Parameters selecting and bounding the support recovery decoder

    Attributes
    ----------
    algorithm: str
        One of basic, multiset, intersect
    t: int | None
        Number of shifted syndrome spaces intersected per round. If None, the
        smallest power of q that is at least r / c
    max_rounds: int
        Round budget of the intersect decoder
    candidate_cap: int
        Maximum number of multiset candidates, (q^d - 1) q^(rd - c)
    enumeration_cap: int
        Maximum size of a single enumerated subspace
    faithful_guard: bool
        If true, the multiset decoder requires c < d - 2 instead of c <= d - 2
    random_filter: bool
        If true, the filtering loop picks candidates in random order
    skip_repeated: bool
        If true, the intersect decoder skips rounds that reuse an earlier set of
        shifts
    """

    algorithm: str = "intersect"
    t: int | None = 4
    max_rounds: int = DEFAULT_MAX_ROUNDS
    candidate_cap: int = DEFAULT_CANDIDATE_CAP
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP
    faithful_guard: bool = False
    random_filter: bool = False
    skip_repeated: bool = True


@dataclass
class RunParameters:
    """Parameters describing the Monte-Carlo run

    Attributes
    ----------
    trials: int
        Number of trials
    seed: int
        64-bit experiment seed
    n_processes: int
        The number of child processes. 1 runs every trial in the parent
    full_decode: bool
        If true, the error coordinates are recovered after support recovery
    output: str
        Summary format, json or csv
    verbose: bool
        If true, the per-trial reports are written too
    max_resamples: int
        Maximum number of instance redraws before a trial is flagged degenerate
    resample_syndrome: bool
        If true, instances with dim(S) < n - k are redrawn when n - k <= rd
    """

    trials: int = 1000
    seed: int = 0
    n_processes: int = 1
    full_decode: bool = False
    output: str = "json"
    verbose: bool = False
    max_resamples: int = DEFAULT_MAX_RESAMPLES
    resample_syndrome: bool = True


@dataclass
class Config:
    """Container which holds all configuration parameters.

    Can be serialized/deserialized to json.

    Attributes
    ----------
    workspace: WorkspaceParameters
    code: CodeParameters
    decoder: DecoderParameters
    run: RunParameters
    """

    # Workspace
    workspace: WorkspaceParameters = field(default_factory=WorkspaceParameters)

    # Code and error parameters
    code: CodeParameters = field(default_factory=CodeParameters)

    # Decoder selection and budgets
    decoder: DecoderParameters = field(default_factory=DecoderParameters)

    # Monte-Carlo run
    run: RunParameters = field(default_factory=RunParameters)


def deserialize_config(json_data: dict[Any, Any]) -> Config:
    """Deserialize the Config from some json_data dictionary

    Sections and keys that are missing keep their default values.

    Parameters
    ----------
    json_data: dict[Any, Any]
        Dictionary made by a json.load operation

    Returns
    -------
    Config
        The deserialized Config

    Raises
    ------
    ConfigError
        If a section is not an object or a key is unknown
    """
    config = Config()
    sections = {
        "Workspace": config.workspace,
        "Code": config.code,
        "Decoder": config.decoder,
        "Run": config.run,
    }
    for name, data in json_data.items():
        if name not in sections:
            raise ConfigError(f"Unknown configuration section '{name}'")
        if not isinstance(data, dict):
            raise ConfigError(f"Configuration section '{name}' must be an object")
        target = sections[name]
        for key, value in data.items():
            if not hasattr(target, key):
                raise ConfigError(f"Unknown key '{key}' in section '{name}'")
            setattr(target, key, value)
    return config


def serialize_config(config: Config) -> dict[str, Any]:
    """The json layout read by deserialize_config"""
    return {
        "Workspace": asdict(config.workspace),
        "Code": asdict(config.code),
        "Decoder": asdict(config.decoder),
        "Run": asdict(config.run),
    }


def load_config(file_path: Path) -> Config:
    """Load a configuration from a file

    Parameters
    ----------
    file_path: Path
        Path to a JSON file containing an lrpcdec configuration

    Returns
    -------
    Config:
        The lrpcdec configuration
    """
    with open(file_path, "r") as json_file:
        try:
            config_data = load(json_file)
        except ValueError as e:
            raise ConfigError(f"Configuration file {file_path} is not valid json: {e}")
        return deserialize_config(config_data)


def _require(condition: bool, message: str):
    if not condition:
        raise ConfigError(message)


def resolve_config(config: Config) -> Config:
    """Validate a configuration and fill in the implied code parameters

    n defaults to rd - c + k. When n is given and c is not, c = max(0, rd - (n - k)).
    When both are given, n - k = rd - c is enforced.

    Parameters
    ----------
    config: Config
        The configuration as loaded

    Returns
    -------
    Config
        A validated copy with n and c set

    Raises
    ------
    ConfigError
        If the parameters are inconsistent or out of range
    """
    code = config.code
    _require(
        isinstance(code.q, int) and galois.is_prime(code.q),
        f"q must be prime, got {code.q}",
    )
    _require(code.m >= 1, f"m must be at least 1, got {code.m}")
    _require(code.r >= 0, f"r must be non-negative, got {code.r}")
    _require(1 <= code.d <= code.m, f"Need 1 <= d <= m, got d = {code.d}")
    _require(code.k >= 1, f"k must be at least 1, got {code.k}")
    rd = code.r * code.d
    _require(rd <= code.m, f"Need rd <= m, got rd = {rd}, m = {code.m}")

    n, c = code.n, code.c
    if n is None:
        _require(c is not None, "Either n or c must be given")
        n = rd - c + code.k
    elif c is None:
        c = max(0, rd - (n - code.k))
    else:
        _require(
            n - code.k == rd - c,
            f"Inconsistent parameters: n - k = {n - code.k} but rd - c = {rd - c}",
        )
    _require(0 <= c <= rd, f"Need 0 <= c <= rd, got c = {c}")
    _require(0 < code.k < n, f"Need 0 < k < n, got n = {n}, k = {code.k}")
    _require(code.r <= n, f"Need r <= n, got r = {code.r}, n = {n}")

    decoder = config.decoder
    _require(
        decoder.algorithm in ALGORITHMS,
        f"Unknown algorithm '{decoder.algorithm}', expected one of {ALGORITHMS}",
    )
    _require(decoder.t is None or decoder.t >= 1, f"t must be positive, got {decoder.t}")
    _require(decoder.max_rounds >= 1, "max_rounds must be at least 1")
    _require(decoder.candidate_cap >= 1, "candidate_cap must be at least 1")
    _require(decoder.enumeration_cap >= 1, "enumeration_cap must be at least 1")
    if decoder.algorithm == "intersect" and code.r > 0:
        _require(
            decoder.t is not None or c >= 1,
            "The intersect decoder needs c >= 1 or an explicit t; use the basic decoder for c = 0",
        )
        t = decoder.t if decoder.t is not None else default_t(code.q, code.r, c)
        _require(
            t <= code.q**code.d - 1,
            f"t = {t} must lie in [1, q^d - 1 = {code.q**code.d - 1}]",
        )

    run = config.run
    _require(run.trials >= 1, f"trials must be at least 1, got {run.trials}")
    _require(0 <= run.seed < 2**64, f"seed must be a 64-bit unsigned value, got {run.seed}")
    _require(run.n_processes >= 1, f"n_processes must be at least 1, got {run.n_processes}")
    _require(
        run.output in OUTPUT_FORMATS,
        f"Unknown output format '{run.output}', expected one of {OUTPUT_FORMATS}",
    )
    _require(run.max_resamples >= 1, "max_resamples must be at least 1")

    return replace(
        config,
        workspace=replace(config.workspace),
        code=replace(code, n=n, c=c),
        decoder=replace(decoder),
        run=replace(run),
    )


def regime_warnings(config: Config) -> list[str]:
    """Field-size advice for a resolved configuration

    The intersect decoder wants m >= t·rd / (t - 1); the multiset decoder works best
    with m >= rd - c + d - 1. Nothing is enforced.
    """
    code = config.code
    rd = code.r * code.d
    warnings = []
    match config.decoder.algorithm:
        case "intersect" if code.r > 0:
            t = config.decoder.t
            if t is None:
                t = default_t(code.q, code.r, code.c)
            if t > 1 and code.m < minimum_m_intersect(code.r, code.d, t):
                warnings.append(
                    f"m = {code.m} is below t·rd/(t - 1) = {minimum_m_intersect(code.r, code.d, t)}; stray elements are likely"
                )
        case "multiset":
            floor_m = minimum_m_multiset(code.r, code.d, code.c)
            if code.m < floor_m:
                warnings.append(
                    f"m = {code.m} is below rd - c + d - 1 = {floor_m}; expect filtering to be needed"
                )
            if code.c > code.d - 2:
                warnings.append(
                    f"c = {code.c} exceeds d - 2 = {code.d - 2}; the multiset decoder will refuse"
                )
        case "basic" if code.c > 0:
            warnings.append(
                f"The basic decoder expects dim(S) = rd, but c = {code.c}; expect failures"
            )
    return warnings
