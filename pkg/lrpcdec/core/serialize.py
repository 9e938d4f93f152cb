"""Versioned text fixtures for codes, errors and syndromes

A fixture is a JSON object

```json
{
    "format": "lrpcdec-fixture",
    "version": 1,
    "kind": "code" | "error" | "syndrome",
    "field": {"q": 2, "m": 8, "modulus_poly": [1, 1, 0, 1, 1, 0, 0, 0, 1]},
    ...
}
```

Field elements are written as little-endian coefficient lists, matrices as
row-major nested lists. The modulus is stored so a reader in another language
rebuilds exactly the same field.
"""

from .constants import FIXTURE_FORMAT, FIXTURE_VERSION
from .errors import FieldError, FixtureFormatError
from .field import FieldParams, coefficients, from_coefficients, make_field
from .lrpc import LrpcCode, RankError, Syndrome, support_from_vectors
from .subspace import contains, span

from json import dumps, loads
from pathlib import Path
from typing import Any
import numpy as np

FIXTURE_KINDS = ("code", "error", "syndrome")


def _field_to_dict(params: FieldParams) -> dict[str, Any]:
    return {"q": params.q, "m": params.m, "modulus_poly": list(params.modulus_poly)}


def _field_from_dict(data: dict[str, Any]) -> FieldParams:
    try:
        q = int(data["q"])
        m = int(data["m"])
        modulus = tuple(int(c) for c in data["modulus_poly"])
    except (KeyError, TypeError, ValueError) as e:
        raise FixtureFormatError(f"Malformed field description: {e}") from e
    try:
        params = make_field(q, m)
    except FieldError as e:
        raise FixtureFormatError(str(e)) from e
    if params.modulus_poly != modulus:
        # Accept foreign moduli as long as they define a field of the right degree
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise FixtureFormatError(f"Modulus {modulus} is not monic of degree {m}")
        params = FieldParams(q, m, modulus)
        try:
            params.field
        except ValueError as e:
            raise FixtureFormatError(f"Modulus {modulus} is not irreducible") from e
    return params


def _header(kind: str, params: FieldParams) -> dict[str, Any]:
    return {
        "format": FIXTURE_FORMAT,
        "version": FIXTURE_VERSION,
        "kind": kind,
        "field": _field_to_dict(params),
    }


def _check_header(data: dict[str, Any], kind: str) -> FieldParams:
    if data.get("format") != FIXTURE_FORMAT:
        raise FixtureFormatError(f"Not an {FIXTURE_FORMAT} document")
    if data.get("version") != FIXTURE_VERSION:
        raise FixtureFormatError(
            f"Unsupported fixture version {data.get('version')}, expected {FIXTURE_VERSION}"
        )
    if data.get("kind") != kind:
        raise FixtureFormatError(f"Expected a {kind} fixture, got {data.get('kind')}")
    return _field_from_dict(data["field"])


def _matrix(data: dict[str, Any], key: str, shape: tuple[int, ...]) -> np.ndarray:
    try:
        matrix = np.asarray(data[key], dtype=np.int64).reshape(shape)
    except (KeyError, ValueError) as e:
        raise FixtureFormatError(f"Field '{key}' is missing or has the wrong shape") from e
    return matrix


def code_to_dict(code: LrpcCode) -> dict[str, Any]:
    data = _header("code", code.params)
    data.update(
        {
            "n": code.n,
            "k": code.k,
            "d": code.d,
            "support": code.support.basis.tolist(),
            "H": coefficients(code.H).tolist(),
        }
    )
    return data


def code_from_dict(data: dict[str, Any]) -> LrpcCode:
    """Rebuild an LrpcCode, re-checking its invariants

    Raises
    ------
    FixtureFormatError
        If the document is malformed or describes an invalid code
    """
    params = _check_header(data, "code")
    n, k, d = int(data["n"]), int(data["k"]), int(data["d"])
    support = support_from_vectors(params, _matrix(data, "support", (d, params.m)))
    if support.dim != d:
        raise FixtureFormatError(f"Support has dimension {support.dim}, expected {d}")
    H = from_coefficients(params, _matrix(data, "H", (n - k, n, params.m)))
    if not contains(support, H):
        raise FixtureFormatError("Parity-check entries do not lie in the support")
    if int(np.linalg.matrix_rank(H)) != n - k:
        raise FixtureFormatError("Parity-check matrix does not have full rank")
    return LrpcCode(params, n, k, d, support, H)


def error_to_dict(error: RankError) -> dict[str, Any]:
    data = _header("error", error.support.params)
    data.update(
        {
            "r": error.rank,
            "n": int(error.vector.shape[0]),
            "beta": coefficients(error.beta).tolist(),
            "coordinates": error.coordinates.tolist(),
        }
    )
    return data


def error_from_dict(data: dict[str, Any]) -> RankError:
    """Rebuild a RankError as beta · C_e

    Raises
    ------
    FixtureFormatError
        If the document is malformed or beta is not a basis
    """
    params = _check_header(data, "error")
    r, n = int(data["r"]), int(data["n"])
    beta_vectors = _matrix(data, "beta", (r, params.m))
    coordinates = _matrix(data, "coordinates", (r, n))
    support = support_from_vectors(params, beta_vectors)
    if support.dim != r:
        raise FixtureFormatError(f"beta spans dimension {support.dim}, expected {r}")
    beta = from_coefficients(params, beta_vectors)
    vector = from_coefficients(params, (coordinates.T @ beta_vectors) % params.q)
    return RankError(support, beta, coordinates % params.q, vector)


def syndrome_to_dict(syn: Syndrome) -> dict[str, Any]:
    data = _header("syndrome", syn.support.params)
    data["values"] = coefficients(syn.values).tolist()
    return data


def syndrome_from_dict(data: dict[str, Any]) -> Syndrome:
    params = _check_header(data, "syndrome")
    values = from_coefficients(params, _matrix(data, "values", (-1, params.m)))
    return Syndrome(values, span(params, values))


def dumps_fixture(obj: LrpcCode | RankError | Syndrome) -> str:
    """Serialize a code, error or syndrome to fixture text"""
    match obj:
        case LrpcCode():
            data = code_to_dict(obj)
        case RankError():
            data = error_to_dict(obj)
        case Syndrome():
            data = syndrome_to_dict(obj)
        case _:
            raise FixtureFormatError(f"Cannot serialize object of type {type(obj)}")
    return dumps(data, indent=2)


def loads_fixture(text: str) -> LrpcCode | RankError | Syndrome:
    """Parse fixture text back into the object it describes

    Raises
    ------
    FixtureFormatError
        If the text is not a valid fixture
    """
    try:
        data = loads(text)
    except ValueError as e:
        raise FixtureFormatError(f"Fixture is not valid JSON: {e}") from e
    if not isinstance(data, dict):
        raise FixtureFormatError("Fixture must be a JSON object")
    match data.get("kind"):
        case "code":
            return code_from_dict(data)
        case "error":
            return error_from_dict(data)
        case "syndrome":
            return syndrome_from_dict(data)
        case kind:
            raise FixtureFormatError(
                f"Unknown fixture kind {kind}, expected one of {FIXTURE_KINDS}"
            )


def save_fixture(obj: LrpcCode | RankError | Syndrome, path: Path):
    with open(path, "w") as fixture_file:
        fixture_file.write(dumps_fixture(obj))


def load_fixture(path: Path) -> LrpcCode | RankError | Syndrome:
    with open(path, "r") as fixture_file:
        return loads_fixture(fixture_file.read())
