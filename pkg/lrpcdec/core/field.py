"""Arithmetic in the base field F_q and the extension field F_{q^m}

The extension field is F_q[X]/(f) for the lexicographically smallest monic
irreducible f of degree m, so the same (q, m) always produces bit-identical
elements. Elements are galois FieldArray values; a 0-d FieldArray is a single
element and every function here also accepts arrays of elements.

Coefficient vectors are little-endian: coeffs[..., 0] is the constant term. The
canonical integer encoding of an element is sum(coeffs[i] * q**i), which is also
galois' internal representation.
"""

from .constants import MAX_CHARACTERISTIC, MAX_EXTENSION_DEGREE
from .errors import FieldError
from .linalg import rank as fq_rank

from dataclasses import dataclass
from functools import lru_cache
import galois
import numpy as np


@dataclass(frozen=True)
class FieldParams:
    """Parameters of the extension field F_{q^m}

    Attributes
    ----------
    q: int
        Prime size of the base field
    m: int
        Extension degree
    modulus_poly: tuple[int, ...]
        Monic irreducible polynomial of degree m, little-endian coefficients
        (length m + 1)

    Methods
    -------
    field -> type[galois.FieldArray]
        The galois field class implementing F_{q^m} with this modulus
    order -> int
        q^m
    zero() -> galois.FieldArray
        The additive identity
    one() -> galois.FieldArray
        The multiplicative identity
    """

    q: int
    m: int
    modulus_poly: tuple[int, ...]

    @property
    def field(self) -> type[galois.FieldArray]:
        return _galois_field(self.q, self.m, self.modulus_poly)

    @property
    def order(self) -> int:
        return self.q**self.m

    def zero(self) -> galois.FieldArray:
        return self.field(0)

    def one(self) -> galois.FieldArray:
        return self.field(1)


@lru_cache(maxsize=None)
def _galois_field(
    q: int, m: int, modulus_poly: tuple[int, ...]
) -> type[galois.FieldArray]:
    # F_q[X]/(X) is F_q itself, the constant coefficient is the element
    if m == 1:
        return galois.GF(q)
    poly = galois.Poly(list(reversed(modulus_poly)), field=galois.GF(q))
    return galois.GF(q**m, irreducible_poly=poly)


@lru_cache(maxsize=None)
def make_field(q: int, m: int) -> FieldParams:
    """Build F_{q^m} with the smallest monic irreducible modulus

    Polynomials are ordered by their base-q integer value, sum(c_i * q**i), which
    is the order galois' "min" search walks. Irreducibility is decided by galois
    (Rabin's test: gcd(f, X^{q^i} - X) for i <= m/2 plus f | X^{q^m} - X).

    Parameters
    ----------
    q: int
        Prime size of the base field
    m: int
        Extension degree, at least 1

    Returns
    -------
    FieldParams
        The field parameters. Calls with the same (q, m) return the same object.

    Raises
    ------
    FieldError
        If q is not prime, m < 1, or the size guard is exceeded
    """
    if q < 2 or not galois.is_prime(q):
        raise FieldError(f"Base field size must be prime, got q = {q}")
    if m < 1:
        raise FieldError(f"Extension degree must be at least 1, got m = {m}")
    if q > MAX_CHARACTERISTIC or m > MAX_EXTENSION_DEGREE:
        raise FieldError(
            f"Field F_{q}^{m} exceeds the size guard (q <= {MAX_CHARACTERISTIC}, m <= {MAX_EXTENSION_DEGREE})"
        )
    if m == 1:
        # X itself is the smallest monic polynomial of degree 1 and is irreducible
        return FieldParams(q, 1, (0, 1))
    poly = galois.irreducible_poly(q, m, method="min")
    modulus = tuple(int(c) for c in poly.coeffs[::-1])
    return FieldParams(q, m, modulus)


def params_of(x: galois.FieldArray) -> FieldParams:
    """Recover the FieldParams an element (or array of elements) belongs to

    Parameters
    ----------
    x: galois.FieldArray
        Some field element(s)

    Returns
    -------
    FieldParams
        The parameters of x's field
    """
    field = type(x)
    q = int(field.characteristic)
    m = int(field.degree)
    if m == 1:
        return make_field(q, 1)
    modulus = tuple(int(c) for c in field.irreducible_poly.coeffs[::-1])
    return FieldParams(q, m, modulus)


def check_same_field(*elements: galois.FieldArray):
    """Raise FieldError unless every argument lives in the same field class"""
    first = type(elements[0])
    for elem in elements[1:]:
        if type(elem) is not first:
            raise FieldError(
                f"Mixed field operands: {first.name} and {type(elem).name}"
            )


def element(params: FieldParams, value: int) -> galois.FieldArray:
    """The element with canonical integer encoding value"""
    return params.field(value)


def encode(x: galois.FieldArray) -> np.ndarray:
    """Canonical integer encoding(s) of field element(s) as a plain ndarray"""
    return np.asarray(x.view(np.ndarray))


def coefficients(x: galois.FieldArray) -> np.ndarray:
    """Little-endian coefficient vectors over F_q

    Parameters
    ----------
    x: galois.FieldArray
        Element(s) of shape S

    Returns
    -------
    ndarray
        int64 array of shape S + (m,)
    """
    # galois lists the highest degree first
    return np.asarray(x.vector().view(np.ndarray), dtype=np.int64)[..., ::-1]


def from_coefficients(params: FieldParams, coeffs: np.ndarray) -> galois.FieldArray:
    """Build element(s) from little-endian coefficient vectors

    Parameters
    ----------
    params: FieldParams
        The target field
    coeffs: ndarray
        Integer array of shape S + (m,) with entries in [0, q)

    Returns
    -------
    galois.FieldArray
        Elements of shape S
    """
    coeffs = np.asarray(coeffs, dtype=np.int64)
    if coeffs.shape[-1] != params.m:
        raise FieldError(
            f"Coefficient vectors must have length m = {params.m}, got {coeffs.shape[-1]}"
        )
    return params.field.Vector(np.ascontiguousarray(coeffs[..., ::-1]))


def add(a: galois.FieldArray, b: galois.FieldArray) -> galois.FieldArray:
    check_same_field(a, b)
    return a + b


def mul(a: galois.FieldArray, b: galois.FieldArray) -> galois.FieldArray:
    check_same_field(a, b)
    return a * b


def neg(a: galois.FieldArray) -> galois.FieldArray:
    return -a


def inv(a: galois.FieldArray) -> galois.FieldArray:
    """Multiplicative inverse

    galois inverts through the extended Euclidean algorithm on polynomials.

    Raises
    ------
    FieldError
        If a (or any entry of a) is zero
    """
    if np.any(encode(a) == 0):
        raise FieldError("Zero has no multiplicative inverse")
    return np.reciprocal(a)


def power(x: galois.FieldArray, exponent: int) -> galois.FieldArray:
    """x**exponent by repeated squaring, for arbitrarily large non-negative exponents"""
    if exponent < 0:
        return power(inv(x), -exponent)
    result = type(x).Ones(np.shape(x))
    base = x.copy()
    while exponent > 0:
        if exponent & 1:
            result = result * base
        base = base * base
        exponent >>= 1
    return result


def random_elements(
    params: FieldParams, size: int | tuple[int, ...], rng: np.random.Generator
) -> galois.FieldArray:
    """Uniform elements of F_{q^m} drawn coefficient by coefficient"""
    shape = (size,) if isinstance(size, int) else tuple(size)
    coeffs = rng.integers(0, params.q, size=shape + (params.m,))
    return from_coefficients(params, coeffs)


def random_element(params: FieldParams, rng: np.random.Generator) -> galois.FieldArray:
    """A uniform element of F_{q^m}"""
    return from_coefficients(params, rng.integers(0, params.q, size=params.m))


def random_nonzero(params: FieldParams, rng: np.random.Generator) -> galois.FieldArray:
    """A uniform element of F_{q^m}^* (rejection on zero)"""
    while True:
        coeffs = rng.integers(0, params.q, size=params.m)
        if np.any(coeffs):
            return from_coefficients(params, coeffs)


def rank_weight(v: galois.FieldArray) -> int:
    """Rank weight of a vector: dimension of the F_q-span of its components"""
    if v.size == 0:
        return 0
    params = params_of(v)
    return fq_rank(coefficients(v.reshape(-1)), params.q)


def rank_distance(u: galois.FieldArray, v: galois.FieldArray) -> int:
    """Rank distance w_R(u - v)"""
    check_same_field(u, v)
    return rank_weight(u - v)
