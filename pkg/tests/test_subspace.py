from lrpcdec.core.errors import ResourceLimitError, SubspaceError
from lrpcdec.core.field import (
    encode,
    from_coefficients,
    inv,
    make_field,
    random_elements,
    random_nonzero,
)
from lrpcdec.core.subspace import (
    codimension_in,
    contains,
    contains_each,
    enumerate_subspace,
    equals,
    from_vectors,
    full_space,
    intersect,
    is_subspace_of,
    product_space,
    random_subspace,
    shift,
    shift_inverse,
    span,
    subspace_sum,
    zero_subspace,
)

from collections import Counter
from hypothesis import given, settings, strategies as st
import numpy as np
import pytest

F2_10 = make_field(2, 10)


def test_empty_span_is_zero(f2_10):
    space = span(f2_10, [])
    assert space.dim == 0
    assert space == zero_subspace(f2_10)


def test_collinear_generators(f3_6, rng):
    x = random_nonzero(f3_6, rng)
    two = f3_6.field(2)
    assert span(f3_6, [x, x, x * two]).dim == 1


def test_basis_is_canonical(f2_16, rng):
    generators = random_elements(f2_16, 4, rng)
    first = span(f2_16, generators)
    second = span(f2_16, generators[::-1] + f2_16.zero())
    mixed = span(f2_16, [generators[0] + generators[1], generators[1], generators[2], generators[3]])
    assert first == second == mixed
    assert hash(first) == hash(mixed)
    for row in first.basis_elements:
        assert contains(first, row)


def test_intersection_identities(f2_16, rng):
    u = random_subspace(f2_16, 6, rng)
    assert intersect(u, u) == u
    assert subspace_sum(u, zero_subspace(f2_16)) == u
    assert intersect(u, zero_subspace(f2_16)).dim == 0
    assert intersect(u, full_space(f2_16)) == u


@settings(max_examples=1000, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(0, 10), st.integers(0, 10))
def test_dimension_formula(seed, dim_u, dim_v):
    rng = np.random.default_rng(seed)
    u = random_subspace(F2_10, dim_u, rng)
    v = random_subspace(F2_10, dim_v, rng)
    meet = intersect(u, v)
    assert meet.dim + subspace_sum(u, v).dim == u.dim + v.dim
    assert is_subspace_of(meet, u) and is_subspace_of(meet, v)


def test_two_term_syndrome_example(f2_16, rng):
    # s1 = a1 b1 + a2 b2, s2 = a1 b2 + a2 b1 with dim(A.E) = 4
    while True:
        a1, a2, b1, b2 = random_elements(f2_16, 4, rng)
        A = span(f2_16, [a1, a2])
        E = span(f2_16, [b1, b2])
        if A.dim == 2 and E.dim == 2 and product_space(A, E).dim == 4:
            break
    S = span(f2_16, [a1 * b1 + a2 * b2, a1 * b2 + a2 * b1])
    assert intersect(shift(S, inv(a1)), E).dim == 0
    assert intersect(shift(S, inv(a2)), E).dim == 0
    assert contains(shift(S, inv(a1 + a2)), b1 + b2)


def test_shift_identities(f3_6, rng):
    S = random_subspace(f3_6, 3, rng)
    a = random_nonzero(f3_6, rng)
    assert shift(S, f3_6.one()) == S
    assert shift(shift(S, a), inv(a)) == S
    assert shift_inverse(shift(S, a), a) == S
    assert shift(S, a).dim == S.dim


def test_shift_by_zero(f2_10, rng):
    S = random_subspace(f2_10, 3, rng)
    with pytest.raises(SubspaceError):
        shift(S, f2_10.zero())
    with pytest.raises(SubspaceError):
        shift_inverse(S, f2_10.zero())


@settings(deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_shift_distributes_over_intersection(seed):
    rng = np.random.default_rng(seed)
    u = random_subspace(F2_10, 6, rng)
    v = random_subspace(F2_10, 7, rng)
    a = random_nonzero(F2_10, rng)
    assert shift(intersect(u, v), a) == intersect(shift(u, a), shift(v, a))


def test_product_with_unit_space(f2_16, rng):
    E = random_subspace(f2_16, 4, rng)
    assert product_space(span(f2_16, [f2_16.one()]), E) == E


def test_product_dimension_bound(f2_10, rng):
    for _ in range(50):
        A = random_subspace(f2_10, 4, rng)
        E = random_subspace(f2_10, 3, rng)
        assert product_space(A, E).dim <= min(12, 10)


def test_product_reaches_rd_when_field_is_large(f2_16, rng):
    full = 0
    for _ in range(200):
        A = random_subspace(f2_16, 3, rng)
        E = random_subspace(f2_16, 2, rng)
        full += product_space(A, E).dim == 6
    # Deficient products occur with probability O(2^(6 - 16))
    assert full >= 190


def test_mixed_fields(f2_4, f2_10):
    with pytest.raises(SubspaceError):
        subspace_sum(full_space(f2_4), full_space(f2_10))
    with pytest.raises(SubspaceError):
        contains(full_space(f2_4), f2_10.one())
    with pytest.raises(SubspaceError):
        span(f2_4, f2_10.field([1, 2]))


def test_enumerate_zero_subspace(f3_6):
    elements = enumerate_subspace(zero_subspace(f3_6))
    assert encode(elements).tolist() == [0]


def test_enumerate_counts_and_membership(f3_6, rng):
    S = random_subspace(f3_6, 3, rng)
    elements = enumerate_subspace(S)
    codes = encode(elements)
    assert codes.shape == (27,)
    assert len(set(codes.tolist())) == 27
    assert codes[0] == 0
    assert bool(np.all(contains_each(S, elements)))


def test_enumerate_cap(f2_16, rng):
    S = random_subspace(f2_16, 10, rng)
    with pytest.raises(ResourceLimitError):
        enumerate_subspace(S, cap=1000)


def test_random_subspace_contract(f2_16):
    first = random_subspace(f2_16, 5, np.random.default_rng(9))
    second = random_subspace(f2_16, 5, np.random.default_rng(9))
    assert first.dim == 5
    assert first == second
    with pytest.raises(SubspaceError):
        random_subspace(f2_16, 17, np.random.default_rng(9))


def test_random_subspace_inside_ambient(f2_16, rng):
    ambient = random_subspace(f2_16, 8, rng)
    inner = random_subspace(f2_16, 5, rng, ambient=ambient)
    assert inner.dim == 5
    assert is_subspace_of(inner, ambient)
    assert codimension_in(inner, ambient) == 3
    with pytest.raises(SubspaceError):
        random_subspace(f2_16, 9, rng, ambient=ambient)


def test_codimension_requires_containment(f2_16, rng):
    u = random_subspace(f2_16, 3, rng)
    v = random_subspace(f2_16, 3, rng)
    if not is_subspace_of(u, v):
        with pytest.raises(SubspaceError):
            codimension_in(u, v)


def test_from_vectors_reduces_modulo_q(f3_6):
    vectors = np.array([[4, 0, 0, 0, 0, 0], [0, 5, 0, 0, 0, 0]])
    space = from_vectors(f3_6, vectors)
    assert space.basis.tolist() == [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0]]
    assert equals(space, span(f3_6, from_coefficients(f3_6, vectors % 3)))


def test_syndrome_shift_meets_each_support(planted, f2_16):
    r, d, c = 3, 3, 1
    instance = planted(f2_16, r, d, c, seed=4)
    S, A, E = instance.syndrome_support, instance.parity_support, instance.error_support
    for a in enumerate_subspace(A)[1:]:
        assert intersect(shift_inverse(S, a), E).dim >= r - c
    for b in enumerate_subspace(E)[1:]:
        assert intersect(shift_inverse(S, b), A).dim >= d - c


def test_t_fold_intersection_meets_support(planted):
    params = make_field(2, 20)
    r, d, c, t = 4, 3, 1, 2
    rng = np.random.default_rng(8)
    instance = planted(params, r, d, c, seed=8)
    S, A, E = instance.syndrome_support, instance.parity_support, instance.error_support
    alphas = enumerate_subspace(A)[1:]
    for _ in range(20):
        chosen = rng.choice(len(alphas), size=t, replace=False)
        joint = shift_inverse(S, alphas[int(chosen[0])])
        for index in chosen[1:]:
            joint = intersect(joint, shift_inverse(S, alphas[int(index)]))
        assert intersect(joint, E).dim >= r - t * c


@pytest.mark.slow
def test_random_subspace_uniform():
    params = make_field(2, 4)
    rng = np.random.default_rng(35)
    counts = Counter(random_subspace(params, 2, rng).basis.tobytes() for _ in range(35000))
    assert len(counts) == 35
    observed = np.array(list(counts.values()), dtype=np.float64)
    chi2 = float(np.sum((observed - 1000.0) ** 2 / 1000.0))
    # Critical value of chi-square with 34 degrees of freedom at 0.001
    assert chi2 < 65.247


@pytest.mark.parametrize("q, m, r", [(2, 4, 3), (3, 3, 2)])
def test_random_span_dimension_rate(q, m, r):
    params = make_field(q, m)
    rng = np.random.default_rng(q * 100 + m)
    trials = 2000
    full = sum(span(params, random_elements(params, r, rng)).dim == r for _ in range(trials))
    expected = float(np.prod([1.0 - float(q) ** (i - m) for i in range(r)]))
    assert abs(full / trials - expected) < 0.05
