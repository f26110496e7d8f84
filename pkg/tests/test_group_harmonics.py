"""Representation builders, group transforms, and the fast cyclic DFT."""
import cmath
import math

import numpy as np
import pytest

from invsemifft.errors import CapabilityError, ContractError
from invsemifft.fast_transforms import OpCounter
from invsemifft.group_harmonics import (GroupSpectrum, abelian_characters,
                                        cyclic_ft_fast, cyclic_ift_fast,
                                        cyclic_repset_for, group_ft, group_ift,
                                        hook_length_dim, irreps_cyclic,
                                        irreps_symmetric, irreps_wreath_abelian,
                                        partitions, standard_tableaux,
                                        validate_repset, yor_matrix)
from invsemifft.groups import GroupTable, cyclic_group, symmetric_group


def test_partitions_and_tableaux():
    assert partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(standard_tableaux((2, 1))) == 2
    assert len(standard_tableaux((3, 2))) == 5
    for shape in partitions(5):
        assert len(standard_tableaux(shape)) == hook_length_dim(shape)


def test_hook_length_dims():
    assert [hook_length_dim(s) for s in partitions(4)] == [1, 3, 2, 3, 1]
    assert [hook_length_dim(s) for s in partitions(3)] == [1, 2, 1]
    assert sum(hook_length_dim(s) ** 2 for s in partitions(6)) == math.factorial(6)


def test_cyclic_characters():
    rs = irreps_cyclic(1)
    assert rs.dims == [1]
    rs = irreps_cyclic(2)
    assert np.allclose([m[0, 0] for m in rs.reps[1].matrices], [1, -1])
    rs = irreps_cyclic(4)
    assert abs(rs.reps[1].matrices[1][0, 0] - 1j) < 1e-12


@pytest.mark.parametrize("k", [1, 2, 3, 5, 8, 12, 24])
def test_cyclic_gates(k):
    validate_repset(irreps_cyclic(k))


def test_cyclic_gates_large_vectorized():
    """Complete homomorphism check for every k up to 64 via index algebra."""
    for k in range(1, 65):
        j = np.arange(k)
        chars = np.exp(2j * np.pi * np.outer(j, j) / k)  # chars[rep, element]
        add = (j[:, None] + j[None, :]) % k
        for c in chars:
            assert np.abs(c[add] - np.outer(c, c)).max() < 1e-9
        gram = chars @ chars.conj().T / k
        assert np.abs(gram - np.eye(k)).max() < 1e-9
        built = irreps_cyclic(k)
        for c, rep in zip(chars, built.reps):
            assert np.abs(rep.matrices[:, 0, 0] - c).max() < 1e-9


@pytest.mark.parametrize("k", [0, 1, 2, 3, 4, 5])
def test_symmetric_gates(k):
    rs = irreps_symmetric(k)
    validate_repset(rs)
    assert sorted(rs.dims) == sorted(hook_length_dim(s) for s in partitions(k))


def test_symmetric_s6_gates():
    validate_repset(irreps_symmetric(6), pair_limit=120)


def test_symmetric_orthogonal_form():
    for k in (3, 4, 5):
        for shape in partitions(k):
            for i in range(1, k):
                perm = list(range(1, k + 1))
                perm[i - 1], perm[i] = perm[i], perm[i - 1]
                m = yor_matrix(shape, tuple(perm))
                assert np.abs(m @ m.T - np.eye(len(m))).max() < 1e-12


def test_symmetric_cap():
    with pytest.raises(CapabilityError):
        irreps_symmetric(9)


def test_wreath_gates():
    rs = irreps_wreath_abelian(cyclic_group(2), 1)
    assert rs.dims == [1, 1]
    validate_repset(rs)
    rs = irreps_wreath_abelian(cyclic_group(2), 2)
    assert sorted(rs.dims) == [1, 1, 1, 1, 2]
    validate_repset(rs)
    rs = irreps_wreath_abelian(cyclic_group(2), 3)
    assert sum(d * d for d in rs.dims) == math.factorial(3) * 2 ** 3
    validate_repset(rs)


def test_wreath_degenerate_is_symmetric():
    rs = irreps_wreath_abelian(cyclic_group(1), 3)
    assert sorted(rs.dims) == [1, 1, 2]
    validate_repset(rs)


def test_wreath_requires_abelian():
    with pytest.raises(CapabilityError):
        irreps_wreath_abelian(symmetric_group(3), 1)


def test_abelian_characters_noncyclic():
    keys = [(a, b) for a in range(2) for b in range(2)]
    g = GroupTable(keys, lambda x, y: ((x[0] + y[0]) % 2, (x[1] + y[1]) % 2),
                   name="Z2xZ2")
    assert g.generator_if_cyclic() is None
    chars = abelian_characters(g)
    assert len(chars) == 4
    for ch in chars:
        for a in range(4):
            for b in range(4):
                assert abs(ch[g.mul(a, b)] - ch[a] * ch[b]) < 1e-9
    assert len({tuple(np.round(c, 6)) for c in chars}) == 4


def test_group_ft_delta_and_sums():
    rs = irreps_cyclic(2)
    spec = group_ft(np.array([1.0, 1.0]), rs)
    assert abs(spec.blocks["chi_0"][0, 0] - 2) < 1e-12
    assert abs(spec.blocks["chi_1"][0, 0]) < 1e-12
    rs3 = irreps_symmetric(3)
    delta = np.zeros(6)
    delta[rs3.group.identity] = 1.0
    spec = group_ft(delta, rs3)
    for rep in rs3.reps:
        assert np.abs(spec.blocks[rep.label] - np.eye(rep.dim)).max() < 1e-12


def test_group_ft_oracle_s3():
    rs = irreps_symmetric(3)
    rng = np.random.default_rng(8)
    f = rng.normal(size=6) + 1j * rng.normal(size=6)
    spec = group_ft(f, rs)
    for rep in rs.reps:
        brute = sum(f[s] * rep.matrices[s] for s in range(6))
        assert np.abs(spec.blocks[rep.label] - brute).max() < 1e-12


def test_group_ift_round_trip():
    rng = np.random.default_rng(9)
    for rs in (irreps_cyclic(4), irreps_symmetric(4),
               irreps_wreath_abelian(cyclic_group(2), 2)):
        n = len(rs.group)
        for _ in range(20):
            f = rng.normal(size=n) + 1j * rng.normal(size=n)
            back = group_ift(group_ft(f, rs), rs)
            assert np.abs(back - f).max() < 1e-10


def test_group_ift_delta_at_g0():
    rs = irreps_symmetric(3)
    g0 = 4
    spec = GroupSpectrum({rep.label: rep.matrices[g0].copy()
                          for rep in rs.reps})
    back = group_ift(spec, rs)
    expect = np.zeros(6)
    expect[g0] = 1.0
    assert np.abs(back - expect).max() < 1e-10


def test_parseval():
    rng = np.random.default_rng(10)
    groups = [irreps_cyclic(k) for k in (3, 16, 64)]
    groups += [irreps_symmetric(k) for k in (3, 4, 5)]
    groups += [irreps_wreath_abelian(cyclic_group(2), k) for k in (1, 2, 3)]
    for rs in groups:
        n = len(rs.group)
        f = rng.normal(size=n) + 1j * rng.normal(size=n)
        spec = group_ft(f, rs)
        lhs = sum(rep.dim * np.linalg.norm(spec.blocks[rep.label], "fro") ** 2
                  for rep in rs.reps) / n
        rhs = np.sum(np.abs(f) ** 2)
        assert abs(lhs - rhs) <= 1e-9 * rhs


def test_spectrum_shape_contract():
    rs = irreps_symmetric(3)
    bad = GroupSpectrum({rep.label: np.zeros((1, 1)) for rep in rs.reps})
    with pytest.raises(ContractError):
        group_ift(bad, rs)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6, 7, 8, 11, 12, 16, 17, 31, 64])
def test_cyclic_fast_matches_naive(k):
    rng = np.random.default_rng(k)
    f = rng.normal(size=k) + 1j * rng.normal(size=k)
    counter = OpCounter()
    fast = cyclic_ft_fast(f, counter)
    naive = np.array([sum(f[t] * cmath.exp(2j * cmath.pi * j * t / k)
                          for t in range(k)) for j in range(k)])
    scale = max(1.0, np.abs(naive).max())
    assert np.abs(fast - naive).max() <= 1e-9 * scale
    assert np.abs(cyclic_ift_fast(fast) - f).max() <= 1e-9
    if k > 1:
        ops = max(counter.additions, counter.multiplications)
        assert ops <= 20 * k * math.log2(k)


def test_cyclic_fast_delta():
    assert np.allclose(cyclic_ft_fast(np.eye(8)[0]), np.ones(8))
    assert np.allclose(cyclic_ft_fast(np.array([3.0])), [3.0])


def test_cyclic_repset_alignment():
    """Character set built for an arbitrary cyclic table follows its
    generator, so the fast path and the matrices agree."""
    g = GroupTable([0, 1, 2, 3], lambda a, b: (a + b) % 4, name="Z4")
    rs = cyclic_repset_for(g)
    validate_repset(rs)
    rng = np.random.default_rng(1)
    f = rng.normal(size=4)
    by_exp = np.zeros(4, dtype=complex)
    by_exp[rs.cyclic_exponents] = f
    fast = cyclic_ft_fast(by_exp)
    spec = group_ft(f, rs)
    for j, rep in enumerate(rs.reps):
        assert abs(spec.blocks[rep.label][0, 0] - fast[j]) < 1e-10
