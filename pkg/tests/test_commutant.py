from __future__ import annotations

import math

import numpy as np
import pytest

from blaschkelab import (
    NonCommutative,
    Permutation,
    analyze_commutant,
    commutant_basis,
    is_commutative,
    minimal_projections,
    permutation_matrix,
)


def _cycle(n: int) -> Permutation:
    return Permutation(tuple((i + 1) % n for i in range(n)))


def _assert_matched(computed, expected, tol=1e-8):
    """Bijective matching between two families of matrices."""
    assert len(computed) == len(expected)
    used = set()
    for p in computed:
        dists = [np.linalg.norm(p - e) for e in expected]
        j = int(np.argmin(dists))
        assert dists[j] < tol
        assert j not in used
        used.add(j)


def test_permutation_matrix_swap():
    v = permutation_matrix(Permutation((1, 0)))
    assert np.array_equal(v, np.array([[0, 1], [1, 0]], dtype=complex))


def test_permutation_matrix_moves_basis_vectors():
    perm = _cycle(4)
    v = permutation_matrix(perm)
    for j in range(4):
        e = np.zeros(4)
        e[j] = 1.0
        image = v @ e
        assert image[perm(j)] == 1.0
        assert image.sum() == 1.0


def test_swap_commutant_basis():
    gens = [Permutation((1, 0))]
    cb = commutant_basis(gens, 2)
    assert cb.dim == 2
    gram = np.array([[np.vdot(x, y) for y in cb.basis] for x in cb.basis])
    assert np.allclose(gram, np.eye(2), atol=1e-10)
    v = permutation_matrix(gens[0])
    for x in cb.basis:
        assert np.linalg.norm(x @ v - v @ x) <= 1e-10
    for target in (np.eye(2, dtype=complex), v):
        coeffs = [np.vdot(x, target) for x in cb.basis]
        recon = sum(c * x for c, x in zip(coeffs, cb.basis))
        assert np.allclose(recon, target, atol=1e-10)


def test_cycle_commutant_is_circulant_algebra():
    for n in (3, 4, 5):
        cb = commutant_basis([_cycle(n)], n)
        assert cb.dim == n
        v = permutation_matrix(_cycle(n))
        for x in cb.basis:
            assert np.linalg.norm(x @ v - v @ x) <= 1e-10


def test_trivial_group_gives_full_matrix_algebra():
    cb = commutant_basis([], 3)
    assert cb.dim == 9


def test_commutativity_of_circulants():
    flag, worst = is_commutative(commutant_basis([_cycle(4)], 4))
    assert flag
    assert worst < 1e-12


def test_noncommutativity_of_full_algebra():
    flag, worst = is_commutative(commutant_basis([], 2))
    assert not flag
    assert worst == pytest.approx(math.sqrt(2.0), abs=1e-12)


def test_minimal_projections_cycle_are_fourier():
    n = 3
    projs = minimal_projections(commutant_basis([_cycle(n)], n), seed=0)
    assert len(projs) == n
    omega = np.exp(2j * np.pi / n)
    expected = []
    for m in range(n):
        v = np.array([omega ** (m * t) for t in range(n)]) / math.sqrt(n)
        expected.append(np.outer(v, v.conj()))
    _assert_matched(projs, expected)


def test_minimal_projections_swap():
    projs = minimal_projections(commutant_basis([Permutation((1, 0))], 2), seed=0)
    v = permutation_matrix(Permutation((1, 0)))
    expected = [(np.eye(2) + v) / 2.0, (np.eye(2) - v) / 2.0]
    _assert_matched(projs, expected)


def test_minimal_projections_single_point():
    projs = minimal_projections(commutant_basis([], 1), seed=0)
    assert len(projs) == 1
    assert np.allclose(projs[0], [[1.0]])


def test_minimal_projections_reject_noncommutative():
    with pytest.raises(NonCommutative):
        minimal_projections(commutant_basis([], 2), seed=0)


def test_projection_partition_properties(order4, rep_of):
    rep = rep_of(order4)
    gens = list(rep.generators)
    n = order4.order
    cb = analyze_commutant(gens, n, seed=0)
    projs = cb.projections
    assert len(projs) == cb.dim
    assert np.linalg.norm(sum(projs) - np.eye(n)) <= 1e-8
    ranks = 0
    for p in projs:
        assert np.linalg.norm(p @ p - p) <= 1e-8
        assert np.linalg.norm(p - p.conj().T) <= 1e-8
        ranks += int(round(np.trace(p).real))
    assert ranks == n
    for a in range(len(projs)):
        for b in range(a + 1, len(projs)):
            assert np.linalg.norm(projs[a] @ projs[b]) <= 1e-8
    for p in projs:
        for g in gens:
            v = permutation_matrix(g)
            assert np.linalg.norm(p @ v - v @ p) <= 1e-8


def test_dimension_is_conjugation_invariant(order3, rep_of):
    rep = rep_of(order3)
    gens = list(rep.generators)
    n = order3.order
    rng = np.random.default_rng(17)
    relabel = Permutation(tuple(int(i) for i in rng.permutation(n)))
    conj = [g.conjugate(relabel) for g in gens]
    assert commutant_basis(conj, n).dim == commutant_basis(gens, n).dim
