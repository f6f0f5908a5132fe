import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qaitchison.basis import (
    BasisLabel,
    basis_hamiltonian,
    basis_state,
    coordinates,
    full_basis,
    labels,
    synthesize,
)
from qaitchison.errors import InvalidLabelError
from qaitchison.linalg import hs_inner, random_density
from qaitchison.states import gram, maximally_mixed, norm, subtract

from oracles import D1, D2, D3, closed_form_basis_state, max_abs

seeds = st.integers(0, 2**32 - 1)


@pytest.mark.parametrize("n", range(2, 9))
def test_label_count_and_order(n):
    labs = labels(n)
    assert len(labs) == n * n - 1
    kinds = [lab.kind for lab in labs]
    assert kinds == sorted(kinds)
    assert labs[0] == BasisLabel("A", 1, 2)
    assert labs[-1] == BasisLabel("C", n - 1)


def test_label_strings():
    assert str(BasisLabel("A", 1, 2)) == "A_1_2"
    assert str(BasisLabel("C", 3)) == "C_3"


class TestHamiltonians:
    def test_qubit(self):
        np.testing.assert_array_equal(basis_hamiltonian(("A", 1, 2), 2), [[0, 1], [1, 0]])
        np.testing.assert_array_equal(basis_hamiltonian(("B", 1, 2), 2), [[0, 1j], [-1j, 0]])
        np.testing.assert_array_equal(basis_hamiltonian(("C", 1), 2), np.diag([1, -1]))

    def test_c2_for_n4(self):
        h = basis_hamiltonian(("C", 2), 4)
        alpha = math.sqrt(4 / 12)
        np.testing.assert_allclose(h, alpha * np.diag([1, 1, -3, 1]), atol=1e-15)
        assert abs(hs_inner(h, h).real / 4 - 1) <= 1e-12

    @pytest.mark.parametrize("n", range(2, 9))
    def test_orthonormal_traceless(self, n):
        hs = [basis_hamiltonian(lab, n) for lab in labels(n)]
        g = np.array([[hs_inner(x, y).real / n for y in hs] for x in hs])
        assert max_abs(g - np.eye(n * n - 1)) <= 1e-12
        for h in hs:
            assert abs(np.trace(h)) <= 1e-12
            np.testing.assert_array_equal(h, h.conj().T)

    @pytest.mark.parametrize(
        "label,n",
        [(("A", 2, 1), 3), (("A", 1, 4), 3), (("B", 0, 1), 3), (("C", 3), 3), (("C", 1, 2), 3), (("D", 1), 3)],
    )
    def test_invalid_labels(self, label, n):
        with pytest.raises(InvalidLabelError):
            basis_hamiltonian(label, n)


class TestStates:
    def test_qubit_basis_states(self):
        assert max_abs(basis_state(("A", 1, 2), 2) - D1) <= 1e-15
        assert max_abs(basis_state(("B", 1, 2), 2) - D2) <= 1e-15
        assert max_abs(basis_state(("C", 1), 2) - D3) <= 1e-15

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 7])
    def test_closed_forms(self, n):
        for lab in labels(n):
            expected = closed_form_basis_state(lab.kind, lab.k, lab.l, n)
            assert max_abs(basis_state(lab, n) - expected) <= 1e-13

    def test_quoted_constants_are_not_traces(self):
        # the commonly quoted normalizers "k - 2" and "n - a" differ from the actual traces
        n, k = 5, 1
        alpha = math.sqrt(n / (k * k + 3 * k + 2))
        quoted = (k + 1) * math.exp(alpha) + math.exp(-(k + 1) * alpha) + k - 2
        actual = (k + 1) * math.exp(alpha) + math.exp(-(k + 1) * alpha) + n - k - 2
        diag = [math.exp(alpha)] * k + [math.exp(-(k + 1) * alpha)] + [1.0] * (n - k - 2) + [math.exp(alpha)]
        assert abs(sum(diag) - actual) <= 1e-12
        assert abs(quoted - actual) > 1
        a = math.sqrt(n / 2)
        assert abs((n - 2 + 2 * math.cosh(a)) - (n - a + 2 * math.cosh(a))) > 0.1

    @pytest.mark.parametrize("n,tol", [(2, 1e-12), (3, 1e-10), (5, 1e-9)])
    def test_gram(self, n, tol):
        elems = full_basis(n)
        assert len(elems) == n * n - 1
        assert max_abs(gram(elems) - np.eye(n * n - 1)) <= tol


class TestCoordinates:
    def test_zero(self):
        assert max_abs(coordinates(maximally_mixed(3))) <= 1e-15

    def test_unit_coordinate(self):
        np.testing.assert_allclose(coordinates(D3), [0, 0, 1], atol=1e-15)

    @given(seed=seeds, n=st.integers(2, 6))
    def test_round_trip_and_parseval(self, seed, n):
        a = random_density(n, seed)
        c = coordinates(a)
        assert abs(np.sum(c**2) - norm(a) ** 2) <= 1e-9
        back = synthesize(c)
        assert max_abs(back - a) <= 1e-9
        assert norm(subtract(a, back)) <= 1e-8

    def test_synthesize_zero(self):
        assert max_abs(synthesize(np.zeros(8)) - maximally_mixed(3)) == 0.0

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_synthesize_unit_vectors(self, n):
        labs = labels(n)
        for i, lab in enumerate(labs):
            e = np.zeros(len(labs))
            e[i] = 1.0
            assert max_abs(synthesize(e) - basis_state(lab, n)) <= 1e-10

    @given(seed=seeds, n=st.integers(2, 5))
    def test_synthesize_round_trip(self, seed, n):
        rng = np.random.default_rng(seed)
        c = rng.standard_normal(n * n - 1)
        c *= rng.uniform(0, 3) / np.linalg.norm(c)
        assert max_abs(coordinates(synthesize(c)) - c) <= 1e-9

    def test_synthesize_checks_length(self):
        with pytest.raises(ValueError):
            synthesize(np.zeros(5), n=3)
        with pytest.raises(ValueError):
            synthesize([np.nan, 0, 0])
