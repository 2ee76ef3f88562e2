import numpy as np
import pytest

from bianchi_lefschetz.eisenstein import (CHARACTER_VARIANTS,
                                          INVERSE_DIFFERENT, LITERAL_D,
                                          IllDefinedVariantError, boundary_dims,
                                          cusp_count, eis_dim,
                                          level_one_sigma_traces, sczech_operator,
                                          sczech_trace, trace_sigma_h1_eis,
                                          trace_sigma_h2_eis, trace_tau_h2_eis,
                                          variant_periodicity_defect,
                                          write_matrix_dump)
from bianchi_lefschetz.exactmath import InputError
from bianchi_lefschetz.finitering import cusp_count_bruteforce
from bianchi_lefschetz.quadfield import make_field

F2, F5, F7, F11 = (make_field(d) for d in (-2, -5, -7, -11))


class TestCuspCount:
    def test_frozen_values(self):
        assert cusp_count(F2, 3) == 64
        assert cusp_count(F7, 3) == 80     # inert factor 1 - 3^-4
        assert cusp_count(F2, 5) == 624    # 5 inert in Q(sqrt(-2))

    def test_matches_exhaustive_census(self):
        for f in (F2, F5, F7, F11):
            for N in (3, 4, 5):
                assert cusp_count(f, N) == cusp_count_bruteforce(f, N)

    def test_rejects_small_levels(self):
        with pytest.raises(InputError):
            cusp_count(F2, 2)


class TestBoundaryDims:
    def test_triples(self):
        assert boundary_dims(F2, 3, 1) == (64, 128, 64)
        assert boundary_dims(F7, 3, 5) == (80, 160, 80)

    def test_torus_euler_characteristic_zero(self):
        for f, N in ((F2, 3), (F7, 3), (F2, 5)):
            h0, h1, h2 = boundary_dims(f, N, 1)
            assert h1 == h0 + h2

    def test_eis_dim(self):
        assert eis_dim(F2, 3, 1) == 64
        assert eis_dim(F7, 3, 2) == 80
        assert eis_dim(F2, 5, 1) == 624
        with pytest.raises(InputError):
            eis_dim(F2, 3, 0)


class TestDegreeTwoTraces:
    def test_sigma_frozen(self):
        assert trace_sigma_h2_eis(F7, 9, 1) == -72
        assert trace_sigma_h2_eis(F7, 3, 0) == -7    # -8 plus the weight-zero 1
        assert trace_sigma_h2_eis(F5, 3, 1) == -16   # t = 2

    def test_tau_frozen(self):
        assert trace_tau_h2_eis(F7, 3, 1) == -2
        assert trace_tau_h2_eis(F7, 9, 1) == -18
        assert trace_tau_h2_eis(F2, 1, 1) == -1      # level one

    def test_level_one_consistency(self):
        for f in (F2, F5, F7, F11):
            assert trace_sigma_h2_eis(f, 1, 0) == level_one_sigma_traces(f, 0).tr2

    def test_rejects_ramified_levels(self):
        with pytest.raises(InputError):
            trace_sigma_h2_eis(F5, 5, 1)
        with pytest.raises(InputError):
            trace_tau_h2_eis(F2, 2, 1)

    def test_magnitude_within_eisenstein_dimension(self):
        for f, N in ((F2, 3), (F7, 3), (F5, 3), (F7, 9), (F2, 5)):
            dim = eis_dim(f, N, 1)
            assert abs(trace_sigma_h2_eis(f, N, 1)) <= dim
            assert abs(trace_tau_h2_eis(f, N, 1)) <= dim


class TestLevelOneTraces:
    def test_weight_zero_frozen(self):
        assert (lambda r: (r.tr0, r.tr1, r.tr2))(level_one_sigma_traces(F5, 0)) == (1, -2, -1)
        assert (lambda r: (r.tr0, r.tr1, r.tr2))(level_one_sigma_traces(F2, 0)) == (1, -1, 0)
        r = level_one_sigma_traces(make_field(-105), 0)
        assert (r.tr0, r.tr1, r.tr2) == (1, -8, -7)

    def test_positive_weight_window(self):
        r = level_one_sigma_traces(F5, 3)
        assert (r.tr0, r.tr1, r.tr2) == (0, None, -2)
        assert not r.tr1_exact and r.tr1_window == F5.h
        assert r.tr1_sign_hint == "nonpositive"


class TestDegreeOneTraces:
    def test_frozen_values(self):
        assert trace_sigma_h1_eis(F2, 5, 1) == -26
        assert trace_sigma_h1_eis(F2, 5, 2) == -600
        assert trace_sigma_h1_eis(F11, 2, 1) == -5    # 2 inert: -11 = 5 mod 8

    def test_preconditions(self):
        with pytest.raises(InputError):
            trace_sigma_h1_eis(F5, 3, 1)     # h = 2
        with pytest.raises(InputError):
            trace_sigma_h1_eis(F2, 3, 1)     # 3 splits in Q(sqrt(-2))


class TestSczechOperator:
    def test_literal_character_rejected(self):
        assert variant_periodicity_defect(F2, LITERAL_D) > 1
        with pytest.raises(IllDefinedVariantError):
            sczech_operator(F2, 2, LITERAL_D)

    def test_at_least_one_variant_constructs(self):
        built = 0
        for v in CHARACTER_VARIANTS:
            try:
                sczech_operator(F2, 2, v)
                built += 1
            except IllDefinedVariantError:
                pass
        assert built >= 1

    def test_diagonal_at_n2(self):
        op = sczech_operator(F2, 2)
        assert np.allclose(np.diag(op.matrix), -1 / 3)

    def test_trace_and_involution_default_variant(self):
        for d, N in ((-2, 2), (-2, 3), (-2, 4), (-2, 5), (-7, 2), (-7, 3)):
            op = sczech_operator(make_field(d), N)
            tr = op.trace()
            assert abs(tr.real + (N * N + 1)) < 1e-8
            assert abs(tr.imag) < 1e-9
            assert op.involution_defect() < 1e-9

    def test_operator_is_hermitian_under_default_variant(self):
        op = sczech_operator(F7, 3)
        assert np.abs(op.matrix - op.matrix.conj().T).max() < 1e-14

    def test_inverse_different_misses_trace_at_odd_levels(self):
        tr = sczech_trace(F2, 3, INVERSE_DIFFERENT)
        assert abs(tr.value - tr.expected) > 1     # diagonal pairing nonzero
        assert abs(tr.imag) < 1e-9                 # trace still real
        # at N = 2 the two admissible variants coincide (negation is trivial)
        tr2 = sczech_trace(F2, 2, INVERSE_DIFFERENT)
        assert abs(tr2.value + 5) < 1e-8

    def test_matches_closed_degree_one_trace(self):
        tr = sczech_trace(F2, 5)
        assert abs(tr.value - trace_sigma_h1_eis(F2, 5, 1)) < 1e-8

    def test_size_guard(self):
        with pytest.raises(InputError):
            sczech_operator(F2, 11)    # 11^4 - 1 > 10^4

    def test_vectorized_matrix_matches_scalar_mirror(self):
        # scalar re-derivation of every entry, guarding the outer-product
        # index orientation in the numpy builder
        import cmath

        for d in (-2, -7):
            f = make_field(d)
            T = f.omega_trace
            for variant in (INVERSE_DIFFERENT, "symplectic-invdiff"):
                op = sczech_operator(f, 2, variant)
                N = 2

                def y(x, z):
                    return x[0] * z[1] + x[1] * z[0] + T * x[1] * z[1]

                def conj(z):
                    return ((z[0] + T * z[1]) % N, (-z[1]) % N)

                for i, row in enumerate(op.indices):
                    alpha, beta = (row[0], row[1]), (row[2], row[3])
                    for j, col in enumerate(op.indices):
                        gamma, delta = (col[0], col[1]), (col[2], col[3])
                        if variant == INVERSE_DIFFERENT:
                            gamma, delta = conj(gamma), conj(delta)
                        e = (y(alpha, delta) - y(beta, gamma)) % N
                        want = -1 / (N**2 * (N**2 - 1)) \
                            - cmath.exp(2j * cmath.pi * e / N) / N**2
                        assert abs(op.matrix[i, j] - want) < 1e-14

    def test_matrix_dump_roundtrip(self, tmp_path):
        op = sczech_operator(F2, 2)
        path = tmp_path / "matrix.txt"
        write_matrix_dump(op, str(path))
        lines = path.read_text().strip().split("\n")
        assert len(lines) == 15 * 15
        i, j, re, im = lines[0].split()
        assert (i, j) == ("0", "0")
        assert abs(float(re) + 1 / 3) < 1e-15
        last = lines[-1].split()
        assert (last[0], last[1]) == ("14", "14")
