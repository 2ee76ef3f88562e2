import pytest

from bianchi_lefschetz.exactmath import InputError, is_prime
from bianchi_lefschetz.oracles import ideal_class_count, min_poly_splitting
from bianchi_lefschetz.quadfield import (ambiguous_form_count, class_number,
                                         is_square_free, make_field, reduced_forms,
                                         splitting_type, two_torsion_count)


class TestMakeField:
    def test_d_minus_2(self):
        f = make_field(-2)
        assert (f.D, f.t, f.ramified_primes, f.D2) == (-8, 1, (2,), 8)
        assert (f.omega_trace, f.omega_norm) == (0, 2)   # omega^2 = -2

    def test_d_minus_7(self):
        f = make_field(-7)
        assert (f.D, f.t, f.D2) == (-7, 1, 1)
        # omega^2 = omega - 2 for d = -7
        assert (f.omega_trace, f.omega_norm) == (1, 2)

    @pytest.mark.parametrize("bad", [-1, -3])
    def test_excluded_discriminants(self, bad):
        with pytest.raises(InputError, match="d != -1, -3"):
            make_field(bad)

    @pytest.mark.parametrize("bad", [0, 2, -4, -12, -50])
    def test_rejects_nonnegative_and_nonsquarefree(self, bad):
        with pytest.raises(InputError):
            make_field(bad)


class TestSplitting:
    def test_frozen_values(self):
        assert splitting_type(make_field(-7), 3) == "inert"   # -7 = 2 mod 3
        assert splitting_type(make_field(-2), 3) == "split"   # -8 = 1 mod 3
        assert splitting_type(make_field(-5), 5) == "ramified"

    def test_rejects_composite(self):
        with pytest.raises(InputError):
            splitting_type(make_field(-2), 9)

    def test_min_poly_oracle(self):
        for d in range(-2, -31, -1):
            if d in (-1, -3) or not is_square_free(d):
                continue
            f = make_field(d)
            for p in range(2, 51):
                if is_prime(p):
                    assert splitting_type(f, p) == min_poly_splitting(f, p)


class TestClassNumber:
    def test_frozen_values(self):
        assert class_number(make_field(-2)) == 1
        assert class_number(make_field(-5)) == 2
        assert class_number(make_field(-23)) == 3

    def test_reduced_forms_minus_23(self):
        assert sorted(reduced_forms(-23)) == [(1, 1, 6), (2, -1, 3), (2, 1, 3)]

    def test_ideal_lattice_oracle(self):
        for d in (-2, -5, -7, -11, -23):
            f = make_field(d)
            assert ideal_class_count(f) == f.h


class TestTwoTorsion:
    def test_frozen_values(self):
        assert two_torsion_count(make_field(-2)) == 1
        assert two_torsion_count(make_field(-5)) == 2
        assert two_torsion_count(make_field(-105)) == 8   # D = -420, t = 4

    def test_genus_cross_check(self):
        # ambiguous reduced forms are exactly the 2-torsion classes
        for d in range(-2, -201, -1):
            if d in (-1, -3) or not is_square_free(d):
                continue
            f = make_field(d)
            assert ambiguous_form_count(f.D) == two_torsion_count(f)
