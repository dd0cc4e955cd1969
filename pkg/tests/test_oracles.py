"""Freudenthal recursion, convolution route, and tableau counting."""

import pytest

from bivar.errors import NotDominant, ShapeContentMismatch
from bivar.multiplicity import bivariate_mult, single_row_mult, tensor_mult
from bivar.oracles import (
    convolution_mult,
    freudenthal_diagram,
    kostka_count,
    tensor_conv_mult,
)
from bivar.root_systems import (
    algebra,
    highest_weight,
    weyl_dimension,
    weyl_orbit_size,
)
from bivar.weight_tables import candidate_dominants

B2, C2, D3, A2 = algebra("B", 2), algebra("C", 2), algebra("D", 3), algebra("A", 2)


def diagram_dimension(diagram):
    return sum(weyl_orbit_size(diagram.spec, mu) * m
               for mu, m in diagram.entries.items())


class TestFreudenthal:
    def test_vector_rep_so5(self):
        diagram = freudenthal_diagram(B2, (1, 0))
        assert diagram.entries == {(1, 0): 1, (0, 0): 1}
        assert diagram_dimension(diagram) == 5

    def test_five_dim_rep_sp2(self):
        diagram = freudenthal_diagram(C2, (1, 1))
        assert diagram.entries == {(1, 1): 1, (0, 0): 1}
        assert diagram_dimension(diagram) == 5

    def test_sym_square_sl3(self):
        diagram = freudenthal_diagram(A2, (2, 0, 0))
        assert all(m == 1 for m in diagram.entries.values())
        assert diagram_dimension(diagram) == 6

    def test_adjoint_zero_weight_is_rank(self):
        assert freudenthal_diagram(D3, (1, 1, 0)).entries[(0, 0, 0)] == 3
        assert freudenthal_diagram(B2, (1, 1)).entries[(0, 0)] == 2

    def test_rejects_non_dominant(self):
        with pytest.raises(NotDominant):
            freudenthal_diagram(B2, (0, 1))

    def test_d_negative_last_coordinate_highest_weight(self):
        # the recursion accepts any dominant weight, including spin-style
        # mirrors with a_n < 0 outside the bivariate family
        plus = freudenthal_diagram(D3, (1, 1, 1))
        minus = freudenthal_diagram(D3, (1, 1, -1))
        assert diagram_dimension(plus) == diagram_dimension(minus)
        assert plus.entries != minus.entries

    @pytest.mark.parametrize("spec", [B2, C2, D3, A2], ids=str)
    def test_dimension_matches_weyl_formula(self, spec):
        for total in range(5):
            for l in range(total // 2 + 1):
                k = total - l
                diagram = freudenthal_diagram(spec, highest_weight(spec, k, l))
                assert diagram_dimension(diagram) == weyl_dimension(spec, k, l)

    def test_multiplicity_lookup_routes_through_canonical_form(self):
        diagram = freudenthal_diagram(C2, (2, 1))
        assert diagram.multiplicity((-1, 2)) == diagram.multiplicity((2, 1))


class TestConvolution:
    def test_hand_example(self):
        assert convolution_mult(C2, 1, 1, (0, 0)) == 1

    def test_l_zero_equals_single_row(self):
        for spec in (B2, C2, D3, A2):
            for k in range(4):
                for mu in candidate_dominants(spec, k, 0, parity_filter=False):
                    assert convolution_mult(spec, k, 0, mu) == \
                        single_row_mult(spec, k, mu)

    def test_matches_bivariate(self):
        for spec in (B2, C2, D3, A2):
            for k, l in [(1, 1), (2, 1), (2, 2), (3, 1)]:
                for mu in candidate_dominants(spec, k, l, parity_filter=False):
                    assert convolution_mult(spec, k, l, mu) == \
                        bivariate_mult(spec, k, l, mu), (spec, k, l, mu)

    def test_tensor_side_matches_formula(self):
        for spec in (B2, C2, D3, A2):
            for k, l in [(2, 1), (2, 2)]:
                for mu in candidate_dominants(spec, k, l, parity_filter=False):
                    assert tensor_conv_mult(spec, k, l, mu) == \
                        tensor_mult(spec, k, l, mu)


class TestKostka:
    def test_examples(self):
        assert kostka_count((2, 2), (2, 1, 1)) == 1
        assert kostka_count((1, 1), (1, 1, 0)) == 1
        for content in [(3,), (2, 1), (1, 1, 1)]:
            assert kostka_count((3,), content) == 1

    def test_known_values(self):
        # shape (2,1) with content (1,1,1) has the two standard tableaux
        assert kostka_count((2, 1), (1, 1, 1)) == 2
        assert kostka_count((2, 1), (2, 1)) == 1
        assert kostka_count((2, 1), (1, 2)) == 1
        assert kostka_count((2, 2), (1, 1, 1, 1)) == 2

    def test_column_strictness_blocks_fat_content(self):
        assert kostka_count((1, 1), (2,)) == 0

    def test_shape_content_mismatch(self):
        with pytest.raises(ShapeContentMismatch):
            kostka_count((2, 1), (1, 1, 1, 1))
        with pytest.raises(ShapeContentMismatch):
            kostka_count((2, 1), (-1, 4))

    def test_matches_bivariate_for_type_a(self):
        for n in (2, 3):
            spec = algebra("A", n)
            for total in range(5):
                for l in range(total // 2 + 1):
                    k = total - l
                    shape = (k, l) if l else ((k,) if k else ())
                    for mu in candidate_dominants(spec, k, l):
                        assert kostka_count(shape, mu) == \
                            bivariate_mult(spec, k, l, mu), (n, k, l, mu)
