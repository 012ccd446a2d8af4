"""Parametric family and built-in map test cases.
"""


import unittest
import sys
import os

# Run tests using local copy of library - comment this out if unnecessary
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from homcode import generators
from homcode.errors import DegenerateParams, UnknownName
from catalog_test import catalog_test, code_of, odd, even, n1, k3


class params_test(catalog_test):
    def test_offsets(self):
        """Test the offset sequence.
        """
        self.assertEqual([0, 1, 2, 5, 8, 17, 26],
                         [generators.offset(i) for i in range(1, 8)])

    def test_vertex_counts(self):
        """Test N for both families.
        """
        self.assertEqual(16, generators.odd_family_params(3, 0).N)
        self.assertEqual(20, generators.odd_family_params(3, 1).N)
        self.assertEqual(52, generators.odd_family_params(4, 0).N)
        self.assertEqual(26, generators.even_family_params(3, 0).N)
        self.assertEqual(30, generators.even_family_params(3, 2).N)

    def test_invalid(self):
        """Test parameters outside the construction.
        """
        try:
            generators.odd_family_params(2, 0)
            self.fail('m1 = 2 should be rejected')
        except Exception as error:
            self.assertIsInstance(error, DegenerateParams)
            self.assertEqual('m1 must be ≥ 3', str(error))
        with self.assertRaises(DegenerateParams):
            generators.even_family_params(3, -1)
        with self.assertRaises(ValueError):
            generators.even_family_params(3.0, 0)

    def test_predictions(self):
        """Test the closed-form codes.
        """
        code = generators.odd_family_params(3, 0).predicted_code()
        self.assertEqual((40, 10, -8, 4), (code.n, code.k, code.chi, code.d))
        code = generators.even_family_params(3, 0).predicted_code()
        self.assertEqual((78, 28, -26, 4), (code.n, code.k, code.chi, code.d))

    def test_rate_grows_with_m1(self):
        """Test that k/n at m1 = 4 exceeds k/n at m1 = 3.
        """
        for family in ('odd', 'even'):
            for m2 in range(4):
                with self.subTest(family=family, m2=m2):
                    low = self._params(family, 3, m2).predicted_code()
                    high = self._params(family, 4, m2).predicted_code()
                    self.assertGreater(high.k * low.n, low.k * high.n)


class family_test(catalog_test):
    def test_odd_first_face(self):
        """Test F_1 = (1, 2, 3, 6, 9) of the odd map at (3, 0).
        """
        m = odd(3, 0)
        self.assertEqual((0, 1, 2, 5, 8), m.faces[0])
        self.assertEqual((16, 40, 16), (m.num_vertices, m.num_edges,
                                        m.num_faces))
        self.assertEqual('[5^5]', str(m.vertex_type()))

    def test_odd_sizes(self):
        """Test edge counts of further odd maps.
        """
        self.assertEqual((20, 50), (odd(3, 1).num_vertices,
                                    odd(3, 1).num_edges))
        self.assertEqual((52, 182), (odd(4, 0).num_vertices,
                                     odd(4, 0).num_edges))
        self.assertEqual('[7^7]', str(odd(4, 0).vertex_type()))

    def test_even_sizes(self):
        """Test the even maps at m1 = 3.
        """
        m = even(3, 0)
        self.assertEqual((26, 78, 26, -26), (m.num_vertices, m.num_edges,
                                             m.num_faces,
                                             m.euler_characteristic()))
        self.assertEqual('[6^6]', str(m.vertex_type()))
        self.assertEqual((30, 90), (even(3, 2).num_vertices,
                                    even(3, 2).num_edges))

    def test_grid_matches_formulas(self):
        """Test V, E, chi, n and k against the closed forms on the grid.
        """
        for family, build in (('odd', odd), ('even', even)):
            for m1, m2 in self.FAMILY_GRID:
                with self.subTest(family=family, m1=m1, m2=m2):
                    params = self._params(family, m1, m2)
                    m = build(m1, m2)
                    expected = params.predicted_code()
                    self.assertEqual(params.N, m.num_vertices)
                    self.assertEqual(expected.n, m.num_edges)
                    self.assertEqual(expected.chi, m.euler_characteristic())
                    self.assertEqual(expected.k, code_of(m).k)
                    self.assertTrue(m.vertex_type().is_equivelar)
                    self.assertEqual(params.face_size,
                                     m.vertex_type().degree)

    def test_witness_cycles(self):
        """Test that the four-cycle through vertices 1 and 2 exists.
        """
        self.assertEqual([9, 1, 2, 10],
                         generators.odd_family_params(3, 0).witness_cycle())
        self.assertEqual([18, 1, 2, 19],
                         generators.even_family_params(3, 0).witness_cycle())
        for family, build in (('odd', odd), ('even', even)):
            for m1, m2 in self.FAMILY_GRID:
                with self.subTest(family=family, m1=m1, m2=m2):
                    m = build(m1, m2)
                    cycle = [v - 1 for v in
                             self._params(family, m1, m2).witness_cycle()]
                    for u, v in zip(cycle, cycle[1:] + cycle[:1]):
                        self.assertTrue(m.has_edge(u, v))

    def test_self_dual(self):
        """Test that family maps are isomorphic to their duals.
        """
        for m in (odd(3, 0), odd(3, 1), even(3, 0), even(3, 2)):
            with self.subTest(m=m):
                self.assertTrue(m.is_isomorphic(m.dual()))


class family_grid_dual_test(catalog_test):
    def test_grid_self_dual(self):
        """Test self-duality on the whole grid.
        """
        for family, build in (('odd', odd), ('even', even)):
            for m1, m2 in self.FAMILY_GRID:
                with self.subTest(family=family, m1=m1, m2=m2):
                    m = build(m1, m2)
                    self.assertTrue(m.is_isomorphic(m.dual()))


class builtin_test(catalog_test):
    def test_names(self):
        """Test lookup of built-in maps.
        """
        self.assertEqual(n1().faces, generators.builtin('N1').faces)
        self.assertEqual(20, generators.builtin(' k3 ').num_vertices)

    def test_unknown(self):
        """Test an unknown name.
        """
        with self.assertRaises(UnknownName) as context:
            generators.builtin('k7')
        self.assertIn('k3', str(context.exception))

    def test_k3_repair(self):
        """Test that K3 differs from the printed list in one face only.
        """
        differing = [i for i, (a, b) in enumerate(
            zip(generators.K3, generators.K3_AS_PRINTED)) if a != b]
        self.assertEqual([1], differing)
        self.assertEqual(19, k3().num_faces)


if __name__ == '__main__':
    unittest.main()
