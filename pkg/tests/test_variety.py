import unittest
from fractions import Fraction

from app.core.errors import InvariantViolation
from app.core.identities import ideal_inclusion_checks
from app.core.tripoly import F, X, lift_x, lift_y
from app.core.unipoly import fam_f, fam_s, fam_sigma
from app.core.variety import (
    ComponentId,
    abelian_param,
    abelian_samples,
    char_map_m2,
    closed_form_matrix,
    component_of,
    count_components,
    enumerate_lines,
    ideal_generators,
    incidence_graph,
    incidence_points,
    intersection_matrix,
    kappa_line,
    line_count_closed,
    map_to_plane,
    mirror_closed_form,
    mirror_intersection_count,
    mirror_window_matches,
    planar_model_m2,
    sample_variety,
    split_gcd,
)


class TestIdeals(unittest.TestCase):
    def test_core_generators(self):
        gens = ideal_generators(3, 2)
        self.assertEqual(gens.J_core, [F(3, 2) - 2, F(4, 2) - X, F(3, 1) - lift_y(fam_f(1))])
        self.assertEqual(gens.I1, [lift_x(fam_s(3)), lift_y(fam_s(2))])
        self.assertEqual(gens.I2, [lift_x(fam_sigma(3)), lift_y(fam_f(1))])
        self.assertEqual(gens.I3[-1], gens.I3_extra)

    def test_window_zero_keeps_core(self):
        self.assertEqual(len(ideal_generators(5, 3, 0).J), 3)
        self.assertGreater(len(ideal_generators(5, 3, 2).J), 3)

    def test_large_exponent(self):
        gens = ideal_generators(1500, 2, 0)
        self.assertEqual(gens.J_core[0], F(1500, 2) - 2)

    def test_rejects_bad_input(self):
        with self.assertRaises(ValueError):
            ideal_generators(0, 3)
        with self.assertRaises(ValueError):
            ideal_generators(3, 2, -1)
        with self.assertRaises(ValueError):
            split_gcd(4, 0)

    def test_split_gcd_keeps_signs(self):
        self.assertEqual(split_gcd(6, 4), (2, 3, 2))
        self.assertEqual(split_gcd(-6, 4), (2, -3, 2))

    def test_generators_vanish_on_samples(self):
        for m, n in [(3, 2), (5, 3), (4, 2), (4, 6), (6, 4), (9, 6)]:
            checks = ideal_inclusion_checks(m, n, window=2, samples=25, seed=0, tol=1e-8)
            failed = [c.name for c in checks if not c.passed]
            self.assertEqual(failed, [], f"({m}, {n})")


class TestComponents(unittest.TestCase):
    def test_small_counts(self):
        self.assertEqual(count_components(3, 2).total, 2)
        self.assertEqual(count_components(3, 2).genus, 1)
        self.assertEqual(count_components(3, 3).total, 4)
        self.assertEqual(count_components(4, 2).total, 4)
        self.assertIsNone(count_components(4, 2).genus)

    def test_enumeration_matches_closed_form(self):
        for m in range(1, 21):
            for n in range(1, m + 1):
                for sm, sn in ((1, 1), (-1, 1), (1, -1), (-1, -1)):
                    counts = count_components(sm * m, sn * n)
                    self.assertEqual(counts.lines, len(enumerate_lines(sm * m, sn * n)))
                    self.assertEqual(counts.lines, line_count_closed(m, n))

    def test_component_of(self):
        self.assertEqual(component_of(Fraction(3, 4), 4), ComponentId(1))
        self.assertEqual(component_of(Fraction(1, 2), 4), ComponentId(2))
        with self.assertRaises(InvariantViolation):
            component_of(Fraction(1, 3), 2)

    def test_labels(self):
        self.assertEqual(ComponentId(0).label(4), "C_1")
        self.assertEqual(ComponentId(2).label(4), "C_-1")
        self.assertEqual(ComponentId(1).label(4), "C_zeta^1")
        self.assertEqual(ComponentId(2).node(4), "Cm1")

    def test_abelian_index_range(self):
        with self.assertRaises(ValueError):
            abelian_samples(6, 4, 2, 5, 0)

    def test_abelian_param_lies_on_variety(self):
        fn, fm, fsum = abelian_param(3, 2)
        self.assertEqual((fn, fm, fsum), (fam_f(2), fam_f(3), fam_f(5)))
        gens = ideal_generators(3, 2)
        for t in (0.3, 1.7, complex(0.5, 0.8), complex(-2.2, 0.1)):
            point = (fn.eval(t), fm.eval(t), fsum.eval(t))
            for g in gens.I3:
                self.assertTrue(g.vanishes_at(point, 1e-9), g.to_text())


class TestIntersectionMatrix(unittest.TestCase):
    def test_known_matrices(self):
        self.assertEqual(intersection_matrix(6, 4).matrix, [[1, 6], [6, 1]])
        self.assertEqual(intersection_matrix(4, 4).matrix, [[0, 1, 2], [1, 0, 2], [2, 2, 0]])
        self.assertEqual(intersection_matrix(6, 3).matrix, [[0, 4], [4, 1]])
        self.assertEqual(intersection_matrix(3, 3).matrix, [[0, 2], [2, 0]])
        self.assertEqual(intersection_matrix(4, 2).matrix, [[0, 2], [2, 0]])

    def test_large_case_cells(self):
        report = intersection_matrix(42, 30)
        a = report.matrix
        self.assertEqual((report.d, report.m_prime, report.n_prime), (6, 7, 5))
        self.assertEqual((a[0][0], a[1][1], a[2][2], a[3][3]), (12, 12, 58, 58))
        self.assertEqual((a[0][1], a[0][2], a[1][3], a[2][3]), (35, 70, 70, 140))
        self.assertEqual(report.counts.total, 599)

    def test_enumeration_agrees_everywhere(self):
        for m in range(2, 17):
            for n in range(2, m + 1):
                report = intersection_matrix(m, n)
                self.assertEqual(report.matrix, closed_form_matrix(m, n))
                self.assertEqual(report.incidence_points, 2 * report.counts.lines)

    def test_sign_does_not_change_matrix(self):
        self.assertEqual(intersection_matrix(-6, 4).matrix, intersection_matrix(6, 4).matrix)
        self.assertEqual(intersection_matrix(6, -4).matrix, intersection_matrix(6, 4).matrix)

    def test_incidence_points_are_distinct_and_on_variety(self):
        gens = ideal_generators(9, 6)
        for line in enumerate_lines(9, 6):
            first, second = incidence_points(line, 9, 6)
            self.assertNotEqual(first.z_angle, second.z_angle)
            for p in (first, second):
                for g in gens.I3:
                    self.assertTrue(g.vanishes_at(p.point, 1e-8))

    def test_incidence_graph(self):
        report = intersection_matrix(6, 4)
        graph = incidence_graph(report)
        self.assertEqual(set(graph.nodes), {"C1", "Cm1"})
        self.assertEqual(graph.number_of_edges(), 8)
        self.assertEqual(graph.number_of_edges("C1", "C1") + graph.number_of_edges("Cm1", "Cm1"), 2)

    def test_kappa_preserves_lines_for_odd_pairs(self):
        lines = enumerate_lines(5, 3)
        angles = {(ln.xcoord.angle, ln.ycoord.angle) for ln in lines}
        for line in lines:
            self.assertIn(kappa_line(line), angles)


class TestMirror(unittest.TestCase):
    def test_trefoil_count(self):
        self.assertEqual(mirror_intersection_count(3, 2).enumerated, 7)

    def test_counts(self):
        for m in range(1, 13):
            for n in range(1, m + 1):
                count = mirror_intersection_count(m, n)
                expected = m * n + (2 if m % 2 == 0 and n % 2 == 0 else 1)
                self.assertEqual(count.enumerated, expected)
                self.assertEqual(mirror_closed_form(m, n), expected)

    def test_count_needs_positive(self):
        with self.assertRaises(ValueError):
            mirror_intersection_count(-3, 2)

    def test_window_generators_match(self):
        for m, n in [(3, 2), (4, 6), (5, 3)]:
            matched, total = mirror_window_matches(m, n, 2)
            self.assertEqual(matched, total)


class TestPlanar(unittest.TestCase):
    def test_model_text(self):
        self.assertEqual(planar_model_m2(3).to_text(), "X^2*Y + 2 - X^2 - Y^2 - Y")
        self.assertEqual(char_map_m2(3), (F(2, 1), X))

    def test_rejects_even_or_small(self):
        for m in (1, 2, 4):
            with self.assertRaises(ValueError):
                planar_model_m2(m)

    def test_maps_onto_curve(self):
        for m in (3, 5, 7, 9):
            model = planar_model_m2(m)
            for point in sample_variety(m, 2, 20, 0):
                x, y = map_to_plane(m, point)
                self.assertTrue(model.vanishes_at((x, y, 0j), 1e-7))


if __name__ == "__main__":
    unittest.main()
