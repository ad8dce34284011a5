import unittest

from app.core.repvar import (
    bezout,
    count_repvar,
    distinct_images,
    metabelian_count_closed,
    metabelian_images,
    metabelian_labels,
)
from app.core.variety import count_components, ideal_generators, incidence_points


class TestCounts(unittest.TestCase):
    def test_trefoil(self):
        report = count_repvar(3, 2)
        self.assertEqual(
            (report.irr_components, report.ab_components, report.total, report.metabelian_components),
            (1, 1, 2, 4),
        )
        self.assertEqual(report.dimensions, (4, 3, 3))

    def test_even_pair(self):
        report = count_repvar(4, 2)
        self.assertEqual(
            (report.irr_components, report.ab_components, report.total, report.metabelian_components),
            (2, 2, 4, 8),
        )

    def test_no_irreducibles_when_one_exponent_is_one(self):
        for n in range(1, 8):
            report = count_repvar(1, n)
            self.assertEqual(report.irr_components, 0)
            self.assertEqual(report.total, report.ab_components)

    def test_totals_match_character_variety(self):
        for m in range(1, 21):
            for n in range(1, m + 1):
                for sm, sn in ((1, 1), (-1, 1), (1, -1), (-1, -1)):
                    report = count_repvar(sm * m, sn * n)
                    self.assertEqual(report.total, count_components(sm * m, sn * n).total)
                    self.assertEqual(report.metabelian_components, metabelian_count_closed(m, n))

    def test_labels_are_distinct(self):
        labels = metabelian_labels(12, 8)
        self.assertEqual(len(labels), len(set(labels)))
        self.assertEqual(len(labels), 2 * (11 * 7 + 1))

    def test_bezout(self):
        for m, n in [(4, 6), (3, 2), (42, 30), (-6, 4), (5, -3)]:
            alpha, beta = bezout(m, n)
            report = count_repvar(m, n)
            self.assertEqual(alpha * m - beta * n, report.d)


class TestMetabelianImages(unittest.TestCase):
    def test_two_to_one(self):
        for m in range(2, 13):
            for n in range(2, m + 1):
                images = metabelian_images(m, n)
                self.assertEqual(2 * distinct_images(images), len(images), (m, n))

    def test_inverse_labels_share_an_image(self):
        images = metabelian_images(6, 4)
        by_label = {img.label: img.key for img in images}
        for (xi, eta), key in by_label.items():
            self.assertEqual(by_label[(xi.inverse(), eta.inverse())], key)

    def test_images_are_incidence_points(self):
        for m, n in [(3, 2), (6, 4), (5, 3), (9, 6)]:
            gens = ideal_generators(m, n)
            for img in metabelian_images(m, n):
                points = incidence_points(img.line, m, n)
                matching = [p for p in points if p.z_angle == img.key[2]]
                self.assertEqual(len(matching), 1, img.label)
                self.assertEqual(matching[0].component, img.component)
                triple = tuple(complex(v) for v in img.triple)
                for g in gens.I3:
                    self.assertTrue(g.vanishes_at(triple, 1e-8))


if __name__ == "__main__":
    unittest.main()
