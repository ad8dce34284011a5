import unittest

from verify_system import SECTIONS, route_to_suites, validate_section


class TestRouting(unittest.TestCase):
    def test_route_defaults_to_section3(self):
        self.assertEqual(route_to_suites(None), ["3"])
        self.assertEqual(route_to_suites([]), ["3"])

    def test_route_all(self):
        self.assertEqual(route_to_suites(["all"]), list(SECTIONS))

    def test_route_keeps_section_order(self):
        self.assertEqual(route_to_suites(["8", "2", "5"]), ["2", "5", "8"])

    def test_route_drops_duplicates(self):
        self.assertEqual(route_to_suites(["appendix", "appendix"]), ["appendix"])

    def test_route_unknown_falls_back(self):
        self.assertEqual(route_to_suites(["9"]), ["3"])


class TestValidation(unittest.TestCase):
    def test_unknown_section(self):
        message = validate_section("9")
        self.assertIsNotNone(message)

    def test_known_sections(self):
        for section in (*SECTIONS, "all"):
            self.assertIsNone(validate_section(section))


if __name__ == "__main__":
    unittest.main()
