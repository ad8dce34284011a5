import os
import unittest
from unittest.mock import patch

from app.core.config import get_settings, load_settings, reset_settings

KEYS = ("CHARVAR_SEED", "CHARVAR_TOL", "CHARVAR_WINDOW", "CHARVAR_WORKERS", "CHARVAR_SAMPLES", "CHARVAR_LOG_LEVEL", "LOG_LEVEL")


class TestSettings(unittest.TestCase):
    def setUp(self):
        reset_settings()

    def tearDown(self):
        reset_settings()

    def test_defaults(self):
        with patch.dict(os.environ, {k: "" for k in KEYS}):
            s = load_settings()
        self.assertEqual((s.seed, s.tolerance, s.window, s.workers, s.samples, s.log_level), (0, 1e-8, 2, 4, 100, "WARNING"))

    def test_env_overrides(self):
        env = {
            "CHARVAR_SEED": "7",
            "CHARVAR_TOL": "1e-6",
            "CHARVAR_WINDOW": "0",
            "CHARVAR_WORKERS": "2",
            "CHARVAR_SAMPLES": "5",
            "CHARVAR_LOG_LEVEL": "debug",
            "LOG_LEVEL": "",
        }
        with patch.dict(os.environ, env):
            s = load_settings()
        self.assertEqual((s.seed, s.tolerance, s.window, s.workers, s.samples, s.log_level), (7, 1e-6, 0, 2, 5, "DEBUG"))

    def test_malformed_values_fall_back(self):
        env = {k: "" for k in KEYS}
        env.update({"CHARVAR_SEED": "abc", "CHARVAR_WORKERS": "0", "CHARVAR_TOL": "-", "CHARVAR_LOG_LEVEL": "loud"})
        with patch.dict(os.environ, env):
            s = load_settings()
        self.assertEqual((s.seed, s.workers, s.tolerance, s.log_level), (0, 4, 1e-8, "WARNING"))

    def test_tolerance_is_clamped(self):
        with patch.dict(os.environ, {"CHARVAR_TOL": "5"}):
            self.assertEqual(load_settings().tolerance, 1e-1)

    def test_log_level_alias(self):
        with patch.dict(os.environ, {"CHARVAR_LOG_LEVEL": "", "LOG_LEVEL": "info"}):
            self.assertEqual(load_settings().log_level, "INFO")

    def test_cached_until_reset(self):
        with patch.dict(os.environ, {"CHARVAR_SEED": "3"}):
            first = get_settings()
        with patch.dict(os.environ, {"CHARVAR_SEED": "4"}):
            self.assertIs(get_settings(), first)
            reset_settings()
            self.assertEqual(get_settings().seed, 4)


if __name__ == "__main__":
    unittest.main()
