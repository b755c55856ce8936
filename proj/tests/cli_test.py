"""Exit codes and output of the baba command-line tool.

usage: cli_test.py <baba executable> <data directory>
"""

import json
import pathlib
import subprocess
import sys
import tempfile
import unittest

BABA = None
DATA = None


def run(*args):
    return subprocess.run([BABA, *map(str, args)], capture_output=True, text=True)


class Commands(unittest.TestCase):
    def test_aggregate_strict_majority(self):
        r = run("aggregate", DATA / "s1.json", "--rule", "strict-majority")
        self.assertEqual(r.returncode, 0)
        self.assertEqual(r.stdout, "~A <- B\n")

    def test_aggregate_json(self):
        r = run("--format", "json", "aggregate", DATA / "s1.json", "--rule", "oligarchy:1,3")
        self.assertEqual(r.returncode, 0)
        self.assertEqual(json.loads(r.stdout), {"rule": "oligarchy:1,3", "rules": [["~A", "B"]]})

    def test_aggregate_unanimity_is_empty(self):
        r = run("aggregate", DATA / "s1.json", "--rule", "unanimity")
        self.assertEqual((r.returncode, r.stdout), (0, "{}\n"))

    def test_preserve_exit_codes(self):
        fig1 = DATA / "fig1.json"
        prop = "extension:admissible:A,B,C"
        self.assertEqual(run("preserve", fig1, "--rule", "quota:2", "--property", prop).returncode, 2)
        self.assertEqual(run("preserve", fig1, "--rule", "nomination", "--property", prop).returncode, 0)
        na = run("preserve", fig1, "--rule", "nomination", "--property", "extension:preferred:A,B,D")
        self.assertEqual(na.returncode, 3)
        self.assertTrue(na.stdout.startswith("NotApplicable"))

    def test_preserve_json(self):
        r = run("--format", "json", "preserve", DATA / "fig1.json", "--rule", "quota:2",
                "--property", "extension:admissible:A,B,C")
        out = json.loads(r.stdout)
        self.assertEqual(out["verdict"], "Violated")
        self.assertEqual(out["property"], "extension:admissible:A,B,C")

    def test_semantics_without_rules(self):
        r = run("semantics", DATA / "empty.json", "--semantics", "preferred")
        self.assertEqual((r.returncode, r.stdout), (0, "{A, B, C}\n"))

    def test_semantics_of_a_framework(self):
        r = run("semantics", DATA / "brexit_deductive.json", "--semantics", "preferred")
        self.assertEqual((r.returncode, r.stdout), (0, "{B, E}\n"))

    def test_semantics_of_an_aggregate(self):
        r = run("--format", "json", "semantics", DATA / "fig2.json", "--semantics", "set-stable",
                "--rule", "quota:2")
        self.assertEqual(r.returncode, 0)
        self.assertEqual(json.loads(r.stdout)["extensions"], [["A", "B", "C", "D"]])

    def test_output_is_deterministic(self):
        args = ("--format", "json", "verify", "--suite", "theorems", "--budget", "50", "--seed", "3")
        self.assertEqual(run(*args).stdout, run(*args).stdout)

    def test_verify_scenario_suite(self):
        r = run("verify", "--suite", "paper")
        self.assertEqual(r.returncode, 0, r.stdout)
        self.assertIn("all checks passed", r.stdout)


class Errors(unittest.TestCase):
    def write(self, text):
        f = tempfile.NamedTemporaryFile("w", suffix=".json", delete=False)
        f.write(text)
        f.close()
        self.addCleanup(pathlib.Path(f.name).unlink)
        return f.name

    def test_usage_errors(self):
        self.assertEqual(run().returncode, 64)
        self.assertEqual(run("frobnicate").returncode, 64)
        self.assertEqual(run("aggregate", DATA / "s1.json").returncode, 64)
        self.assertEqual(run("aggregate", DATA / "s1.json", "--rule", "quota:9").returncode, 64)
        self.assertEqual(run("aggregate", DATA / "s1.json", "--rule", "plurality").returncode, 64)
        self.assertEqual(run("semantics", DATA / "empty.json", "--semantics", "grounded").returncode, 64)
        self.assertEqual(run("semantics", DATA / "s1.json", "--semantics", "preferred").returncode, 64)
        self.assertEqual(run("aggregate", DATA / "empty.json", "--rule", "nomination").returncode, 64)
        bad_prop = run("preserve", DATA / "fig1.json", "--rule", "nomination", "--property", "closed:Z")
        self.assertEqual(bad_prop.returncode, 64)

    def test_parse_error_is_positioned(self):
        path = self.write('{\n  "assumptions": ["A"],\n  "agents": [{"rules": [}]\n}\n')
        r = run("semantics", path, "--semantics", "preferred")
        self.assertEqual(r.returncode, 65)
        self.assertTrue(r.stderr.startswith(path + ":3:"), r.stderr)

    def test_unknown_key(self):
        path = self.write('{"assumptions": ["A"], "agents": [{"rules": []}], "colour": 1}')
        self.assertEqual(run("semantics", path, "--semantics", "preferred").returncode, 65)

    def test_empty_agents(self):
        path = self.write('{"assumptions": ["A"], "agents": []}')
        self.assertEqual(run("semantics", path, "--semantics", "preferred").returncode, 65)

    def test_strict_self_attack(self):
        path = self.write('{"assumptions": ["A", "B"], "agents": [{"rules": [["~A", "A"]]}]}')
        self.assertEqual(run("semantics", path, "--semantics", "preferred").returncode, 0)
        r = run("--strict", "semantics", path, "--semantics", "preferred")
        self.assertEqual(r.returncode, 65)
        self.assertIn("self-attack", r.stderr)

    def test_missing_file(self):
        self.assertEqual(run("semantics", DATA / "nope.json", "--semantics", "preferred").returncode, 66)


if __name__ == "__main__":
    BABA = sys.argv[1]
    DATA = pathlib.Path(sys.argv[2])
    unittest.main(argv=sys.argv[:1], verbosity=1)
