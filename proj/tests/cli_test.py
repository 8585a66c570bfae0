"""End-to-end checks of the ihd command line tool.

Usage: cli_test.py path/to/ihd path/to/samples
"""

import json
import os
import subprocess
import sys
import tempfile
import unittest
import xml.dom.minidom

IHD = None
SAMPLES = None


def run(*args):
    return subprocess.run([IHD, *args], capture_output=True, text=True, timeout=120)


class CliTest(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def path(self, name):
        return os.path.join(self.tmp.name, name)

    def sample(self, name):
        return os.path.join(SAMPLES, name)

    def write(self, name, doc):
        with open(self.path(name), "w") as f:
            f.write(doc if isinstance(doc, str) else json.dumps(doc))
        return self.path(name)

    def compute(self, *args):
        p = run("compute", *args)
        self.assertEqual(p.returncode, 0, p.stderr)
        return json.loads(p.stdout)

    def test_hmax_two_discs(self):
        r = self.compute(self.sample("hmax_two_discs.json"), "--quantity", "hmax")
        self.assertAlmostEqual(r["value"], 6.0, places=12)
        self.assertEqual(r["guarantee"], {"kind": "exact", "factor": 1.0})
        self.assertEqual(r["algorithm"], "upper-bound")
        self.assertEqual(r["witness"]["p"], [[-1.0, 0.0]])

    def test_planted_is_exact(self):
        r = self.compute(self.sample("planted_005.json"))
        self.assertAlmostEqual(r["value"], 0.05, places=9)
        self.assertEqual(r["guarantee"]["kind"], "exact")
        self.assertEqual(r["algorithm"], "independent-sets")

    def test_place_together(self):
        r = self.compute(self.sample("place_together.json"))
        self.assertEqual(r["algorithm"], "place-together")
        self.assertGreaterEqual(r["value"], 0.0)

    def test_centre_points_without_bound_has_null_factor(self):
        r = self.compute(self.sample("planted_005.json"), "--algorithm", "centre-points")
        self.assertIsNone(r["guarantee"]["factor"])

    def test_output_file(self):
        p = run("compute", self.sample("planted_005.json"), "-o", self.path("r.json"))
        self.assertEqual(p.returncode, 0, p.stderr)
        self.assertEqual(p.stdout, "")
        with open(self.path("r.json")) as f:
            self.assertIn("value", json.load(f))
        self.assertFalse(os.path.exists(self.path("r.json.tmp")))

    def test_malformed_input_exits_2(self):
        self.assertEqual(run("compute", self.write("bad.json", "{ not json")).returncode, 2)
        bad_disc = {"p": {"kind": "precise", "points": [[0, 0]]}, "q": {"kind": "imprecise", "discs": [[0, 0, -1]]}}
        self.assertEqual(run("compute", self.write("neg.json", bad_disc)).returncode, 2)
        self.assertEqual(run("compute", self.path("missing.json")).returncode, 2)
        self.assertEqual(run("compute").returncode, 2)
        self.assertEqual(run("compute", self.sample("planted_005.json"), "--quantity", "hmid").returncode, 2)

    def test_unsupported_exits_3(self):
        p = run("compute", self.sample("both_imprecise.json"))
        self.assertEqual(p.returncode, 3)
        self.assertIn("unsupported", p.stderr)
        self.assertEqual(run("compute", self.sample("hmax_two_discs.json"), "--quantity", "hmax",
                             "--algorithm", "grown-discs").returncode, 3)

    def test_budget_exceeded_exits_4(self):
        doc = {"p": {"kind": "precise", "points": [[i, 0] for i in range(8)]},
               "q": {"kind": "imprecise", "discs": [[i, 1, 3] for i in range(5)]}}
        self.assertEqual(run("oracle", self.write("big.json", doc), "--step", "0.01").returncode, 4)

    def test_oracle_small_instance(self):
        p = run("oracle", self.sample("planted_005.json"))
        self.assertEqual(p.returncode, 0, p.stderr)
        o = json.loads(p.stdout)
        self.assertAlmostEqual(o["exact"], 0.05, places=9)
        p = run("oracle", self.sample("hmax_two_discs.json"), "--quantity", "hmax")
        o = json.loads(p.stdout)
        self.assertLessEqual(o["lower"], 6.0)
        self.assertGreaterEqual(o["upper"], 6.0)

    def test_generators_are_deterministic(self):
        for args in (["random", "--m", "9", "--n", "4", "--seed", "5", "--disjoint"],
                     ["planted", "--m", "10", "--n", "4", "--seed", "3"],
                     ["gadget", "--template", "pair"]):
            a, b = run("gen", *args), run("gen", *args)
            self.assertEqual(a.returncode, 0, a.stderr)
            self.assertEqual(a.stdout, b.stdout)
        self.assertNotEqual(run("gen", "random", "--seed", "1").stdout, run("gen", "random", "--seed", "2").stdout)

    def test_planted_generator_value_recovered(self):
        for seed in range(1, 6):
            p = run("gen", "planted", "--m", "10", "--n", "4", "--seed", str(seed), "-o", self.path("g.json"))
            self.assertEqual(p.returncode, 0, p.stderr)
            with open(self.path("g.json")) as f:
                expected = json.load(f)["expected_hmin"]
            r = self.compute(self.path("g.json"))
            self.assertAlmostEqual(r["value"], expected, places=9)

    def test_gadget_generator(self):
        p = run("gen", "gadget", "--template", "single", "--epsilon", "0.5")
        self.assertEqual(p.returncode, 0, p.stderr)
        doc = json.loads(p.stdout)
        self.assertEqual(doc["epsilon"], 0.5)
        self.assertTrue(all(d[2] == 1.25 for d in doc["q"]["discs"]))

    def test_render_is_well_formed(self):
        res = run("compute", self.sample("hmax_two_discs.json"), "--quantity", "hmax", "-o", self.path("r.json"))
        self.assertEqual(res.returncode, 0, res.stderr)
        p = run("render", self.sample("hmax_two_discs.json"), "--result", self.path("r.json"))
        self.assertEqual(p.returncode, 0, p.stderr)
        dom = xml.dom.minidom.parseString(p.stdout)
        self.assertEqual(dom.documentElement.tagName, "svg")
        arrows = [e for e in dom.getElementsByTagName("line") if e.getAttribute("class") == "arrow"]
        self.assertEqual(len(arrows), 1)
        self.assertEqual(p.stdout, run("render", self.sample("hmax_two_discs.json"), "--result",
                                       self.path("r.json")).stdout)
        bare = run("render", self.sample("planted_005.json"))
        dom = xml.dom.minidom.parseString(bare.stdout)
        self.assertEqual([e for e in dom.getElementsByTagName("line") if e.getAttribute("class") == "arrow"], [])


if __name__ == "__main__":
    IHD, SAMPLES = sys.argv[1], sys.argv[2]
    unittest.main(argv=sys.argv[:1], verbosity=2)
