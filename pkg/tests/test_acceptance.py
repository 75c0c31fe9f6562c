"""Exit criteria for the library and CLI, one test per criterion.

Each test records a PASS/FAIL line that is printed in the pytest summary.
"""

import itertools
import math
import subprocess
import sys
import time
from contextlib import contextmanager
from decimal import Decimal

import pytest

from conftest import ACCEPTANCE
from nsdisc import approx, octagon, variational
from nsdisc.approx import ApproximationMethod as M
from nsdisc.ns_core import distance_map, disc_point_set, generate_disc, ns_distance
from nsdisc.octagon import DescriptorKind
from nsdisc.verify import random_sequences

S2 = math.sqrt(2)


@contextmanager
def criterion(label):
    start = time.perf_counter()
    try:
        yield
    except BaseException as e:
        ACCEPTANCE.append(f"FAIL {label}: {type(e).__name__}: {str(e).splitlines()[0] if str(e) else ''}")
        raise
    ACCEPTANCE.append(f"PASS {label} ({time.perf_counter() - start:.2f}s)")


def nsdisc(*args):
    res = subprocess.run([sys.executable, "-m", "nsdisc", *args], capture_output=True)
    return res.returncode, res.stdout


TABLE3 = [
    ("Perimeter based", 40, 28, 20, 39.5980),
    ("Area based", 40, 29, 20, 41.0122),
    ("Inscribed circle", 42, 30, 21, 42.4264),
    ("Covering circle", 38, 27, 19, 38.1838),
    ("Least squares", 40, 29, 20, 41.0122),
    ("Least distance", 42, 29, 21, 41.0122),
]


def test_1_table3_reproduction():
    with criterion("1 Table 3 reproduction (r=50.7, inner)"):
        start = time.perf_counter()
        code, out = nsdisc("approximate", "--radius", "50.7", "--descriptor", "inner", "--method", "all")
        elapsed = time.perf_counter() - start
        assert code == 0
        rows = out.decode().splitlines()[2:]
        assert len(rows) == 6
        for row, (label, a, k1, k2, b) in zip(rows, TABLE3):
            assert row.startswith(label)
            _, a_s, k1_s, k2_s, b_s, _ = row[len(label):].split()[-6:]
            assert (int(a_s), int(k1_s), int(k2_s)) == (a, k1, k2)
            assert abs(float(b_s) - b) <= 5e-5
        for (label, a, k1, k2, b), m in zip(TABLE3, approx.METHODS):
            res = approx.best_sequence(m, "inner", 50.7)
            assert abs(res.realized.b - b) <= 5e-5
        assert elapsed < 1.0, f"took {elapsed:.2f}s"


def test_2_table4_coefficients():
    printed = [0.785398, 0.806626, 0.828427, 0.765367, 0.806852, 0.812509]
    with criterion("2 Table 4 coefficients within 5e-7"):
        for m, v in zip(approx.METHODS, printed):
            assert abs(approx.ideal_sidelength(m, 1.0) - v) <= 5e-7, m


TABLE5 = {
    "pixel": [
        ("0.785398", "+1", "0.392699", "-0.5"),
        ("0.806626", "+1", "0.403313", "-0.5"),
        ("0.828427", "+1", "0.414214", "-0.5"),
        ("0.765367", "+1", "0.382684", "-0.5"),
        ("0.806852", "+1", "0.403426", "-0.5"),
        ("0.812509", "+1", "0.406255", "-0.5"),
    ],
    "inner": [
        ("0.555360", "", "0.392699", ""),
        ("0.570371", "", "0.403313", ""),
        ("0.585786", "", "0.414214", ""),
        ("0.541196", "", "0.382684", ""),
        ("0.570531", "", "0.403426", ""),
        ("0.574531", "", "0.406255", ""),
    ],
    "outer": [
        ("0.555360", "", "0.392699", "-0.5"),
        ("0.570371", "", "0.403313", "-0.5"),
        ("0.585786", "", "0.414214", "-0.5"),
        ("0.541196", "", "0.382684", "-0.5"),
        ("0.570531", "", "0.403426", "-0.5"),
        ("0.574531", "", "0.406255", "-0.5"),
    ],
}


def test_3_table5_regeneration():
    with criterion("3 Table 5 regeneration, 18 entries to 6 d.p. with offsets"):
        n = 0
        for kind, rows in TABLE5.items():
            for m, (c1, o1, c2, o2) in zip(approx.METHODS, rows):
                k1c, k1o, k2c, k2o = approx.tabulated_entry(m, kind)
                assert (k1c, k2c) == (Decimal(c1), Decimal(c2)), (m, kind)
                assert k1o == float(o1 or 0) and k2o == float(o2 or 0), (m, kind)
                n += 1
        assert n == 18
        code, out = nsdisc("tables", "--which", "5")
        text = out.decode()
        for kind, rows in TABLE5.items():
            for c1, o1, c2, o2 in rows:
                assert f"[{c1}r{o1}] | [{c2}r{o2}]" in text


def test_4_variational_oracle():
    with criterion("4 variational minima match closed forms within 1e-4"):
        start = time.perf_counter()
        for r in (1.0, 50.7):
            assert abs(variational.minimize_objective("least_squares", r) / r - 0.806852) <= 1e-4
            assert abs(variational.minimize_objective("least_distance", r) / r - 0.812509) <= 1e-4
        assert time.perf_counter() - start < 5.0


def test_5_kappa_analysis():
    with criterion("5 kappa minimum at sqrt2-1 within 1e-6"):
        c = octagon.optimal_c()
        assert abs(c - (S2 - 1)) <= 1e-6
        target = 32 * (S2 - 1)
        assert abs(target - 13.254834) <= 1e-6
        assert abs(octagon.kappa_of_c(c) - target) <= 1e-6
        unit = octagon.isoperimetric_ratio(8.0, 2 * (1 + S2))
        assert abs(unit - octagon.kappa_of_c(c)) <= 1e-6
        assert octagon.kappa_of_c(0.0) == 16
        assert octagon.kappa_of_c(1.0) == 16


def test_6_distance_formula_equivalence():
    with criterion("6 closed-form distance == BFS, |dx|,|dy|<=12, 200 sequences"):
        start = time.perf_counter()
        n = 12
        mismatches = 0
        seqs = random_sequences(200, seed=7)
        assert {B.tail for B in seqs} == {"periodic", "constant"}
        for B in seqs:
            ref = distance_map(B, n)
            for x, y in itertools.product(range(-n, n + 1), repeat=2):
                mismatches += ns_distance((0, 0), (x, y), B) != ref[y + n, x + n]
        assert mismatches == 0
        assert time.perf_counter() - start < 30


def test_7_pixel_count_oracle():
    with criterion("7 disc sizes equal pixel-area formula, 1<=k1<=8, 0<=k2<=8"):
        mismatches = 0
        for k1 in range(1, 9):
            for k2 in range(0, 9):
                size = len(generate_disc((0, 0), k1 + k2, approx.canonical_sequence(k1, k2)))
                mismatches += size != octagon.describe(k1, k2, "pixel").A
        assert mismatches == 0
        from nsdisc.ns_core import NeighbourhoodSequence as NS

        assert len(generate_disc((0, 0), 4, NS.periodic(1, 1, 2, 1))) == 57
        assert len(generate_disc((0, 0), 4, NS.periodic(2, 2, 2, 1))) == 77


def test_8_permutation_invariance():
    with criterion("8 permuted prefixes (length <= 6) give identical disc supports"):
        mismatches = 0
        for k in range(1, 7):
            for values in itertools.product((1, 2), repeat=k):
                base = disc_point_set(k, values)
                for perm in set(itertools.permutations(values)):
                    mismatches += disc_point_set(k, perm) != base
        assert mismatches == 0


GOLDEN_COMMANDS = [
    ("verify", "--level", "full"),
    ("approximate", "--radius", "50.7", "--descriptor", "inner", "--method", "all"),
    ("approximate", "--radius", "50.7", "--method", "inscribed", "--format", "json"),
    ("approximate", "--radius", "50.7", "--descriptor", "all", "--format", "csv"),
    ("distance", "--from", "0,0", "--to", "4,3", "--sequence", "1,2", "--periodic"),
    ("disc", "--sequence", "1,1,2,1", "--steps", "4", "--ascii"),
    ("disc", "--k1", "30", "--k2", "21", "--steps", "51", "--circle", "50.7"),
    ("tables", "--which", "1"),
    ("tables", "--which", "2"),
    ("tables", "--which", "4"),
    ("tables", "--which", "5", "--format", "csv"),
    ("sweep", "--rmin", "1", "--rmax", "60", "--step", "0.1"),
]


def test_9_determinism():
    with criterion("9 repeated runs are byte-identical"):
        for cmd in GOLDEN_COMMANDS:
            first = nsdisc(*cmd)
            second = nsdisc(*cmd)
            assert first[0] == 0, cmd
            assert first == second, cmd
