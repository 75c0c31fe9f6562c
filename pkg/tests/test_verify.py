import time

import pytest

from nsdisc import verify


def test_quick_level_is_fast_and_passes():
    start = time.perf_counter()
    results = verify.run_checks("quick")
    assert time.perf_counter() - start < 10
    assert all(r.passed for r in results)


def test_full_level_covers_variational_and_kappa():
    results = {r.name: r for r in verify.run_checks("full")}
    assert results["variational_minima"].passed
    assert results["variational_minima"].deviation <= 1e-4
    assert results["kappa_minimum"].deviation <= 1e-6
    assert all(r.passed for r in results.values())


def test_random_sequences_reproducible():
    assert verify.random_sequences(20) == verify.random_sequences(20)
    assert verify.random_sequences(20, seed=1) != verify.random_sequences(20, seed=2)


def test_unknown_level():
    with pytest.raises(ValueError):
        verify.run_checks("medium")


def test_check_line_format():
    line = verify.CheckResult("x", False, 0.5, "n=3").line()
    assert line == "FAIL x max_deviation=5.000e-01 n=3"
