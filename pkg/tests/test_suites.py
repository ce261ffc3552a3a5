from csjack.suites import (
    SUITES,
    run_suite,
    suite_commutators,
    suite_hamiltonian,
    suite_spectrum_consistency,
)


def test_suite_names():
    assert set(SUITES) == {
        "commutators",
        "rodrigues-vs-oracle",
        "annihilation",
        "orthogonality",
        "spectrum-consistency",
    }


def test_commutators_small():
    results = suite_commutators(max_degree=3, max_nvars=3, count=30)
    assert all(r.passed for r in results), [r.detail for r in results if not r.passed]
    names = [r.name for r in results]
    assert "dunkl-commute" in names
    assert "shifted-family-swap" in names
    # corpus meets the requested size
    assert sum(r.cases for r in results) >= 30


def test_commutators_deterministic():
    a = suite_commutators(max_degree=3, max_nvars=3, count=18, seed=7)
    b = suite_commutators(max_degree=3, max_nvars=3, count=18, seed=7)
    assert [(r.name, r.passed, r.detail) for r in a] == [
        (r.name, r.passed, r.detail) for r in b
    ]


def test_hamiltonian_small():
    results = suite_hamiltonian(max_degree=3, max_nvars=3, count=12)
    assert [r.name for r in results] == [
        "hamiltonian-vs-squares",
        "hamiltonian-vs-shifted-family",
        "charge-commutation-2-3",
    ]
    assert all(r.passed for r in results)


def test_spectrum_consistency_small():
    results = suite_spectrum_consistency(count=10)
    assert all(r.passed for r in results)


def test_run_suite_all_matches_threads():
    seq = run_suite("all", 3, 2, threads=1)
    par = run_suite("all", 3, 2, threads=3)
    assert [(r.name, r.passed) for r in seq] == [(r.name, r.passed) for r in par]
    assert all(r.passed for r in seq)
