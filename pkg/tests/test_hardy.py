import numpy as np
import pytest

from plancherel.eigenspace import EigenLabel
from plancherel.errors import NotEigenfunctionError, ParityError, WeightError
from plancherel.grid import CriticalLineFunction
from plancherel.hardy_titchmarsh import (
    PsiFunction,
    analyze_eigenfunction,
    eigen_residual,
    gamma_kernel,
    parity_defect,
    parseval_psi_check,
    synthesize_eigenfunction,
)
from plancherel.special import gamma
from plancherel.testsets import random_psi, wave_packets

LABELS = list(EigenLabel)


def rel(a, b):
    return (a - b).norm() / b.norm()


def test_constant_psi_gives_gaussian(grid, log_grid):
    psi = PsiFunction.sample(lambda eta: np.full(eta.shape, 2**-0.75), "even", log_grid)
    x = synthesize_eigenfunction(psi, EigenLabel.ONE, grid)
    gauss = grid.sample(lambda t: np.exp(-0.5 * t * t))
    assert rel(x, gauss) < 1e-6


def test_constant_chain_at_eta_zero():
    # Mellin of exp(-t^2/2) at zeta = 1/2 is 2^(-3/4) Gamma(1/4)
    assert gamma_kernel(np.array([0.0]), 0.25)[0] == pytest.approx(gamma(0.25), rel=1e-14)


def test_declared_parity_is_checked(log_grid):
    with pytest.raises(ParityError):
        PsiFunction.sample(lambda eta: eta * np.exp(-(eta**2)), "even", log_grid)


def test_parity_must_match_eigenvalue(grid, log_grid):
    psi = PsiFunction.sample(lambda eta: eta**2 * np.exp(-(eta**2)), "even", log_grid)
    with pytest.raises(ParityError):
        synthesize_eigenfunction(psi, EigenLabel.MINUS_ONE, grid)


def test_unknown_parity_name(log_grid):
    with pytest.raises(ValueError):
        PsiFunction.sample(lambda eta: np.exp(-(eta**2)), "neither", log_grid)


def test_undecayed_weighted_psi(grid, log_grid):
    psi = PsiFunction.sample(lambda eta: np.cosh(0.8 * eta), "even", log_grid)
    with pytest.raises(WeightError):
        synthesize_eigenfunction(psi, EigenLabel.ONE, grid)


def test_divergent_weighted_psi(grid, log_grid):
    # finite samples whose weighted square overflows
    psi = PsiFunction.sample(lambda eta: np.exp(0.012 * eta**2), "even", log_grid)
    with pytest.raises(WeightError):
        synthesize_eigenfunction(psi, EigenLabel.ONE, grid)


def test_non_finite_psi(log_grid):
    with np.errstate(over="ignore"), pytest.raises(WeightError):
        PsiFunction.sample(lambda eta: np.exp(eta**2), "even", log_grid)


def test_analyze_rejects_non_eigenfunction(grid, log_grid):
    x = wave_packets(grid, 1, seed=1)[0]
    with pytest.raises(NotEigenfunctionError) as info:
        analyze_eigenfunction(x, EigenLabel.ONE, log_grid)
    assert info.value.residual > 1e-4


@pytest.mark.parametrize("label", LABELS, ids=str)
def test_random_psi_gives_eigenfunctions(grid, log_grid, label):
    for psi in random_psi(log_grid, label.psi_parity, 3, seed=40 + label.power):
        x = synthesize_eigenfunction(psi, label, grid)
        assert eigen_residual(x, label) < 1e-5
        if label.parity == "even":
            assert np.array_equal(x.values, x.values[::-1])
        else:
            assert np.array_equal(x.values, -x.values[::-1])


@pytest.mark.parametrize("label", LABELS, ids=str)
def test_analyze_inverts_synthesize(grid, log_grid, label):
    psi = random_psi(log_grid, label.psi_parity, 1, seed=70 + label.power)[0]
    x = synthesize_eigenfunction(psi, label, grid)
    back = analyze_eigenfunction(x, label, log_grid)
    assert back.parity == label.psi_parity
    assert parity_defect(back.values, back.parity) < 1e-6
    window = np.abs(psi.eta) <= back.stable_eta
    err = np.linalg.norm((back.values - psi.values)[window]) / np.linalg.norm(psi.values[window])
    assert err < 1e-5


def test_ground_state_has_flat_psi(basis, log_grid):
    psi = analyze_eigenfunction(basis[0], EigenLabel.ONE, log_grid)
    m = np.abs(psi.eta) <= 10
    v = psi.values[m]
    centre = psi.values[psi.eta == 0][0]
    assert np.max(np.abs(v - centre)) < 1e-5 * abs(centre)
    # e_0 = pi^(-1/4) exp(-t^2/2), so the constant is pi^(-1/4) 2^(-3/4)
    assert centre == pytest.approx(np.pi**-0.25 * 2**-0.75, rel=1e-8)


def test_stable_window_contains_fifteen(basis, log_grid):
    for n in (0, 1):
        psi = analyze_eigenfunction(basis[n], EigenLabel.of_index(n), log_grid)
        assert psi.truncated
        assert psi.stable_eta >= 15
        assert np.all(psi.values[np.abs(psi.eta) > psi.stable_eta] == 0)


@pytest.mark.parametrize("n", [0, 1, 4, 5])
def test_hermite_round_trip(basis, log_grid, n):
    label = EigenLabel.of_index(n)
    psi = analyze_eigenfunction(basis[n], label, log_grid)
    x = synthesize_eigenfunction(psi, label, basis.grid)
    # e_4 loses most to the zeroed samples beyond the stable window
    assert rel(x, basis[n]) < 1e-5


def test_fourth_hermite_psi_is_not_constant(basis, log_grid):
    psi = analyze_eigenfunction(basis[4], EigenLabel.ONE, log_grid)
    m = np.abs(psi.eta) <= 10
    assert np.ptp(np.abs(psi.values[m])) > 0.1 * np.max(np.abs(psi.values[m]))


@pytest.mark.parametrize("indices", [(0, 4, 8), (1, 5, 9), (2, 6), (3, 7)])
def test_parseval_constant_within_eigenspace(basis, log_grid, indices):
    ratios = []
    for n in indices:
        label = EigenLabel.of_index(n)
        psi = analyze_eigenfunction(basis[n], label, log_grid)
        ratios.append(parseval_psi_check(basis[n], psi, label).ratio)
    assert max(ratios) - min(ratios) < 1e-4 * ratios[0]
    assert ratios[0] == pytest.approx(1 / (2 * np.pi), rel=1e-4)


def test_parseval_report_fields(basis, log_grid):
    psi = analyze_eigenfunction(basis[1], EigenLabel.I, log_grid)
    r = parseval_psi_check(basis[1], psi, EigenLabel.I)
    assert r.gamma_shift == 0.75
    assert r.half_line_norm2 == pytest.approx(0.5, rel=1e-12)
    assert r.ratio == pytest.approx(r.half_line_norm2 / r.weighted_psi_norm2)


def test_psi_defaults_without_analysis(log_grid):
    crit = CriticalLineFunction(log_grid.eta_max, np.exp(-(log_grid.eta**2) / 50))
    psi = PsiFunction(crit, "even")
    assert psi.stable_eta is None and not psi.truncated
