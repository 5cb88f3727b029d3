import numpy as np
import pytest

from ecswerner.catstates import StateFamily, cat_params, ecs_vector
from ecswerner.qmatrix import SIGMA_Y, density_from_vector, eigvals_hermitian, partial_trace, tensor
from ecswerner.werner import WernerSpec, spectrum_closed, werner_density, wootters_lambdas_closed

A_GRID = np.linspace(0.0, 1.0, 11)
MEAN_PHOTON_GRID = (0.01, 0.1, 0.5, 1.0, 2.0, 5.0)

SYSY = tensor(SIGMA_Y, SIGMA_Y)


def spec(family, a, mp):
    return WernerSpec(family=family, mixing=a, params=cat_params(mp))


def product_spectrum_direct(rho):
    """Test-side oracle: general eigensolver on the raw product rho @ flipped(rho)."""
    flipped = SYSY @ rho.conj() @ SYSY
    vals = np.linalg.eigvals(rho @ flipped)
    assert np.max(np.abs(vals.imag)) < 1e-10
    return np.sort(np.clip(vals.real, 0.0, None))[::-1]


def test_mixing_range_is_validated():
    with pytest.raises(ValueError):
        spec(StateFamily.PSI_PLUS, 1.2, 1.0)
    with pytest.raises(ValueError):
        spec(StateFamily.PSI_PLUS, -0.1, 1.0)


def test_fully_mixed_limit():
    rho = werner_density(spec(StateFamily.PHI_PLUS, 0.0, 0.7))
    assert np.max(np.abs(rho - np.eye(4) / 4.0)) < 1e-15


def test_pure_limit_is_projector():
    s = spec(StateFamily.PSI_MINUS, 1.0, 0.7)
    expected = density_from_vector(ecs_vector(StateFamily.PSI_MINUS, s.params))
    assert np.max(np.abs(werner_density(s) - expected)) < 1e-15


def test_quasi_density_entries():
    a, mp = 0.5, 1.0
    p = cat_params(mp)
    rho = werner_density(spec(StateFamily.PSI_PLUS, a, mp))
    d1 = 0.25 + (a / 4.0) * (p.n_plus**2 / p.N_plus**4 - 1.0)
    d4 = 0.25 + (a / 4.0) * (p.n_plus**2 / p.N_minus**4 - 1.0)
    r = a * p.n_plus**2 / (4.0 * p.N_plus**2 * p.N_minus**2)
    expected = np.diag([d1, (1 - a) / 4.0, (1 - a) / 4.0, d4]).astype(complex)
    expected[0, 3] = expected[3, 0] = r
    assert np.max(np.abs(rho - expected)) < 1e-14


def test_quasi_density_spectrum_example():
    vals = eigvals_hermitian(werner_density(spec(StateFamily.PSI_PLUS, 0.5, 1.0)))
    assert np.max(np.abs(vals - np.array([0.625, 0.125, 0.125, 0.125]))) < 1e-12


def test_spectrum_closed_pure_singlet():
    spectra = spectrum_closed(spec(StateFamily.PSI_MINUS, 1.0, 1.0))
    assert np.allclose(spectra.joint, [1.0, 0.0, 0.0, 0.0])
    assert np.allclose(spectra.reduced_y, [0.5, 0.5])


def test_spectrum_closed_reduced_sums_to_one_at_pure_quasi():
    s = spec(StateFamily.PSI_PLUS, 1.0, 1.0)
    p = s.params
    reduced = spectrum_closed(s).reduced_y
    assert abs(reduced.sum() - 1.0) < 1e-12
    expected = sorted(
        [p.n_plus**2 / (4.0 * p.N_plus**4), p.n_plus**2 / (4.0 * p.N_minus**4)], reverse=True
    )
    assert np.max(np.abs(reduced - expected)) < 1e-14


@pytest.mark.parametrize("family", list(StateFamily))
def test_spectra_closed_vs_numeric_on_grid(family):
    for mp in MEAN_PHOTON_GRID:
        p = cat_params(mp)
        for a in A_GRID:
            s = WernerSpec(family, float(a), p)
            rho = werner_density(s)
            closed = spectrum_closed(s)
            assert np.max(np.abs(closed.joint - eigvals_hermitian(rho))) < 1e-10
            assert np.max(np.abs(closed.reduced_y - eigvals_hermitian(partial_trace(rho, "Y")))) < 1e-10


def test_lambdas_fully_mixed():
    for family in StateFamily:
        lams = wootters_lambdas_closed(spec(family, 0.0, 0.3))
        assert np.allclose(lams, [0.25, 0.25, 0.25, 0.25])


def test_lambdas_pure_singlet():
    lams = wootters_lambdas_closed(spec(StateFamily.PSI_MINUS, 1.0, 0.3))
    assert np.allclose(lams, [1.0, 0.0, 0.0, 0.0])


@pytest.mark.parametrize("family", list(StateFamily))
def test_lambdas_squared_vs_direct_oracle(family):
    # compare at the product-spectrum level: the direct route loses absolute
    # accuracy under sqrt near rank deficiency, the spectra themselves do not
    for mp in MEAN_PHOTON_GRID:
        p = cat_params(mp)
        for a in A_GRID:
            s = WernerSpec(family, float(a), p)
            closed_sq = np.sort(wootters_lambdas_closed(s) ** 2)[::-1]
            assert np.max(np.abs(closed_sq - product_spectrum_direct(werner_density(s)))) < 1e-10


@pytest.mark.parametrize("family", list(StateFamily))
def test_lambdas_closed_vs_numeric_route(family):
    from ecswerner.entanglement import spin_flip
    from ecswerner.qmatrix import eigvals_general_product

    for mp in MEAN_PHOTON_GRID:
        p = cat_params(mp)
        for a in A_GRID:
            s = WernerSpec(family, float(a), p)
            rho = werner_density(s)
            numeric = np.sqrt(eigvals_general_product(rho, spin_flip(rho)))
            assert np.max(np.abs(numeric - wootters_lambdas_closed(s))) < 1e-9


def test_density_spectrum_bounds_on_grid():
    for family in StateFamily:
        for mp in MEAN_PHOTON_GRID:
            for a in A_GRID:
                vals = eigvals_hermitian(werner_density(spec(family, float(a), mp)))
                assert vals[-1] >= -1e-12
                assert vals[0] <= 1.0 + 1e-10
                assert abs(vals.sum() - 1.0) < 1e-10


def test_plus_families_share_spectra():
    for mp in MEAN_PHOTON_GRID:
        p = cat_params(mp)
        for a in (0.2, 0.5, 0.9):
            s_psi = WernerSpec(StateFamily.PSI_PLUS, a, p)
            s_phi = WernerSpec(StateFamily.PHI_PLUS, a, p)
            assert np.allclose(spectrum_closed(s_psi).joint, spectrum_closed(s_phi).joint)
            assert np.allclose(wootters_lambdas_closed(s_psi), wootters_lambdas_closed(s_phi))
            assert np.allclose(
                eigvals_hermitian(werner_density(s_psi)), eigvals_hermitian(werner_density(s_phi))
            )


def test_minus_families_share_spectra():
    p = cat_params(0.8)
    for a in (0.3, 0.7):
        s_psi = WernerSpec(StateFamily.PSI_MINUS, a, p)
        s_phi = WernerSpec(StateFamily.PHI_MINUS, a, p)
        assert np.allclose(
            eigvals_hermitian(werner_density(s_psi)), eigvals_hermitian(werner_density(s_phi))
        )
        assert np.allclose(wootters_lambdas_closed(s_psi), wootters_lambdas_closed(s_phi))
