"""Werner-form mixtures of the entangled-coherent-state families.

rho(a) = (1-a) I/4 + a |v><v| in the orthonormal cat basis.  The psi-/phi-
families reproduce the standard Werner state; psi+/phi+ give its
"quasi" variant whose spectra pick up the cat normalizations.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .catstates import CatParams, StateFamily, ecs_vector
from .qmatrix import density_from_vector


@dataclass(frozen=True)
class WernerSpec:
    """A Werner-form state: family, mixing weight a in [0,1], cat parameters."""

    family: StateFamily
    mixing: float
    params: CatParams

    def __post_init__(self):
        if not 0.0 <= self.mixing <= 1.0:
            raise ValueError(f"mixing parameter must lie in [0, 1], got {self.mixing!r}")


class WernerSpectra(NamedTuple):
    joint: np.ndarray      # 4 eigenvalues of rho, descending
    reduced_y: np.ndarray  # 2 eigenvalues of Tr_X rho, descending


def werner_density(spec):
    """Explicit 4x4 density matrix (1-a) I/4 + a |v><v|."""
    v = ecs_vector(spec.family, spec.params)
    a = spec.mixing
    return (1.0 - a) * np.eye(4, dtype=complex) / 4.0 + a * density_from_vector(v)


def _plus_family_elements(spec):
    """Diagonal corners d1, d4 and off-diagonal corner r of the X-form matrix."""
    a, p = spec.mixing, spec.params
    d1 = (1.0 - a) / 4.0 + a * p.n_plus**2 / (4.0 * p.N_plus**4)
    d4 = (1.0 - a) / 4.0 + a * p.n_plus**2 / (4.0 * p.N_minus**4)
    r = a * p.n_plus**2 / (4.0 * p.N_plus**2 * p.N_minus**2)
    return d1, d4, r


def spectrum_closed(spec):
    """Closed-form joint and reduced-Y spectra.

    The joint spectrum {(1+3a)/4, (1-a)/4 x3} is family independent.  The
    reduced spectrum is {1/2, 1/2} for the maximally entangled families and
    picks up the cat normalizations for psi+/phi+.
    """
    a = spec.mixing
    joint = np.array([(1.0 + 3.0 * a) / 4.0] + [(1.0 - a) / 4.0] * 3)
    if spec.family.maximally_entangled:
        reduced = np.array([0.5, 0.5])
    else:
        p = spec.params
        reduced = np.array(
            [
                (1.0 - a) / 2.0 + a * p.n_plus**2 / (4.0 * p.N_plus**4),
                (1.0 - a) / 2.0 + a * p.n_plus**2 / (4.0 * p.N_minus**4),
            ]
        )
    return WernerSpectra(
        joint=np.sort(joint)[::-1],
        reduced_y=np.sort(reduced)[::-1],
    )


def wootters_lambdas_closed(spec):
    """Closed-form spin-flip eigenvalues lambda_i, sorted descending.

    These are the non-negative square roots of the spectrum of
    rho @ spin_flip(rho).  For psi-/phi- the state is flip invariant and
    the lambdas coincide with the joint spectrum; for psi+/phi+ the outer
    2x2 block contributes the pair sqrt(d1*d4) +- r.
    """
    a = spec.mixing
    if spec.family.maximally_entangled:
        lams = [(1.0 + 3.0 * a) / 4.0] + [(1.0 - a) / 4.0] * 3
    else:
        d1, d4, r = _plus_family_elements(spec)
        root = np.sqrt(d1 * d4)
        lams = [root + r, (1.0 - a) / 4.0, (1.0 - a) / 4.0, root - r]
    return np.sort(np.array(lams))[::-1]
