"""SU(1,1) representation machinery and pair-coherent state families.

The abstract discrete-series representation with Bargmann index k acts on
an internal basis |k,0>..|k,dim-1>.  The two-mode families (pair coherent,
two-mode Perelomov, nonlinear and parity-pair states) live in a fixed
charge sector: every ket is |n+q, n> for charge q = <a+a - b+b>.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.sparse.linalg import expm_multiply
from scipy.special import gammaln

from .fock import FockState, TwoModeState, matrix_exponential
from .twomode import ladders_sparse, number_diagonals

__all__ = [
    "SU11Rep",
    "PairCoherentSpec",
    "su11_generators",
    "perelomov_state",
    "pair_coherent",
    "two_mode_perelomov",
    "nonlinear_pair_coherent",
    "parity_pair_state",
]


@dataclass(frozen=True)
class SU11Rep:
    k: float
    dim: int

    def __post_init__(self):
        if self.k <= 0:
            raise ValueError("Bargmann index must be positive")
        if self.dim < 2:
            raise ValueError("dim must be at least 2")


@dataclass(frozen=True)
class PairCoherentSpec:
    """Pair eigenvalue zeta and charge q on `levels` pair excitations.

    The amplitude grid is rectangular (levels+q) x levels so the whole
    charge sector fits.
    """

    zeta: complex
    q: int
    levels: int

    def __post_init__(self):
        if self.q < 0:
            raise ValueError("charge must be nonnegative")
        if self.levels < 2:
            raise ValueError("need at least two pair levels")

    @property
    def dims(self) -> tuple[int, int]:
        return (self.levels + self.q, self.levels)

    @property
    def tight(self) -> bool:
        return abs(self.zeta) <= self.levels / 4.0


def su11_generators(rep: SU11Rep) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Matrices K+, K-, K0 with K+|k,n> = sqrt((n+1)(2k+n))|k,n+1>."""
    dim, k = rep.dim, rep.k
    kplus = np.zeros((dim, dim), dtype=complex)
    ns = np.arange(dim - 1)
    kplus[ns + 1, ns] = np.sqrt((ns + 1.0) * (2.0 * k + ns))
    kminus = kplus.conj().T
    k0 = np.diag(k + np.arange(dim, dtype=float)).astype(complex)
    return kplus, kminus, k0


def perelomov_kappa(xi: complex) -> complex:
    """Disc coordinate of the coset element exp(xi K+ - xi* K-)."""
    if xi == 0:
        return 0j
    return xi * np.tanh(abs(xi)) / abs(xi)


def perelomov_state(rep: SU11Rep, xi: complex) -> FockState:
    """Lowest-weight coherent state in closed form.

    amps_j = (1-|kappa|^2)^k sqrt(Gamma(j+2k)/(j! Gamma(2k))) kappa^j,
    identical to applying exp(xi K+ - xi* K-) to |k,0>.
    """
    kappa = perelomov_kappa(xi)
    if abs(kappa) >= 1.0 - 1e-6:
        raise ValueError("coset parameter too close to the unit circle")
    js = np.arange(rep.dim)
    log_binom = 0.5 * (gammaln(js + 2.0 * rep.k) - gammaln(js + 1.0) - gammaln(2.0 * rep.k))
    if kappa == 0:
        amps = np.zeros(rep.dim, dtype=complex)
        amps[0] = 1.0
        return FockState(amps)
    log_mod = rep.k * np.log1p(-abs(kappa) ** 2) + log_binom + js * np.log(abs(kappa))
    amps = np.exp(log_mod) * np.exp(1j * js * np.angle(kappa))
    return FockState(amps).normalized()


def perelomov_exponential(rep: SU11Rep, xi: complex) -> FockState:
    """Same state via the dense matrix exponential (oracle route)."""
    kplus, kminus, _ = su11_generators(rep)
    vac = np.zeros(rep.dim, dtype=complex)
    vac[0] = 1.0
    out = matrix_exponential(xi * kplus - np.conj(xi) * kminus) @ vac
    return FockState(out).normalized()


def _charge_sector_state(coeffs: np.ndarray, q: int, levels: int) -> TwoModeState:
    amps = np.zeros((levels + q, levels), dtype=complex)
    amps[np.arange(levels) + q, np.arange(levels)] = coeffs
    return TwoModeState(amps).normalized()


def pair_coherent(spec: PairCoherentSpec) -> TwoModeState:
    """Simultaneous eigenstate of ab and of the charge a+a - b+b."""
    ns = np.arange(spec.levels)
    if spec.zeta == 0:
        coeffs = np.zeros(spec.levels, dtype=complex)
        coeffs[0] = 1.0
        return _charge_sector_state(coeffs, spec.q, spec.levels)
    log_mod = ns * np.log(abs(spec.zeta)) - 0.5 * (gammaln(ns + 1.0) + gammaln(ns + spec.q + 1.0))
    coeffs = np.exp(log_mod - log_mod.max()) * np.exp(1j * ns * np.angle(spec.zeta))
    return _charge_sector_state(coeffs, spec.q, spec.levels)


def pair_residuals(state: TwoModeState, zeta: complex, q: int) -> tuple[float, float]:
    """Norms of (ab - zeta)|psi> and (a+a - b+b - q)|psi>."""
    da, db = state.dims
    a1, a2 = ladders_sparse(da, db)
    vec = state.ravel()
    eig = (a1 @ (a2 @ vec)) - zeta * vec
    n1, n2 = number_diagonals(da, db)
    charge = (n1 - n2 - q) * vec
    return float(np.linalg.norm(eig)), float(np.linalg.norm(charge))


def two_mode_perelomov(xi: complex, q: int, levels: int) -> TwoModeState:
    """exp(xi a+b+ - xi* ab) applied to |q, 0>."""
    da, db = levels + q, levels
    a1, a2 = ladders_sparse(da, db)
    pair_down = a1 @ a2
    gen = xi * pair_down.conj().T - np.conj(xi) * pair_down
    vac = np.zeros(da * db, dtype=complex)
    vac[q * db] = 1.0
    out = expm_multiply(gen, vac)
    return TwoModeState(out.reshape(da, db)).normalized()


def two_mode_perelomov_closed_form(xi: complex, q: int, levels: int) -> TwoModeState:
    """Closed form exp(tau a+b+)|q,0> with tau = xi tanh|xi| / |xi|."""
    tau = perelomov_kappa(xi)
    ns = np.arange(levels)
    if tau == 0:
        coeffs = np.zeros(levels, dtype=complex)
        coeffs[0] = 1.0
    else:
        log_mod = (
            ns * np.log(abs(tau))
            + 0.5 * (gammaln(ns + q + 1.0) - gammaln(ns + 1.0) - gammaln(q + 1.0))
        )
        coeffs = np.exp(log_mod - log_mod.max()) * np.exp(1j * ns * np.angle(tau))
    return _charge_sector_state(coeffs, q, levels)


def perelomov_nonlinear_residual(xi: complex, q: int, levels: int) -> float:
    """Residual of the nonlinear eigen-relation satisfied by the
    two-mode Perelomov state: [2/(2+q+N1+N2)] ab acts as multiplication
    by xi tanh|xi| / |xi|."""
    state = two_mode_perelomov(xi, q, levels)
    da, db = state.dims
    a1, a2 = ladders_sparse(da, db)
    vec = state.ravel()
    lowered = a1 @ (a2 @ vec)
    n1, n2 = number_diagonals(da, db)
    weighted = 2.0 / (2.0 + q + n1 + n2) * lowered
    return float(np.linalg.norm(weighted - perelomov_kappa(xi) * vec))


def nonlinear_pair_coherent(
    f: Callable[[int, int], float], zeta: complex, q: int, levels: int
) -> TwoModeState:
    """Charge-sector solution of f(N1, N2) ab |psi> = zeta |psi>.

    The eigen-equation induces a one-step recursion on the sector
    coefficients; f is evaluated at the target occupations (n+q, n).
    """
    coeffs = np.zeros(levels, dtype=complex)
    coeffs[0] = 1.0
    for n in range(levels - 1):
        fval = f(n + q, n)
        if fval == 0:
            raise ZeroDivisionError(f"nonlinearity vanishes at occupations ({n + q}, {n})")
        coeffs[n + 1] = zeta * coeffs[n] / (fval * np.sqrt((n + 1.0) * (n + q + 1.0)))
        # rescale to dodge overflow for strongly growing profiles
        peak = abs(coeffs[n + 1])
        if peak > 1e100:
            coeffs /= peak
    return _charge_sector_state(coeffs, q, levels)


def parity_pair_state(zeta: complex, q: int, levels: int) -> TwoModeState:
    """Pair-type state with the alternating sign (-1)^(n(n-1)/2)."""
    ns = np.arange(levels)
    signs = np.where((ns * (ns - 1) // 2) % 2 == 0, 1.0, -1.0)
    coeffs = signs * _pair_sector_coeffs(zeta, q, levels)
    return _charge_sector_state(coeffs, q, levels)


def parity_pair_superposition(zeta: complex, q: int, levels: int) -> TwoModeState:
    """Equal-weight superposition of the pair states at +i zeta and
    -i zeta with phases exp(-+ i pi/4), built from the same unnormalized
    coefficient sequence as the parity-pair state itself."""
    up = _pair_sector_coeffs(1j * zeta, q, levels)
    down = _pair_sector_coeffs(-1j * zeta, q, levels)
    coeffs = (np.exp(-1j * np.pi / 4.0) * up + np.exp(1j * np.pi / 4.0) * down) / np.sqrt(2.0)
    return _charge_sector_state(coeffs, q, levels)


def _pair_sector_coeffs(zeta: complex, q: int, levels: int) -> np.ndarray:
    ns = np.arange(levels)
    log_mod = 0.5 * gammaln(q + 1.0) - 0.5 * (gammaln(ns + 1.0) + gammaln(ns + q + 1.0))
    if zeta == 0:
        coeffs = np.zeros(levels, dtype=complex)
        coeffs[0] = np.exp(log_mod[0])
        return coeffs
    log_mod = log_mod + ns * np.log(abs(zeta))
    return np.exp(log_mod) * np.exp(1j * ns * np.angle(zeta))
