"""Exponential-phase operators and the ladder algebras built on them.

The one-sided shift G- (entries 1 on the superdiagonal) plays the role of
e^{i phi}; its defect of unitarity is the vacuum projector.  Number-weighted
versions R+- and their m-step generalizations Omega_m close su(1,1)-type
commutation relations on interior projectors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fock import FockState, expectation, matrix_exponential, number_operator

__all__ = [
    "PhaseOperatorSet",
    "OmegaLadder",
    "build_phase_set",
    "number_phase_uncertainty",
    "build_R_ops",
    "build_omega_ops",
    "phase_squeeze_unitary",
]


@dataclass(frozen=True)
class PhaseOperatorSet:
    dim: int
    gamma_minus: np.ndarray
    gamma_plus: np.ndarray
    cos_phi: np.ndarray
    sin_phi: np.ndarray


@dataclass(frozen=True)
class OmegaLadder:
    m: int
    dim: int
    omega_minus: np.ndarray
    omega_plus: np.ndarray


def _shift_down(dim: int) -> np.ndarray:
    g = np.zeros((dim, dim), dtype=complex)
    g[np.arange(dim - 1), np.arange(1, dim)] = 1.0
    return g


def build_phase_set(dim: int) -> PhaseOperatorSet:
    """Phase operators G-, G+ and the Hermitian cos/sin combinations.

    The sine uses (G+ - G-)/(2i); with this choice both combinations are
    Hermitian and satisfy the expected commutation with N on the interior.
    """
    if dim < 3:
        raise ValueError("dim must be at least 3")
    gm = _shift_down(dim)
    gp = gm.conj().T
    cos_phi = (gp + gm) / 2.0
    sin_phi = (gp - gm) / 2j
    return PhaseOperatorSet(dim, gm, gp, cos_phi, sin_phi)


def number_phase_uncertainty(s: FockState) -> tuple[float, float, float, float]:
    """Number-phase uncertainty products and their lower bounds.

    Returns (dcos * dN, |<sin>|/2, dsin * dN, |<cos>|/2).
    """
    ops = build_phase_set(s.dim)
    n_op = number_operator(s.dim)

    def _spread(op: np.ndarray) -> float:
        mean = expectation(op, s).real
        return float(np.sqrt(max(expectation(op @ op, s).real - mean * mean, 0.0)))

    d_n = _spread(n_op)
    d_cos = _spread(ops.cos_phi)
    d_sin = _spread(ops.sin_phi)
    bound_sin = abs(expectation(ops.sin_phi, s).real) / 2.0
    bound_cos = abs(expectation(ops.cos_phi, s).real) / 2.0
    return d_cos * d_n, bound_sin, d_sin * d_n, bound_cos


def build_R_ops(dim: int) -> tuple[np.ndarray, np.ndarray]:
    """Number-weighted shifts R+|n> = (n+1)|n+1>, R-|n> = n|n-1>."""
    if dim < 3:
        raise ValueError("dim must be at least 3")
    ops = build_phase_set(dim)
    n_op = number_operator(dim)
    r_plus = n_op @ ops.gamma_plus
    alt_plus = ops.gamma_plus @ (n_op + np.eye(dim))
    if not np.array_equal(r_plus, alt_plus):
        raise AssertionError("the two factorizations of R+ disagree")
    r_minus = ops.gamma_minus @ n_op
    alt_minus = (n_op + np.eye(dim)) @ ops.gamma_minus
    if not np.array_equal(r_minus, alt_minus):
        raise AssertionError("the two factorizations of R- disagree")
    return r_plus, r_minus


def build_omega_ops(m: int, dim: int) -> OmegaLadder:
    """m-step ladder Omega_m-|n> = n|n-m>, built as (G-)^m N.

    Both operator orderings of the definition are formed and compared
    entry for entry before returning.
    """
    if not 1 <= m <= dim // 4:
        raise ValueError("ladder step m out of range for this dim")
    ops = build_phase_set(dim)
    n_op = number_operator(dim)
    gm_pow = np.linalg.matrix_power(ops.gamma_minus, m)
    omega_minus = gm_pow @ n_op
    alt = (n_op + m * np.eye(dim)) @ gm_pow
    if not np.array_equal(omega_minus, alt):
        raise AssertionError("the two factorizations of Omega- disagree")
    return OmegaLadder(m, dim, omega_minus, omega_minus.conj().T)


def omega_commutator_defect(ladder: OmegaLadder) -> float:
    """Interior defect of [Omega-, Omega+] = m(2N + m).

    The relation holds exactly for m <= n < dim - m.  The top m rows are
    clipped by truncation; rows 1..m-1 miss the down-then-up path because
    Omega- annihilates them, so both ends are excluded.
    """
    m, dim = ladder.m, ladder.dim
    comm = ladder.omega_minus @ ladder.omega_plus - ladder.omega_plus @ ladder.omega_minus
    expected = m * (2.0 * number_operator(dim) + m * np.eye(dim))
    diff = comm - expected
    sl = slice(m, dim - m)
    return float(np.abs(diff[sl, sl]).max())


def phase_squeeze_unitary(r: float, phi: float, m: int, dim: int) -> tuple[np.ndarray, FockState]:
    """Unitary exp(alpha Omega+ - alpha* Omega-) with alpha = (r/m) e^{i phi}.

    Acting on the vacuum it produces the geometric profile
    sqrt(1 - beta^2) sum_n (beta e^{i phi})^n |mn> with beta = tanh r.
    """
    ladder = build_omega_ops(m, dim)
    alpha = (r / m) * np.exp(1j * phi)
    gen = alpha * ladder.omega_plus - np.conj(alpha) * ladder.omega_minus
    u = matrix_exponential(gen)
    state = FockState(u[:, 0]).normalized()
    return u, state


def phase_squeeze_closed_form(r: float, phi: float, m: int, dim: int) -> FockState:
    beta = np.tanh(r)
    amps = np.zeros(dim, dtype=complex)
    ns = np.arange(0, dim, m) // m
    amps[::m] = (beta * np.exp(1j * phi)) ** ns
    return FockState(amps).normalized()
