"""Statevector engine: basis states, fidelity against ground subspaces,
exact and cross-check eigensolvers, and shot-sampled expectation values.

States are plain complex numpy vectors of length 2**n with qubit 0 as the
least-significant bit of the basis index.  Bitstring literals written
left-to-right (e.g. |11000011>) therefore read as qubits (n-1 ... 0).
"""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .pauli import DimensionError, PauliSum, expectation, to_dense_matrix

MAX_DENSE_QUBITS = 14

_HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
_S_DAGGER = np.diag([1.0, -1.0j])


def n_qubits_of(amplitudes: np.ndarray) -> int:
    n = int(amplitudes.shape[0]).bit_length() - 1
    if 1 << n != amplitudes.shape[0]:
        raise DimensionError(f"state length {amplitudes.shape[0]} is not a power of two")
    return n


def init_basis_state(n: int, index: int) -> np.ndarray:
    """|index> on n qubits; index read as a bitstring with qubit 0 the LSB."""
    if not 0 <= index < (1 << n):
        raise DimensionError(f"basis index {index} out of range for {n} qubits")
    amplitudes = np.zeros(1 << n, dtype=complex)
    amplitudes[index] = 1.0
    return amplitudes


def norm_error(amplitudes: np.ndarray) -> float:
    return abs(float(np.vdot(amplitudes, amplitudes).real) - 1.0)


@dataclass(frozen=True)
class GroundTruth:
    """Lowest eigenvalue and an orthonormal basis of the ground eigenspace.

    ``subspace`` has shape (2**n, d) with one eigenvector per column.
    """

    energy: float
    subspace: np.ndarray
    degeneracy_tolerance: float

    @property
    def degeneracy(self) -> int:
        return self.subspace.shape[1]


def fidelity(amplitudes: np.ndarray, truth: GroundTruth) -> float:
    """Squared overlap with the ground eigenspace: sum_v |<v|psi>|^2.

    Reduces to |<psi_tar|psi>|^2 when the ground state is unique.
    """
    if truth.subspace.shape[1] == 0:
        raise ValueError("empty ground subspace")
    if truth.subspace.shape[0] != amplitudes.shape[0]:
        raise DimensionError("state and subspace dimensions differ")
    overlaps = truth.subspace.conj().T @ amplitudes
    return float(np.real(np.vdot(overlaps, overlaps)))


def exact_ground(h: PauliSum, degeneracy_tolerance: float | None = None) -> GroundTruth:
    """Dense eigendecomposition oracle for the ground energy and subspace.

    The default degeneracy tolerance is 1e-8 times the spectral range.
    """
    if h.n_qubits > MAX_DENSE_QUBITS:
        raise DimensionError(
            f"refusing dense diagonalization for {h.n_qubits} > {MAX_DENSE_QUBITS} qubits"
        )
    mat = to_dense_matrix(h)
    if degeneracy_tolerance is None:
        # 2 * coefficient 1-norm upper-bounds the spectral range
        degeneracy_tolerance = 1e-8 * max(2.0 * h.coeff_norm(), 1.0)
    dim = mat.shape[0]
    if np.max(np.abs(mat.imag)) < 1e-14:
        # real-symmetric fast path: solve only the low end of the spectrum,
        # growing the window until it strictly contains the ground subspace
        real = np.ascontiguousarray(mat.real)
        k = min(dim, 8)
        while True:
            vals, vecs = scipy.linalg.eigh(
                real, subset_by_index=[0, k - 1], driver="evr")
            keep = vals <= vals[0] + degeneracy_tolerance
            if not np.all(keep) or k == dim:
                break
            k = min(dim, 2 * k)
    else:
        vals, vecs = np.linalg.eigh(mat)
        keep = vals <= vals[0] + degeneracy_tolerance
    return GroundTruth(
        energy=float(vals[0]),
        subspace=vecs[:, keep].astype(complex),
        degeneracy_tolerance=degeneracy_tolerance,
    )


def sector_ground(h: PauliSum, sector: np.ndarray,
                  degeneracy_tolerance: float | None = None) -> GroundTruth:
    """Ground energy and subspace of ``h`` restricted to a basis-index sector.

    Used when the ansatz conserves a quantum number and can only reach the
    part of the spectrum sharing the reference state's sector.  The returned
    subspace columns live in the full 2**n-dimensional space (zero outside
    the sector).
    """
    if h.n_qubits > MAX_DENSE_QUBITS:
        raise DimensionError(
            f"refusing dense diagonalization for {h.n_qubits} > {MAX_DENSE_QUBITS} qubits"
        )
    sector = np.asarray(sector, dtype=np.int64)
    mat = to_dense_matrix(h)[np.ix_(sector, sector)]
    vals, vecs = np.linalg.eigh(mat)
    spread = float(vals[-1] - vals[0]) or 1.0
    if degeneracy_tolerance is None:
        degeneracy_tolerance = 1e-8 * spread
    keep = vals <= vals[0] + degeneracy_tolerance
    subspace = np.zeros((1 << h.n_qubits, int(np.sum(keep))), dtype=complex)
    subspace[sector, :] = vecs[:, keep]
    return GroundTruth(
        energy=float(vals[0]),
        subspace=subspace,
        degeneracy_tolerance=degeneracy_tolerance,
    )


def ground_energy_inverse_iteration(
    h: PauliSum,
    tol: float = 1e-11,
    max_iters: int = 500,
    seed: int = 7,
) -> float:
    """Independent cross-check oracle: shift-invert power iteration.

    First brackets the ground energy by bisection on positive-definiteness
    (a Cholesky factorization of H - sigma*I succeeds exactly when sigma lies
    below the whole spectrum), then runs inverse iteration with the shift
    fixed just below that bracket, so the eigenvalue nearest the shift is
    guaranteed to be the lowest one.  Shares only the dense matrix
    construction with ``exact_ground``; the solve path is Cholesky/LU-based,
    not an eigensolver.
    """
    mat = to_dense_matrix(h)
    dim = mat.shape[0]
    identity = np.eye(dim)
    scale = max(h.coeff_norm(), 1.0)

    def below_spectrum(sigma: float) -> bool:
        try:
            np.linalg.cholesky(mat - sigma * identity)
            return True
        except np.linalg.LinAlgError:
            return False

    low = -h.coeff_norm() - 1.0  # certainly below all eigenvalues
    high = h.coeff_norm() + 1.0
    while high - low > 1e-8 * scale:
        mid = 0.5 * (low + high)
        if below_spectrum(mid):
            low = mid
        else:
            high = mid

    shift = low
    rng = np.random.default_rng(seed)
    x = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    x /= np.linalg.norm(x)
    rho = float(np.real(np.vdot(x, mat @ x)))
    for _ in range(max_iters):
        x = np.linalg.solve(mat - shift * identity, x)
        x /= np.linalg.norm(x)
        hx = mat @ x
        rho = float(np.real(np.vdot(x, hx)))
        residual = float(np.linalg.norm(hx - rho * x))
        if residual < tol * scale:
            break
    return rho


def expectation_sampled(
    amplitudes: np.ndarray,
    h: PauliSum,
    shots: int,
    rng: np.random.Generator,
) -> float:
    """Unbiased shot-based estimator of <psi|H|psi>.

    Each Pauli term is measured in its own basis: the state is rotated so
    the term becomes Z-type, bitstrings are sampled from the rotated
    probabilities, and the +/-1 eigenvalues are averaged.  Standard error
    per term scales as 1/sqrt(shots).
    """
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    if amplitudes.shape[0] != 1 << h.n_qubits:
        raise DimensionError("state and observable dimensions differ")
    total = 0.0
    for coeff, string in h.terms:
        if string.is_identity():
            total += coeff
            continue
        rotated = amplitudes
        support = 0
        for q, letter in string.letters:
            support |= 1 << q
            if letter == "X":
                rotated = _apply_1q(rotated, _HADAMARD, q)
            elif letter == "Y":
                rotated = _apply_1q(rotated, _S_DAGGER, q)
                rotated = _apply_1q(rotated, _HADAMARD, q)
        probs = np.abs(rotated) ** 2
        probs /= probs.sum()
        samples = rng.choice(probs.shape[0], size=shots, p=probs)
        eigenvalues = 1.0 - 2.0 * (np.bitwise_count(samples & support) & 1)
        total += coeff * float(eigenvalues.mean())
    return total


def _apply_1q(amplitudes: np.ndarray, mat: np.ndarray, qubit: int) -> np.ndarray:
    n = n_qubits_of(amplitudes)
    shaped = amplitudes.reshape(1 << (n - qubit - 1), 2, 1 << qubit)
    return np.einsum("ab,xby->xay", mat, shaped).reshape(-1)


def dump_csv(amplitudes: np.ndarray) -> str:
    """Debug dump: index, bitstring, real, imaginary, probability."""
    n = n_qubits_of(amplitudes)
    buf = io.StringIO()
    buf.write("index,bitstring,real,imag,probability\n")
    for idx, amp in enumerate(amplitudes):
        buf.write(
            f"{idx},{idx:0{n}b},{amp.real!r},{amp.imag!r},{abs(amp) ** 2!r}\n"
        )
    return buf.getvalue()
