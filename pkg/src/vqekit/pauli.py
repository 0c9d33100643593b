"""Pauli-string algebra: Hamiltonians as real-weighted sums of Pauli strings.

A Pauli string is stored in symplectic form as a pair of bitmasks (x_mask,
z_mask) over the qubits, with qubit 0 the least-significant bit of a basis
index.  A qubit carries X if only its x-bit is set, Z if only its z-bit is
set, and Y if both are set.  With this encoding the action on a basis state
is

    P |b> = i^{n_Y} * (-1)^{popcount(b & z_mask)} |b XOR x_mask>

which makes expectation values O(2^n) per term without building matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

_LETTERS = ("X", "Y", "Z")
_PAULI_MATS = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

MAX_DENSE_QUBITS = 14
COEFF_DROP_TOL = 1e-15


class DimensionError(ValueError):
    """Raised when operands disagree on qubit count or exceed size guards."""


@dataclass(frozen=True)
class PauliString:
    """A single tensor product of Pauli letters on ``n_qubits`` qubits.

    ``letters`` maps qubit index -> one of "X", "Y", "Z"; absent indices are
    identity.  The empty map is the identity string.
    """

    n_qubits: int
    letters: tuple[tuple[int, str], ...]  # sorted by qubit index

    def __init__(self, n_qubits: int, letters=None):
        if n_qubits < 1:
            raise ValueError(f"n_qubits must be positive, got {n_qubits}")
        items = sorted(dict(letters or {}).items())
        for q, letter in items:
            if not 0 <= q < n_qubits:
                raise DimensionError(f"qubit index {q} out of range for {n_qubits} qubits")
            if letter not in _LETTERS:
                raise ValueError(f"unknown Pauli letter {letter!r}")
        object.__setattr__(self, "n_qubits", n_qubits)
        object.__setattr__(self, "letters", tuple(items))

    @property
    def x_mask(self) -> int:
        m = 0
        for q, letter in self.letters:
            if letter in ("X", "Y"):
                m |= 1 << q
        return m

    @property
    def z_mask(self) -> int:
        m = 0
        for q, letter in self.letters:
            if letter in ("Y", "Z"):
                m |= 1 << q
        return m

    @property
    def n_y(self) -> int:
        return sum(1 for _, letter in self.letters if letter == "Y")

    def is_identity(self) -> bool:
        return not self.letters

    def sort_key(self):
        return tuple(q for q, _ in self.letters), tuple(letter for _, letter in self.letters)

    def apply(self, amplitudes: np.ndarray) -> np.ndarray:
        """Return P|psi> for amplitudes of shape (2**n,) or a (2**n, k) batch."""
        n = self.n_qubits
        idx = np.arange(1 << n)
        phase = _parity(idx ^ self.x_mask, self.z_mask)
        sign = (1j ** self.n_y) * np.where(phase, -1.0, 1.0)
        if amplitudes.ndim == 2:
            sign = sign[:, None]
        return sign * amplitudes[idx ^ self.x_mask]

    def to_matrix(self) -> np.ndarray:
        mats = {q: _PAULI_MATS[letter] for q, letter in self.letters}
        out = np.array([[1.0 + 0j]])
        for q in range(self.n_qubits):  # qubit 0 is the fastest (last kron factor)
            out = np.kron(mats.get(q, _PAULI_MATS["I"]), out)
        return out

    def __str__(self) -> str:
        if not self.letters:
            return "I"
        return " ".join(f"{letter}{q}" for q, letter in self.letters)


def _parity(idx: np.ndarray, mask: int) -> np.ndarray:
    """Parity of popcount(idx & mask), vectorized; True where odd."""
    return (np.bitwise_count(idx & mask) & 1).astype(bool)


@dataclass(frozen=True)
class PauliSum:
    """Hermitian observable: a real-weighted sum of Pauli strings.

    Terms are canonicalized on construction: duplicates merged, coefficients
    below ``COEFF_DROP_TOL`` dropped, order fixed lexicographically by
    (qubit index list, letter codes).
    """

    n_qubits: int
    terms: tuple[tuple[float, PauliString], ...] = field(default=())

    def __init__(self, n_qubits: int, terms=()):
        if n_qubits < 1:
            raise ValueError(f"n_qubits must be positive, got {n_qubits}")
        merged: dict[PauliString, float] = {}
        for coeff, string in terms:
            coeff = complex(coeff)
            if abs(coeff.imag) > 1e-12 * max(1.0, abs(coeff.real)):
                raise ValueError(
                    f"non-Hermitian (complex) coefficient {coeff}")
            coeff = coeff.real
            if not np.isfinite(coeff):
                raise ValueError(f"non-finite coefficient {coeff}")
            if string.n_qubits != n_qubits:
                raise DimensionError(
                    f"term on {string.n_qubits} qubits in a {n_qubits}-qubit sum"
                )
            merged[string] = merged.get(string, 0.0) + coeff
        kept = sorted(
            ((c, s) for s, c in merged.items() if abs(c) >= COEFF_DROP_TOL),
            key=lambda t: t[1].sort_key(),
        )
        object.__setattr__(self, "n_qubits", n_qubits)
        object.__setattr__(self, "terms", tuple(kept))

    def __len__(self) -> int:
        return len(self.terms)

    def coeff_norm(self) -> float:
        """Sum of |coefficients|; an upper bound on the spectral radius."""
        return float(sum(abs(c) for c, _ in self.terms))

    def apply(self, amplitudes: np.ndarray) -> np.ndarray:
        """Return H|psi>."""
        out = np.zeros_like(amplitudes, dtype=complex)
        for coeff, string in self.terms:
            out += coeff * string.apply(amplitudes)
        return out

    def to_text(self) -> str:
        """One term per line: ``<coeff> Z0 Z1`` (identity spelled ``<coeff> I``)."""
        return "\n".join(f"{coeff!r} {string}" for coeff, string in self.terms)

    @classmethod
    def from_text(cls, text: str, n_qubits: int) -> "PauliSum":
        terms = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            try:
                coeff = float(parts[0])
            except ValueError as exc:
                raise ValueError(f"line {lineno}: bad coefficient {parts[0]!r}") from exc
            letters = {}
            for token in parts[1:]:
                if token == "I":
                    continue
                letters[int(token[1:])] = token[0]
            terms.append((coeff, PauliString(n_qubits, letters)))
        return cls(n_qubits, terms)


def expectation(amplitudes: np.ndarray, h: PauliSum) -> float:
    """Exact <psi|H|psi> for a normalized state; the tiny imaginary residue
    from floating-point accumulation is checked (< 1e-10) and discarded."""
    if amplitudes.shape[0] != 1 << h.n_qubits:
        raise DimensionError(
            f"state dimension {amplitudes.shape[0]} != 2**{h.n_qubits}"
        )
    val = complex(np.vdot(amplitudes, h.apply(amplitudes)))
    if abs(val.imag) > 1e-10:
        raise ArithmeticError(f"expectation has imaginary residue {val.imag}")
    return val.real


def to_dense_matrix(h: PauliSum) -> np.ndarray:
    """Dense 2^n x 2^n Hermitian matrix of the observable (ground-truth oracle
    support only; refuses beyond MAX_DENSE_QUBITS)."""
    if h.n_qubits > MAX_DENSE_QUBITS:
        raise DimensionError(
            f"refusing dense matrix for {h.n_qubits} > {MAX_DENSE_QUBITS} qubits"
        )
    dim = 1 << h.n_qubits
    # columns of the matrix are H applied to the computational basis states
    return h.apply(np.eye(dim, dtype=complex))
