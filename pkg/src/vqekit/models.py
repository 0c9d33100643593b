"""Benchmark Hamiltonians: transverse-field Ising chains/tori, the
cluster-Ising chain, and the one-band Hubbard chain mapped to qubits.

Boundary conventions (overridable through ModelSpec): Ising models are
periodic, cluster-Ising and Hubbard are open.  Nearest-neighbor sums count
each undirected bond once, so a 2-site ring contributes a single bond.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .circuits import ring_bond_groups, torus_edges
from .pauli import PauliString, PauliSum

FAMILIES = ("tfim_1d", "tfim_2d", "cluster_ising", "hubbard")


@dataclass(frozen=True)
class ModelSpec:
    """Declarative model description; the `model` block of run configs."""

    family: str
    parameters: dict = field(default_factory=dict)
    geometry: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown model family {self.family!r}")

    @property
    def n_qubits(self) -> int:
        g = self.geometry
        if self.family == "tfim_1d":
            return g["n"]
        if self.family == "tfim_2d":
            return g["rows"] * g["cols"]
        if self.family == "cluster_ising":
            return g["n"]
        return 2 * g["sites"]

    def key(self) -> tuple:
        return (
            self.family,
            tuple(sorted(self.parameters.items())),
            tuple(sorted(self.geometry.items())),
        )


def build_hamiltonian(spec: ModelSpec) -> PauliSum:
    if spec.family in ("tfim_1d", "tfim_2d"):
        return tfim(spec)
    if spec.family == "cluster_ising":
        g, p = spec.geometry, spec.parameters
        return cluster_ising(g["n"], p["J"], p["h1"], p["h2"])
    g, p = spec.geometry, spec.parameters
    return hubbard_jw(g["sites"], p["t"], p["U"])


def _chain_bonds(n: int, periodic: bool) -> list[tuple[int, int]]:
    bonds = [(i, i + 1) for i in range(n - 1)]
    if periodic and n > 2:
        bonds.append((n - 1, 0))
    elif periodic and n == 2:
        pass  # the two directed bonds of a 2-ring are one undirected bond
    return bonds


def tfim(spec: ModelSpec) -> PauliSum:
    """H = -J sum_<ij> Z_i Z_j - h sum_i X_i."""
    p, g = spec.parameters, spec.geometry
    J, h = p["J"], p["h"]
    periodic = g.get("boundary", "periodic") == "periodic"
    if spec.family == "tfim_1d":
        n = g["n"]
        bonds = _chain_bonds(n, periodic)
    else:
        rows, cols = g["rows"], g["cols"]
        n = rows * cols
        if periodic:
            horizontal, vertical = torus_edges(rows, cols)
            bonds = sorted({tuple(sorted(e)) for e in horizontal + vertical})
        else:
            bonds = []
            for r in range(rows):
                for c in range(cols):
                    q = r * cols + c
                    if c + 1 < cols:
                        bonds.append((q, q + 1))
                    if r + 1 < rows:
                        bonds.append((q, q + cols))
    terms = [(-J, PauliString(n, {a: "Z", b: "Z"})) for a, b in bonds]
    terms += [(-h, PauliString(n, {q: "X"})) for q in range(n)]
    return PauliSum(n, terms)


def cluster_ising(n: int, J: float, h1: float, h2: float) -> PauliSum:
    """H = -J sum ZXZ - h1 sum XX - h2 sum X, open boundary, n >= 3."""
    if n < 3:
        raise ValueError("cluster_ising needs n >= 3")
    terms = [(-J, PauliString(n, {i: "Z", i + 1: "X", i + 2: "Z"})) for i in range(n - 2)]
    terms += [(-h1, PauliString(n, {i: "X", i + 1: "X"})) for i in range(n - 1)]
    terms += [(-h2, PauliString(n, {i: "X"})) for i in range(n)]
    return PauliSum(n, terms)


def hubbard_jw(sites: int, t: float, U: float) -> PauliSum:
    """Qubit form of the half-filled-convention Hubbard chain (open boundary):

        H = -t/2 sum_bonds,spin (XX + YY) + U/4 sum_sites Z_i Z_{i+N}

    Qubit i is the spin-up orbital of site i and qubit i+N the spin-down
    one; with that contiguous register ordering the nearest-neighbor hops
    carry no Z strings.
    """
    if sites < 2:
        raise ValueError("hubbard_jw needs sites >= 2")
    n = 2 * sites
    terms = []
    for offset in (0, sites):
        for i in range(sites - 1):
            a, b = offset + i, offset + i + 1
            terms.append((-t / 2, PauliString(n, {a: "X", b: "X"})))
            terms.append((-t / 2, PauliString(n, {a: "Y", b: "Y"})))
    for i in range(sites):
        terms.append((U / 4, PauliString(n, {i: "Z", i + sites: "Z"})))
    return PauliSum(n, terms)


# ---------------------------------------------------------------------------
# Jordan-Wigner cross-check


def jw_map(monomial: list[tuple[int, bool]], n_modes: int, coeff: complex = 1.0,
           add_hc: bool = False) -> PauliSum:
    """Map a product of ladder operators to its Pauli-string expansion.

    ``monomial`` lists (mode, is_creation) factors left-to-right as an
    operator product; ``add_hc`` adds the Hermitian conjugate (needed for
    hopping terms; number operators are already Hermitian).  The result must
    come out real, otherwise an error is raised.
    """
    # ladder op on mode k: Z string on modes < k, then (X -+ iY)/2 on k
    acc: dict[tuple[int, int], complex] = {(0, 0): complex(coeff)}
    for mode, is_creation in monomial:
        y_sign = -1j if is_creation else 1j
        prefix = (1 << mode) - 1
        factor = {
            ((1 << mode), prefix): 0.5,                          # Z_prefix X_mode
            ((1 << mode), prefix | (1 << mode)): 0.5 * y_sign,   # Z_prefix Y_mode
        }
        new: dict[tuple[int, int], complex] = {}
        for (x1, z1), c1 in acc.items():
            for (x2, z2), c2 in factor.items():
                key, phase = _pauli_mul(x1, z1, x2, z2)
                new[key] = new.get(key, 0.0) + c1 * c2 * phase
        acc = new
    if add_hc:
        # Pauli strings are Hermitian, so the conjugate just conjugates c
        acc = {key: c + np.conj(c) for key, c in acc.items()}
    out = []
    for (xm, zm), c in acc.items():
        if abs(c) < 1e-14:
            continue
        if abs(c.imag) > 1e-10:
            raise ValueError(
                f"non-Hermitian monomial: coefficient {c} (pass add_hc=True?)"
            )
        out.append((c.real, _string_from_masks(n_modes, xm, zm)))
    return PauliSum(n_modes, out)


def _pauli_mul(x1: int, z1: int, x2: int, z2: int) -> tuple[tuple[int, int], complex]:
    """Product of two Pauli-letter strings in (x_mask, z_mask) form.

    Uses P = i^{|x&z|} X^x Z^z, so
    P1 P2 = i^{|x1&z1| + |x2&z2| - |x3&z3|} (-1)^{|z1&x2|} P3."""
    x3, z3 = x1 ^ x2, z1 ^ z2
    ipow = bin(x1 & z1).count("1") + bin(x2 & z2).count("1") - bin(x3 & z3).count("1")
    phase = (1j) ** (ipow % 4) * (-1) ** (bin(z1 & x2).count("1") % 2)
    return (x3, z3), phase


def _string_from_masks(n: int, xm: int, zm: int) -> PauliString:
    letters = {}
    for q in range(n):
        has_x = bool(xm >> q & 1)
        has_z = bool(zm >> q & 1)
        if has_x and has_z:
            letters[q] = "Y"
        elif has_x:
            letters[q] = "X"
        elif has_z:
            letters[q] = "Z"
    return PauliString(n, letters)


def number_operator(mode: int, n_modes: int) -> PauliSum:
    """n_k = c_k^dagger c_k = (I - Z_k) / 2."""
    return PauliSum(
        n_modes,
        [(0.5, PauliString(n_modes, {})), (-0.5, PauliString(n_modes, {mode: "Z"}))],
    )


# ---------------------------------------------------------------------------
# symmetry sectors


def sector_basis(sites: int, n_up: int, n_down: int) -> list[int]:
    """All basis indices with n_up set bits in qubits [0, sites) and n_down
    in [sites, 2*sites), sorted ascending."""
    if not (0 <= n_up <= sites and 0 <= n_down <= sites):
        raise ValueError("occupations out of range")
    ups = [sum(1 << q for q in combo) for combo in combinations(range(sites), n_up)]
    downs = [
        sum(1 << (sites + q) for q in combo)
        for combo in combinations(range(sites), n_down)
    ]
    return sorted(u | d for u in ups for d in downs)


def register_z_sums(sites: int) -> tuple[PauliSum, PauliSum]:
    """The two conserved register-wise Z sums of the Hubbard chain."""
    n = 2 * sites
    up = PauliSum(n, [(1.0, PauliString(n, {q: "Z"})) for q in range(sites)])
    down = PauliSum(n, [(1.0, PauliString(n, {q: "Z"})) for q in range(sites, n)])
    return up, down
