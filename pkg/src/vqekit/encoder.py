"""Superposition-input encoders: low-depth parameterized circuits whose
output is confined to a chosen set of computational-basis states.

Construction runs a reduction in reverse: the member set is repeatedly
shrunk by merging the closest pair of bitstrings -- CNOTs align the pair to
a single differing bit, then a controlled RY/RZ pair on that bit (controls
picked so no other member matches) folds one string into the other.  When
one string remains, fixed pi Y-rotations map it to |0...0>.  Inverting the
op list gives the preparation circuit: the rotation angles become the
2(m-1) free parameters, and for every parameter assignment the output
support stays inside the member set, because each primitive maps the
current support span onto the next one.

Solving for parameters that hit a given amplitude vector replays the same
reduction on the target state and reads the merge angles off analytically.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .circuits import Circuit, CompiledCircuit, Gate
from .states import init_basis_state

LEAKAGE_TOL = 1e-10


@dataclass(frozen=True)
class BasisSet:
    """m distinct basis indices with a designated reference member."""

    n_qubits: int
    members: tuple[int, ...]
    reference: int = 0

    def __post_init__(self):
        if not 1 <= len(self.members) <= 1 << self.n_qubits:
            raise ValueError("member count out of range")
        if len(set(self.members)) != len(self.members):
            raise ValueError("duplicate members")
        if any(not 0 <= j < 1 << self.n_qubits for j in self.members):
            raise ValueError("member index out of range")
        if self.reference not in self.members:
            raise ValueError(f"reference {self.reference} not a member")

    @property
    def m(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class Encoder:
    """Preparation circuit for superpositions over a BasisSet.

    Invariants (checked by the test suite): zero output amplitude outside
    ``basis.members`` for every parameter draw, and any amplitude assignment
    over the members is realizable (witnessed by ``solve_parameters``)."""

    circuit: Circuit
    basis: BasisSet

    @property
    def n_params(self) -> int:
        return self.circuit.n_params

    def prepare(self, params: np.ndarray) -> np.ndarray:
        return CompiledCircuit(self.circuit).run(
            init_basis_state(self.basis.n_qubits, 0), params
        )


@dataclass(frozen=True)
class _Merge:
    """One reduction step: CNOT alignments then a controlled rotation pair."""

    cnots: tuple[tuple[int, int], ...]  # (control_bit, target_bit)
    rot_bit: int
    controls: tuple[int, ...]
    neg_controls: tuple[int, ...]
    survivor: int  # pattern kept (bit rot_bit = 0), post-alignment
    absorbed: int  # pattern folded in (bit rot_bit = 1)


def _plan_reduction(basis: BasisSet) -> tuple[list[_Merge], int]:
    """Merge plan over the member patterns plus the final surviving string."""
    patterns = list(basis.members)
    merges: list[_Merge] = []
    while len(patterns) > 1:
        s1, s2 = _closest_pair(patterns)
        diff = s1 ^ s2
        rot_bit = (diff & -diff).bit_length() - 1
        cnots = tuple(
            (rot_bit, d)
            for d in _bits(diff)
            if d != rot_bit
        )
        for control, target in cnots:
            patterns = [
                p ^ (1 << target) if p >> control & 1 else p for p in patterns
            ]
            s1 = s1 ^ (1 << target) if s1 >> control & 1 else s1
            s2 = s2 ^ (1 << target) if s2 >> control & 1 else s2
        survivor, absorbed = (s1, s2) if not s1 >> rot_bit & 1 else (s2, s1)
        others = [p for p in patterns if p not in (survivor, absorbed)]
        control_bits = _pick_controls(survivor, rot_bit, others, basis.n_qubits)
        neg = tuple(b for b in control_bits if not survivor >> b & 1)
        merges.append(
            _Merge(
                cnots=cnots,
                rot_bit=rot_bit,
                controls=control_bits,
                neg_controls=neg,
                survivor=survivor,
                absorbed=absorbed,
            )
        )
        patterns = others + [survivor]
    return merges, patterns[0]


def _bits(mask: int) -> list[int]:
    return [b for b in range(mask.bit_length()) if mask >> b & 1]


def _closest_pair(patterns: list[int]) -> tuple[int, int]:
    """Smallest Hamming distance; ties broken by lowest pattern values."""
    best = None
    for i, a in enumerate(patterns):
        for b in patterns[i + 1:]:
            key = (bin(a ^ b).count("1"), min(a, b), max(a, b))
            if best is None or key < best[0]:
                best = (key, a, b)
    return best[1], best[2]


def _pick_controls(survivor: int, rot_bit: int, others: list[int], n: int) -> tuple[int, ...]:
    """Greedy minimal control set distinguishing the merge pair from every
    other live pattern (control value = survivor's bit; 0 means anti-control)."""
    controls: list[int] = []
    alive = list(others)
    while True:
        alive = [
            q for q in alive
            if all(q >> b & 1 == survivor >> b & 1 for b in controls)
        ]
        if not alive:
            return tuple(sorted(controls))
        candidates = [b for b in range(n) if b != rot_bit and b not in controls]
        best_bit, best_hits = None, -1
        for b in candidates:
            hits = sum(1 for q in alive if q >> b & 1 != survivor >> b & 1)
            if hits > best_hits:
                best_bit, best_hits = b, hits
        controls.append(best_bit)


def _rotation_gates(merge: _Merge, slot_y: int, slot_z: int) -> tuple[Gate, Gate]:
    """Forward-direction RY/RZ pair (kind depends on control count)."""
    k = len(merge.controls)
    qubits = merge.controls + (merge.rot_bit,)
    if k == 0:
        kinds = ("RY", "RZ")
    elif k == 1:
        kinds = ("CRY", "CRZ")
    elif k == 2:
        kinds = ("CCRY", "CCRZ")
    else:
        kinds = ("MCRY", "MCRZ")
    ry = Gate(kinds[0], qubits, param_slot=slot_y, neg_controls=merge.neg_controls)
    rz = Gate(kinds[1], qubits, param_slot=slot_z, neg_controls=merge.neg_controls)
    return ry, rz


def synthesize(basis: BasisSet) -> Encoder:
    """Build the preparation circuit V with exactly 2(m-1) parameter slots.

    Forward gate order: fixed RY(pi) gates preparing the reduction's
    surviving string, then per merge (last merge first) the CRY/CRZ pair
    followed by the alignment CNOTs, inverted.
    """
    merges, final_pattern = _plan_reduction(basis)
    gates: list[Gate] = [
        Gate("RY", (b,), fixed_angle=np.pi) for b in _bits(final_pattern)
    ]
    slot = 0
    for merge in reversed(merges):
        ry, rz = _rotation_gates(merge, slot, slot + 1)
        gates.extend([ry, rz])
        for control, target in reversed(merge.cnots):
            gates.append(Gate("CNOT", (control, target)))
        slot += 2
    return Encoder(
        circuit=Circuit(basis.n_qubits, tuple(gates), slot),
        basis=basis,
    )


def solve_parameters(enc: Encoder, target_amplitudes: np.ndarray) -> np.ndarray:
    """Angles reproducing ``target_amplitudes`` over the members, up to one
    global phase; constructive witness that the encoder is fully expressive."""
    basis = enc.basis
    target = np.asarray(target_amplitudes, dtype=complex)
    if target.shape != (basis.m,):
        raise ValueError(f"expected {basis.m} amplitudes, got {target.shape}")
    norm = np.linalg.norm(target)
    if norm < 1e-12:
        raise ValueError("zero-norm target")
    target = target / norm

    merges, _ = _plan_reduction(basis)
    amps = {p: a for p, a in zip(basis.members, target)}
    params = np.zeros(enc.n_params)
    # slots were assigned to merges in reverse order
    slots = [(2 * j, 2 * j + 1) for j in range(len(merges))][::-1]
    for merge, (slot_y, slot_z) in zip(merges, slots):
        for control, target_bit in merge.cnots:
            amps = {
                (p ^ (1 << target_bit) if p >> control & 1 else p): a
                for p, a in amps.items()
            }
        a0 = amps.get(merge.survivor, 0.0)
        a1 = amps.pop(merge.absorbed, 0.0)
        # reduction applies Rz(-phi) then Ry(-theta) on the rotation bit so
        # the absorbed component vanishes; forward gates carry (+theta, +phi)
        phi = float(np.angle(a1) - np.angle(a0)) if abs(a0) > 0 and abs(a1) > 0 else 0.0
        half = np.exp(1j * phi / 2)
        b0, b1 = a0 * half, a1 / half
        theta = 2.0 * float(np.arctan2(abs(b1), abs(b0)))
        c, s = np.cos(theta / 2), np.sin(theta / 2)
        merged = c * b0 + s * b1
        amps[merge.survivor] = merged
        params[slot_y] = theta
        params[slot_z] = phi
    return params


def verify_support(enc: Encoder, trials: int, rng: np.random.Generator) -> tuple[bool, float]:
    """Sample parameters uniformly in [0, 2pi) and report the worst total
    probability outside the member set; passes below LEAKAGE_TOL."""
    if trials < 1:
        raise ValueError("trials >= 1 required")
    compiled = CompiledCircuit(enc.circuit)
    origin = init_basis_state(enc.basis.n_qubits, 0)
    outside = np.ones(1 << enc.basis.n_qubits, dtype=bool)
    outside[list(enc.basis.members)] = False
    worst = 0.0
    for _ in range(trials):
        params = rng.uniform(0.0, 2.0 * np.pi, size=enc.n_params)
        out = compiled.run(origin, params)
        leak = float(np.sum(np.abs(out[outside]) ** 2))
        worst = max(worst, leak)
    return worst < LEAKAGE_TOL, worst
