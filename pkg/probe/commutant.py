import sys
import numpy as np
sys.path.insert(0, "src")
from vqekit.models import ModelSpec, build_hamiltonian
from vqekit.pauli import PauliSum
from vqekit.circuits import build_hva_hubbard, CompiledCircuit
from vqekit.states import init_basis_state

n = 8
spec = ModelSpec("hubbard", {"t": 1.0, "U": 2.0},
                 {"sites": 4, "n_up": 2, "n_down": 2})
H = build_hamiltonian(spec)

# sector basis: bitstrings with 2 of qubits 0-3 set and 2 of 4-7 set
idx = [b for b in range(2 ** n)
       if bin(b & 0xF).count("1") == 2 and bin(b >> 4).count("1") == 2]
print("sector dim", len(idx))
P = np.zeros((2 ** n, len(idx)))
for c, b in enumerate(idx):
    P[b, c] = 1.0

def sector(mat_apply):
    cols = [mat_apply(P[:, c].astype(complex)) for c in range(len(idx))]
    return P.T @ np.stack(cols, axis=1)

Hs = sector(H.apply)
w, v = np.linalg.eigh(Hs)
print("sector spectrum head", np.round(w[:6], 6))

# generators: one circuit per gate of a single layer, differentiated at 0
circ = build_hva_hubbard(4, 1)
gens = []
comp = CompiledCircuit(circ)
k = circ.n_params
eps = 1e-6
for s in range(k):
    def apply_gen(x, s=s):
        th = np.zeros(k)
        th[s] = eps
        th2 = np.zeros(k)
        th2[s] = -eps
        return (comp.run(x, th) - comp.run(x, th2)) / (2 * eps)
    gens.append(sector(apply_gen))

# commutant: solve [G_i, X] = 0 for all i over the sector
d = len(idx)
rows = []
for G in gens:
    I = np.eye(d)
    rows.append(np.kron(I, G) - np.kron(G.T, I))
A = np.vstack(rows)
_, sv, Vh = np.linalg.svd(A)
null = Vh[sv.size - np.sum(sv < 1e-8):] if np.sum(sv < 1e-8) else Vh[:0]
# count also trailing rows when A is wide
nnull = np.sum(sv < 1e-8) + max(0, Vh.shape[0] - sv.size)
print("commutant dimension", nnull)

ref = idx.index(0b11000011)
e_ref = np.zeros(d)
e_ref[ref] = 1.0
gs = v[:, 0]
print("F_max bound pieces: |<gs|ref>|^2 =", abs(gs[ref]) ** 2)

# project ref onto eigenspaces of each nontrivial commutant element
for j in range(nnull):
    X = Vh[Vh.shape[0] - nnull + j].reshape(d, d)
    X = (X + X.conj().T) / 2
    if np.linalg.norm(X - np.trace(X) / d * np.eye(d)) < 1e-8:
        continue
    lw, lv = np.linalg.eigh(X)
    amps = lv.conj().T @ e_ref
    groups = {}
    for lam, a in zip(lw, np.abs(amps) ** 2):
        key = round(lam, 6)
        groups[key] = groups.get(key, 0.0) + a
    big = {k2: round(val, 4) for k2, val in groups.items() if val > 1e-6}
    print("commutant op", j, "ref weights by eigenvalue:", big)
    # ground-state weights
    gamps = lv.conj().T @ gs.astype(complex)
    gro = {}
    for lam, a in zip(lw, np.abs(gamps) ** 2):
        key = round(lam, 6)
        gro[key] = gro.get(key, 0.0) + a
    gbig = {k2: round(val, 4) for k2, val in gro.items() if val > 1e-6}
    print("          gs weights:", gbig)
