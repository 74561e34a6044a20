"""Independent brute-force oracles used to pin expected values.

Everything here goes through explicit 2^n x 2^n Kronecker-product
matrices or plain exhaustive enumeration, deliberately sharing no code
with the library's bitmask / stabilizer paths.
"""

import numpy as np

PAULI_MATS = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

AXIS_OPS = {1: "X", 2: "Y", 3: "Z"}


def pauli_matrix(ops: str) -> np.ndarray:
    """Dense matrix of a Pauli word, qubit 1 as the leftmost Kron factor."""
    mat = np.eye(1, dtype=complex)
    for op in ops:
        mat = np.kron(mat, PAULI_MATS[op])
    return mat


def dense_expectation(amps: np.ndarray, ops: str) -> float:
    """<psi| P |psi> via the explicit matrix."""
    val = np.vdot(amps, pauli_matrix(ops) @ amps)
    assert abs(val.imag) < 1e-9
    return float(val.real)


def dense_mixture_expectation(terms, ops: str) -> float:
    return sum(w * dense_expectation(st.amplitudes, ops) for w, st in terms)


def all_full_indices(n: int):
    """All identity-free index tuples in lexicographic order."""
    from itertools import product

    return product((1, 2, 3), repeat=n)


def dense_full_tensor(terms, n: int, tol: float = 1e-9) -> dict:
    """Sparse full tensor {index tuple: value} via matrix expectations."""
    out = {}
    for idx in all_full_indices(n):
        ops = "".join(AXIS_OPS[i] for i in idx)
        val = dense_mixture_expectation(terms, ops)
        if abs(val) > tol:
            out[idx] = val
    return out


def dense_tensor_norm(terms, n: int) -> float:
    return float(np.sqrt(sum(v * v for v in dense_full_tensor(terms, n, tol=0.0).values())))


def random_state(n: int, rng) -> np.ndarray:
    amps = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
    return amps / np.linalg.norm(amps)


def random_unitary(rng) -> np.ndarray:
    z = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def apply_local_unitaries(amps: np.ndarray, unitaries) -> np.ndarray:
    """Apply one 2x2 unitary per qubit to a state vector."""
    n = len(unitaries)
    tensor = amps.reshape((2,) * n)
    for a, u in enumerate(unitaries):
        tensor = np.moveaxis(np.tensordot(u, tensor, axes=([1], [a])), 0, a)
    return tensor.reshape(-1)


def permute_qubits(amps: np.ndarray, perm) -> np.ndarray:
    """Relabel qubits: new qubit a holds old qubit perm[a] (0-based)."""
    n = len(perm)
    return amps.reshape((2,) * n).transpose(perm).reshape(-1)


def brute_admissible_partitions(n: int, k: int) -> list:
    """All k-part multisets of n via ordered-composition enumeration plus
    the at-most-one-2 filter; dedup through sorting."""

    def compositions(total, parts):
        if parts == 1:
            if total >= 1:
                yield (total,)
            return
        for first in range(1, total):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    found = {tuple(sorted(comp)) for comp in compositions(n, k)}
    return sorted(p for p in found if p.count(2) <= 1)
