"""Pauli words and their expectation values on qubit state vectors.

Conventions used throughout the package:

  * A Pauli word is a string over {I, X, Y, Z}, one letter per qubit,
    qubit 1 written first.
  * Basis indices put qubit 1 in the most significant bit:
    |b_1 b_2 ... b_n>  <->  index sum_a b_a * 2**(n - a).
  * Identity-free words are also handled as index tuples over {1, 2, 3}
    with 1 -> X, 2 -> Y, 3 -> Z ("full index").

Expectation values are evaluated with a single O(2^n) pass over the
amplitude vector (bit flips for X/Y, parity signs for Y/Z); no 2^n x 2^n
matrix is ever built.  Everything here is a pure function of immutable
inputs, so callers may evaluate many expectations concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

NORM_TOL = 1e-9
IMAG_TOL = 1e-9

_AXIS_LETTER = {1: "X", 2: "Y", 3: "Z"}


@dataclass(frozen=True)
class PauliString:
    """Hermitian tensor product of single-qubit I/X/Y/Z operators."""

    ops: str

    def __post_init__(self):
        if not self.ops:
            raise ValueError("Pauli string must act on at least one qubit")
        bad = set(self.ops) - set("IXYZ")
        if bad:
            raise ValueError(f"invalid Pauli letters: {sorted(bad)}")

    @property
    def n(self) -> int:
        return len(self.ops)

    def masks(self) -> tuple[int, int, int]:
        """Return (x_mask, z_mask, y_count) with qubit 1 at the top bit.

        x_mask flags bit-flipping letters (X, Y); z_mask flags
        phase-carrying letters (Y, Z).
        """
        n = len(self.ops)
        x_mask = z_mask = y_count = 0
        for a, op in enumerate(self.ops):
            bit = 1 << (n - 1 - a)
            if op in "XY":
                x_mask |= bit
            if op in "YZ":
                z_mask |= bit
            if op == "Y":
                y_count += 1
        return x_mask, z_mask, y_count

    def __str__(self) -> str:
        return self.ops


def embed(idx: Sequence[int]) -> PauliString:
    """Embed an identity-free index tuple (1->X, 2->Y, 3->Z) as a Pauli word."""
    try:
        ops = "".join(_AXIS_LETTER[i] for i in idx)
    except KeyError as exc:
        raise ValueError(f"full-index entries must be in {{1,2,3}}, got {exc}") from None
    return PauliString(ops)


def pack_index(idx: Iterable[int]) -> int:
    """Pack a full-index tuple into a base-3 integer (qubit 1 most significant).

    Packed keys sort exactly like the index tuples, which keeps sparse-map
    iteration canonical.
    """
    packed = 0
    for i in idx:
        if i not in (1, 2, 3):
            raise ValueError(f"full-index entries must be in {{1,2,3}}, got {i}")
        packed = packed * 3 + (i - 1)
    return packed


def unpack_index(packed: int, n: int) -> tuple[int, ...]:
    """Inverse of pack_index for an n-qubit index."""
    digits = []
    for _ in range(n):
        packed, d = divmod(packed, 3)
        digits.append(d + 1)
    return tuple(reversed(digits))


@dataclass(frozen=True, eq=False)
class PureState:
    """Normalized n-qubit state vector (qubit 1 = most significant bit).

    ``graph`` tags states produced by a graph-state constructor so that
    tensor sweeps can take the stabilizer shortcut; it carries no physics
    beyond that.
    """

    n: int
    amplitudes: np.ndarray
    graph: object = field(default=None, compare=False)

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        if self.n < 1:
            raise ValueError("need at least one qubit")
        if amps.shape != (1 << self.n,):
            raise ValueError(f"expected {1 << self.n} amplitudes, got {amps.shape}")
        nrm = float(np.sum(np.abs(amps) ** 2))
        if abs(nrm - 1.0) > NORM_TOL:
            raise ValueError(f"state not normalized: sum |a|^2 = {nrm}")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    def __repr__(self) -> str:
        return f"PureState(n={self.n})"


@dataclass(frozen=True, eq=False)
class MixedEnsemble:
    """Convex mixture of pure states, stored as (weight, state) terms."""

    terms: tuple

    def __post_init__(self):
        terms = tuple((float(w), st) for w, st in self.terms)
        if not terms:
            raise ValueError("ensemble needs at least one term")
        if any(w <= 0 for w, _ in terms):
            raise ValueError("all ensemble weights must be positive")
        total = sum(w for w, _ in terms)
        if abs(total - 1.0) > NORM_TOL:
            raise ValueError(f"ensemble weights sum to {total}, expected 1")
        n = terms[0][1].n
        if any(st.n != n for _, st in terms):
            raise ValueError("all ensemble members must have the same qubit count")
        object.__setattr__(self, "terms", terms)

    @property
    def n(self) -> int:
        return self.terms[0][1].n


def pure_ensemble(state: PureState) -> MixedEnsemble:
    """Wrap a pure state as the degenerate one-term ensemble."""
    return MixedEnsemble(((1.0, state),))


@lru_cache(maxsize=None)
def _index_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Cached (basis indices, bit-parity table) for n qubits."""
    idx = np.arange(1 << n, dtype=np.int64)
    parity = np.zeros(1 << n, dtype=np.uint8)
    for b in range(n):
        parity ^= ((idx >> b) & 1).astype(np.uint8)
    return idx, parity


_I_POW = (1.0, 1.0j, -1.0, -1.0j)


def _expectation_masks(amps: np.ndarray, x_mask: int, z_mask: int, y_count: int) -> float:
    """<psi| P |psi> for P given by its flip/phase masks."""
    n = int(amps.shape[0]).bit_length() - 1
    idx, parity = _index_arrays(n)
    flipped = amps[idx ^ x_mask] if x_mask else amps
    signs = 1.0 - 2.0 * parity[idx & z_mask] if z_mask else 1.0
    val = _I_POW[y_count & 3] * np.vdot(flipped, amps * signs)
    if abs(val.imag) > IMAG_TOL:
        raise RuntimeError(f"expectation has imaginary residue {val.imag}")
    return float(val.real)


def expectation(state: PureState, p: PauliString) -> float:
    """Expectation value of a Pauli word on a pure state.

    Raises ValueError on qubit-count mismatch; the result of a Hermitian
    word on a normalized state always lands in [-1, 1] up to rounding.
    """
    if state.n != p.n:
        raise ValueError(f"state has {state.n} qubits, Pauli word has {p.n}")
    val = _expectation_masks(state.amplitudes, *p.masks())
    if abs(val) > 1.0 + NORM_TOL:
        raise RuntimeError(f"expectation {val} outside [-1, 1]")
    return val


def ensemble_expectation(ens: MixedEnsemble, p: PauliString) -> float:
    """Mixture expectation: the weight-averaged pure-state expectations."""
    if ens.n != p.n:
        raise ValueError(f"ensemble has {ens.n} qubits, Pauli word has {p.n}")
    masks = p.masks()
    return sum(w * _expectation_masks(st.amplitudes, *masks) for w, st in ens.terms)


def kron_states(a: PureState, b: PureState) -> PureState:
    """Tensor product of two pure states (a's qubits come first)."""
    return PureState(a.n + b.n, np.kron(a.amplitudes, b.amplitudes))
