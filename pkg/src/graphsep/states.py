"""Constructors for graph, GHZ, W and cluster states plus colored-noise mixtures.

Graph states are built by applying a controlled-Z along every edge of a
simple graph to |+>^n.  The cluster state is realized as the linear-chain
graph state, which is local-unitary equivalent to the usual product-form
definition and therefore has the same correlation-tensor norm.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .pauli import MixedEnsemble, PureState


@dataclass(frozen=True)
class GraphSpec:
    """Simple undirected graph on vertices 1..n (no loops, no multi-edges)."""

    n: int
    edges: tuple

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("graph needs at least 2 vertices")
        seen = set()
        normalized = []
        for edge in self.edges:
            a, b = edge
            if a == b:
                raise ValueError(f"self-loop at vertex {a}")
            if not (1 <= a <= self.n and 1 <= b <= self.n):
                raise ValueError(f"edge {edge} outside 1..{self.n}")
            key = (min(a, b), max(a, b))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            normalized.append(key)
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    def adjacency_masks(self) -> list[int]:
        """Neighbor bitmask per vertex, qubit 1 at the top bit."""
        masks = [0] * (self.n + 1)
        for a, b in self.edges:
            masks[a] |= 1 << (self.n - b)
            masks[b] |= 1 << (self.n - a)
        return masks[1:]


def complete_graph(n: int) -> GraphSpec:
    """All n(n-1)/2 edges between n vertices."""
    return GraphSpec(n, tuple((a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)))


def chain_graph(n: int) -> GraphSpec:
    """Linear chain 1-2-...-n."""
    return GraphSpec(n, tuple((a, a + 1) for a in range(1, n)))


def star_graph(n: int) -> GraphSpec:
    """Vertex 1 connected to all others."""
    return GraphSpec(n, tuple((1, b) for b in range(2, n + 1)))


def graph_state(spec: GraphSpec) -> PureState:
    """CZ-along-every-edge applied to |+>^n; all amplitudes are +-2^(-n/2)."""
    n = spec.n
    idx = np.arange(1 << n, dtype=np.int64)
    flips = np.zeros(1 << n, dtype=np.uint8)
    for a, b in spec.edges:
        # CZ flips the sign exactly where both incident qubits are 1
        flips ^= ((idx >> (n - a)) & (idx >> (n - b)) & 1).astype(np.uint8)
    amps = (1.0 - 2.0 * flips) * 2.0 ** (-n / 2.0)
    return PureState(n, amps.astype(np.complex128), graph=spec)


def ghz_state(n: int) -> PureState:
    """(|0...0> + |1...1>)/sqrt(2)."""
    if n < 2:
        raise ValueError("GHZ state needs n >= 2")
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[0] = amps[-1] = 1.0 / math.sqrt(2.0)
    return PureState(n, amps)


def w_state(n: int) -> PureState:
    """Equal superposition of the n single-excitation basis states."""
    if n < 2:
        raise ValueError("W state needs n >= 2")
    amps = np.zeros(1 << n, dtype=np.complex128)
    for a in range(n):
        amps[1 << a] = 1.0 / math.sqrt(n)
    return PureState(n, amps)


def cluster_state(n: int) -> PureState:
    """Linear cluster state, constructed as the chain graph state."""
    if n < 2:
        raise ValueError("cluster state needs n >= 2")
    return graph_state(chain_graph(n))


def all_ones_state(n: int) -> PureState:
    """The product state |1>^n."""
    if n < 1:
        raise ValueError("need at least one qubit")
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[-1] = 1.0
    return PureState(n, amps)


def noisy_mixture(base: PureState, p: float) -> MixedEnsemble:
    """Mix a base state with the colored product noise |1><1|^n at weight p.

    Returns {(1-p, base), (p, |1...1>)}; the p = 0 and p = 1 endpoints
    collapse to the corresponding single-term ensemble.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"noise probability must be in [0, 1], got {p}")
    if p == 0.0:
        return MixedEnsemble(((1.0, base),))
    if p == 1.0:
        return MixedEnsemble(((1.0, all_ones_state(base.n)),))
    return MixedEnsemble(((1.0 - p, base), (p, all_ones_state(base.n))))


def is_all_ones(state: PureState) -> bool:
    """True when the state is exactly |1...1> (up to a 1e-12 tolerance)."""
    amps = state.amplitudes
    return (
        abs(amps[-1] - 1.0) <= 1e-12
        and np.count_nonzero(np.abs(amps[:-1]) > 1e-12) == 0
    )
