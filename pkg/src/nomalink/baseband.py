"""Complex-baseband constellations and hard-decision demapping.

Complex numpy scalars and arrays carry the I/Q pair everywhere in this
package: the real part is the in-phase component, the imaginary part the
quadrature component.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["Constellation", "BPSK", "QPSK", "modulate", "demap_nearest"]


@dataclass(frozen=True)
class Constellation:
    """Unit-average-energy symbol alphabet with an index <-> bit-label map.

    The point at index ``i`` carries the bits of ``i`` written MSB-first in
    ``bits_per_symbol`` digits, so for QPSK index = 2*b_I + b_Q.
    """

    name: str
    points: np.ndarray
    bits_per_symbol: int

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=np.complex128)
        if pts.shape != (2 ** self.bits_per_symbol,):
            raise ValueError(
                f"{self.name}: need {2 ** self.bits_per_symbol} points, got {pts.shape}"
            )
        object.__setattr__(self, "points", pts)
        # index -> bit label, one row per point, MSB first
        idx = np.arange(pts.size)
        table = np.stack(
            [(idx >> (self.bits_per_symbol - 1 - k)) & 1 for k in range(self.bits_per_symbol)],
            axis=1,
        ).astype(np.uint8)
        object.__setattr__(self, "bit_table", table)

    bit_table: np.ndarray = None  # filled in __post_init__


# bit 0 -> +1, bit 1 -> -1
BPSK = Constellation("BPSK", np.array([1.0, -1.0]), 1)

# Gray-coded, (b_I, b_Q) sets the I then Q sign, unit average energy
QPSK = Constellation(
    "QPSK",
    np.array([1 + 1j, 1 - 1j, -1 + 1j, -1 - 1j]) / np.sqrt(2.0),
    2,
)


def modulate(bits, c: Constellation) -> np.ndarray:
    """Map a bit sequence to constellation symbols (MSB-first per symbol)."""
    bits = np.asarray(bits, dtype=np.int64)
    if bits.ndim != 1:
        raise ValueError("bits must be one-dimensional")
    if np.any((bits != 0) & (bits != 1)):
        raise ValueError("bits must be 0/1 valued")
    k = c.bits_per_symbol
    if bits.size % k != 0:
        raise ValueError(f"bit count {bits.size} not divisible by {k}")
    groups = bits.reshape(-1, k)
    weights = 1 << np.arange(k - 1, -1, -1)
    return c.points[groups @ weights]


def demap_nearest(y, c: Constellation) -> np.ndarray:
    """Hard-decide each sample to its nearest constellation point's bits.

    Ties go to the lowest point index.  Returns a flat bit array of length
    ``y.size * bits_per_symbol``, the inverse layout of :func:`modulate`.
    """
    y = np.asarray(y, dtype=np.complex128)
    if not np.all(np.isfinite(y.view(np.float64))):
        raise ValueError("received samples must be finite")
    d = np.abs(y.reshape(-1, 1) - c.points[None, :]) ** 2
    idx = np.argmin(d, axis=1)  # argmin takes the first minimum: lowest index
    return c.bit_table[idx].reshape(-1)
