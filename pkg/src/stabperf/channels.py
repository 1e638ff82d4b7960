"""Independent per-qubit Pauli channels."""

from __future__ import annotations

import math
from dataclasses import dataclass

# Stand-in for log(0) that keeps sums finite and exp() == 0.
LOG_ZERO = -1e18


@dataclass(frozen=True, slots=True)
class QubitChannel:
    """Per-qubit Pauli error probabilities (p_x, p_y, p_z)."""

    p_x: float
    p_y: float
    p_z: float

    def __post_init__(self):
        for name, p in (("p_x", self.p_x), ("p_y", self.p_y), ("p_z", self.p_z)):
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name} = {p} outside [0, 1]")
        if self.p_x + self.p_y + self.p_z > 1.0 + 1e-12:
            raise ValueError("p_x + p_y + p_z exceeds 1")

    @property
    def rho(self) -> float:
        """Total per-qubit error probability."""
        return self.p_x + self.p_y + self.p_z

    @property
    def bias(self) -> float:
        """Asymmetry parameter A = 2 p_z / (rho - p_z); inf for pure phase flip."""
        denom = self.rho - self.p_z
        if denom <= 0.0:
            return math.inf if self.p_z > 0.0 else float("nan")
        return 2.0 * self.p_z / denom

    def log_probs(self) -> tuple[float, float, float, float]:
        """(log p_I, log p_X, log p_Y, log p_Z) with zeros mapped to LOG_ZERO."""
        pi = 1.0 - self.rho
        return tuple(math.log(p) if p > 0.0 else LOG_ZERO for p in (pi, self.p_x, self.p_y, self.p_z))

    def describe(self) -> str:
        a = self.bias
        if self.p_x == self.p_y:
            if a == math.inf:
                return f"phase-flip(rho={self.rho:g})"
            if abs(a - 1.0) < 1e-12:
                return f"depolarizing(rho={self.rho:g})"
            return f"biased(rho={self.rho:g}, A={a:g})"
        return f"channel(p_x={self.p_x:g}, p_y={self.p_y:g}, p_z={self.p_z:g})"


def depolarizing(rho: float) -> QubitChannel:
    """Symmetric channel: p_x = p_y = p_z = rho/3."""
    return QubitChannel(rho / 3.0, rho / 3.0, rho / 3.0)


def phase_flip(rho: float) -> QubitChannel:
    """Z-only channel: p_z = rho."""
    return QubitChannel(0.0, 0.0, rho)


def biased(rho: float, bias: float) -> QubitChannel:
    """Channel with p_x = p_y and A = 2 p_z / (rho - p_z).

    A = 1 is depolarizing; A = inf degenerates to the phase-flip channel.
    """
    if bias == math.inf:
        return phase_flip(rho)
    if bias < 0:
        raise ValueError("bias must be >= 0")
    p_z = bias * rho / (bias + 2.0)
    p_xy = rho / (bias + 2.0)
    return QubitChannel(p_xy, p_xy, p_z)


def channel_from_spec(spec: str, rho: float) -> QubitChannel:
    """Build a channel from a CLI selector: depol | phaseflip | biased:A."""
    if spec in ("depol", "depolarizing"):
        return depolarizing(rho)
    if spec in ("phaseflip", "phase-flip"):
        return phase_flip(rho)
    if spec.startswith("biased:"):
        a = spec.split(":", 1)[1]
        return biased(rho, math.inf if a in ("inf", "Inf") else float(a))
    raise ValueError(f"unknown channel spec {spec!r}")
