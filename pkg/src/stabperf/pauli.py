"""n-qubit Pauli operators in binary-symplectic form, phases dropped.

A Pauli is a pair of n-bit masks: bit i of x is set when qubit i+1 carries
X or Y, bit i of z when it carries Z or Y.  Qubits are numbered from 1 in
strings and reports; bit 0 of the masks is qubit 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PauliParseError

_CHAR_TO_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_BITS_TO_CHAR = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}


@dataclass(frozen=True, slots=True)
class Pauli:
    """Immutable phaseless Pauli operator on n qubits."""

    n: int
    x: int
    z: int

    def __post_init__(self):
        if self.n <= 0:
            raise ValueError("qubit count must be positive")
        mask = (1 << self.n) - 1
        if self.x & ~mask or self.z & ~mask:
            raise ValueError("bit set beyond qubit count")

    @classmethod
    def identity(cls, n: int) -> "Pauli":
        return cls(n, 0, 0)

    @classmethod
    def from_string(cls, s: str) -> "Pauli":
        if not s:
            raise PauliParseError("empty Pauli string")
        x = z = 0
        for i, ch in enumerate(s):
            bits = _CHAR_TO_BITS.get(ch)
            if bits is None:
                raise PauliParseError(
                    f"invalid character {ch!r} at position {i + 1} "
                    "(expected one of I, X, Y, Z)",
                    position=i + 1,
                )
            x |= bits[0] << i
            z |= bits[1] << i
        return cls(len(s), x, z)

    @classmethod
    def single(cls, n: int, qubit: int, kind: str) -> "Pauli":
        """Single-qubit Pauli `kind` on 1-based `qubit`."""
        if not 1 <= qubit <= n:
            raise ValueError(f"qubit {qubit} out of range 1..{n}")
        xb, zb = _CHAR_TO_BITS[kind]
        return cls(n, xb << (qubit - 1), zb << (qubit - 1))

    def to_string(self) -> str:
        return "".join(
            _BITS_TO_CHAR[((self.x >> i) & 1, (self.z >> i) & 1)]
            for i in range(self.n)
        )

    def __str__(self) -> str:
        return self.to_string()

    def __mul__(self, other: "Pauli") -> "Pauli":
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} vs {other.n}")
        return Pauli(self.n, self.x ^ other.x, self.z ^ other.z)

    def commutes(self, other: "Pauli") -> bool:
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} vs {other.n}")
        return ((self.x & other.z).bit_count() + (self.z & other.x).bit_count()) % 2 == 0

    @property
    def weight(self) -> int:
        return (self.x | self.z).bit_count()

    @property
    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0

    def support(self) -> tuple[int, ...]:
        """1-based qubits the operator acts on."""
        s = self.x | self.z
        return tuple(i + 1 for i in range(self.n) if (s >> i) & 1)


def parse_pauli(s: str) -> Pauli:
    """Parse an uppercase {I,X,Y,Z} string, leftmost character = qubit 1."""
    return Pauli.from_string(s)


def format_pauli(p: Pauli) -> str:
    return p.to_string()


def pauli_weight(p: Pauli) -> int:
    """Number of qubits carrying a non-identity Pauli."""
    return p.weight


def pauli_commutes(a: Pauli, b: Pauli) -> bool:
    """Symplectic product <a.x, b.z> + <a.z, b.x> mod 2 equals zero."""
    return a.commutes(b)


def pauli_multiply(a: Pauli, b: Pauli) -> Pauli:
    """Phaseless product: componentwise XOR of the mask pairs."""
    return a * b
