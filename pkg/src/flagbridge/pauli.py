"""Bit-packed signless Pauli operators.

An n-qubit Pauli operator is stored as two integer bitmasks: bit q of ``x``
is set when the operator acts as X or Y on qubit q, bit q of ``z`` when it
acts as Z or Y. Global phases are deliberately not tracked; error
propagation, syndrome extraction and stabilizer-equivalence tests only
consume the symplectic part, and dropping signs halves the bookkeeping.

Text form is a string over {I, X, Y, Z} with qubit 0 leftmost, e.g.
"XZZXI" for X0 Z1 Z2 X3 on five qubits.
"""

from __future__ import annotations

from dataclasses import dataclass

_LETTERS = "IXZY"  # indexed by (x_bit | z_bit << 1)


@dataclass(frozen=True)
class PauliString:
    """Signless Pauli operator on ``n`` qubits, packed into two bitmasks.

    Immutable value type; products, commutation and syndromes are pure
    functions of the two masks. Supports n <= 64 comfortably (plain Python
    ints carry arbitrary width, but the packed convention assumes every
    in-scope system fits one machine word).
    """

    n: int
    x: int = 0
    z: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("negative qubit count")
        mask = (1 << self.n) - 1
        if (self.x | self.z) & ~mask:
            raise ValueError("support outside qubit range")

    @classmethod
    def identity(cls, n: int) -> "PauliString":
        return cls(n, 0, 0)

    @classmethod
    def from_label(cls, label: str) -> "PauliString":
        """Parse "XZZXI"-style text, qubit 0 leftmost.

        >>> p = PauliString.from_label("XZZXI")
        >>> p.weight()
        4
        >>> str(p)
        'XZZXI'
        """
        x = z = 0
        for q, ch in enumerate(label.strip().upper()):
            if ch == "I":
                continue
            if ch in ("X", "Y"):
                x |= 1 << q
            if ch in ("Z", "Y"):
                z |= 1 << q
            if ch not in "IXYZ":
                raise ValueError(f"bad Pauli letter {ch!r}")
        return cls(len(label.strip()), x, z)

    @classmethod
    def single(cls, n: int, kind: str, qubit: int) -> "PauliString":
        """One-qubit operator ``kind`` in {X, Y, Z} at ``qubit``."""
        if not 0 <= qubit < n:
            raise ValueError("qubit out of range")
        bit = 1 << qubit
        if kind == "X":
            return cls(n, bit, 0)
        if kind == "Z":
            return cls(n, 0, bit)
        if kind == "Y":
            return cls(n, bit, bit)
        raise ValueError(f"bad Pauli kind {kind!r}")

    def letter(self, qubit: int) -> str:
        """Single-qubit letter at ``qubit``."""
        idx = (self.x >> qubit & 1) | ((self.z >> qubit & 1) << 1)
        return _LETTERS[idx]

    def __str__(self) -> str:
        return "".join(self.letter(q) for q in range(self.n))

    def __mul__(self, other: "PauliString") -> "PauliString":
        """Signless product (= symplectic XOR of the masks)."""
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return PauliString(self.n, self.x ^ other.x, self.z ^ other.z)

    def commutes(self, other: "PauliString") -> bool:
        """True iff the operators commute.

        Two Paulis anticommute exactly when the symplectic form
        x1.z2 + z1.x2 is odd.
        """
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return ((self.x & other.z).bit_count()
                + (self.z & other.x).bit_count()) % 2 == 0

    def weight(self) -> int:
        return (self.x | self.z).bit_count()

    def support(self) -> tuple[int, ...]:
        s = self.x | self.z
        return tuple(q for q in range(self.n) if s >> q & 1)

    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0

    def restricted_to(self, qubits: int) -> "PauliString":
        """Projection onto the qubit set given as a bitmask (same n)."""
        return PauliString(self.n, self.x & qubits, self.z & qubits)
