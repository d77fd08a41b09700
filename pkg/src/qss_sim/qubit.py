"""Single-photon polarization qubit: the four protocol states, the two
bit-encoding unitaries, and projective measurement in either basis.

States are full complex 2-vectors (not a 4-symbol enum) so that channel noise
and eavesdropper resends can leave the protocol set. Global phase is never
observable; state comparisons go through :func:`equal_up_to_phase`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

# Central tolerances; tests may pass overrides to equal_up_to_phase.
NORM_TOL = 1e-12
PHASE_TOL = 1e-9

_SQRT_HALF = 1.0 / math.sqrt(2.0)


class Basis(Enum):
    """Measurement basis: Z is rectilinear, X is diagonal."""

    Z = "Z"
    X = "X"

    def conjugate(self) -> "Basis":
        return Basis.X if self is Basis.Z else Basis.Z


class EncodeOp(Enum):
    """Bit-encoding operations: the identity keeps a state (bit 0), the flip
    negates it within whichever basis it lives in (bit 1)."""

    I = 0
    U = 1

    @property
    def bit(self) -> int:
        return self.value

    @classmethod
    def from_bit(cls, bit: int) -> "EncodeOp":
        return cls.U if bit else cls.I


@dataclass(frozen=True)
class PrepRecord:
    """How a photon was prepared: a basis and a bit, naming one of the four
    states (Z,0) -> |0>, (Z,1) -> |1>, (X,0) -> |+>, (X,1) -> |->."""

    basis: Basis
    bit: int

    def __post_init__(self) -> None:
        if self.bit not in (0, 1):
            raise ValueError(f"bit must be 0 or 1, got {self.bit!r}")


@dataclass(frozen=True, eq=False)
class Qubit:
    """Normalized amplitude pair (amp0, amp1) in the Z basis.

    Equality is physical: two qubits compare equal when they differ only by a
    global phase. Instances are immutable values; operations return new ones.
    """

    amp0: complex
    amp1: complex

    def __post_init__(self) -> None:
        norm = math.sqrt(abs(self.amp0) ** 2 + abs(self.amp1) ** 2)
        if norm == 0.0:
            raise ValueError("qubit amplitudes cannot both be zero")
        if abs(norm - 1.0) > NORM_TOL:
            object.__setattr__(self, "amp0", self.amp0 / norm)
            object.__setattr__(self, "amp1", self.amp1 / norm)

    def norm(self) -> float:
        return math.sqrt(abs(self.amp0) ** 2 + abs(self.amp1) ** 2)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Qubit):
            return NotImplemented
        return equal_up_to_phase(self, other)

    __hash__ = None  # equality up to phase is incompatible with hashing

    def __repr__(self) -> str:
        return f"Qubit({self.amp0:.6g}, {self.amp1:.6g})"


_STATE_AMPLITUDES: dict[tuple[Basis, int], tuple[complex, complex]] = {
    (Basis.Z, 0): (1.0 + 0.0j, 0.0j),
    (Basis.Z, 1): (0.0j, 1.0 + 0.0j),
    (Basis.X, 0): (_SQRT_HALF + 0.0j, _SQRT_HALF + 0.0j),
    (Basis.X, 1): (_SQRT_HALF + 0.0j, -_SQRT_HALF + 0.0j),
}


def prepare(rec: PrepRecord) -> Qubit:
    """Return the exact protocol state named by a preparation record."""
    amp0, amp1 = _STATE_AMPLITUDES[(rec.basis, rec.bit)]
    return Qubit(amp0, amp1)


def apply(op: EncodeOp, q: Qubit) -> Qubit:
    """Apply an encoding operation.

    The flip operation is the matrix [[0, 1], [-1, 0]]: it sends |0> to -|1>,
    |1> to |0>, |+> to |->, and |-> to -|+>, i.e. it negates a state within
    its own basis up to a sign that measurement cannot see. Applying it twice
    gives the identity up to global phase.
    """
    if op is EncodeOp.I:
        return q
    return Qubit(q.amp1, -q.amp0)


def measure(q: Qubit, basis: Basis, rng) -> tuple[int, Qubit]:
    """Projectively measure a qubit, returning (outcome, collapsed state).

    The outcome follows the Born rule; outcome v collapses the qubit onto the
    canonical eigenstate prepare((basis, v)). `rng` is any object with a
    ``random()`` method yielding uniforms in [0, 1).
    """
    if basis is Basis.Z:
        p0 = abs(q.amp0) ** 2
    else:
        p0 = abs((q.amp0 + q.amp1) * _SQRT_HALF) ** 2
    p0 = min(max(p0, 0.0), 1.0)
    outcome = 0 if rng.random() < p0 else 1
    return outcome, prepare(PrepRecord(basis, outcome))


def inner(a: Qubit, b: Qubit) -> complex:
    """Inner product <a|b>."""
    return a.amp0.conjugate() * b.amp0 + a.amp1.conjugate() * b.amp1


def equal_up_to_phase(a: Qubit, b: Qubit, tol: float = PHASE_TOL) -> bool:
    """True when |<a|b>| = 1 within tolerance, i.e. the states differ only by
    a global phase factor."""
    return abs(abs(inner(a, b)) - 1.0) <= tol


def random_prep(rng) -> PrepRecord:
    """Draw a uniform preparation record over the four protocol states."""
    basis = Basis.Z if rng.randrange(2) == 0 else Basis.X
    return PrepRecord(basis, rng.randrange(2))


def random_basis(rng) -> Basis:
    return Basis.Z if rng.randrange(2) == 0 else Basis.X


def random_op(rng) -> EncodeOp:
    return EncodeOp.U if rng.randrange(2) else EncodeOp.I
