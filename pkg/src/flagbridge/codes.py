"""Built-in distance-3 stabilizer codes and code-level predicates.

Ships the [[7,1,3]] self-dual CSS code, the [[5,1,3]] cyclic code and the
rotated distance-3 surface code, together with validation, brute-force
distance, stabilizer-group membership and error classification.

Qubit labelings are conventions chosen here, documented per constructor;
any relabeling gives an equivalent code. Downstream circuits reference
generator supports, not absolute labels.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

from .pauli import PauliString


class ErrorClass(enum.Enum):
    IDENTITY = "identity"      # acts trivially on the codespace
    DETECTABLE = "detectable"  # nonzero syndrome
    LOGICAL = "logical"        # trivial syndrome, nontrivial logical action


@dataclass(frozen=True)
class StabilizerCode:
    """An [[n, k]] stabilizer code with logical operator representatives.

    ``generators`` is ordered; syndrome bit i of :meth:`syndrome_of`
    reports anticommutation with ``generators[i]``. For CSS constructors
    the X-type block precedes the Z-type block.
    """

    name: str
    n: int
    k: int
    generators: tuple[PauliString, ...]
    logical_x: tuple[PauliString, ...]
    logical_z: tuple[PauliString, ...]
    _elements: list = field(default_factory=list, repr=False, compare=False)

    @property
    def r(self) -> int:
        return len(self.generators)

    def syndrome_of(self, p: PauliString) -> int:
        """Syndrome bitmask: bit i set iff p anticommutes with generator i."""
        s = 0
        for i, g in enumerate(self.generators):
            if not p.commutes(g):
                s |= 1 << i
        return s

    def syndrome_bits(self, p: PauliString) -> tuple[int, ...]:
        s = self.syndrome_of(p)
        return tuple(s >> i & 1 for i in range(self.r))

    def in_stabilizer_group(self, p: PauliString) -> bool:
        """Membership via the commutation criterion.

        A Pauli with trivial syndrome lies in the normalizer; it is a
        stabilizer element exactly when it also commutes with every
        logical representative (otherwise it acts as a nontrivial logical
        operator). Requires logical_x/logical_z to be complete
        representative sets, which validate_code enforces.
        """
        if self.syndrome_of(p) != 0:
            return False
        return all(p.commutes(l) for l in self.logical_x + self.logical_z)

    def logical_class(self, p: PauliString) -> ErrorClass:
        if self.syndrome_of(p) != 0:
            return ErrorClass.DETECTABLE
        if all(p.commutes(l) for l in self.logical_x + self.logical_z):
            return ErrorClass.IDENTITY
        return ErrorClass.LOGICAL

    def elements(self) -> list[PauliString]:
        """All 2^r stabilizer-group elements (cached; r <= 8 in scope)."""
        if not self._elements:
            out = [PauliString.identity(self.n)]
            for g in self.generators:
                out += [e * g for e in out]
            self._elements.extend(out)
        return self._elements

    def coset_weight(self, p: PauliString) -> int:
        """Minimum weight of p over its stabilizer coset."""
        return min((p * e).weight() for e in self.elements())


def validate_code(code: StabilizerCode) -> list[str]:
    """Check every StabilizerCode invariant; returns problems (empty = OK)."""
    problems = []
    gens = code.generators
    for i, g in enumerate(gens):
        if g.n != code.n:
            problems.append(f"generator {i} has wrong length")
    for (i, a), (j, b) in itertools.combinations(enumerate(gens), 2):
        if not a.commutes(b):
            problems.append(f"generators {i} and {j} anticommute")
    if _gf2_rank(gens, code.n) != len(gens):
        problems.append("generators are not independent")
    if len(gens) != code.n - code.k:
        problems.append(f"expected {code.n - code.k} generators, got {len(gens)}")
    if len(code.logical_x) != code.k or len(code.logical_z) != code.k:
        problems.append("logical representative count != k")
    for j, (lx, lz) in enumerate(zip(code.logical_x, code.logical_z)):
        if lx.commutes(lz):
            problems.append(f"logical X[{j}] and Z[{j}] do not anticommute")
    for kind, ls in (("X", code.logical_x), ("Z", code.logical_z)):
        for j, l in enumerate(ls):
            for i, g in enumerate(gens):
                if not l.commutes(g):
                    problems.append(f"logical {kind}[{j}] anticommutes with generator {i}")
    # representatives of distinct logical qubits must commute pairwise
    tagged = [("X", j, l) for j, l in enumerate(code.logical_x)]
    tagged += [("Z", j, l) for j, l in enumerate(code.logical_z)]
    for (ka, ja, a), (kb, jb, b) in itertools.combinations(tagged, 2):
        if ja == jb:
            continue  # the anticommuting X/Z pair of one logical qubit
        if not a.commutes(b):
            problems.append(f"logical {ka}[{ja}] anticommutes with logical {kb}[{jb}]")
    return problems


def _gf2_rank(paulis: tuple[PauliString, ...], n: int) -> int:
    """Rank of the symplectic (x | z) rows over GF(2) (xor-basis insertion)."""
    basis: dict[int, int] = {}  # lowest set bit -> reduced row
    rank = 0
    for p in paulis:
        cur = p.x | (p.z << n)
        while cur:
            low = cur & -cur
            if low in basis:
                cur ^= basis[low]
            else:
                basis[low] = cur
                rank += 1
                break
    return rank


def distance(code: StabilizerCode) -> int:
    """Brute-force code distance: the minimum weight of a logical operator.

    Enumerates Paulis by increasing weight and returns the first weight at
    which some operator has trivial syndrome but acts nontrivially on the
    codespace. Bounded to n <= 12.
    """
    if code.n > 12:
        raise ValueError("brute-force distance is limited to n <= 12")
    for w in range(1, code.n + 1):
        for support in itertools.combinations(range(code.n), w):
            for letters in itertools.product("XYZ", repeat=w):
                x = z = 0
                for q, ch in zip(support, letters):
                    if ch in ("X", "Y"):
                        x |= 1 << q
                    if ch in ("Z", "Y"):
                        z |= 1 << q
                p = PauliString(code.n, x, z)
                if code.syndrome_of(p) == 0 and not code.in_stabilizer_group(p):
                    return w
    raise ValueError("no logical operator found; not a k >= 1 code")


def _css(name: str, n: int, x_supports, z_supports, lx_support, lz_support) -> StabilizerCode:
    def xop(sup):
        return PauliString(n, sum(1 << q for q in sup), 0)

    def zop(sup):
        return PauliString(n, 0, sum(1 << q for q in sup))

    gens = tuple(xop(s) for s in x_supports) + tuple(zop(s) for s in z_supports)
    return StabilizerCode(name, n, 1, gens, (xop(lx_support),), (zop(lz_support),))


def steane() -> StabilizerCode:
    """The [[7,1,3]] self-dual CSS code.

    Labeling convention: the three check supports are {0,2,4,6},
    {1,2,5,6} and {3,4,5,6} (binary-counter columns), used for both the
    X-type and Z-type generators; logicals are X/Z on {0,1,2}. Supports
    pairwise intersect in exactly two qubits and jointly cover all seven.
    """
    sups = ((0, 2, 4, 6), (1, 2, 5, 6), (3, 4, 5, 6))
    return _css("steane", 7, sups, sups, (0, 1, 2), (0, 1, 2))


def five_qubit() -> StabilizerCode:
    """The [[5,1,3]] cyclic code: four cyclic shifts of XZZXI."""
    labels = ("XZZXI", "IXZZX", "XIXZZ", "ZXIXZ")
    gens = tuple(PauliString.from_label(s) for s in labels)
    return StabilizerCode(
        "five_qubit", 5, 1, gens,
        (PauliString.from_label("XXXXX"),),
        (PauliString.from_label("ZZZZZ"),),
    )


def rotated_surface_d3() -> StabilizerCode:
    """Rotated distance-3 surface code on a 3x3 data grid.

    Convention: data qubit q sits at row q // 3, column q % 3. Bulk
    checks are the two weight-4 X plaquettes {0,1,3,4}, {4,5,7,8} and the
    two weight-4 Z plaquettes {1,2,4,5}, {3,4,6,7}; boundary checks are
    weight-2 (X: {2,5}, {3,6}; Z: {0,1}, {7,8}). Logical X is the top
    row {0,1,2}; logical Z the left column {0,3,6}.
    """
    x_sups = ((0, 1, 3, 4), (4, 5, 7, 8), (2, 5), (3, 6))
    z_sups = ((1, 2, 4, 5), (3, 4, 6, 7), (0, 1), (7, 8))
    return _css("surface_d3", 9, x_sups, z_sups, (0, 1, 2), (0, 3, 6))


def dumps_code(code: StabilizerCode) -> str:
    """Render the text form: ``n k name`` header, generator lines, then
    LX/LZ logical lines."""
    lines = [f"{code.n} {code.k} {code.name}"]
    lines += [str(g) for g in code.generators]
    lines += [f"LX {l}" for l in code.logical_x]
    lines += [f"LZ {l}" for l in code.logical_z]
    return "\n".join(lines) + "\n"


def loads_code(text: str) -> StabilizerCode:
    """Parse the text form produced by :func:`dumps_code`."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty code text")
    head = lines[0].split()
    if len(head) != 3:
        raise ValueError(f"bad header {lines[0]!r}, expected 'n k name'")
    n, k, name = int(head[0]), int(head[1]), head[2]
    gens, lxs, lzs = [], [], []
    for ln in lines[1:]:
        if ln.startswith("LX "):
            lxs.append(PauliString.from_label(ln[3:]))
        elif ln.startswith("LZ "):
            lzs.append(PauliString.from_label(ln[3:]))
        else:
            gens.append(PauliString.from_label(ln))
    code = StabilizerCode(name, n, k, tuple(gens), tuple(lxs), tuple(lzs))
    problems = validate_code(code)
    if problems:
        raise ValueError("invalid code: " + "; ".join(problems))
    return code
