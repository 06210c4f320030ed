"""Circuit IR over {PREP_Z, MEAS_Z, H, CNOT}, flag-bridge builder, verifier.

A circuit is a fixed sequence of timesteps, each a set of gates on
pairwise-disjoint qubits. Qubit indices 0..d-1 are data qubits (matching
the code's qubit labels); ancillas follow. Every ancilla is prepared in Z
basis before first use and measured in Z basis after last use, within the
circuit itself — ancillas reused by later circuits are re-prepared there.

The flag-bridge builder realizes check measurement through small encoded
ancilla blocks: flags are entangled with syndrome ancillas by f-CNOTs
before and after the data-coupling window, so a fault on an ancilla that
would spread onto several data qubits also flips a flag. The builder
covers checks whose letters are uniform per check (pure X or pure Z);
mixed-letter checks (five-qubit code) ship as explicit literal schedules
in the library module.

Pullback semantics used throughout: conjugating a Pauli backward through
CNOT(c, t) maps X_t -> X_t, X_c -> X_c X_t, Z_c -> Z_c, Z_t -> Z_c Z_t
(the map is its own inverse); H swaps X and Z.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

from .pauli import PauliString


class Role(enum.Enum):
    DATA = "data"
    SYNDROME = "syndrome"
    FLAG = "flag"


class GateKind(enum.Enum):
    PREP_Z = "prep"
    MEAS_Z = "meas"
    H = "h"
    CNOT = "cnot"


class CnotClass(enum.Enum):
    S_CNOT = "s"  # data <-> ancilla
    F_CNOT = "f"  # ancilla <-> ancilla


@dataclass(frozen=True)
class Gate:
    kind: GateKind
    qubits: tuple[int, ...]  # control first for CNOT
    cnot_class: CnotClass | None = None

    def __post_init__(self) -> None:
        want = 2 if self.kind is GateKind.CNOT else 1
        if len(self.qubits) != want:
            raise ValueError(f"{self.kind.value} takes {want} qubit(s)")
        if self.kind is GateKind.CNOT:
            if self.cnot_class is None:
                raise ValueError("CNOT needs a cnot_class")
            if self.qubits[0] == self.qubits[1]:
                raise ValueError("CNOT qubits must differ")
        elif self.cnot_class is not None:
            raise ValueError("cnot_class only applies to CNOT")

    @property
    def control(self) -> int:
        return self.qubits[0]

    @property
    def target(self) -> int:
        return self.qubits[1]


def prep(q: int) -> Gate:
    return Gate(GateKind.PREP_Z, (q,))


def meas(q: int) -> Gate:
    return Gate(GateKind.MEAS_Z, (q,))


def h(q: int) -> Gate:
    return Gate(GateKind.H, (q,))


def cnot(c: int, t: int, klass: CnotClass) -> Gate:
    return Gate(GateKind.CNOT, (c, t), klass)


def scnot(c: int, t: int) -> Gate:
    return cnot(c, t, CnotClass.S_CNOT)


def fcnot(c: int, t: int) -> Gate:
    return cnot(c, t, CnotClass.F_CNOT)


class CircuitError(ValueError):
    pass


@dataclass(frozen=True)
class Circuit:
    """One syndrome-extraction circuit (possibly covering several checks)."""

    roles: tuple[Role, ...]
    timesteps: tuple[tuple[Gate, ...], ...]
    measured_checks: tuple[tuple[int, PauliString], ...]
    name: str = ""

    def __post_init__(self) -> None:
        self._validate()

    # -- structure ---------------------------------------------------------

    @property
    def num_qubits(self) -> int:
        return len(self.roles)

    @property
    def num_data(self) -> int:
        return sum(1 for r in self.roles if r is Role.DATA)

    @property
    def depth(self) -> int:
        return len(self.timesteps)

    @property
    def data_qubits(self) -> tuple[int, ...]:
        return tuple(q for q, r in enumerate(self.roles) if r is Role.DATA)

    @property
    def syndrome_qubits(self) -> tuple[int, ...]:
        return tuple(q for q, r in enumerate(self.roles) if r is Role.SYNDROME)

    @property
    def flag_qubits(self) -> tuple[int, ...]:
        return tuple(q for q, r in enumerate(self.roles) if r is Role.FLAG)

    @property
    def ancilla_qubits(self) -> tuple[int, ...]:
        return tuple(q for q, r in enumerate(self.roles) if r is not Role.DATA)

    def gates(self):
        """All gates in timestep order (within-step order as stored)."""
        for step in self.timesteps:
            yield from step

    def used_qubits(self) -> tuple[int, ...]:
        used = set()
        for g in self.gates():
            used.update(g.qubits)
        return tuple(sorted(used))

    def _validate(self) -> None:
        d = self.num_data
        if any(r is Role.DATA for r in self.roles[d:]):
            raise CircuitError("data qubits must precede all ancillas")
        first: dict[int, GateKind] = {}
        last: dict[int, GateKind] = {}
        for step in self.timesteps:
            seen: set[int] = set()
            for g in step:
                for q in g.qubits:
                    if not 0 <= q < self.num_qubits:
                        raise CircuitError(f"gate on unknown qubit {q}")
                    if q in seen:
                        raise CircuitError(f"qubit {q} used twice in one timestep")
                    seen.add(q)
                    first.setdefault(q, g.kind)
                    last[q] = g.kind
                if g.kind is GateKind.CNOT:
                    n_data = sum(1 for q in g.qubits if self.roles[q] is Role.DATA)
                    want = 1 if g.cnot_class is CnotClass.S_CNOT else 0
                    if n_data != want:
                        raise CircuitError(
                            f"{g.cnot_class.value}-CNOT on wrong roles: {g.qubits}")
        for g in self.gates():
            if g.kind in (GateKind.PREP_Z, GateKind.MEAS_Z):
                if self.roles[g.qubits[0]] is Role.DATA:
                    raise CircuitError(f"data qubit {g.qubits[0]} prepared or measured")
        for q in self.ancilla_qubits:
            if q not in first:
                continue
            if first[q] is not GateKind.PREP_Z:
                raise CircuitError(f"ancilla {q} used before PREP_Z")
            if last[q] is not GateKind.MEAS_Z:
                raise CircuitError(f"ancilla {q} not measured last")
        syn = set(self.syndrome_qubits)
        seen_s = set()
        for s, check in self.measured_checks:
            if s not in syn:
                raise CircuitError(f"measured check on non-syndrome qubit {s}")
            if s in seen_s:
                raise CircuitError(f"two checks claim syndrome qubit {s}")
            seen_s.add(s)
            if check.n != d:
                raise CircuitError("check length != data-qubit count")

    # -- Heisenberg pullback ------------------------------------------------

    def pull_back(self, op: PauliString) -> PauliString:
        """Conjugate ``op`` (over the full qubit universe) backward from the
        end of the circuit to preparation time."""
        if op.n != self.num_qubits:
            raise CircuitError("operator length != qubit count")
        x, z = op.x, op.z
        for step in reversed(self.timesteps):
            for g in step:
                if g.kind is GateKind.H:
                    q = g.qubits[0]
                    bx, bz = x >> q & 1, z >> q & 1
                    x ^= (bx ^ bz) << q
                    z ^= (bx ^ bz) << q
                elif g.kind is GateKind.CNOT:
                    c, t = g.qubits
                    if x >> c & 1:
                        x ^= 1 << t
                    if z >> t & 1:
                        z ^= 1 << c
        return PauliString(self.num_qubits, x, z)

    def data_part(self, op: PauliString) -> PauliString:
        """Restrict an operator over the circuit universe to data qubits,
        re-expressed over n = num_data."""
        mask = (1 << self.num_data) - 1
        return PauliString(self.num_data, op.x & mask, op.z & mask)


def verify_measures(circuit: Circuit) -> list[str]:
    """Prove the circuit measures what it claims; returns problems (empty = pass).

    For each (syndrome qubit s, check T): Z_s pulled back to preparation
    time must equal T on the data qubits and a tensor of Z's on ancillas
    (all PREP_Z-initialized, hence a deterministic +1 at preparation). For
    each flag qubit the pulled-back Z must act trivially on data and have
    no X part, so fault-free flags are deterministically 0 and carry no
    data information.
    """
    problems = []
    n = circuit.num_qubits
    data_mask = (1 << circuit.num_data) - 1
    anc_mask = ~data_mask & ((1 << n) - 1)
    for s, check in circuit.measured_checks:
        back = circuit.pull_back(PauliString.single(n, "Z", s))
        got = circuit.data_part(back)
        if got != check:
            problems.append(
                f"syndrome qubit {s}: pullback measures {got}, wants {check}")
        if back.x & anc_mask:
            problems.append(
                f"syndrome qubit {s}: pullback has X on ancillas (outcome not deterministic)")
    for f in circuit.flag_qubits:
        back = circuit.pull_back(PauliString.single(n, "Z", f))
        if (back.x | back.z) & data_mask:
            problems.append(
                f"flag qubit {f}: pullback touches data ({circuit.data_part(back)})")
        if back.x & anc_mask:
            problems.append(
                f"flag qubit {f}: pullback has X on ancillas (outcome not deterministic)")
    covered = {s for s, _ in circuit.measured_checks}
    for s in circuit.syndrome_qubits:
        if s not in covered:
            problems.append(f"syndrome qubit {s} has no declared check")
    return problems


# -- statistics -------------------------------------------------------------


@dataclass(frozen=True)
class CircuitStats:
    ancillas: int
    operations: int
    f_cnots: int
    s_cnots: int
    timesteps: int

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.ancillas, self.operations, self.f_cnots,
                self.s_cnots, self.timesteps)


def characterize(circuits: list[Circuit]) -> CircuitStats:
    """Resource counts of a sequentially executed circuit set.

    Ancillas are distinct ancilla indices across the whole set (circuits
    sharing ancilla qubits count them once); operations include every
    PREP_Z/MEAS_Z/H per circuit; timesteps are the summed per-circuit
    depths (sequential execution).
    """
    ancillas: set[int] = set()
    ops = fc = sc = steps = 0
    for c in circuits:
        ancillas.update(q for q in c.used_qubits() if c.roles[q] is not Role.DATA)
        steps += c.depth
        for g in c.gates():
            ops += 1
            if g.kind is GateKind.CNOT:
                if g.cnot_class is CnotClass.F_CNOT:
                    fc += 1
                else:
                    sc += 1
    return CircuitStats(len(ancillas), ops, fc, sc, steps)


# -- commutation-based variants ---------------------------------------------


def _gates_commute(a: Gate, b: Gate) -> bool:
    """Operator commutation of two gates (used when their order flips)."""
    if not set(a.qubits) & set(b.qubits):
        return True
    if GateKind.PREP_Z in (a.kind, b.kind) or GateKind.MEAS_Z in (a.kind, b.kind):
        return False  # state preparation/readout cannot move past anything sharing a qubit
    if a.kind is GateKind.H or b.kind is GateKind.H:
        return False  # H never commutes with an overlapping CNOT or H on the same qubit
    # both CNOT, overlapping: commute iff no qubit is control of one and
    # target of the other
    ca, ta = a.qubits
    cb, tb = b.qubits
    return not (ca == tb or ta == cb)


def commute_variant(circuit: Circuit, new_timesteps) -> Circuit:
    """Repack the same gates into new timesteps, allowing only reorderings
    expressible as exchanges of commuting gates.

    ``new_timesteps`` is a sequence of gate sequences. The gate multiset
    must be preserved; any pair of gates sharing a qubit whose relative
    order flips must commute as operators. measured_checks carry over and
    are re-verified by the caller as needed (equivalence of the measured
    operators is guaranteed; fault tolerance is not).
    """
    new_steps = tuple(tuple(s) for s in new_timesteps)

    def occurrences(steps):
        """(gate, occurrence index) -> timestep; equal gates are
        interchangeable, so matching i-th to i-th occurrence is canonical."""
        count: dict[Gate, int] = {}
        out: dict[tuple[Gate, int], int] = {}
        for t, step in enumerate(steps):
            for g in step:
                k = count.get(g, 0)
                count[g] = k + 1
                out[(g, k)] = t
        return out

    old_pos = occurrences(circuit.timesteps)
    new_pos = occurrences(new_steps)
    if set(old_pos) != set(new_pos):
        raise CircuitError("variant must contain exactly the same gates")

    for (ka, ta), (kb, tb) in itertools.combinations(old_pos.items(), 2):
        ga, gb = ka[0], kb[0]
        if not set(ga.qubits) & set(gb.qubits):
            continue
        na, nb = new_pos[ka], new_pos[kb]
        if (ta < tb) != (na < nb):
            if not _gates_commute(ga, gb):
                raise CircuitError(
                    f"reordering exchanges non-commuting gates {ga} and {gb}")
    return Circuit(circuit.roles, new_steps, circuit.measured_checks,
                   circuit.name)


# -- flag-bridge builder ------------------------------------------------------


@dataclass(frozen=True)
class FlagBridgeSpec:
    """Declarative description of one flag-bridge circuit.

    checks: the target check operators over the data qubits; each must be
        uniform-basis (all X or all Z letters).
    syndrome_qubits: one circuit ancilla index per check, in check order.
    flag_qubits: remaining ancilla indices.
    encoding_edges: ordered (flag, syndrome) pairs; each becomes one f-CNOT
        right after the opening basis change and a mirror f-CNOT right
        before the closing one (closing in reverse order).
    scnot_assignment: ordered (check_index, data_qubit, ancilla) couplings;
        per-ancilla load order follows this sequence.
    """

    num_data: int
    checks: tuple[PauliString, ...]
    syndrome_qubits: tuple[int, ...]
    flag_qubits: tuple[int, ...]
    encoding_edges: tuple[tuple[int, int], ...]
    scnot_assignment: tuple[tuple[int, int, int], ...]
    name: str = ""


class BuildError(ValueError):
    pass


def _check_basis(check: PauliString) -> str:
    if check.is_identity():
        raise BuildError("empty check")
    if check.z == 0:
        return "X"
    if check.x == 0:
        return "Z"
    raise BuildError(
        f"mixed-basis check {check} not supported by the builder; "
        "use an explicit schedule")


def build_flag_bridge(spec: FlagBridgeSpec) -> Circuit:
    """Construct and verify the flag-bridge circuit for ``spec``.

    Layout: PREP all ancillas | basis-change H | encoding f-CNOTs |
    data couplings | mirrored f-CNOTs | H | MEAS all ancillas. A Z letter
    on data qubit q assigned to ancilla a couples as CNOT(q -> a); an X
    letter as CNOT(a -> q). For Z-type checks the H (and hence the
    encoding root) sits on the flags; for X-type checks on the syndrome
    ancillas; an ancilla serving both bases is rejected.

    Gates are packed greedily as-soon-as-possible, preserving the coupling
    order of scnot_assignment between any two gates sharing a qubit. The
    result always passes :func:`verify_measures` (raises BuildError
    otherwise), but fault tolerance must be checked separately.
    """
    if len(spec.checks) != len(spec.syndrome_qubits):
        raise BuildError("need exactly one syndrome qubit per check")
    bases = [_check_basis(c) for c in spec.checks]
    ancillas = tuple(sorted(set(spec.syndrome_qubits) | set(spec.flag_qubits)))
    if min(ancillas, default=spec.num_data) < spec.num_data:
        raise BuildError("ancilla indices must follow data indices")
    basis_of: dict[int, str] = {}
    for (ci, q, a) in spec.scnot_assignment:
        b = bases[ci]
        if basis_of.setdefault(a, b) != b:
            raise BuildError(f"ancilla {a} hosts both X and Z couplings")
        letter = spec.checks[ci].letter(q)
        if letter != b:
            raise BuildError(f"check {ci} has no {b} letter on qubit {q}")
    for ci, check in enumerate(spec.checks):
        assigned = sorted(q for (c, q, _) in spec.scnot_assignment if c == ci)
        if tuple(assigned) != check.support():
            raise BuildError(f"couplings of check {ci} do not cover {check}")
        s = spec.syndrome_qubits[ci]
        if basis_of.setdefault(s, bases[ci]) != bases[ci]:
            raise BuildError(f"syndrome qubit {s} hosts couplings of the other basis")
    for (f, s) in spec.encoding_edges:
        if f not in spec.flag_qubits or s not in spec.syndrome_qubits:
            raise BuildError(f"encoding edge ({f}, {s}) is not flag->syndrome")
        sb = basis_of.get(s, "Z")
        if basis_of.setdefault(f, sb) != sb:
            raise BuildError(f"encoding edge ({f}, {s}) mixes bases")
    for f in spec.flag_qubits:
        if not any(e[0] == f for e in spec.encoding_edges):
            raise BuildError(f"flag {f} has no encoding edge")

    roles = [Role.DATA] * spec.num_data + [Role.FLAG] * len(ancillas)
    role_list = list(roles)
    for s in spec.syndrome_qubits:
        role_list[s] = Role.SYNDROME

    def h_qubits() -> list[int]:
        # Z-basis blocks carry the basis change on their flags, X-basis
        # blocks on their syndrome ancillas; the other side stays in Z.
        out = {s for s, b in zip(spec.syndrome_qubits, bases) if b == "X"}
        out |= {f for f in spec.flag_qubits if basis_of.get(f, "Z") == "Z"}
        return sorted(out)

    def edge_gate(f: int, s: int) -> Gate:
        if basis_of.get(s, basis_of.get(f, "Z")) == "Z":
            return fcnot(f, s)
        return fcnot(s, f)

    def load_gate(ci: int, q: int, a: int) -> Gate:
        return scnot(q, a) if bases[ci] == "Z" else scnot(a, q)

    # a coupling shared by several checks on the same ancilla is emitted
    # once (the encoding structure fans its parity out to every syndrome
    # the hosting ancilla bridges to)
    loads: list[Gate] = []
    seen_pairs: set[tuple[int, int]] = set()
    for (ci, q, a) in spec.scnot_assignment:
        if (q, a) in seen_pairs:
            continue
        seen_pairs.add((q, a))
        loads.append(load_gate(ci, q, a))

    ordered: list[Gate] = []
    ordered += [prep(a) for a in ancillas]
    ordered += [h(q) for q in h_qubits()]
    ordered += [edge_gate(f, s) for (f, s) in spec.encoding_edges]
    ordered += loads
    ordered += [edge_gate(f, s) for (f, s) in reversed(spec.encoding_edges)]
    ordered += [h(q) for q in h_qubits()]
    ordered += [meas(a) for a in ancillas]

    timesteps = _pack_asap(ordered)
    checks_full = tuple(zip(spec.syndrome_qubits, spec.checks))
    circ = Circuit(tuple(role_list), timesteps, checks_full, spec.name)
    problems = verify_measures(circ)
    if problems:
        raise BuildError("built circuit fails verification: " + "; ".join(problems))
    return circ


def _pack_asap(ordered: list[Gate]) -> tuple[tuple[Gate, ...], ...]:
    """Greedy list scheduling preserving order between overlapping gates."""
    ready_at: dict[int, int] = {}
    steps: list[list[Gate]] = []
    for g in ordered:
        t = max((ready_at.get(q, 0) for q in g.qubits), default=0)
        while len(steps) <= t:
            steps.append([])
        steps[t].append(g)
        for q in g.qubits:
            ready_at[q] = t + 1
    return tuple(tuple(s) for s in steps)


# -- text serialization -------------------------------------------------------

_ROLE_NAMES = {r.value: r for r in Role}


def dumps_circuit(circuit: Circuit) -> str:
    """Line-based text form; round-trips losslessly through loads_circuit.

    Grammar (one construct per line, # starts a comment):
        qubit <idx> <data|syndrome|flag>
        prep <q> | meas <q> | h <q> | cnot <control> <target> <s|f>
        tick                      (separates timesteps)
        check <syndrome_q> <pauli string over data qubits>
    Gate lines between two ticks form one timestep.
    """
    lines = [f"qubit {q} {r.value}" for q, r in enumerate(circuit.roles)]
    for i, step in enumerate(circuit.timesteps):
        if i:
            lines.append("tick")
        for g in step:
            if g.kind is GateKind.CNOT:
                lines.append(f"cnot {g.control} {g.target} {g.cnot_class.value}")
            else:
                lines.append(f"{g.kind.value} {g.qubits[0]}")
    for s, check in circuit.measured_checks:
        lines.append(f"check {s} {check}")
    return "\n".join(lines) + "\n"


def loads_circuit(text: str, name: str = "") -> Circuit:
    roles: dict[int, Role] = {}
    steps: list[list[Gate]] = [[]]
    checks: list[tuple[int, PauliString]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kw = parts[0]
        if kw == "qubit":
            roles[int(parts[1])] = _ROLE_NAMES[parts[2]]
        elif kw == "tick":
            steps.append([])
        elif kw in ("prep", "meas", "h"):
            kind = {"prep": GateKind.PREP_Z, "meas": GateKind.MEAS_Z,
                    "h": GateKind.H}[kw]
            steps[-1].append(Gate(kind, (int(parts[1]),)))
        elif kw == "cnot":
            klass = CnotClass.S_CNOT if parts[3] == "s" else CnotClass.F_CNOT
            steps[-1].append(cnot(int(parts[1]), int(parts[2]), klass))
        elif kw == "check":
            checks.append((int(parts[1]), PauliString.from_label(parts[2])))
        else:
            raise CircuitError(f"unknown construct {kw!r}")
    if sorted(roles) != list(range(len(roles))):
        raise CircuitError("qubit indices must be contiguous from 0")
    role_tuple = tuple(roles[q] for q in range(len(roles)))
    step_tuple = tuple(tuple(s) for s in steps if s)
    return Circuit(role_tuple, step_tuple, tuple(checks), name)
