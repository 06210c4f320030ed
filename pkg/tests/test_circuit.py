"""Circuit IR, pullback verifier, builder, variants, text format."""

import pytest
from hypothesis import given, settings, strategies as st

from flagbridge.circuit import (
    BuildError, Circuit, CircuitError, CnotClass, FlagBridgeSpec, Gate,
    GateKind, Role, build_flag_bridge, characterize, commute_variant,
    dumps_circuit, fcnot, h, loads_circuit, meas, prep, scnot, verify_measures,
)
from flagbridge.pauli import PauliString


def zcheck(n, *qs):
    return PauliString(n, 0, sum(1 << q for q in qs))


def xcheck(n, *qs):
    return PauliString(n, sum(1 << q for q in qs), 0)


def bare_circuit():
    """PREP s | 4 sequential loads | MEAS s measuring Z on {0,1,2,3}."""
    roles = (Role.DATA,) * 4 + (Role.SYNDROME,)
    steps = ((prep(4),), (scnot(0, 4),), (scnot(1, 4),), (scnot(2, 4),),
             (scnot(3, 4),), (meas(4),))
    return Circuit(roles, steps, ((4, zcheck(4, 0, 1, 2, 3)),), "bare-z")


class TestGate:
    def test_cnot_needs_class(self):
        with pytest.raises(ValueError):
            Gate(GateKind.CNOT, (0, 1))

    def test_cnot_distinct_qubits(self):
        with pytest.raises(ValueError):
            scnot(1, 1)

    def test_arity(self):
        with pytest.raises(ValueError):
            Gate(GateKind.H, (0, 1))


class TestCircuitValidation:
    def test_double_use_in_timestep(self):
        roles = (Role.DATA, Role.SYNDROME)
        with pytest.raises(CircuitError, match="twice"):
            Circuit(roles, ((prep(1), h(1)),), ())

    def test_ancilla_must_be_prepared(self):
        roles = (Role.DATA, Role.SYNDROME)
        with pytest.raises(CircuitError, match="PREP"):
            Circuit(roles, ((scnot(0, 1),), (meas(1),)), ())

    def test_ancilla_must_be_measured(self):
        roles = (Role.DATA, Role.SYNDROME)
        with pytest.raises(CircuitError, match="measured"):
            Circuit(roles, ((prep(1),), (scnot(0, 1),)), ())

    def test_scnot_role_check(self):
        roles = (Role.DATA, Role.SYNDROME, Role.FLAG)
        with pytest.raises(CircuitError, match="CNOT on wrong roles"):
            Circuit(roles, ((prep(1), prep(2)), (fcnot(0, 1),),
                            (meas(1), meas(2))), ())

    def test_data_never_prepared(self):
        roles = (Role.DATA, Role.SYNDROME)
        with pytest.raises(CircuitError, match="prepared or measured"):
            Circuit(roles, ((prep(0),),), ())

    def test_data_must_precede_ancillas(self):
        with pytest.raises(CircuitError, match="precede"):
            Circuit((Role.SYNDROME, Role.DATA), (), ())


class TestPullback:
    def test_single_cnot(self):
        c = bare_circuit()
        back = c.pull_back(PauliString.single(5, "Z", 4))
        assert str(back) == "ZZZZZ"

    def test_verify_bare(self):
        assert verify_measures(bare_circuit()) == []

    def test_missing_load_detected(self):
        roles = (Role.DATA,) * 4 + (Role.SYNDROME,)
        steps = ((prep(4),), (scnot(0, 4),), (scnot(1, 4),), (scnot(2, 4),),
                 (meas(4),))
        c = Circuit(roles, steps, ((4, zcheck(4, 0, 1, 2, 3)),))
        problems = verify_measures(c)
        assert problems and "measures" in problems[0]

    def test_x_check_pullback(self):
        # X-type bare: H s | loads reversed | H s
        roles = (Role.DATA, Role.DATA, Role.SYNDROME)
        steps = ((prep(2),), (h(2),), (scnot(2, 0),), (scnot(2, 1),),
                 (h(2),), (meas(2),))
        c = Circuit(roles, steps, ((2, xcheck(2, 0, 1)),))
        assert verify_measures(c) == []


class TestBuilder:
    def fig1c_spec(self, basis="Z"):
        check = zcheck(4, 0, 1, 2, 3) if basis == "Z" else xcheck(4, 0, 1, 2, 3)
        return FlagBridgeSpec(
            num_data=4, checks=(check,), syndrome_qubits=(4,),
            flag_qubits=(5,), encoding_edges=((5, 4),),
            scnot_assignment=tuple((0, q, 4) for q in range(4)),
            name="fig1c")

    def test_fig1c_shape(self):
        c = build_flag_bridge(self.fig1c_spec())
        stats = characterize([c])
        assert stats.as_tuple() == (2, 12, 2, 4, 10)
        assert verify_measures(c) == []

    def test_two_two_split_depth_eight(self):
        spec = FlagBridgeSpec(
            num_data=4, checks=(zcheck(4, 0, 1, 2, 3),),
            syndrome_qubits=(4,), flag_qubits=(5,), encoding_edges=((5, 4),),
            scnot_assignment=((0, 0, 4), (0, 1, 4), (0, 2, 5), (0, 3, 5)))
        c = build_flag_bridge(spec)
        assert characterize([c]).as_tuple() == (2, 12, 2, 4, 8)

    def test_x_type_mirrors(self):
        c = build_flag_bridge(self.fig1c_spec("X"))
        assert verify_measures(c) == []
        # X-type carries its H pair on the syndrome ancilla
        hs = [g for g in c.gates() if g.kind is GateKind.H]
        assert all(g.qubits == (4,) for g in hs) and len(hs) == 2

    def test_star_shared_coupling(self):
        # two weight-4 Z checks sharing data qubits 2,3 through the flag
        spec = FlagBridgeSpec(
            num_data=6,
            checks=(zcheck(6, 0, 1, 2, 3), zcheck(6, 2, 3, 4, 5)),
            syndrome_qubits=(6, 8), flag_qubits=(7,),
            encoding_edges=((7, 6), (7, 8)),
            scnot_assignment=(
                (0, 0, 6), (0, 1, 6), (1, 4, 8), (1, 5, 8),
                (0, 2, 7), (0, 3, 7), (1, 2, 7), (1, 3, 7)),
            name="star")
        c = build_flag_bridge(spec)
        assert verify_measures(c) == []
        stats = characterize([c])
        # shared couplings are emitted once: 6 s-CNOTs, not 8
        assert stats.s_cnots == 6
        assert stats.as_tuple() == (3, 18, 4, 6, 10)

    def test_mixed_basis_check_rejected(self):
        spec = FlagBridgeSpec(
            num_data=2, checks=(PauliString.from_label("XZ"),),
            syndrome_qubits=(2,), flag_qubits=(), encoding_edges=(),
            scnot_assignment=((0, 0, 2), (0, 1, 2)))
        with pytest.raises(BuildError, match="mixed-basis"):
            build_flag_bridge(spec)

    def test_incomplete_coverage_rejected(self):
        spec = FlagBridgeSpec(
            num_data=4, checks=(zcheck(4, 0, 1, 2, 3),),
            syndrome_qubits=(4,), flag_qubits=(), encoding_edges=(),
            scnot_assignment=((0, 0, 4), (0, 1, 4)))
        with pytest.raises(BuildError, match="cover"):
            build_flag_bridge(spec)

    def test_ancilla_basis_conflict_rejected(self):
        spec = FlagBridgeSpec(
            num_data=4,
            checks=(zcheck(4, 0, 1), xcheck(4, 2, 3)),
            syndrome_qubits=(4, 5), flag_qubits=(), encoding_edges=(),
            scnot_assignment=((0, 0, 4), (0, 1, 4), (1, 2, 4), (1, 3, 5)))
        with pytest.raises(BuildError):
            build_flag_bridge(spec)


class TestCommuteVariant:
    def test_fig1b_from_fig1c(self):
        spec = TestBuilder().fig1c_spec()
        c = build_flag_bridge(spec)
        # move the two f-CNOTs inside the load window: f-CNOT and s-CNOT
        # sharing the target ancilla commute
        fc = fcnot(5, 4)
        loads = [scnot(q, 4) for q in range(4)]
        new_steps = ((prep(4), prep(5)), (h(5),), (loads[0],), (fc,),
                     (loads[1],), (loads[2],), (fc,), (loads[3],),
                     (h(5),), (meas(4), meas(5)))
        v = commute_variant(c, new_steps)
        assert verify_measures(v) == []
        assert v.depth == 10

    def test_gate_multiset_must_match(self):
        c = build_flag_bridge(TestBuilder().fig1c_spec())
        steps = list(c.timesteps)[:-1]  # drop the MEAS step
        with pytest.raises(CircuitError, match="same gates"):
            commute_variant(c, steps)

    def test_noncommuting_swap_rejected(self):
        # CNOT(0->1) then CNOT(1->2): target of one is control of the other
        roles = (Role.DATA, Role.SYNDROME, Role.FLAG)
        steps = ((prep(1), prep(2)), (scnot(0, 1),), (fcnot(1, 2),),
                 (meas(1), meas(2)))
        c = Circuit(roles, steps, ())
        swapped = ((prep(1), prep(2)), (fcnot(1, 2),), (scnot(0, 1),),
                   (meas(1), meas(2)))
        with pytest.raises(CircuitError, match="non-commuting"):
            commute_variant(c, swapped)

    def test_prep_cannot_move_past_use(self):
        roles = (Role.DATA, Role.SYNDROME)
        c = Circuit(roles, ((prep(1),), (scnot(0, 1),), (meas(1),)), ())
        with pytest.raises(CircuitError, match="non-commuting"):
            commute_variant(c, ((scnot(0, 1),), (prep(1),), (meas(1),)))


class TestCharacterize:
    def test_counts_shared_ancillas_once(self):
        a = bare_circuit()
        stats = characterize([a, a])
        assert stats.ancillas == 1
        assert stats.operations == 12
        assert stats.timesteps == 12
        assert stats.s_cnots == 8 and stats.f_cnots == 0

    def test_empty(self):
        assert characterize([]).as_tuple() == (0, 0, 0, 0, 0)


class TestTextFormat:
    def test_round_trip_builder_output(self):
        c = build_flag_bridge(TestBuilder().fig1c_spec())
        again = loads_circuit(dumps_circuit(c), name=c.name)
        assert again == c

    def test_round_trip_bare(self):
        c = bare_circuit()
        assert loads_circuit(dumps_circuit(c), name="bare-z") == c

    def test_comments_and_blanks_ignored(self):
        text = dumps_circuit(bare_circuit())
        noisy = "# header\n\n" + text.replace("tick", "tick  # step", 1)
        assert loads_circuit(noisy, name="bare-z") == bare_circuit()

    def test_unknown_construct(self):
        with pytest.raises(CircuitError, match="unknown"):
            loads_circuit("qubit 0 data\nfoo 1\n")


@st.composite
def valid_specs(draw):
    """Random single-basis flag-bridge specs within the documented bounds."""
    num_data = draw(st.integers(3, 6))
    p = draw(st.integers(1, 3))
    m = draw(st.integers(p, 4))
    basis = draw(st.sampled_from("XZ"))
    checks = []
    for _ in range(p):
        w = draw(st.integers(2, min(4, num_data)))
        sup = tuple(sorted(draw(
            st.lists(st.integers(0, num_data - 1), min_size=w, max_size=w,
                     unique=True))))
        mask = sum(1 << q for q in sup)
        checks.append(PauliString(num_data, mask, 0) if basis == "X"
                      else PauliString(num_data, 0, mask))
    ancillas = list(range(num_data, num_data + m))
    syndromes = ancillas[:p]
    flags = ancillas[p:]
    edges = tuple((f, draw(st.sampled_from(syndromes))) for f in flags)
    assignment = []
    for ci, check in enumerate(checks):
        # a load on a flag lands in the parity of every syndrome that flag
        # bridges to, so only flags bridging exclusively to this check's
        # syndrome are sound hosts here
        own_flags = [f for f in flags
                     if all(s == syndromes[ci] for (g, s) in edges if g == f)]
        hosts = [syndromes[ci]] + own_flags
        for q in check.support():
            assignment.append((ci, q, draw(st.sampled_from(hosts))))
    return FlagBridgeSpec(num_data, tuple(checks), tuple(syndromes),
                          tuple(flags), edges, tuple(assignment))


class TestBuilderProperty:
    @settings(max_examples=120, deadline=None)
    @given(valid_specs())
    def test_built_circuits_verify(self, spec):
        c = build_flag_bridge(spec)
        assert verify_measures(c) == []

    @settings(max_examples=40, deadline=None)
    @given(valid_specs())
    def test_text_round_trip(self, spec):
        c = build_flag_bridge(spec)
        assert loads_circuit(dumps_circuit(c), name=c.name) == c
