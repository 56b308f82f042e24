import math
import random

import numpy as np
import pytest

from quditcost.simverify import (
    DiagPhases,
    apply_rotation_to_state,
    apply_schedule_to_state,
    apply_z_schedule,
    basis_state,
    combine,
    equal_up_to_global_phase,
)
from quditcost.trotter import Rotation, RotationSchedule


def test_basis_state():
    s = basis_state(5, 2)
    assert s.amplitudes[2] == 1.0
    assert np.linalg.norm(s.amplitudes) == 1.0
    with pytest.raises(ValueError, match="cap"):
        basis_state(65)
    with pytest.raises(ValueError):
        basis_state(3, 5)


def test_y_half_turn():
    s = apply_rotation_to_state(basis_state(2), "Y", (0, 1), math.pi)
    assert np.allclose(s.amplitudes, [0.0, 1.0], atol=1e-15)


def test_y_equal_split_on_nonadjacent_pair():
    s = apply_rotation_to_state(basis_state(3), "Y", (0, 2), math.pi / 2)
    inv_sqrt2 = 1 / math.sqrt(2)
    assert np.allclose(s.amplitudes, [inv_sqrt2, 0.0, inv_sqrt2], atol=1e-15)


def test_z_phases_on_state():
    s = apply_rotation_to_state(basis_state(3, 1), "Z", (1, 2), 0.8)
    assert s.amplitudes[1] == pytest.approx(np.exp(-0.4j))


def test_x_rotation_unitary():
    s = apply_rotation_to_state(basis_state(2), "X", (0, 1), math.pi)
    assert np.allclose(s.amplitudes, [0.0, -1j], atol=1e-15)


def test_rotation_validation():
    with pytest.raises(ValueError, match="level pair"):
        apply_rotation_to_state(basis_state(3), "Y", (2, 1), 1.0)
    with pytest.raises(ValueError, match="axis"):
        apply_rotation_to_state(basis_state(3), "W", (0, 1), 1.0)


def test_norm_preserved_under_random_rotations():
    rng = random.Random(7)
    state = basis_state(8)
    for _ in range(200):
        axis = rng.choice(["X", "Y", "Z"])
        b = rng.randrange(0, 7)
        c = rng.randrange(b + 1, 8)
        state = apply_rotation_to_state(state, axis, (b, c), rng.uniform(-7, 7))
        assert abs(np.linalg.norm(state.amplitudes) - 1.0) < 1e-12


def test_apply_z_schedule_empty():
    sched = RotationSchedule(dim=4, rotations=())
    assert apply_z_schedule(sched).phases == (0.0,) * 4


def test_apply_z_schedule_single_rotation():
    sched = RotationSchedule(dim=3, rotations=(Rotation("Z", (0, 1), math.pi),))
    assert apply_z_schedule(sched).phases == pytest.approx([-math.pi / 2, math.pi / 2, 0.0])


def test_apply_z_schedule_rejects_other_axes():
    sched = RotationSchedule(dim=3, rotations=(Rotation("Y", (0, 1), 1.0),))
    with pytest.raises(ValueError, match="non-Z"):
        apply_z_schedule(sched)


def test_z_schedule_order_independent():
    rotations = [
        Rotation("Z", (0, 1), 0.3),
        Rotation("Z", (1, 2), -1.7),
        Rotation("Z", (0, 3), 2.2),
        Rotation("Z", (2, 3), 0.9),
    ]
    forward = apply_z_schedule(RotationSchedule(dim=4, rotations=tuple(rotations)))
    shuffled = apply_z_schedule(
        RotationSchedule(dim=4, rotations=tuple(reversed(rotations)))
    )
    assert forward.phases == pytest.approx(shuffled.phases, abs=1e-12)


def test_schedule_composition_is_additive():
    first = RotationSchedule(
        dim=3, rotations=(Rotation("Z", (0, 1), 0.4),), global_phase=0.2
    )
    second = RotationSchedule(
        dim=3, rotations=(Rotation("Z", (1, 2), -0.9),), global_phase=-0.5
    )
    merged = RotationSchedule(
        dim=3,
        rotations=first.rotations + second.rotations,
        global_phase=first.global_phase + second.global_phase,
    )
    assert apply_z_schedule(merged).phases == pytest.approx(
        combine(apply_z_schedule(first), apply_z_schedule(second)).phases
    )


def test_combine_dim_mismatch():
    with pytest.raises(ValueError):
        combine(DiagPhases(2, (0.0, 0.0)), DiagPhases(3, (0.0, 0.0, 0.0)))


def test_diag_phases_length_check():
    with pytest.raises(ValueError):
        DiagPhases(3, (0.0, 0.0))


def test_equal_up_to_global_phase_reflexive():
    a = DiagPhases(3, (0.1, -0.4, 2.0))
    ok, err = equal_up_to_global_phase(a, a)
    assert ok and err == 0.0


def test_equal_up_to_global_phase_uniform_offset():
    a = DiagPhases(3, (0.1, -0.4, 2.0))
    b = DiagPhases(3, (0.8, 0.3, 2.7))  # uniform +0.7
    ok, err = equal_up_to_global_phase(a, b)
    assert ok and err < 1e-12


def test_equal_up_to_global_phase_single_level_offset():
    a = DiagPhases(3, (0.1, -0.4, 2.0))
    b = DiagPhases(3, (0.1, 0.3, 2.0))  # +0.7 on one level only
    ok, err = equal_up_to_global_phase(a, b, tol=1e-6)
    assert not ok
    assert err == pytest.approx(abs(np.exp(0.7j) - 1.0))


def test_equal_up_to_global_phase_dim_mismatch():
    with pytest.raises(ValueError):
        equal_up_to_global_phase(DiagPhases(2, (0.0, 0.0)), DiagPhases(3, (0.0,) * 3))


def test_apply_schedule_to_state_includes_global_phase():
    sched = RotationSchedule(dim=2, rotations=(), global_phase=0.7)
    s = apply_schedule_to_state(basis_state(2), sched)
    assert s.amplitudes[0] == pytest.approx(np.exp(0.7j))


def test_apply_schedule_to_state_dim_mismatch():
    sched = RotationSchedule(dim=3, rotations=())
    with pytest.raises(ValueError):
        apply_schedule_to_state(basis_state(4), sched)
