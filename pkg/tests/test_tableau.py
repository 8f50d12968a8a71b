import numpy as np
import pytest

from colorsurgery.codes import build_triangular_code
from colorsurgery.pauli import PauliOperator
from colorsurgery.tableau import StabilizerTableau, TableauError


def P(s, sign=1):
    return PauliOperator.from_string(s, sign=sign)


def test_z_on_zero_state():
    t = StabilizerTableau(1)
    out, det = t.measure(P("Z"), rng=np.random.default_rng(0))
    assert (out, det) == (1, True)
    assert t.expectation_deterministic(P("Z")) == 1
    assert t.expectation_deterministic(P("X")) == "undetermined"


def test_x_on_zero_state_randomizes():
    seen = set()
    for seed in range(16):
        t = StabilizerTableau(1)
        out, det = t.measure(P("X"), rng=np.random.default_rng(seed))
        assert det is False
        seen.add(out)
        # post-state stabilized by +/- X
        assert t.expectation_deterministic(P("X")) == out
        t.check_invariants()
    assert seen == {1, -1}


def test_repeat_measurement_is_deterministic():
    rng = np.random.default_rng(3)
    t = StabilizerTableau(4)
    p = P("XYZX")
    out1, det1 = t.measure(p, rng)
    out2, det2 = t.measure(p, rng)
    assert det2 and out2 == out1
    t.check_invariants()


def test_invariants_after_many_measurements():
    rng = np.random.default_rng(5)
    t = StabilizerTableau(6)
    for _ in range(40):
        x = rng.integers(0, 2, 6)
        z = rng.integers(0, 2, 6)
        if not (x.any() or z.any()):
            continue
        t.measure(PauliOperator(6, x, z, 1), rng)
        t.check_invariants()


def test_codespace_preparation_oracle():
    # freshly prepared triangular-code state: every face stabilizer is +1
    patch = build_triangular_code(3)
    stabs = patch.lattice.stabilizer_operators()
    t = StabilizerTableau.from_stabilizers(stabs + [patch.logical_z[0]])
    rng = np.random.default_rng(0)
    for s in stabs:
        out, det = t.measure(s, rng)
        assert (out, det) == (1, True)
    assert t.expectation_deterministic(patch.logical_z[0]) == 1
    assert t.expectation_deterministic(patch.logical_x[0]) == "undetermined"


def test_inconsistent_stabilizers_raise():
    with pytest.raises(TableauError):
        StabilizerTableau.from_stabilizers([P("Z"), P("Z", sign=-1)])


def test_sign_tracking_through_bell_pair():
    t = StabilizerTableau.from_stabilizers([P("XX"), P("ZZ", sign=-1)])
    assert t.expectation_deterministic(P("ZZ", sign=-1)) == 1
    assert t.expectation_deterministic(P("ZZ")) == -1
    assert t.expectation_deterministic(P("YY")) == 1  # XX * ZZ = -YY, so YY = +1
