import pytest

from oracles import brute_basis_series
from qpchar.fermionic import ModuleSpec, character_fermionic
from qpchar.partitions import DualChargeType, conjugate, total_exponent
from qpchar.qp_enum import QPMonomial, enumerate_basis, is_valid, iter_basis_monomials

S1 = ModuleSpec.standard(1)
S2 = ModuleSpec.standard(2)
V = ModuleSpec.verma()


# --- QPMonomial -------------------------------------------------------------

def test_monomial_energy_and_color_type():
    b = QPMonomial(color1=((1, -1), (1, -3)), color2=((3, 3),))
    assert b.energy == 1
    assert b.color_type == (2, 3)


def test_monomial_requires_weakly_decreasing_charges():
    with pytest.raises(ValueError):
        QPMonomial(color1=((1, -1), (2, -2)))


def test_monomial_requires_positive_charges():
    with pytest.raises(ValueError):
        QPMonomial(color2=((0, -1),))


# --- is_valid ---------------------------------------------------------------

def test_single_color1_particle():
    b = QPMonomial(color1=((1, -1),))
    assert is_valid(b, S1) and is_valid(b, V)
    assert not is_valid(QPMonomial(color1=((1, 0),)), V)


def test_cross_color_interaction_allows_mode_zero():
    # the color-2 bound is -1 + min(3, 1) = 0 here
    b = QPMonomial(color1=((1, -1),), color2=((1, 0),))
    assert is_valid(b, S1)
    assert not is_valid(QPMonomial(color1=((1, -1),), color2=((1, 1),)), S1)


def test_equal_charges_need_gap_two():
    assert not is_valid(QPMonomial(color2=((1, -1), (1, -1),)), V)
    assert not is_valid(QPMonomial(color2=((1, -1), (1, -2),)), V)
    assert is_valid(QPMonomial(color2=((1, -1), (1, -3),)), V)


def test_charge_caps():
    b1 = QPMonomial(color1=((2, -2),))
    assert not is_valid(b1, S1)
    assert is_valid(b1, S2) and is_valid(b1, V)
    b2 = QPMonomial(color2=((4, -4),))
    assert not is_valid(b2, S1)
    assert is_valid(b2, S2) and is_valid(b2, V)


def test_positive_mode_witness_at_energy_one():
    # two charge-1 color-1 particles raise the charge-3 color-2 bound to
    # -3 + 3 + 3 = 3: total energy 1 + 3 - 3 = 1, color type (2, 3)
    b = QPMonomial(color1=((1, -1), (1, -3)), color2=((3, 3),))
    assert is_valid(b, S1) and is_valid(b, V)
    assert not is_valid(QPMonomial(color1=((1, -1), (1, -3)), color2=((3, 4),)), V)


def test_single_charge2_color1_needs_mode_below_minus_one():
    # a lone charge-2 color-1 particle has bound -2, so mode -1 is invalid
    # even though a charge-3 color-2 partner would have bound 0
    b = QPMonomial(color1=((2, -1),), color2=((3, 0),))
    assert not is_valid(b, V)
    assert is_valid(QPMonomial(color1=((2, -2),), color2=((3, 0),)), V)


# --- enumeration vs the exhaustive mode-search oracle ------------------------

@pytest.mark.parametrize(
    "spec,qmax",
    [(S1, 0), (S1, 1), (S1, 3), (S2, 2), (V, 2)],
)
def test_enumerate_matches_mode_search_oracle(spec, qmax):
    assert dict(enumerate_basis(spec, qmax).terms) == brute_basis_series(spec, qmax)


def test_level1_budget_one_monomials():
    got = {(b.energy,) + b.color_type for b in iter_basis_monomials(S1, 1)}
    assert got == {
        (0, 0, 0),
        (1, 1, 0),
        (1, 0, 1),
        (1, 1, 1),
        (1, 1, 2),
        (1, 1, 3),
        (1, 2, 3),
    }


def test_spot_value_q2_y2sq():
    # x(-2) of charge 2 is the only one; two charge-1 factors fail the gap
    assert enumerate_basis(S1, 2).coeff((2, 0, 2)) == 1


# --- agreement with the fermionic sum ----------------------------------------

@pytest.mark.parametrize("spec", [S1, S2, V])
@pytest.mark.parametrize("qmax", [0, 2, 5])
def test_enumeration_equals_fermionic_sum(spec, qmax):
    assert enumerate_basis(spec, qmax) == character_fermionic(spec, qmax)


@pytest.mark.parametrize("spec", [S1, S2, V])
def test_enumeration_equals_fermionic_sum_deep(spec):
    assert enumerate_basis(spec, 10) == character_fermionic(spec, 10)


def test_monotone_in_level():
    a = enumerate_basis(S1, 4)
    b = enumerate_basis(S2, 4)
    c = enumerate_basis(V, 4)
    for lo, hi in ((a, b), (b, c)):
        assert all(v <= hi.terms.get(k, 0) for k, v in lo.terms.items())


# --- generator / validator self-consistency ----------------------------------

def test_every_enumerated_monomial_revalidates():
    for spec in (S1, S2, V):
        seen = set()
        for b in iter_basis_monomials(spec, 4):
            assert is_valid(b, spec)
            assert b.energy <= 4
            assert b not in seen, "double counted"
            seen.add(b)


def test_energy_floor_is_dual_exponent():
    # per charge type the least energy equals the exponent of its dual counts,
    # and every monomial sits at or above it
    floor_seen: dict[tuple, int] = {}
    for b in iter_basis_monomials(S2, 5):
        n1 = tuple(n for n, _ in b.color1)
        n2 = tuple(n for n, _ in b.color2)
        e = total_exponent(DualChargeType(conjugate(n1), conjugate(n2)))
        assert b.energy >= e
        key = (n1, n2)
        floor_seen[key] = min(floor_seen.get(key, 10 ** 9), b.energy - e)
    assert set(floor_seen.values()) == {0}
