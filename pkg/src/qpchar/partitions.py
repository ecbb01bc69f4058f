"""Partitions, conjugation, and the quadratic energy bookkeeping.

A partition is a plain tuple of weakly decreasing positive integers (the
empty tuple is allowed).  Entries beyond the stored length read as zero.

A quasi-particle monomial is described in two conjugate ways:

* by its *charge list* per color -- the weakly decreasing charges n_p of the
  individual quasi-particles;
* by its *dual counts* -- the conjugate partition, whose entry t counts the
  quasi-particles of charge >= t.

The minimal energy of a monomial is naturally a sum of per-particle mode
bounds over the charge list, but the character sum is indexed by dual counts.
The three ``*_energy_*`` pairs below compute the same quantity from either
side; their agreement under conjugation is what makes the two indexings
interchangeable, and is checked property-style in the test suite.

For the cross-color interaction the dual-count expression groups the color-2
counts in threes: block s pairs the color-1 count r1^(s) with the color-2
counts r2^(3s-2), r2^(3s-1), r2^(3s).  The factor three is the number of
times the short simple root fits into the long one's pairing.
"""

from typing import NamedTuple

Partition = tuple[int, ...]


def validate_partition(p: Partition) -> None:
    """Raise ValueError unless p is a weakly decreasing tuple of positives."""
    prev = None
    for x in p:
        if not isinstance(x, int) or x < 1:
            raise ValueError(f"partition entries must be positive integers: {p!r}")
        if prev is not None and x > prev:
            raise ValueError(f"partition entries must be weakly decreasing: {p!r}")
        prev = x


def conjugate(p: Partition) -> Partition:
    """Transpose of the Young diagram: entry t counts parts of size >= t."""
    if not p:
        return ()
    out = [0] * p[0]
    for x in p:
        for t in range(x):
            out[t] += 1
    return tuple(out)


def _entry(p: Partition, t: int) -> int:
    # 1-based read with zero padding beyond the stored length
    return p[t - 1] if 1 <= t <= len(p) else 0


class DualChargeType(NamedTuple):
    """Dual counts of a two-color monomial: r1 for color 1, r2 for color 2."""

    r1: Partition
    r2: Partition


def diag_energy_from_charges(n: Partition) -> int:
    """Same-color minimal energy from the charge list:

        sum_p ( n_p + 2 * sum_{p' < p} min(n_p, n_p') ).
    """
    total = 0
    for p, np in enumerate(n):
        total += np
        for q in range(p):
            total += 2 * min(np, n[q])
    return total


def diag_energy_from_dual(r: Partition) -> int:
    """Same quantity from the dual counts: the sum of squared entries."""
    return sum(x * x for x in r)


def mixed_energy_from_charges(n1: Partition, n2: Partition) -> int:
    """Cross-color interaction from the charge lists:

        sum over color-2 charges c2 and color-1 charges c1 of min(c2, 3*c1).
    """
    return sum(min(c2, 3 * c1) for c2 in n2 for c1 in n1)


def mixed_energy_from_dual(d: DualChargeType) -> int:
    """Cross-color interaction from the dual counts, grouping color-2 counts
    in threes: sum_s r1^(s) * (r2^(3s-2) + r2^(3s-1) + r2^(3s))."""
    r1, r2 = d
    total = 0
    for s in range(1, len(r1) + 1):
        triple = _entry(r2, 3 * s) + _entry(r2, 3 * s - 1) + _entry(r2, 3 * s - 2)
        total += r1[s - 1] * triple
    return total


def total_exponent(d: DualChargeType) -> int:
    """q-exponent of the character term indexed by d:

        sum r1^(s)^2 + sum r2^(s)^2 - sum_s r1^(s) * (three-block of r2).

    Always >= 0, and zero only for the empty d: writing a = r1^(s) and
    x, y, z for its color-2 block, each block equals
    a^2/4 + (x-a/2)^2 + (y-a/2)^2 + (z-a/2)^2.
    """
    return (
        diag_energy_from_dual(d.r1)
        + diag_energy_from_dual(d.r2)
        - mixed_energy_from_dual(d)
    )
