"""The character as a fermionic sum over dual charge counts.

Both graded characters computed by this package have the shape

    sum over pairs of weakly decreasing count sequences (r1, r2) of

        q^total_exponent(r1, r2)
        / prod_t (q)_{r1^(t) - r1^(t+1)} / prod_t (q)_{r2^(t) - r2^(t+1)}
        * y1^(sum r1) * y2^(sum r2)

where (q)_r = (1-q)(1-q^2)...(1-q^r) and the last difference in each product
is taken against zero.  For the level-k standard module the sequence lengths
are capped at k (color 1) and 3k (color 2) -- equivalently, quasi-particle
charges are capped at k and 3k.  The generalized Verma module has no caps.

Enumeration of the index set is exact: a pair contributes within truncation
qmax iff total_exponent <= qmax, and the search is pruned with the block
lower bound described in `enumerate_dual_charge_types`.
"""

from dataclasses import dataclass

from .partitions import DualChargeType, Partition, total_exponent
from .series import TruncatedSeries


@dataclass(frozen=True)
class ModuleSpec:
    """Selects which vacuum module's principal subspace is graded.

    level k >= 1 selects the level-k standard module; level None selects the
    generalized Verma module (no charge caps).
    """

    level: int | None = None

    def __post_init__(self):
        if self.level is not None and self.level < 1:
            raise ValueError(f"level must be >= 1, got {self.level}")

    @classmethod
    def standard(cls, k: int) -> "ModuleSpec":
        return cls(level=k)

    @classmethod
    def verma(cls) -> "ModuleSpec":
        return cls(level=None)

    @property
    def color1_cap(self) -> int | None:
        """Max charge of a color-1 quasi-particle; also the max length of the
        dual count sequence r1.  None means unbounded."""
        return self.level

    @property
    def color2_cap(self) -> int | None:
        """Max charge of a color-2 quasi-particle (three times the level);
        also the max length of r2.  None means unbounded."""
        return None if self.level is None else 3 * self.level

    def describe(self) -> str:
        if self.level is None:
            return "generalized Verma module"
        return f"level-{self.level} standard module"


def _min_block(a: int) -> int:
    # minimal exponent contribution of a block with color-1 count a, i.e.
    # min over integers x,y,z >= 0 of a^2 + x^2 + y^2 + z^2 - a(x+y+z)
    return (a * a + 3) // 4


def enumerate_dual_charge_types(spec: ModuleSpec, qmax: int) -> list[DualChargeType]:
    """All pairs (r1, r2) with total_exponent <= qmax under the spec's caps.

    The search is recursive descent, first over r1 entries then over r2
    entries, both weakly decreasing.  Pruning is by exact lower bounds on the
    exponent of any completion:

    * an r1 prefix with entries a_s can always be completed at cost exactly
      sum_s ceil(a_s^2/4) (take each color-2 block entry as close to a_s/2 as
      integers allow; the choices are weakly decreasing because the a_s are),
      so prefixes are extended iff that floor stays within budget;
    * an r2 prefix is extended with entry x at flattened position j only if
      the accumulated exponent plus sum over remaining positions of
      min_{0 <= x' <= x} (x'^2 - a x') still fits.  Those per-position minima
      are <= 0, so the bound is valid, and positions past the last r1 block
      contribute x'^2 >= 0, so the recursion terminates.

    Every emitted pair is checked against the budget before inclusion, hence
    the returned set is exactly the stated one, without duplicates.
    """
    if qmax < 0:
        raise ValueError(f"qmax must be >= 0, got {qmax}")
    cap1 = spec.color1_cap
    cap2 = spec.color2_cap
    out: list[DualChargeType] = []

    def descend_r2(r1: tuple[int, ...]) -> None:
        a = r1
        nblocks = len(a)
        total_a2 = sum(x * x for x in a)
        a_head = a[0] if a else 1

        def block_charge(j: int) -> int:
            s = (j + 2) // 3  # 1-based position j sits in block ceil(j/3)
            return a[s - 1] if s <= nblocks else 0

        def suffix_floor(j: int, cap: int) -> int:
            # minimal possible sum of x^2 - a*x over positions j..3*nblocks,
            # each entry capped at `cap`; entries past 3*nblocks add >= 0
            tot = 0
            for jj in range(j, 3 * nblocks + 1):
                aa = block_charge(jj)
                t = min(cap, aa // 2)
                tot += t * t - aa * t
            return tot

        xs: list[int] = []

        def rec(j: int, cap: int | None, acc: int) -> None:
            if total_a2 + acc <= qmax:
                out.append(DualChargeType(a, tuple(xs)))
            if cap2 is not None and j > cap2:
                return
            aa = block_charge(j)
            x = 1
            while cap is None or x <= cap:
                acc2 = acc + x * x - aa * x
                if total_a2 + acc2 + suffix_floor(j + 1, x) <= qmax:
                    xs.append(x)
                    rec(j + 1, x, acc2)
                    xs.pop()
                elif cap is None and x >= a_head:
                    # past every parabola vertex: larger x only costs more
                    break
                x += 1

        rec(1, None, 0)

    prefix: list[int] = []

    def descend_r1(cost: int) -> None:
        descend_r2(tuple(prefix))
        if cap1 is not None and len(prefix) >= cap1:
            return
        top = prefix[-1] if prefix else None
        val = 1
        while top is None or val <= top:
            c = cost + _min_block(val)
            if c > qmax:
                break  # the block floor grows with the entry
            prefix.append(val)
            descend_r1(c)
            prefix.pop()
            val += 1

    descend_r1(0)
    return out


def _difference_multiset(r: Partition) -> tuple[int, ...]:
    # nonzero consecutive differences, last entry taken against 0;
    # zero differences contribute (q)_0 = 1 and are dropped
    if not r:
        return ()
    diffs = [r[i] - r[i + 1] for i in range(len(r) - 1)]
    diffs.append(r[-1])
    return tuple(sorted(d for d in diffs if d))


def character_fermionic(spec: ModuleSpec, qmax: int) -> TruncatedSeries:
    """Evaluate the fermionic character sum, truncated at q^qmax.

    The Pochhammer denominators of one index pair depend only on the multiset
    of consecutive differences of its count sequences, so their expansions
    are shared across pairs.  Each expansion is the coefficient list of
    prod_d 1/(q)_d, computed by the standard in-place geometric pass: one
    sweep c[j] += c[j-i] per factor 1/(1-q^i).
    """
    terms: dict[tuple[int, int, int], int] = {}
    cache: dict[tuple[int, ...], list[int]] = {}

    def poch_expansion(diffs: tuple[int, ...]) -> list[int]:
        coeffs = cache.get(diffs)
        if coeffs is None:
            coeffs = [1] + [0] * qmax
            for d in diffs:
                for i in range(1, d + 1):
                    for j in range(i, qmax + 1):
                        coeffs[j] += coeffs[j - i]
            cache[diffs] = coeffs
        return coeffs

    for d in enumerate_dual_charge_types(spec, qmax):
        e = total_exponent(d)
        y1, y2 = sum(d.r1), sum(d.r2)
        diffs = tuple(sorted(_difference_multiset(d.r1) + _difference_multiset(d.r2)))
        coeffs = poch_expansion(diffs)
        for i in range(qmax - e + 1):
            c = coeffs[i]
            if c:
                key = (e + i, y1, y2)
                terms[key] = terms.get(key, 0) + c
    return TruncatedSeries(qmax, terms)
