"""Exact truncated power series in the energy variable q and two color
variables y1, y2.

Every character computed by this package is a value of this type.
Coefficients are plain Python integers, so arithmetic is exact at any size;
no floating point is used anywhere.  A series carries a uniform truncation
order ``trunc``: the coefficient of q^m is tracked exactly for m <= trunc
and discarded beyond that.  Combining two series therefore requires equal
truncations; a mismatch is always a caller bug and raises instead of being
silently reconciled.

Zero coefficients are never stored, so structural equality of the term maps
is semantic equality of the truncated series.
"""

from typing import Iterator, Mapping, NamedTuple


class SeriesError(ValueError):
    """Contract violation in series arithmetic."""


class TruncationMismatch(SeriesError):
    """Binary operation applied to series with different truncation orders."""


class NonPositiveExponent(SeriesError):
    """A geometric factor with q-step < 1 would not truncate to a polynomial."""


class OutOfTruncation(SeriesError):
    """The requested q-degree is beyond the truncation: unknown, not zero."""


class SeriesKey(NamedTuple):
    """Exponent triple (q_deg, y1_deg, y2_deg) of one term."""

    q_deg: int
    y1_deg: int
    y2_deg: int


KeyLike = SeriesKey | tuple[int, int, int]


class TruncatedSeries:
    """Sparse integer series truncated at q^trunc.

    Instances are immutable after construction and safe to share; all
    operations return new series.
    """

    __slots__ = ("trunc", "terms")

    def __init__(self, trunc: int, terms: Mapping[KeyLike, int] | None = None):
        if trunc < 0:
            raise ValueError(f"truncation order must be >= 0, got {trunc}")
        clean: dict[SeriesKey, int] = {}
        if terms:
            for key, c in terms.items():
                q, u, v = key
                if q < 0 or u < 0 or v < 0:
                    raise ValueError(f"negative exponent in key {key!r}")
                if q > trunc:
                    raise OutOfTruncation(
                        f"key {key!r} has q_deg beyond truncation {trunc}"
                    )
                if not isinstance(c, int):
                    raise TypeError(f"coefficient {c!r} is not an exact integer")
                if c:
                    clean[SeriesKey(q, u, v)] = c
        object.__setattr__(self, "trunc", trunc)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    def coeff(self, key: KeyLike) -> int:
        """Coefficient at `key`, 0 if absent.  Raises OutOfTruncation when the
        q-degree exceeds the truncation order (the value is unknown there)."""
        q = key[0]
        if q > self.trunc:
            raise OutOfTruncation(f"q^{q} is beyond truncation {self.trunc}")
        return self.terms.get(SeriesKey(*key), 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.trunc == other.trunc and self.terms == other.terms

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        merged = dict(self.terms)
        for key, c in other.terms.items():
            merged[key] = merged.get(key, 0) + c
        return TruncatedSeries(self.trunc, merged)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        trunc = self.trunc
        # iterate the smaller factor in the outer loop
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[tuple[int, int, int], int] = {}
        for (q1, u1, v1), c1 in a.items():
            for (q2, u2, v2), c2 in b.items():
                q = q1 + q2
                if q > trunc:
                    continue
                key = (q, u1 + u2, v1 + v2)
                out[key] = out.get(key, 0) + c1 * c2
        return TruncatedSeries(trunc, out)

    def _check_compatible(self, other) -> None:
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if self.trunc != other.trunc:
            raise TruncationMismatch(
                f"truncation orders differ: {self.trunc} != {other.trunc}"
            )

    def sorted_terms(self) -> list[tuple[SeriesKey, int]]:
        """Terms sorted lexicographically by (q_deg, y1_deg, y2_deg); this is
        the canonical serialization order."""
        return sorted(self.terms.items())

    def counts_by_q(self) -> list[int]:
        """Specialize y1 = y2 = 1: entry m is the total coefficient at q^m."""
        out = [0] * (self.trunc + 1)
        for (q, _u, _v), c in self.terms.items():
            out[q] += c
        return out

    def __iter__(self) -> Iterator[tuple[SeriesKey, int]]:
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"TruncatedSeries(trunc={self.trunc}, {len(self.terms)} terms)"


def make_zero(trunc: int) -> TruncatedSeries:
    """The zero series at the given truncation."""
    return TruncatedSeries(trunc)


def make_one(trunc: int) -> TruncatedSeries:
    """The constant series 1."""
    return TruncatedSeries(trunc, {(0, 0, 0): 1})


def monomial(trunc: int, q_deg: int, y1_deg: int, y2_deg: int, c: int = 1) -> TruncatedSeries:
    """A single term c * q^q_deg y1^y1_deg y2^y2_deg."""
    return TruncatedSeries(trunc, {(q_deg, y1_deg, y2_deg): c})


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def coeff(s: TruncatedSeries, key: KeyLike) -> int:
    return s.coeff(key)


def geometric_inverse_factor(trunc: int, m: int, a: int, b: int) -> TruncatedSeries:
    """Expansion of 1 / (1 - q^m y1^a y2^b) through q^trunc.

    Requires m >= 1 so that only finitely many powers survive truncation.
    """
    if m < 1:
        raise NonPositiveExponent(f"geometric factor needs q-step >= 1, got {m}")
    if a < 0 or b < 0:
        raise ValueError("color exponents must be non-negative")
    terms = {}
    j = 0
    while j * m <= trunc:
        terms[(j * m, j * a, j * b)] = 1
        j += 1
    return TruncatedSeries(trunc, terms)


def qpoch_inverse(trunc: int, r: int) -> TruncatedSeries:
    """Expansion of 1 / ((1-q)(1-q^2)...(1-q^r)); r = 0 gives 1.

    The q^m coefficient counts partitions of m into parts of size at most r.
    """
    if r < 0:
        raise ValueError(f"Pochhammer depth must be >= 0, got {r}")
    out = make_one(trunc)
    for i in range(1, r + 1):
        out = out * geometric_inverse_factor(trunc, i, 0, 0)
    return out
