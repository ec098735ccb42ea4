"""Exact scalars and dense tensors over the fixed basis {E0, E1, E2}.

Scalars are :class:`fractions.Fraction` values, which are always stored in
lowest terms with a positive denominator, so equality is structural.
Tensors are small (at most 3**4 = 81 entries) and stored densely.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Sequence, Union

from .errors import ParalieError

__all__ = [
    "DIM",
    "Rational",
    "Tensor",
    "as_rational",
    "basis",
    "format_rational",
    "metric_contract",
    "parse_rational",
    "qdiv",
    "vector",
]

DIM = 3

Rational = Fraction
Scalar = Union[Fraction, int]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse a rational written as ``"p/q"`` or ``"p"``.

    Decimal and exponent notation are rejected so that every input is exact.

    >>> parse_rational("-6/4")
    Fraction(-3, 2)
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParalieError(f"not a rational string: {text!r}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ParalieError(f"not a rational string: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(num, den)


def format_rational(q: Scalar) -> str:
    """Render ``q`` as ``"p/q"``, dropping the denominator when it is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and rational strings to Fraction."""
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, float):
        raise ParalieError("floating-point values are not accepted; use 'p/q' strings")
    return Fraction(x)


def qdiv(a: Scalar, b: Scalar) -> Fraction:
    """Exact quotient; raises ``ZeroDivisionError("division by zero")``."""
    if b == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(a) / Fraction(b)


Index = tuple[int, ...]


class Tensor:
    """Immutable dense tensor of rank 1..4 over a 3-dimensional space.

    Entries are addressed by index tuples in argument order, so that
    ``R[i, j, k, l]`` is ``R(E_i, E_j, E_k, E_l)``.
    """

    __slots__ = ("_rank", "_data")

    def __init__(self, rank: int, data: Iterable[Scalar]):
        if rank < 1 or rank > 4:
            raise ParalieError(f"unsupported tensor rank {rank}")
        values = tuple(v if type(v) is Fraction else Fraction(v) for v in data)
        if len(values) != DIM**rank:
            raise ParalieError(
                f"rank-{rank} tensor needs {DIM**rank} entries, got {len(values)}"
            )
        self._rank = rank
        self._data = values

    # construction

    @classmethod
    def zeros(cls, rank: int) -> Tensor:
        return cls(rank, [0] * DIM**rank)

    @classmethod
    def from_function(cls, rank: int, fn: Callable[..., Scalar]) -> Tensor:
        return cls(rank, (fn(*idx) for idx in indices(rank)))

    @classmethod
    def from_nested(cls, nested) -> Tensor:
        rank = 0
        probe = nested
        while isinstance(probe, (list, tuple)):
            rank += 1
            probe = probe[0]

        def flatten(x, depth):
            if depth == 0:
                yield as_rational(x)
                return
            if len(x) != DIM:
                raise ParalieError("every axis must have length 3")
            for item in x:
                yield from flatten(item, depth - 1)

        return cls(rank, flatten(nested, rank))

    # access

    @property
    def rank(self) -> int:
        return self._rank

    @property
    def data(self) -> tuple[Fraction, ...]:
        return self._data

    def __getitem__(self, idx) -> Fraction:
        if isinstance(idx, int):
            idx = (idx,)
        try:
            return self._data[_OFFSETS[self._rank][idx]]
        except (KeyError, TypeError):
            raise IndexError(f"invalid index {idx!r} for a rank-{self._rank} tensor") from None

    def items(self) -> Iterator[tuple[Index, Fraction]]:
        return zip(indices(self._rank), self._data)

    def nonzero(self) -> dict[Index, Fraction]:
        return {idx: v for idx, v in self.items() if v != 0}

    def is_zero(self) -> bool:
        return not any(self._data)

    def to_nested(self):
        def build(prefix: Index):
            if len(prefix) == self._rank:
                return self[prefix]
            return [build(prefix + (i,)) for i in range(DIM)]

        return build(())

    # algebra

    def _check_same(self, other: Tensor) -> None:
        if not isinstance(other, Tensor) or other._rank != self._rank:
            raise ParalieError("tensor rank mismatch")

    def __add__(self, other: Tensor) -> Tensor:
        self._check_same(other)
        return Tensor(self._rank, (a + b for a, b in zip(self._data, other._data)))

    def __sub__(self, other: Tensor) -> Tensor:
        self._check_same(other)
        return Tensor(self._rank, (a - b for a, b in zip(self._data, other._data)))

    def __neg__(self) -> Tensor:
        return Tensor(self._rank, (-a for a in self._data))

    def __mul__(self, scalar: Scalar) -> Tensor:
        if isinstance(scalar, Tensor):
            return NotImplemented
        s = Fraction(scalar)
        return Tensor(self._rank, (s * a for a in self._data))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return self._rank == other._rank and self._data == other._data

    def __hash__(self) -> int:
        return hash((self._rank, self._data))

    def __repr__(self) -> str:
        nz = ", ".join(
            f"{''.join(map(str, k))}: {format_rational(v)}" for k, v in self.nonzero().items()
        )
        return f"Tensor(rank={self._rank}, {{{nz}}})"

    def permute(self, perm: Sequence[int]) -> Tensor:
        """Return ``T'`` with ``T'[idx] = T[idx permuted by perm]``.

        ``t.permute((1, 0))`` is the transpose of a rank-2 tensor.
        """
        if sorted(perm) != list(range(self._rank)):
            raise ParalieError(f"invalid permutation {perm}")
        return Tensor.from_function(
            self._rank, lambda *idx: self[tuple(idx[p] for p in perm)]
        )

    def outer(self, other: Tensor) -> Tensor:
        rank = self._rank + other._rank
        return Tensor(rank, (a * b for a in self._data for b in other._data))


def indices(rank: int) -> Iterator[Index]:
    return itertools.product(range(DIM), repeat=rank)


_OFFSETS = {r: {idx: n for n, idx in enumerate(indices(r))} for r in range(1, 5)}


def vector(*components: Scalar) -> Tensor:
    return Tensor(1, components)


def basis(i: int) -> Tensor:
    return Tensor(1, (1 if k == i else 0 for k in range(DIM)))


def metric_contract(t: Tensor, slot_a: int, slot_b: int) -> Tensor | Fraction:
    """Contract two slots of ``t`` with the inverse metric.

    The basis is orthonormal, so the inverse metric is the identity and the
    contraction is a plain trace. A rank-2 input contracts to a scalar.
    """
    rank = t.rank
    if not (0 <= slot_a < rank and 0 <= slot_b < rank) or slot_a == slot_b:
        raise ParalieError(f"invalid contraction slots ({slot_a}, {slot_b}) for rank {rank}")
    keep = [s for s in range(rank) if s not in (slot_a, slot_b)]

    def entry(*rest: int) -> Fraction:
        total = Fraction(0)
        for i in range(DIM):
            idx = [0] * rank
            for s, r in zip(keep, rest):
                idx[s] = r
            idx[slot_a] = idx[slot_b] = i
            total += t[tuple(idx)]
        return total

    if rank == 2:
        return entry()
    return Tensor.from_function(rank - 2, entry)
