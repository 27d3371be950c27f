"""The representation ring over a character table.

Tensor decomposition goes through exact inner products of pointwise
value products -- one code path for S_n, A_n and SL2 alike, with
orthogonality doing the bookkeeping.  Fusion matrices are cached on the
table, since Knutson-index runs touch every character.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algnum import value_is_zero
from .chartable import CharacterTable


@dataclass(frozen=True)
class VirtualCharacter:
    """Integer multiplicity vector over a table's irreducibles."""

    table: CharacterTable
    mults: tuple[int, ...]

    def __post_init__(self):
        if len(self.mults) != len(self.table.irreps):
            raise ValueError("multiplicity vector length mismatch")

    @property
    def degree(self) -> int:
        return sum(m * d for m, d in zip(self.mults, self.table.degrees))

    def values(self) -> tuple:
        return tuple(
            evaluate(self, k) for k in range(len(self.table.classes))
        )

    def __add__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        if other.table is not self.table:
            raise ValueError("mixed tables")
        return VirtualCharacter(
            self.table, tuple(a + b for a, b in zip(self.mults, other.mults))
        )

    def scaled(self, k: int) -> "VirtualCharacter":
        return VirtualCharacter(self.table, tuple(k * m for m in self.mults))


def evaluate(x: VirtualCharacter, cls: int):
    """Exact value of the virtual character on class index cls."""
    total = 0
    for m, ir in zip(x.mults, x.table.irreps):
        if m:
            total = total + m * ir.values[cls]
    return total


def inner_product(x: VirtualCharacter, y: VirtualCharacter) -> int:
    """<x, y> over the table, exact; must come out integral."""
    if x.table is not y.table:
        raise ValueError("mixed tables")
    got = x.table.inner_product_rows(x.values(), y.values())
    if got.denominator != 1:
        raise AssertionError(f"non-integral inner product {got}")
    return got.numerator


def _row_product(table: CharacterTable, a: int, c: int) -> tuple:
    return tuple(
        va * vc
        for va, vc in zip(table.irreps[a].values, table.irreps[c].values)
    )


def tensor_decompose(table: CharacterTable, a: int, c: int) -> tuple[int, ...]:
    """Multiplicities N with chi_a * chi_c = sum_b N_b chi_b."""
    prod_vals = _row_product(table, a, c)
    out = []
    for b in range(len(table.irreps)):
        got = table.inner_product_rows(prod_vals, table.irreps[b].values)
        if got.denominator != 1 or got < 0:
            raise AssertionError(
                f"bad multiplicity {got} of {table.irreps[b].label} in "
                f"{table.irreps[a].label} * {table.irreps[c].label}"
            )
        out.append(got.numerator)
    degrees = table.degrees
    if sum(n * d for n, d in zip(out, degrees)) != degrees[a] * degrees[c]:
        raise AssertionError("tensor decomposition degree identity fails")
    return tuple(out)


def fusion_matrix(table: CharacterTable, a: int) -> list[list[int]]:
    """M with M[b][c] = multiplicity of chi_b in chi_a * chi_c, cached."""
    cached = table._fusion_cache.get(a)
    if cached is not None:
        return cached
    n = len(table.irreps)
    cols = [tensor_decompose(table, a, c) for c in range(n)]
    matrix = [[cols[c][b] for c in range(n)] for b in range(n)]
    table._fusion_cache[a] = matrix
    return matrix


def regular_character(table: CharacterTable) -> VirtualCharacter:
    """sum of deg(chi) * chi; |G| at the identity, 0 elsewhere (asserted)."""
    reg = VirtualCharacter(table, table.degrees)
    for k in range(len(table.classes)):
        v = evaluate(reg, k)
        want = table.order if k == table.identity_index else 0
        if not value_is_zero(v - want):
            raise AssertionError("regular character evaluation failed")
    return reg


def trivial_index(table: CharacterTable) -> int:
    """Index of the trivial character (all values 1)."""
    for i, ir in enumerate(table.irreps):
        if ir.degree == 1 and all(value_is_zero(v - 1) for v in ir.values):
            return i
    raise AssertionError("table has no trivial character")
