"""Integer lattices and Knutson indices.

Smith normal form over Z decides whether chi (x) lambda = rho has a
virtual-character solution, and the divisibility conditions it exposes
give the least n with n*rho_reg in the image -- the per-character
Knutson index.  Everything is arbitrary precision; every factorization
and every witness is re-verified on construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from sympy import Matrix as SymMatrix
from sympy.matrices.normalforms import hermite_normal_form

from .algnum import value_is_zero
from .chartable import CharacterTable, zero_in_every_nontrivial_column
from .charring import VirtualCharacter, evaluate, fusion_matrix
from .sl2tables import (
    Sl2Param,
    center_fixed_indices,
    sl2_table,
)

Matrix = list[list[int]]


def _identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = len(b[0])
    return [
        [sum(ra[k] * b[k][j] for k in range(len(b))) for j in range(cols)]
        for ra in a
    ]


def _mat_vec(a: Matrix, v: list[int]) -> list[int]:
    return [sum(r[k] * v[k] for k in range(len(v))) for r in a]


def _det_bareiss(m: Matrix) -> int:
    """Exact determinant by fraction-free Gaussian elimination."""
    a = [row[:] for row in m]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[-1][-1]


@dataclass
class SNFResult:
    """U * M * V = D with U, V unimodular and d1 | d2 | ... on D."""

    U: Matrix
    D: Matrix
    V: Matrix
    rank: int

    @property
    def diagonal(self) -> list[int]:
        return [self.D[i][i] for i in range(min(len(self.D), len(self.D[0])))]


def smith_normal_form(m: Matrix, verify: bool = True) -> SNFResult:
    """Smith normal form with minimal-absolute-value pivoting."""
    rows, cols = len(m), len(m[0])
    d = [row[:] for row in m]
    u, v = _identity(rows), _identity(cols)
    t = 0
    while t < min(rows, cols):
        pivot, best = None, None
        for i in range(t, rows):
            for j in range(t, cols):
                e = abs(d[i][j])
                if e and (best is None or e < best):
                    best, pivot = e, (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        d[t], d[pi] = d[pi], d[t]
        u[t], u[pi] = u[pi], u[t]
        for row in d:
            row[t], row[pj] = row[pj], row[t]
        for row in v:
            row[t], row[pj] = row[pj], row[t]

        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, rows):
                if d[i][t]:
                    q = d[i][t] // d[t][t]
                    for j in range(cols):
                        d[i][j] -= q * d[t][j]
                    for j in range(rows):
                        u[i][j] -= q * u[t][j]
                    if d[i][t]:  # remainder is a smaller pivot
                        d[t], d[i] = d[i], d[t]
                        u[t], u[i] = u[i], u[t]
                        dirty = True
            for j in range(t + 1, cols):
                if d[t][j]:
                    q = d[t][j] // d[t][t]
                    for i in range(rows):
                        d[i][j] -= q * d[i][t]
                    for i in range(cols):
                        v[i][j] -= q * v[i][t]
                    if d[t][j]:
                        for row in d:
                            row[t], row[j] = row[j], row[t]
                        for row in v:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
        # force divisibility of the remaining block by the pivot
        piv = d[t][t]
        offender = next(
            (
                (i, j)
                for i in range(t + 1, rows)
                for j in range(t + 1, cols)
                if d[i][j] % piv
            ),
            None,
        )
        if offender is not None:
            i, _j = offender
            for j in range(cols):
                d[t][j] += d[i][j]
            for j in range(rows):
                u[t][j] += u[i][j]
            continue  # re-run elimination at the same t
        if piv < 0:
            for j in range(cols):
                d[t][j] = -d[t][j]
            for j in range(rows):
                u[t][j] = -u[t][j]
        t += 1
    result = SNFResult(u, d, v, t)
    if verify:
        _verify_snf(m, result)
    return result


def _verify_snf(m: Matrix, res: SNFResult) -> None:
    got = _mat_mul(_mat_mul(res.U, m), res.V)
    if got != res.D:
        raise AssertionError("SNF identity U*M*V = D fails")
    diag = res.diagonal
    for i in range(min(len(res.D), len(res.D[0]))):
        for j in range(len(res.D[0])):
            if i != j and res.D[i][j]:
                raise AssertionError("SNF result is not diagonal")
    for a, b in zip(diag, diag[1:]):
        if a == 0 and b != 0:
            raise AssertionError("SNF zero before nonzero on the diagonal")
        if a and b % a:
            raise AssertionError("SNF divisibility chain fails")
    if abs(_det_bareiss(res.U)) != 1 or abs(_det_bareiss(res.V)) != 1:
        raise AssertionError("SNF transform is not unimodular")


def solve_integer(m: Matrix, b: list[int]) -> list[int] | None:
    """An integer x with M*x = b, or None; witnesses are re-verified."""
    snf = smith_normal_form(m)
    y = _mat_vec(snf.U, b)
    coords = [0] * len(m[0])
    for i, yi in enumerate(y):
        if i < snf.rank:
            di = snf.D[i][i]
            q, r = divmod(yi, di)
            if r:
                return None
            coords[i] = q
        elif yi:
            return None
    x = _mat_vec(snf.V, coords)
    if _mat_vec(m, x) != list(b):
        raise AssertionError("integer solve verification failed")
    return x


def min_multiplier(m: Matrix, v: list[int]) -> int | None:
    """Least n >= 1 with n*v in the integer column span of M, or None.

    The column lattice is re-based via its Hermite normal form, whose
    entries stay small even where transform-tracking elimination blows
    up; the independent HNF columns then determine a unique rational
    solution of H*y = v, and n is the common denominator of y.
    """
    if all(x == 0 for x in v):
        return 1
    h = hermite_normal_form(SymMatrix(m))
    if h.cols == 0:
        return None
    try:
        y, params = h.gauss_jordan_solve(SymMatrix(len(v), 1, v))
    except ValueError:
        return None
    if params.rows:
        raise AssertionError("HNF columns are not independent")
    return lcm(*(int(entry.q) for entry in y))


# ---------------------------------------------------------------------------
# Knutson indices

def is_rho_invertible(
    table: CharacterTable, chi: int, rho: VirtualCharacter
) -> VirtualCharacter | None:
    """A virtual lambda with chi (x) lambda = rho, or None.

    The witness is re-verified by evaluation on every class.
    """
    x = solve_integer(fusion_matrix(table, chi), list(rho.mults))
    if x is None:
        return None
    lam = VirtualCharacter(table, tuple(x))
    chi_vals = table.irreps[chi].values
    for k in range(len(table.classes)):
        if not value_is_zero(chi_vals[k] * evaluate(lam, k) - evaluate(rho, k)):
            raise AssertionError("rho-inverse witness fails evaluation")
    return lam


def knutson_index_char(table: CharacterTable, chi: int) -> int:
    """Least n such that chi is n*rho_reg-invertible."""
    n = min_multiplier(fusion_matrix(table, chi), list(table.degrees))
    if n is None:
        raise AssertionError("no multiple of rho_reg is attainable")
    if table.irreps[chi].degree % n:
        # chi (x) rho_reg = chi(1) rho_reg, so the index divides chi(1)
        raise AssertionError("Knutson index does not divide the degree")
    return n


def knutson_index_group(table: CharacterTable) -> int:
    return lcm(*(knutson_index_char(table, i) for i in range(len(table.irreps))))


def generalized_lower_bound(table: CharacterTable) -> Fraction:
    """L(G) / |G|, a lower bound for the generalised index."""
    return Fraction(table.degree_lcm(), table.order)


def zero_column_criterion(table: CharacterTable) -> int | None:
    """K' = K certified when every non-trivial column has a zero.

    Returns the common value K, or None when the criterion does not
    apply.
    """
    if not zero_in_every_nontrivial_column(table):
        return None
    return knutson_index_group(table)


def min_rho_search(
    table: CharacterTable, degree_bound: int | None = None
) -> tuple[VirtualCharacter, Fraction] | None:
    """Minimal-degree nonnegative rho making every irreducible invertible.

    The degree runs over multiples of L(G) (each chi(1) must divide
    deg rho) up to the bound; candidates are enumerated lexicographically
    on multiplicities and pruned by the zero constraint: rho must vanish
    on any class where some irreducible vanishes.  Feasible only for
    very small groups.
    """
    if degree_bound is None:
        degree_bound = table.order
    step = table.degree_lcm()
    degrees = table.degrees
    nirr = len(degrees)
    zero_classes = [
        k
        for k in range(len(table.classes))
        if k != table.identity_index
        and any(value_is_zero(ir.values[k]) for ir in table.irreps)
    ]

    def candidates(i: int, remaining: int, acc: list[int]):
        if i == nirr - 1:
            q, r = divmod(remaining, degrees[i])
            if r == 0:
                yield tuple(acc + [q])
            return
        for c in range(remaining // degrees[i] + 1):
            yield from candidates(i + 1, remaining - c * degrees[i], acc + [c])

    for total in range(step, degree_bound + 1, step):
        for mults in candidates(0, total, []):
            rho = VirtualCharacter(table, mults)
            if not all(
                value_is_zero(evaluate(rho, k)) for k in zero_classes
            ):
                continue
            if all(
                is_rho_invertible(table, i, rho) is not None
                for i in range(nirr)
            ):
                return rho, Fraction(total, table.order)
    return None


def verify_rho_pm_obstruction(q: int) -> bool:
    """Confirm the rho+/- obstruction certifying K'(SL2(q)) = 1, odd q >= 5.

    rho+ and rho- are the only degree-|G|/2 characters vanishing off the
    center; for each of them, at least one member of the designated pair
    (degree q-1 for q = 1 mod 4, degree q+1 otherwise) must fail to be
    invertible -- otherwise the pair would manufacture a regular inverse.
    """
    par = Sl2Param.from_q(q)
    if par.is_even or q < 5:
        raise ValueError("the obstruction concerns odd q >= 5")
    table = sl2_table(q)
    fixed = set(center_fixed_indices(table))
    rho_plus = VirtualCharacter(
        table,
        tuple(ir.degree if i in fixed else 0 for i, ir in enumerate(table.irreps)),
    )
    rho_minus = VirtualCharacter(
        table,
        tuple(0 if i in fixed else ir.degree for i, ir in enumerate(table.irreps)),
    )
    half = table.order // 2
    for rho, at_z in ((rho_plus, half), (rho_minus, -half)):
        for k in range(len(table.classes)):
            want = half if k == 0 else (at_z if k == 1 else 0)
            if not value_is_zero(evaluate(rho, k) - want):
                raise AssertionError("rho+/- evaluation mismatch")
    if q % 4 == 1:
        pair = (table.irrep_index("theta1"), table.irrep_index("theta2"))
    else:
        pair = (table.irrep_index("chi1"), table.irrep_index("chi2"))
    for rho in (rho_plus, rho_minus):
        if all(is_rho_invertible(table, i, rho) is not None for i in pair):
            return False
    return True
