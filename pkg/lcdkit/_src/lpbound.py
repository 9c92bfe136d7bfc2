# Copyright 2024 The lcdkit Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Krawtchouk polynomials, an exact simplex solver and LP dimension bounds.

Two upper bounds on the dimension of a binary code of length `n` and minimum
distance at least `d` are computed here:

* the classical Delsarte bound, `floor(log2(1 + max sum_j A_j))` over weight
  distributions whose MacWilliams transform is non-negative;
* the LCD bound, which adds for a candidate dimension `k0` the rows
  `2^k0 A_i <= sum_j A_j (C(n, i) - P_i(j))` satisfied by the weight
  distribution of every LCD code of dimension `k0`, and returns the largest
  `k0` that is not contradicted.

All arithmetic is exact (`fractions.Fraction`).
"""
import dataclasses
import fractions
import functools
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

from absl import logging
import immutabledict
import numpy as np
from typing_extensions import TypeAlias

from lcdkit._src import utils

BigRational = fractions.Fraction
Cell = utils.Cell


class Unbounded:
  """Marker returned when the objective is unbounded above."""

  _instance = None

  def __new__(cls):
    if cls._instance is None:
      cls._instance = super().__new__(cls)
    return cls._instance

  def __repr__(self) -> str:
    return "UNBOUNDED"

  def __reduce__(self):
    return (Unbounded, ())


UNBOUNDED = Unbounded()
LPValue: TypeAlias = Union[BigRational, Unbounded]


@dataclasses.dataclass(frozen=True)
class KrawtchoukTable:
  """Exact values `values[i][j] = P_i(j)` for `0 <= i, j <= n`."""
  n: int
  values: Tuple[Tuple[int, ...], ...]

  def __call__(self, i: int, j: int) -> int:
    return self.values[i][j]

  def as_array(self) -> np.ndarray:
    """The table as a numpy array of python ints."""
    out = np.empty((self.n + 1, self.n + 1), dtype=object)
    for i, row in enumerate(self.values):
      out[i, :] = row
    return out


@dataclasses.dataclass(frozen=True)
class LinearProgram:
  """`maximize sum(x)` subject to `matrix @ x <= bound` and `x >= 0`."""
  matrix: Tuple[Tuple[BigRational, ...], ...]
  bound: Tuple[BigRational, ...]
  num_vars: int

  def __post_init__(self):
    matrix = tuple(tuple(BigRational(v) for v in row) for row in self.matrix)
    bound = tuple(BigRational(v) for v in self.bound)
    if len(matrix) != len(bound):
      raise ValueError(f"Matrix has {len(matrix)} rows but the bound has "
                       f"{len(bound)} entries.")
    for i, row in enumerate(matrix):
      if len(row) != self.num_vars:
        raise ValueError(f"Row {i} has {len(row)} entries, expected "
                         f"{self.num_vars}.")
    object.__setattr__(self, "matrix", matrix)
    object.__setattr__(self, "bound", bound)

  @property
  def num_rows(self) -> int:
    return len(self.matrix)

  @property
  def shape(self) -> Tuple[int, int]:
    return self.num_rows, self.num_vars

  def with_bound(self, bound: Sequence[BigRational]) -> "LinearProgram":
    return LinearProgram(self.matrix, tuple(bound), self.num_vars)

  def permuted(self, order: Sequence[int]) -> "LinearProgram":
    """The same program with its rows listed in `order`."""
    return LinearProgram(tuple(self.matrix[i] for i in order),
                         tuple(self.bound[i] for i in order), self.num_vars)


class LPSolution(NamedTuple):
  value: LPValue
  point: Optional[Tuple[BigRational, ...]]


def _convolve(a: List[int], b: List[int]) -> List[int]:
  out = [0] * (len(a) + len(b) - 1)
  for i, x in enumerate(a):
    for j, y in enumerate(b):
      out[i + j] += x * y
  return out


@functools.lru_cache(maxsize=None)
def krawtchouk_table(n: int) -> KrawtchoukTable:
  """Krawtchouk values from the generating function `(1+z)^(n-j) (1-z)^j`.

  Column `j` holds the coefficients of the expansion, so `P_i(j)` is the
  coefficient of `z^i`.

  Args:
    n: The length, at least 1.

  Returns:
    The `(n + 1) x (n + 1)` table.
  """
  if n < 1:
    raise ValueError(f"Krawtchouk tables need n >= 1, got {n}.")
  columns = []
  for j in range(n + 1):
    poly = [1]
    for _ in range(n - j):
      poly = _convolve(poly, [1, 1])
    for _ in range(j):
      poly = _convolve(poly, [1, -1])
    columns.append(poly)
  values = tuple(tuple(columns[j][i] for j in range(n + 1))
                 for i in range(n + 1))
  return KrawtchoukTable(n, values)


def solve(program: LinearProgram) -> LPSolution:
  """Solves `program` exactly with the primal simplex method.

  The slack basis is the starting vertex, which requires a non-negative
  bound. The entering variable is the lowest-index one with positive reduced
  cost and ties in the ratio test go to the lowest-index basic variable
  (Bland's rule), so the method cannot cycle.

  Args:
    program: The linear program.

  Returns:
    The optimal value and an optimal point, or `UNBOUNDED` with no point.

  Raises:
    ValueError: if the bound has a negative entry.
  """
  if any(h < 0 for h in program.bound):
    raise ValueError(f"The bound must be non-negative, got {program.bound}.")
  rows, num_vars = program.shape
  width = num_vars + rows
  # Constraint rows `[A | I | h]`.
  tableau = []
  for i in range(rows):
    row = list(program.matrix[i]) + [BigRational(0)] * rows
    row[num_vars + i] = BigRational(1)
    row.append(program.bound[i])
    tableau.append(row)
  basis = [num_vars + i for i in range(rows)]
  # Reduced costs and the objective value (negated, in the last entry).
  costs = [BigRational(1)] * num_vars + [BigRational(0)] * (rows + 1)

  pivots = 0
  while True:
    entering = next((j for j in range(width) if costs[j] > 0), None)
    if entering is None:
      break
    leaving = None
    best_ratio = None
    for i in range(rows):
      a = tableau[i][entering]
      if a > 0:
        ratio = tableau[i][-1] / a
        if (best_ratio is None or ratio < best_ratio or
            (ratio == best_ratio and basis[i] < basis[leaving])):
          leaving, best_ratio = i, ratio
    if leaving is None:
      logging.vlog(2, "Unbounded after %d pivots.", pivots)
      return LPSolution(UNBOUNDED, None)

    pivot_row = tableau[leaving]
    scale = pivot_row[entering]
    if scale != 1:
      pivot_row = [v / scale for v in pivot_row]
      tableau[leaving] = pivot_row
    support = [j for j, v in enumerate(pivot_row) if v]
    for i in range(rows):
      if i == leaving:
        continue
      factor = tableau[i][entering]
      if factor:
        row = tableau[i]
        for j in support:
          row[j] -= factor * pivot_row[j]
    factor = costs[entering]
    for j in support:
      costs[j] -= factor * pivot_row[j]
    basis[leaving] = entering
    pivots += 1

  point = [BigRational(0)] * num_vars
  for i, b in enumerate(basis):
    if b < num_vars:
      point[b] = tableau[i][-1]
  logging.vlog(2, "Optimal after %d pivots.", pivots)
  return LPSolution(-costs[-1], tuple(point))


def lp_maximize(program: LinearProgram) -> LPValue:
  """The exact optimum of `program`, or `UNBOUNDED`."""
  return solve(program).value


def _check_parameters(n: int, d: int):
  if n < 1 or not 1 <= d <= n:
    raise ValueError(f"Need 1 <= d <= n, got n={n}, d={d}.")


def _distance_rows(n: int, d: int) -> List[List[int]]:
  rows = []
  for j in range(1, d):
    row = [0] * n
    row[j - 1] = 1
    rows.append(row)
  return rows


def _delsarte_rows(n: int) -> Tuple[List[List[int]], List[int]]:
  table = krawtchouk_table(n)
  rows = [[-table(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]
  return rows, [utils.binomial(n, i) for i in range(1, n + 1)]


def build_delsarte_lp(n: int, d: int) -> LinearProgram:
  """The classical LP over `A_1..A_n`: distance rows and Delsarte rows."""
  _check_parameters(n, d)
  distance = _distance_rows(n, d)
  delsarte, h = _delsarte_rows(n)
  return LinearProgram(tuple(map(tuple, distance + delsarte)),
                       tuple([0] * len(distance) + h), n)


def build_lcd_lp(n: int, k0: int, d: int) -> LinearProgram:
  """The `(2n + d - 1) x n` program bounding LCD codes of dimension `k0`.

  Rows, over the variables `A_1..A_n`:

  * `A_j <= 0` for `j < d`;
  * for `i = 1..n`: `sum_j (P_i(j) - C(n, i)) A_j + 2^k0 A_i <= 0`;
  * for `i = 1..n`: `-sum_j P_i(j) A_j <= C(n, i)`.

  Args:
    n: The length.
    k0: The candidate dimension, `0 <= k0 <= n`.
    d: The minimum distance, `1 <= d <= n`.

  Returns:
    The linear program.
  """
  _check_parameters(n, d)
  if not 0 <= k0 <= n:
    raise ValueError(f"Need 0 <= k0 <= n, got n={n}, k0={k0}.")
  table = krawtchouk_table(n)
  lcd_rows = []
  for i in range(1, n + 1):
    c = utils.binomial(n, i)
    row = [table(i, j) - c for j in range(1, n + 1)]
    row[i - 1] += 1 << k0
    lcd_rows.append(row)
  distance = _distance_rows(n, d)
  delsarte, h = _delsarte_rows(n)
  return LinearProgram(
      tuple(map(tuple, distance + lcd_rows + delsarte)),
      tuple([0] * (len(distance) + n) + h), n)


def _not_contradicted(value: LPValue, k0: int) -> bool:
  if value is UNBOUNDED:
    return True
  return (1 << k0) <= 1 + value


@functools.lru_cache(maxsize=None)
def classical_lp_dimension_upper(n: int, d: int) -> int:
  """Delsarte LP bound on the dimension of an `[n, k, >= d]` code."""
  value = lp_maximize(build_delsarte_lp(n, d))
  if value is UNBOUNDED:
    # Summing the Delsarte rows gives sum_j A_j <= 2^n - 1.
    raise ValueError(f"Delsarte LP unexpectedly unbounded at n={n}, d={d}.")
  return utils.floor_log2(1 + value)


@functools.lru_cache(maxsize=None)
def lcd_dimension_upper(n: int, d: int, full_scan: bool = False) -> int:
  """Largest `k0` with `2^k0 <= 1 + U(n, k0, d)`, an upper bound on LCK.

  Args:
    n: The length.
    d: The minimum distance.
    full_scan: Scan every `k0` in `0..n` in increasing order. Otherwise the
      scan descends from the classical bound, above which every `k0` is
      contradicted, and stops at the first value that is not; both give the
      same result.

  Returns:
    The bound.
  """
  _check_parameters(n, d)
  if full_scan:
    best = 0
    for k0 in range(n + 1):
      if _not_contradicted(lp_maximize(build_lcd_lp(n, k0, d)), k0):
        best = k0
    return best
  for k0 in range(classical_lp_dimension_upper(n, d), 0, -1):
    value = lp_maximize(build_lcd_lp(n, k0, d))
    logging.vlog(1, "n=%d d=%d k0=%d U=%s", n, d, k0, value)
    if _not_contradicted(value, k0):
      return k0
  return 0


def griesmer_sum(k: int, d: int) -> int:
  """`g(k, d) = sum_{i < k} ceil(d / 2^i)`."""
  if k < 1 or d < 1:
    raise ValueError(f"Need k, d >= 1, got k={k}, d={d}.")
  return sum(utils.ceil_div(d, 1 << i) for i in range(k))


_SPORADIC_EXCLUSIONS = immutabledict.immutabledict({
    (24, 8): 12,
    (23, 7): 11,
})


def known_exclusions(n: int, d: int) -> Optional[int]:
  """Tightest known strict upper bound `K` with `LCK[n, d] < K`, if any.

  The rules cover the extended and punctured Golay codes, the Hamming and
  simplex codes of length `2^m - 1` for `m >= 3` (for `m = 2` they are the
  LCD codes `[3, 1, 3]` and `[3, 2, 2]`), and codes meeting the Griesmer bound
  with distance divisible by four, which are self-orthogonal.

  Args:
    n: The length.
    d: The minimum distance.

  Returns:
    The exclusive bound, or `None` when no rule applies.
  """
  candidates = []
  if (n, d) in _SPORADIC_EXCLUSIONS:
    candidates.append(_SPORADIC_EXCLUSIONS[(n, d)])
  m = (n + 1).bit_length() - 1
  if m >= 3 and n == (1 << m) - 1:
    if d == 3:
      candidates.append((1 << m) - m - 1)
    if d == 1 << (m - 1):
      candidates.append(m)
  if d >= 1 and d % 4 == 0:
    k = 1
    while griesmer_sum(k, d) < n:
      k += 1
    if griesmer_sum(k, d) == n:
      candidates.append(k)
  return min(candidates) if candidates else None


# Published LCD (classical) LP bounds for `n <= 30`; row `n` lists `d = 1..n`
# and a parenthesised value is the classical bound where it differs.
_PUBLISHED_LP_ROWS = (
    "1",
    "2 0(1)",
    "3 2 1",
    "4 2(3) 1 0(1)",
    "5 4 2 1 1",
    "6 4(5) 3 2 1 0(1)",
    "7 6 4 3 1 1 1",
    "8 6(7) 4 3(4) 2 1 1 0(1)",
    "9 8 5 4 2 2 1 1 1",
    "10 8(9) 6 5 3 2 1 1 1 0(1)",
    "11 10 7 6 4 3 2 1 1 1 1",
    "12 10(11) 8 7 5 4 2 2 1 1 1 0(1)",
    "13 12 9 8 6 5 3 2 1 1 1 1 1",
    "14 12(13) 10 9 7 6 4 3 2 1 1 1 1 0(1)",
    "15 14 11 10 8 7 5 4 2 2 1 1 1 1 1",
    "16 14(15) 11 10(11) 8 7(8) 5 4(5) 2 2 1 1 1 1 1 0(1)",
    "17 16 12 11 9 8 6 5 3 2 2 1 1 1 1 1 1",
    "18 16(17) 13 12 10 9 7 6 4 3 2 2 1 1 1 1 1 0(1)",
    "19 18 14 13 11 10 8 7 5 4 2 2 1 1 1 1 1 1 1",
    "20 18(19) 15 14 12 11 9 8 6 5 3 2 2 1 1 1 1 1 1 0(1)",
    "21 20 16 15 12 12 10 9 6 6 3 3 2 2 1 1 1 1 1 1 1",
    "22 20(21) 17 16 13 12 11 10 7 6 4 3 2 2 1 1 1 1 1 1 1 0(1)",
    "23 22 18 17 14 13 12 11 8 7 5 4 2 2 2 1 1 1 1 1 1 1 1",
    "24 22(23) 19 18 15 14 12 11(12) 9 8 6 5 3 2 2 2 1 1 1 1 1 1 1 0(1)",
    "25 24 20 19 16 15 13 12 10 9 6 6 3 3 2 2 1 1 1 1 1 1 1 1 1",
    "26 24(25) 21 20 17 16 14 13 10 10 7 6 4 3 2 2 2 1 1 1 1 1 1 1 1 0(1)",
    "27 26 22 21 18 17 14 14 11 10 8 7 5 4 3 2 2 2 1 1 1 1 1 1 1 1 1",
    "27(28) 26(27) 22 21 18 17 14 14 11 10 8 7 5 4 3 2 2 2 1 1 1 1 1 1 1 1 1 "
    "0(1)",
    "28(29) 27 24 23 20 19 16 15 13 12 10 9 7 6 4 3 2 2 2 1 1 1 1 1 1 1 1 1 "
    "1",
    "29(30) 28(29) 25 24 20 20 17 16 14 13 10 10 7 7 5 4 2 2 2 2 1 1 1 1 1 1 "
    "1 1 1 0(1)",
)


def _parse_lp_cell(token: str) -> Tuple[int, int]:
  if "(" in token:
    lcd, classical = token.rstrip(")").split("(")
    return int(lcd), int(classical)
  return int(token), int(token)


def _parse_published_rows(
    rows: Sequence[str]) -> Dict[Cell, Tuple[int, int]]:
  table = {}
  for n, row in enumerate(rows, start=1):
    tokens = row.split()
    if len(tokens) != n:
      raise ValueError(f"Published row {n} has {len(tokens)} cells.")
    for d, token in enumerate(tokens, start=1):
      table[(n, d)] = _parse_lp_cell(token)
  return table


PUBLISHED_LP_TABLE = immutabledict.immutabledict(
    _parse_published_rows(_PUBLISHED_LP_ROWS))
# Rows above this length are known to carry misprints, e.g. `(28, 1)`.
PUBLISHED_LP_TRUSTED_NMAX = 24


@dataclasses.dataclass(frozen=True)
class LPTable:
  """Grid of `(lcd, classical)` bounds keyed by `(n, d)`.

  Attributes:
    nmax: The largest length.
    cells: `(lcd, classical)` per cell `1 <= d <= n <= nmax`.
    dmax: The last distance column rendered; `nmax` when unset.
  """
  nmax: int
  cells: immutabledict.immutabledict
  dmax: Optional[int] = None

  @property
  def columns(self) -> range:
    return range(1, min(self.nmax, self.dmax or self.nmax) + 1)

  def cell_text(self, n: int, d: int) -> str:
    if d > n:
      return ""
    lcd, classical = self.cells[(n, d)]
    return str(lcd) if lcd == classical else f"{lcd}({classical})"

  def render_csv(self) -> str:
    lines = ["n/d," + ",".join(str(d) for d in self.columns)]
    for n in range(1, self.nmax + 1):
      lines.append(",".join(
          [str(n)] + [self.cell_text(n, d) for d in self.columns]))
    return "\n".join(lines) + "\n"

  def render_markdown(self) -> str:
    columns = self.columns
    lines = ["| n/d | " + " | ".join(str(d) for d in columns) + " |",
             "|---|" + "---|" * len(columns)]
    for n in range(1, self.nmax + 1):
      cells = [self.cell_text(n, d) for d in columns]
      lines.append(f"| {n} | " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"

  def render(self, fmt: str) -> str:
    if fmt == "csv":
      return self.render_csv()
    if fmt == "md":
      return self.render_markdown()
    raise ValueError(f"Unknown table format {fmt!r}; expected csv or md.")


def _lp_cell(cell: Cell) -> Tuple[Cell, Tuple[int, int]]:
  n, d = cell
  return cell, (lcd_dimension_upper(n, d), classical_lp_dimension_upper(n, d))


def emit_lp_table(nmax: int, num_workers: Optional[int] = None) -> LPTable:
  """Computes both LP bounds for all `1 <= d <= n <= nmax`."""
  if not 1 <= nmax <= 30:
    raise ValueError(f"LP tables are supported for 1 <= nmax <= 30, got "
                     f"{nmax}.")
  cells = [(n, d) for n in range(1, nmax + 1) for d in range(1, n + 1)]
  results = utils.parallel_map(_lp_cell, cells, num_workers)
  logging.info("Computed %d LP cells up to n=%d.", len(results), nmax)
  return LPTable(nmax, immutabledict.immutabledict(results))


class LPDisagreement(NamedTuple):
  n: int
  d: int
  computed: Tuple[int, int]
  published: Tuple[int, int]
  trusted: bool


def compare_with_published(table: LPTable) -> List[LPDisagreement]:
  """Cells of `table` that differ from the published grid."""
  out = []
  for (n, d), computed in sorted(table.cells.items()):
    published = PUBLISHED_LP_TABLE.get((n, d))
    if published is not None and published != computed:
      out.append(LPDisagreement(n, d, computed, published,
                                n <= PUBLISHED_LP_TRUSTED_NMAX))
  return out


def render_disagreements(disagreements: Sequence[LPDisagreement]) -> str:
  if not disagreements:
    return "All cells agree with the published table.\n"
  lines = ["n,d,computed,published,trusted_row"]
  for x in disagreements:
    lines.append(f"{x.n},{x.d},{x.computed[0]}({x.computed[1]}),"
                 f"{x.published[0]}({x.published[1]}),{int(x.trusted)}")
  return "\n".join(lines) + "\n"


class DiagnosticRow(NamedTuple):
  n: int
  d: int
  k0: int
  nonhomogeneous: LPValue
  homogeneous: LPValue


def diagnose_cell(n: int, d: int) -> List[DiagnosticRow]:
  """Evaluates `U(n, k0, d)` for every `k0` under both bound vectors.

  The homogeneous reading sets every bound to zero, so its optimum is `0` or
  unbounded; the nonhomogeneous one keeps `C(n, i)` on the Delsarte rows.

  Args:
    n: The length.
    d: The minimum distance.

  Returns:
    One row per `k0 = 0..n`.
  """
  rows = []
  for k0 in range(n + 1):
    program = build_lcd_lp(n, k0, d)
    u = lp_maximize(program)
    u_zero = lp_maximize(program.with_bound([0] * program.num_rows))
    logging.info("n=%d d=%d k0=%d U(h)=%s U(0)=%s", n, d, k0, u, u_zero)
    rows.append(DiagnosticRow(n, d, k0, u, u_zero))
  return rows


def lp_bound_diagnostics(nmax: int = 8) -> List[DiagnosticRow]:
  """`diagnose_cell` over all `1 <= d <= n <= nmax`."""
  rows = []
  for n in range(1, nmax + 1):
    for d in range(1, n + 1):
      rows.extend(diagnose_cell(n, d))
  return rows
