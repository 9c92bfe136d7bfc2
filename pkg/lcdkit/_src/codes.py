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
"""Binary linear codes: duals, hulls, LCD tests, distances and combinators."""
import dataclasses
import fractions
import functools
from typing import Iterator, List, Tuple

from absl import logging
import numpy as np

from lcdkit._src import gf2
from lcdkit._src import lpbound
from lcdkit._src import utils

Array = utils.Array
Words = utils.Words
BitMatrix = gf2.BitMatrix

# Largest dimension for which codewords are enumerated.
_MAX_ENUMERATION_DIMENSION: int = 28
# Largest dimension for which `enumerate_codewords` materialises the code.
_MAX_MATERIALISED_DIMENSION = 20
# Number of generator rows expanded into an in-memory table of codewords; the
# remaining rows are walked in Gray-code order.
_TABLE_ROWS = 16


def set_max_enumeration_dimension(value: int):
  """Sets the largest dimension for distance and weight enumeration."""
  global _MAX_ENUMERATION_DIMENSION
  if value < 1:
    raise ValueError(f"The enumeration cap must be positive, got {value}.")
  _MAX_ENUMERATION_DIMENSION = value


def get_max_enumeration_dimension() -> int:
  return _MAX_ENUMERATION_DIMENSION


@dataclasses.dataclass(frozen=True)
class LinearCode:
  """A binary `[n, k]` code stored by its canonical generator matrix.

  The generator is kept in reduced row echelon form with zero rows dropped,
  so two codes are equal iff their generators are equal.

  Attributes:
    generator: The `k x n` canonical generator matrix.
  """
  generator: BitMatrix

  def __post_init__(self):
    reduced = gf2.rref(self.generator).reduced
    object.__setattr__(self, "generator", reduced)

  @property
  def n(self) -> int:
    return self.generator.cols

  @property
  def k(self) -> int:
    return self.generator.rows

  @functools.cached_property
  def hull_dimension(self) -> int:
    return hull_dimension(self)

  @functools.cached_property
  def minimum_distance(self) -> int:
    return minimum_distance(self)

  def is_lcd(self) -> bool:
    return self.hull_dimension == 0

  def parameters(self) -> str:
    """A string such as `[7,4,3]`, omitting the distance when `k = 0`."""
    if self.k == 0:
      return f"[{self.n},0]"
    return f"[{self.n},{self.k},{self.minimum_distance}]"

  def __repr__(self) -> str:
    return f"LinearCode(n={self.n}, k={self.k})"


@dataclasses.dataclass(frozen=True)
class WeightDistribution:
  """Number of codewords of every Hamming weight `0..n`."""
  n: int
  counts: Tuple[int, ...]

  def __post_init__(self):
    counts = tuple(int(c) for c in self.counts)
    object.__setattr__(self, "counts", counts)
    if len(counts) != self.n + 1:
      raise ValueError(f"A weight distribution of length {self.n} needs "
                       f"{self.n + 1} counts, got {len(counts)}.")
    if counts[0] != 1:
      raise ValueError(f"counts[0] must be 1, got {counts[0]}.")
    if any(c < 0 for c in counts):
      raise ValueError(f"Counts must be non-negative, got {counts}.")
    total = sum(counts)
    if total & (total - 1):
      raise ValueError(f"Counts sum to {total}, which is not a power of 2.")

  @property
  def dimension(self) -> int:
    return sum(self.counts).bit_length() - 1

  def __getitem__(self, weight: int) -> int:
    return self.counts[weight]


def from_matrix(g: BitMatrix) -> LinearCode:
  """The code spanned by the rows of `g`."""
  return LinearCode(g)


def dual(c: LinearCode) -> LinearCode:
  """The dual code `{v : v . c = 0 for every codeword c}`."""
  return LinearCode(gf2.null_space(c.generator))


def hull_dimension(c: LinearCode) -> int:
  """Dimension of `C & C^perp`, computed as `k - rank(G G^T)`."""
  if c.k == 0:
    return 0
  return c.k - gf2.rank(gf2.gram(c.generator))


def is_lcd(c: LinearCode) -> bool:
  """Whether `det(G G^T) = 1`; the zero code is LCD."""
  if c.k == 0:
    return True
  return gf2.determinant(gf2.gram(c.generator)) == 1


def intersection_dimension(c1: LinearCode, c2: LinearCode) -> int:
  """`dim(U & V) = dim U + dim V - dim(U + V)`."""
  if c1.n != c2.n:
    raise ValueError(f"Codes of lengths {c1.n} and {c2.n} cannot intersect.")
  both = gf2.stack_rows(c1.generator, c2.generator)
  return c1.k + c2.k - (gf2.rank(both) if both.rows else 0)


def _span_table(rows: Words) -> Words:
  """All `2**len(rows)` combinations of `rows`, index bit `i` <-> row `i`."""
  table = np.zeros((1, rows.shape[1]), dtype=utils.WORD_DTYPE)
  for row in rows:
    table = np.concatenate([table, table ^ row], axis=0)
  return table


def _check_enumerable(c: LinearCode):
  if c.k > _MAX_ENUMERATION_DIMENSION:
    raise ValueError(f"Code dimension {c.k} exceeds the enumeration cap "
                     f"{_MAX_ENUMERATION_DIMENSION}.")


def _weight_blocks(c: LinearCode) -> Iterator[Array]:
  """Yields the weights of all codewords, block by block.

  The low rows of the generator are expanded into a table; every block is the
  table shifted by one combination of the high rows, visited in Gray-code
  order so that each step costs a single row XOR. The first block starts with
  the zero codeword.

  Args:
    c: The code, of dimension at most the enumeration cap.

  Yields:
    Integer arrays of Hamming weights.
  """
  _check_enumerable(c)
  words = c.generator.words
  low = min(c.k, _TABLE_ROWS)
  table = _span_table(words[:low])
  high = words[low:]
  offset = np.zeros((words.shape[1],), dtype=utils.WORD_DTYPE)
  yield utils.popcount_rows(table)
  for position in utils.gray_flip_positions(high.shape[0]):
    offset ^= high[position]
    yield utils.popcount_rows(table ^ offset)


def enumerate_codewords(c: LinearCode) -> Words:
  """All `2**k` codewords as packed rows (message order of the generator)."""
  if c.k > _MAX_MATERIALISED_DIMENSION:
    raise ValueError(f"Refusing to materialise 2**{c.k} codewords; the cap "
                     f"is 2**{_MAX_MATERIALISED_DIMENSION}.")
  return _span_table(c.generator.words)


def minimum_distance(c: LinearCode) -> int:
  """Least weight of a nonzero codeword.

  Args:
    c: A code with `1 <= k <= get_max_enumeration_dimension()`.

  Returns:
    The minimum distance.

  Raises:
    ValueError: if `k = 0` (distance undefined) or `k` exceeds the cap.
  """
  if c.k == 0:
    raise ValueError("The zero code has no nonzero codeword: distance "
                     "undefined.")
  best = c.n
  for index, weights in enumerate(_weight_blocks(c)):
    if index == 0:
      weights = weights[1:]
    if weights.size:
      best = min(best, int(weights.min()))
  return best


def weight_distribution(c: LinearCode) -> WeightDistribution:
  """Exact weight distribution by enumeration."""
  counts = np.zeros((c.n + 1,), dtype=np.int64)
  for weights in _weight_blocks(c):
    counts += np.bincount(weights, minlength=c.n + 1)
  return WeightDistribution(c.n, tuple(int(x) for x in counts))


def macwilliams_transform(a: WeightDistribution, k: int) -> WeightDistribution:
  """Weight distribution of the dual, `B_i = 2^-k sum_j A_j P_i(j)`.

  Args:
    a: The weight distribution of a code of dimension `k`.
    k: The dimension of that code.

  Returns:
    The weight distribution of the dual code.

  Raises:
    ValueError: if `a` does not describe a `2**k` element code or the
      transform is not a non-negative integer vector.
  """
  if sum(a.counts) != 1 << k:
    raise ValueError(f"Distribution sums to {sum(a.counts)}, not 2**{k}.")
  table = lpbound.krawtchouk_table(a.n)
  out = []
  for i in range(a.n + 1):
    value = fractions.Fraction(
        sum(a.counts[j] * table.values[i][j] for j in range(a.n + 1)), 1 << k)
    if value.denominator != 1 or value < 0:
      raise ValueError(f"MacWilliams coefficient B_{i} = {value} is not a "
                       "non-negative integer; inconsistent input.")
    out.append(int(value))
  return WeightDistribution(a.n, tuple(out))


def extend_zero_column(c: LinearCode) -> LinearCode:
  """The `[n + 1, k]` code obtained by appending a zero coordinate."""
  return LinearCode(gf2.append_zero_column(c.generator))


def kronecker_code(c1: LinearCode, c2: LinearCode) -> LinearCode:
  """The `[n m, k l]` code generated by `G_1 (x) G_2`."""
  return LinearCode(gf2.kronecker(c1.generator, c2.generator))


def direct_sum(c1: LinearCode, c2: LinearCode) -> LinearCode:
  """The `[n + m, k + l]` code generated by `diag(G_1, G_2)`."""
  top = gf2.augment_columns(c1.generator, gf2.zero(c1.k, c2.n))
  bottom = gf2.augment_columns(gf2.zero(c2.k, c1.n), c2.generator)
  return LinearCode(gf2.stack_rows(top, bottom))


# Elementary families.


def full_code(n: int) -> LinearCode:
  return LinearCode(gf2.identity(n))


def repetition_code(n: int) -> LinearCode:
  return LinearCode(BitMatrix.from_bits(np.ones((1, n), dtype=np.uint8)))


def even_weight_code(n: int) -> LinearCode:
  """The `[n, n - 1, 2]` code of all even-weight words."""
  if n == 1:
    return LinearCode(gf2.zero(0, 1))
  bits = np.zeros((n - 1, n), dtype=np.uint8)
  bits[np.arange(n - 1), np.arange(n - 1)] = 1
  bits[:, n - 1] = 1
  return LinearCode(BitMatrix.from_bits(bits))


def best_one_dimensional_lcd(n: int) -> LinearCode:
  """`[n, 1, n]` for odd `n`, `[n, 1, n - 1]` from `(0 1 ... 1)` otherwise."""
  if n % 2:
    return repetition_code(n)
  bits = np.ones((1, n), dtype=np.uint8)
  bits[0, 0] = 0
  return LinearCode(BitMatrix.from_bits(bits))


def best_even_lcd(n: int) -> LinearCode:
  """An LCD code of distance 2: `[n, n - 1]` for odd, `[n, n - 2]` for even.

  Args:
    n: The length, at least 2.

  Returns:
    The even-weight code for odd `n`, the zero-padded odd-length even-weight
    code for even `n`.
  """
  if n < 2:
    raise ValueError(f"Distance 2 needs length at least 2, got {n}.")
  if n % 2:
    return even_weight_code(n)
  return extend_zero_column(even_weight_code(n - 1))


# Text format: a `n k` header followed by `k` rows of `n` bits. Lines starting
# with `#` are comments.


def _content_lines(text: str) -> List[Tuple[int, str]]:
  out = []
  for number, line in enumerate(text.splitlines(), start=1):
    line = line.strip()
    if line and not line.startswith("#"):
      out.append((number, line))
  return out


def parse_matrix(text: str) -> BitMatrix:
  """Parses the code file format without canonicalising the rows."""
  lines = _content_lines(text)
  if not lines:
    raise ValueError("Empty matrix text: missing the `n k` header.")
  number, header = lines[0]
  fields = header.split()
  if len(fields) != 2 or not all(f.isdigit() for f in fields):
    raise ValueError(f"Line {number}: expected `n k`, got {header!r}.")
  n, k = int(fields[0]), int(fields[1])
  if n < 1:
    raise ValueError(f"Line {number}: length must be positive, got {n}.")
  rows = lines[1:]
  if len(rows) != k:
    raise ValueError(f"Header announces {k} rows, found {len(rows)}.")
  for number, row in rows:
    if len(row) != n or set(row) - {"0", "1"}:
      raise ValueError(f"Line {number}: expected {n} characters from {{0,1}}, "
                       f"got {row!r}.")
  return BitMatrix.from_strings([row for _, row in rows], cols=n)


def format_matrix(g: BitMatrix) -> str:
  return "\n".join([f"{g.cols} {g.rows}", *g.to_strings()]) + "\n"


def parse_code(text: str) -> LinearCode:
  return LinearCode(parse_matrix(text))


def format_code(c: LinearCode) -> str:
  return format_matrix(c.generator)


def read_matrix(path: str) -> BitMatrix:
  with open(path, "r") as f:
    return parse_matrix(f.read())


def read_code(path: str) -> LinearCode:
  with open(path, "r") as f:
    return parse_code(f.read())


def write_matrix(g: BitMatrix, path: str):
  with open(path, "w") as f:
    f.write(format_matrix(g))
  logging.vlog(1, "Wrote a %dx%d matrix to %s.", g.rows, g.cols, path)


def write_code(c: LinearCode, path: str):
  write_matrix(c.generator, path)

