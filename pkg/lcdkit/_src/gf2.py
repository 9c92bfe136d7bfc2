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
"""Dense bit-packed linear algebra over the two-element field.

Matrices are stored row-major, each row packed little-endian into 64-bit
words: entry `(i, j)` is bit `j % 64` of word `j // 64` of row `i`. Bits past
the last column are always zero, so row XORs and inner products can work on
whole words.
"""
from typing import Iterable, NamedTuple, Sequence, Tuple

import numpy as np

from lcdkit._src import utils

Array = utils.Array
Words = utils.Words
IndexSet = utils.IndexSet

_ONE = np.uint64(1)


def _trailing_mask(cols: int) -> np.uint64:
  rem = cols % utils.WORD_BITS
  if rem == 0:
    return np.uint64(0xFFFFFFFFFFFFFFFF)
  return np.uint64((1 << rem) - 1)


def pack_bits(bits: Array) -> Words:
  """Packs a `(rows, cols)` 0/1 array into `(rows, num_words(cols))` words."""
  bits = np.asarray(bits)
  if bits.ndim != 2:
    raise ValueError(f"Expected a 2D bit array, got {bits.ndim} dims.")
  rows, cols = bits.shape
  words = utils.num_words(cols)
  if rows == 0:
    return np.zeros((0, words), dtype=utils.WORD_DTYPE)
  padded = np.zeros((rows, words * utils.WORD_BITS), dtype=np.uint8)
  padded[:, :cols] = bits & 1
  packed = np.packbits(padded, axis=1, bitorder="little")
  return packed.view("<u8").astype(utils.WORD_DTYPE).reshape(rows, words)


def unpack_bits(words: Words, cols: int) -> Array:
  """Inverse of `pack_bits`; returns a `(rows, cols)` uint8 array."""
  rows = words.shape[0]
  if rows == 0:
    return np.zeros((0, cols), dtype=np.uint8)
  as_bytes = np.ascontiguousarray(words.astype("<u8")).view(np.uint8)
  return np.unpackbits(as_bytes, axis=1, bitorder="little")[:, :cols]


class BitMatrix:
  """An immutable dense matrix over GF(2).

  Instances are values: every operation returns a new matrix and the packed
  storage is read-only. Matrices with zero rows are legal (e.g. the generator
  of the dual of the full space); matrices must have at least one column.
  """

  __slots__ = ("_words", "_cols")

  def __init__(self, words: Words, cols: int):
    """Initializes the matrix from packed words.

    Args:
      words: A `(rows, num_words(cols))` array of 64-bit words.
      cols: The number of columns.
    """
    if cols < 1:
      raise ValueError(f"A BitMatrix needs at least one column, got {cols}.")
    words = np.array(words, dtype=utils.WORD_DTYPE, copy=True)
    if words.ndim != 2 or words.shape[1] != utils.num_words(cols):
      raise ValueError(f"Words of shape {words.shape} do not match {cols} "
                       "columns.")
    if words.shape[0]:
      words[:, -1] &= _trailing_mask(cols)
    words.setflags(write=False)
    self._words = words
    self._cols = cols

  @classmethod
  def from_bits(cls, bits: Array) -> "BitMatrix":
    """Builds a matrix from a 2D array-like of 0/1 entries."""
    bits = np.asarray(bits, dtype=np.int64)
    if bits.ndim != 2:
      raise ValueError(f"Expected a 2D bit array, got {bits.ndim} dims.")
    if not utils.is_binary(bits):
      raise ValueError("Entries of a BitMatrix must be 0 or 1.")
    return cls(pack_bits(bits.astype(np.uint8)), bits.shape[1])

  @classmethod
  def from_strings(cls, rows: Sequence[str], cols: int = 0) -> "BitMatrix":
    """Builds a matrix from strings such as `"0110"`; `cols` for no rows."""
    if not rows:
      return zero(0, cols)
    return cls.from_bits([[int(c) for c in row] for row in rows])

  @property
  def rows(self) -> int:
    return self._words.shape[0]

  @property
  def cols(self) -> int:
    return self._cols

  @property
  def shape(self) -> Tuple[int, int]:
    return self.rows, self.cols

  @property
  def words(self) -> Words:
    """The read-only packed storage."""
    return self._words

  @property
  def T(self) -> "BitMatrix":  # pylint: disable=invalid-name
    return transpose(self)

  def to_bits(self) -> Array:
    """Returns the `(rows, cols)` uint8 array of entries."""
    return unpack_bits(self._words, self._cols)

  def to_strings(self) -> Tuple[str, ...]:
    return tuple("".join(str(b) for b in row) for row in self.to_bits())

  def row_ints(self) -> Tuple[int, ...]:
    """Each row as a python int, column `j` being bit `j`."""
    out = []
    for row in self._words:
      value = 0
      for w, word in enumerate(row):
        value |= int(word) << (w * utils.WORD_BITS)
      out.append(value)
    return tuple(out)

  def row_weights(self) -> Array:
    return utils.popcount_rows(self._words)

  def __getitem__(self, index: Tuple[int, int]) -> int:
    i, j = index
    if not (0 <= i < self.rows and 0 <= j < self.cols):
      raise IndexError(f"Index {index} out of range for shape {self.shape}.")
    word = self._words[i, j // utils.WORD_BITS]
    return int((word >> np.uint64(j % utils.WORD_BITS)) & _ONE)

  def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
    return multiply(self, other)

  def __add__(self, other: "BitMatrix") -> "BitMatrix":
    return add(self, other)

  def __eq__(self, other: object) -> bool:
    if not isinstance(other, BitMatrix):
      return NotImplemented
    return (self.shape == other.shape and
            bool(np.array_equal(self._words, other._words)))

  def __hash__(self) -> int:
    return hash((self.shape, self._words.tobytes()))

  def __repr__(self) -> str:
    return f"BitMatrix({self.rows}x{self.cols}, {list(self.to_strings())})"

  def __str__(self) -> str:
    return "\n".join(self.to_strings())


class RrefResult(NamedTuple):
  reduced: BitMatrix
  pivot_columns: Tuple[int, ...]
  rank: int


def identity(n: int) -> BitMatrix:
  return BitMatrix.from_bits(np.eye(n, dtype=np.uint8))


def all_ones(n: int) -> BitMatrix:
  """The `n x n` all-one matrix `J_n`."""
  return BitMatrix.from_bits(np.ones((n, n), dtype=np.uint8))


def zero(rows: int, cols: int) -> BitMatrix:
  return BitMatrix(np.zeros((rows, utils.num_words(cols)),
                            dtype=utils.WORD_DTYPE), cols)


def add(a: BitMatrix, b: BitMatrix) -> BitMatrix:
  """Entrywise sum (XOR)."""
  if a.shape != b.shape:
    raise ValueError(f"Cannot add matrices of shapes {a.shape} and {b.shape}.")
  return BitMatrix(a.words ^ b.words, a.cols)


def multiply(a: BitMatrix, b: BitMatrix) -> BitMatrix:
  """Matrix product over GF(2).

  Row `i` of the result is the XOR of the rows of `b` selected by the set bits
  of row `i` of `a`, accumulated one inner index at a time over whole words.

  Args:
    a: The left `r x t` matrix.
    b: The right `t x c` matrix.

  Returns:
    The `r x c` product.

  Raises:
    ValueError: if `a.cols != b.rows`.
  """
  if a.cols != b.rows:
    raise ValueError(f"Dimension mismatch: {a.shape} times {b.shape}.")
  selectors = a.to_bits().astype(bool)
  out = np.zeros((a.rows, b.words.shape[1]), dtype=utils.WORD_DTYPE)
  for t in range(a.cols):
    out[selectors[:, t]] ^= b.words[t]
  return BitMatrix(out, b.cols)


def transpose(a: BitMatrix) -> BitMatrix:
  if a.rows == 0:
    raise ValueError("Cannot transpose a matrix without rows.")
  return BitMatrix.from_bits(a.to_bits().T)


def rref(a: BitMatrix) -> RrefResult:
  """Reduced row echelon form over GF(2).

  The input is never mutated. Zero rows are dropped from the result, so
  `reduced.rows == rank`.

  Args:
    a: The matrix to reduce.

  Returns:
    A `RrefResult` with the reduced matrix, the strictly increasing pivot
    columns and the rank.
  """
  words = np.array(a.words, copy=True)
  rows = words.shape[0]
  pivots = []
  r = 0
  for c in range(a.cols):
    if r == rows:
      break
    w, shift = divmod(c, utils.WORD_BITS)
    column = ((words[:, w] >> np.uint64(shift)) & _ONE).astype(bool)
    hits = np.flatnonzero(column[r:])
    if hits.size == 0:
      continue
    p = r + int(hits[0])
    if p != r:
      words[[r, p]] = words[[p, r]]
      column[[r, p]] = column[[p, r]]
    column[r] = False
    words[column] ^= words[r]
    pivots.append(c)
    r += 1
  return RrefResult(BitMatrix(words[:r], a.cols), tuple(pivots), r)


def rank(a: BitMatrix) -> int:
  return rref(a).rank


def determinant(a: BitMatrix) -> int:
  """Determinant over GF(2): 1 iff the square matrix has full rank."""
  if a.rows != a.cols:
    raise ValueError(f"Determinant needs a square matrix, got {a.shape}.")
  return int(rank(a) == a.rows)


def kronecker(a: BitMatrix, b: BitMatrix) -> BitMatrix:
  """Kronecker product: block `(i, j)` is `a[i, j] * b`."""
  if a.rows == 0 or b.rows == 0:
    return zero(0, a.cols * b.cols)
  return BitMatrix.from_bits(np.kron(a.to_bits(), b.to_bits()))


def _check_indices(indices: IndexSet, size: int, what: str):
  for i in indices:
    if not 0 <= i < size:
      raise ValueError(f"{what} index {i} out of range [0, {size}).")


def row_submatrix(a: BitMatrix, indices: IndexSet) -> BitMatrix:
  """The matrix made of the rows `indices` of `a`, in that order."""
  indices = list(indices)
  _check_indices(indices, a.rows, "Row")
  return BitMatrix(a.words[indices] if indices else
                   np.zeros((0, a.words.shape[1]), dtype=utils.WORD_DTYPE),
                   a.cols)


def column_submatrix(a: BitMatrix, indices: IndexSet) -> BitMatrix:
  """The matrix made of the columns `indices` of `a`, in that order."""
  indices = list(indices)
  _check_indices(indices, a.cols, "Column")
  if not indices:
    raise ValueError("A column submatrix needs at least one column.")
  return BitMatrix(pack_bits(a.to_bits()[:, indices]), len(indices))


def augment_columns(a: BitMatrix, b: BitMatrix) -> BitMatrix:
  """The matrix `(a | b)`."""
  if a.rows != b.rows:
    raise ValueError(f"Cannot augment {a.shape} with {b.shape}: row counts "
                     "differ.")
  bits = np.concatenate([a.to_bits(), b.to_bits()], axis=1)
  return BitMatrix(pack_bits(bits), a.cols + b.cols)


def append_zero_column(a: BitMatrix) -> BitMatrix:
  return augment_columns(a, zero(a.rows, 1))


def stack_rows(*matrices: BitMatrix) -> BitMatrix:
  """Vertical concatenation of matrices with equal column counts."""
  if not matrices:
    raise ValueError("Need at least one matrix to stack.")
  cols = matrices[0].cols
  if any(m.cols != cols for m in matrices):
    raise ValueError("Cannot stack matrices with different column counts: "
                     f"{[m.shape for m in matrices]}.")
  return BitMatrix(np.concatenate([m.words for m in matrices], axis=0), cols)


def inverse(a: BitMatrix) -> BitMatrix:
  """Inverse of a square matrix, by reducing `(a | I)`."""
  if a.rows != a.cols:
    raise ValueError(f"Inverse needs a square matrix, got {a.shape}.")
  n = a.rows
  reduced, pivots, r = rref(augment_columns(a, identity(n)))
  if r < n or pivots[n - 1] != n - 1:
    raise ValueError("Matrix is singular over GF(2).")
  return column_submatrix(reduced, range(n, 2 * n))


def null_space(a: BitMatrix) -> BitMatrix:
  """Basis (as rows) of `{x : a x^T = 0}`, i.e. the dual of the row space."""
  reduced, pivots, _ = rref(a)
  free = [c for c in range(a.cols) if c not in set(pivots)]
  if not free:
    return zero(0, a.cols)
  reduced_bits = reduced.to_bits()
  basis = np.zeros((len(free), a.cols), dtype=np.uint8)
  for row, f in enumerate(free):
    basis[row, f] = 1
    for i, p in enumerate(pivots):
      basis[row, p] = reduced_bits[i, f]
  return BitMatrix.from_bits(basis)


def from_row_ints(values: Iterable[int], cols: int) -> BitMatrix:
  """Builds a matrix whose row `i` has the bits of `values[i]`."""
  values = list(values)
  if not values:
    return zero(0, cols)
  bits = [[(v >> j) & 1 for j in range(cols)] for v in values]
  for v in values:
    if v >> cols:
      raise ValueError(f"Row value {v} has bits beyond column {cols}.")
  return BitMatrix.from_bits(bits)


def gram(a: BitMatrix) -> BitMatrix:
  """The Gram matrix `a a^T`; a `0 x 0` Gram is not representable."""
  return multiply(a, transpose(a))
