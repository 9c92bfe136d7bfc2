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
"""Tests for the bit-packed GF(2) matrices in gf2.py."""
import pickle

from absl.testing import absltest
from absl.testing import parameterized
import lcdkit
from tests import oracles
import numpy as np

gf2 = lcdkit.gf2
BitMatrix = lcdkit.BitMatrix


class TestBitMatrix(parameterized.TestCase):
  """Test class for `BitMatrix` and its storage."""

  @parameterized.parameters(1, 5, 63, 64, 65, 130)
  def test_bits_survive_packing(self, cols: int):
    rng = np.random.default_rng(cols)
    bits = rng.integers(0, 2, size=(7, cols)).astype(np.uint8)
    m = BitMatrix.from_bits(bits)
    self.assertEqual(m.shape, (7, cols))
    np.testing.assert_array_equal(m.to_bits(), bits)
    self.assertEqual(m[3, cols - 1], int(bits[3, cols - 1]))

  def test_trailing_bits_are_masked(self):
    words = np.full((2, 1), np.uint64(0xFFFFFFFFFFFFFFFF))
    m = BitMatrix(words, 3)
    self.assertEqual(m.to_strings(), ("111", "111"))
    np.testing.assert_array_equal(m.row_weights(), [3, 3])

  def test_storage_is_read_only(self):
    m = gf2.identity(3)
    with self.assertRaises(ValueError):
      m.words[0, 0] = 0

  def test_rejects_non_binary_entries(self):
    with self.assertRaises(ValueError):
      BitMatrix.from_bits([[0, 2]])

  def test_zero_rows_are_legal(self):
    m = BitMatrix.from_strings([], cols=5)
    self.assertEqual(m.shape, (0, 5))
    self.assertEqual(gf2.rank(m), 0)

  def test_equality_and_hash(self):
    a = BitMatrix.from_strings(["101", "011"])
    b = BitMatrix.from_bits([[1, 0, 1], [0, 1, 1]])
    self.assertEqual(a, b)
    self.assertEqual(hash(a), hash(b))
    self.assertNotEqual(a, gf2.identity(3))

  def test_row_ints(self):
    m = BitMatrix.from_strings(["1100", "0001"])
    self.assertEqual(m.row_ints(), (0b0011, 0b1000))
    self.assertEqual(gf2.from_row_ints(m.row_ints(), 4), m)

  def test_pickles(self):
    m = BitMatrix.from_strings(["10110", "01011"])
    self.assertEqual(pickle.loads(pickle.dumps(m)), m)


class TestOperations(parameterized.TestCase):
  """Test class for the module level matrix operations."""

  def test_identity_times_identity(self):
    self.assertEqual(gf2.identity(4) @ gf2.identity(4), gf2.identity(4))

  def test_j_squared_vanishes_for_even_order(self):
    self.assertEqual(gf2.all_ones(2) @ gf2.all_ones(2), gf2.zero(2, 2))

  @parameterized.parameters((4, 5, 3), (1, 70, 2), (9, 64, 66))
  def test_multiply_matches_naive_product(self, r: int, t: int, c: int):
    rng = np.random.default_rng(r * 100 + c)
    a = oracles.random_matrix(rng, r, t)
    b = oracles.random_matrix(rng, t, c)
    np.testing.assert_array_equal(
        gf2.multiply(a, b).to_bits(),
        oracles.naive_multiply(a.to_bits(), b.to_bits()))

  def test_multiply_rejects_mismatched_shapes(self):
    with self.assertRaises(ValueError):
      gf2.multiply(gf2.identity(3), gf2.identity(4))

  def test_transpose(self):
    m = BitMatrix.from_strings(["110", "001"])
    self.assertEqual(m.T, BitMatrix.from_strings(["10", "10", "01"]))

  def test_rref_of_dependent_rows(self):
    m = BitMatrix.from_strings(["11", "11"])
    reduced, pivots, rank = gf2.rref(m)
    self.assertEqual(reduced, BitMatrix.from_strings(["11"]))
    self.assertEqual(pivots, (0,))
    self.assertEqual(rank, 1)

  def test_rref_does_not_mutate(self):
    m = BitMatrix.from_strings(["011", "110", "101"])
    before = m.to_strings()
    gf2.rref(m)
    self.assertEqual(m.to_strings(), before)

  @parameterized.parameters(range(10))
  def test_rank_matches_incremental_basis(self, seed: int):
    rng = np.random.default_rng(seed)
    m = oracles.random_matrix(rng, 6, 10)
    self.assertEqual(gf2.rank(m), oracles.incremental_rank(m.to_bits()))

  def test_rref_is_idempotent_with_increasing_pivots(self):
    rng = np.random.default_rng(7)
    m = oracles.random_matrix(rng, 12, 80)
    reduced, pivots, _ = gf2.rref(m)
    self.assertEqual(gf2.rref(reduced).reduced, reduced)
    self.assertEqual(list(pivots), sorted(set(pivots)))

  def test_determinant(self):
    self.assertEqual(gf2.determinant(gf2.identity(5)), 1)
    self.assertEqual(gf2.determinant(gf2.all_ones(3)), 0)
    j_minus_i = gf2.add(gf2.all_ones(4), gf2.identity(4))
    self.assertEqual(gf2.determinant(j_minus_i),
                     oracles.cofactor_determinant(j_minus_i.to_bits()))

  @parameterized.parameters(range(8))
  def test_determinant_matches_cofactor_expansion(self, seed: int):
    rng = np.random.default_rng(seed)
    m = oracles.random_matrix(rng, 5, 5)
    self.assertEqual(gf2.determinant(m),
                     oracles.cofactor_determinant(m.to_bits()))

  def test_determinant_rejects_non_square(self):
    with self.assertRaises(ValueError):
      gf2.determinant(gf2.zero(2, 3))

  def test_kronecker_gram_identity(self):
    rng = np.random.default_rng(3)
    a = oracles.random_matrix(rng, 2, 3)
    b = oracles.random_matrix(rng, 3, 4)
    ab = gf2.kronecker(a, b)
    self.assertEqual(ab.shape, (6, 12))
    self.assertEqual(gf2.gram(ab), gf2.kronecker(gf2.gram(a), gf2.gram(b)))

  def test_inverse(self):
    self.assertEqual(gf2.inverse(gf2.identity(3)), gf2.identity(3))
    perm = BitMatrix.from_strings(["010", "001", "100"])
    self.assertEqual(gf2.inverse(perm), perm.T)
    rng = np.random.default_rng(11)
    m = oracles.random_matrix(rng, 8, 8)
    while not gf2.determinant(m):
      m = oracles.random_matrix(rng, 8, 8)
    self.assertEqual(m @ gf2.inverse(m), gf2.identity(8))

  def test_inverse_of_singular_matrix_raises(self):
    with self.assertRaises(ValueError):
      gf2.inverse(gf2.all_ones(2))

  def test_null_space(self):
    rng = np.random.default_rng(5)
    m = oracles.random_matrix(rng, 4, 9)
    kernel = gf2.null_space(m)
    self.assertEqual(kernel.rows, 9 - gf2.rank(m))
    self.assertEqual(m @ kernel.T, gf2.zero(4, kernel.rows))

  def test_null_space_of_full_space_is_empty(self):
    self.assertEqual(gf2.null_space(gf2.identity(3)).shape, (0, 3))

  def test_submatrices_and_stacking(self):
    i4 = gf2.identity(4)
    self.assertEqual(gf2.rank(gf2.row_submatrix(i4, [0, 2])), 2)
    self.assertEqual(gf2.column_submatrix(i4, [3]).to_strings(),
                     ("0", "0", "0", "1"))
    self.assertEqual(gf2.append_zero_column(i4).shape, (4, 5))
    j_minus_i = gf2.add(gf2.all_ones(2), gf2.identity(2))
    self.assertEqual(j_minus_i, BitMatrix.from_strings(["01", "10"]))
    stacked = gf2.stack_rows(i4, gf2.all_ones(4))
    self.assertEqual(stacked.shape, (8, 4))
    with self.assertRaises(ValueError):
      gf2.row_submatrix(i4, [4])
    with self.assertRaises(ValueError):
      gf2.stack_rows(i4, gf2.identity(3))
    with self.assertRaises(ValueError):
      gf2.augment_columns(i4, gf2.identity(3))


if __name__ == "__main__":
  absltest.main()
