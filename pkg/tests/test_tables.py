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
"""Tests for the exhaustive oracles, the search and the tables in tables.py."""
import dataclasses
import os
import tempfile

from absl.testing import absltest
from absl.testing import parameterized
import immutabledict
import lcdkit

codes = lcdkit.codes
lpbound = lcdkit.lpbound
tables = lcdkit.tables


class TestExhaustive(parameterized.TestCase):
  """Test class for the exhaustive `LCD[n,k]` and `LCK[n,d]` oracles."""

  @parameterized.parameters(
      (3, 2, 2),
      (4, 2, 2),
      (5, 2, 2),
      (6, 2, 3),
      (6, 3, 2),
      (7, 2, 4),
      (7, 4, 2),
  )
  def test_small_values(self, n: int, k: int, expected: int):
    self.assertEqual(lcdkit.exhaustive_lcd_nk(n, k), expected)

  @parameterized.parameters(range(2, 10))
  def test_closed_forms(self, n: int):
    self.assertEqual(lcdkit.exhaustive_lcd_nk(n, 1), n if n % 2 else n - 1)
    self.assertEqual(lcdkit.exhaustive_lcd_nk(n, n - 1), 2 if n % 2 else 1)
    self.assertEqual(lcdkit.exhaustive_lcd_nk(n, n), 1)
    self.assertEqual(lcdkit.exhaustive_lck_nd(n, 1), n)
    self.assertEqual(lcdkit.exhaustive_lck_nd(n, 2), n - 1 if n % 2 else n - 2)
    self.assertEqual(lcdkit.exhaustive_lck_nd(n, n), n % 2)

  @parameterized.parameters((5, 3), (6, 2), (7, 4))
  def test_witness(self, n: int, k: int):
    code = tables.exhaustive_witness(n, k)
    self.assertEqual((code.n, code.k), (n, k))
    self.assertTrue(code.is_lcd())
    self.assertEqual(codes.minimum_distance(code),
                     lcdkit.exhaustive_lcd_nk(n, k))

  @parameterized.parameters(range(1, 9))
  def test_monotone_in_length(self, k: int):
    values = [lcdkit.exhaustive_lcd_nk(n, k) for n in range(max(k, 2), 10)]
    self.assertEqual(values, sorted(values))

  def test_product_and_sum_bounds(self):
    lcd = lcdkit.exhaustive_lcd_nk
    for n, m in ((2, 2), (2, 3), (2, 4), (3, 3)):
      for k in range(1, n + 1):
        for l in range(1, m + 1):
          self.assertGreaterEqual(lcd(n * m, k * l), lcd(n, k) * lcd(m, l))
    for n in range(1, 8):
      for m in range(1, 10 - n):
        for k in range(1, n + 1):
          for l in range(1, m + 1):
            self.assertGreaterEqual(lcd(n + m, k + l),
                                    min(lcd(n, k), lcd(m, l)))

  @parameterized.parameters(
      ((3, 1), (3, 2)), ((2, 1), (4, 3)), ((5, 3), (3, 1)))
  def test_witness_combinations(self, first, second):
    a = tables.exhaustive_witness(*first)
    b = tables.exhaustive_witness(*second)
    da, db = codes.minimum_distance(a), codes.minimum_distance(b)
    product = codes.kronecker_code(a, b)
    self.assertTrue(product.is_lcd())
    self.assertEqual(codes.minimum_distance(product), da * db)
    total = codes.direct_sum(a, b)
    self.assertTrue(total.is_lcd())
    self.assertEqual(codes.minimum_distance(total), min(da, db))

  def test_report(self):
    claims = {c.statement: c for c in tables.exhaustive_report()}
    self.assertEqual(claims["LCD[7,4]=2"].computed, 2)
    self.assertEqual(claims["LCD[7,2]=4"].computed, 4)
    self.assertTrue(all(c.holds for c in claims.values()))

  @parameterized.parameters(range(3, 8))
  def test_known_exclusions_hold(self, n: int):
    for d in range(1, n + 1):
      exclusion = lpbound.known_exclusions(n, d)
      if exclusion is not None:
        self.assertLess(lcdkit.exhaustive_lck_nd(n, d), exclusion)

  @parameterized.parameters(range(1, 8))
  def test_below_lp_bounds(self, n: int):
    for d in range(1, n + 1):
      self.assertLessEqual(lcdkit.exhaustive_lck_nd(n, d),
                           lcdkit.lcd_dimension_upper(n, d))

  @parameterized.parameters((0, 1), (3, 0), (3, 4), (10, 2))
  def test_rejects_bad_parameters(self, n: int, k: int):
    with self.assertRaises(ValueError):
      lcdkit.exhaustive_lcd_nk(n, k)


class TestSearch(parameterized.TestCase):
  """Test class for the randomized lower-bound search."""

  def test_deterministic_for_a_seed(self):
    first = lcdkit.search_lck_lower(8, 3, budget=2, seed=5)
    second = lcdkit.search_lck_lower(8, 3, budget=2, seed=5)
    self.assertEqual(first, second)
    self.assertTrue(first.verified)
    # The Gray image of a row of the order 4 orthogonal matrix is [8,2,3].
    self.assertBetween(first.k, 2, lcdkit.lcd_dimension_upper(8, 3))

  def test_settled_cells(self):
    self.assertEqual(lcdkit.search_lck_lower(9, 1, 0, 0).k, 9)
    self.assertEqual(lcdkit.search_lck_lower(10, 2, 0, 0).k, 8)
    self.assertEqual(lcdkit.search_lck_lower(10, 10, 0, 0).k, 0)
    self.assertEqual(lcdkit.search_lck_lower(6, 3, 0, 0).k, 2)

  def test_parity_check_cell(self):
    record = lcdkit.search_lck_lower(14, 3, budget=1, seed=0)
    self.assertGreaterEqual(record.k, 9)
    self.assertTrue(record.code().is_lcd())
    self.assertGreaterEqual(codes.minimum_distance(record.code()), 3)

  def test_rejects_bad_cells(self):
    with self.assertRaises(ValueError):
      lcdkit.search_lck_lower(31, 3, 1, 0)
    with self.assertRaises(ValueError):
      lcdkit.search_lck_lower(5, 6, 1, 0)

  def test_verify_record(self):
    good = lcdkit.BoundRecord(3, 3, 1, codes.repetition_code(3).generator,
                              "family", 0)
    self.assertTrue(tables.verify_record(good).verified)
    bad = [
        dataclasses.replace(good, provenance="magic"),
        dataclasses.replace(good, d=4, n=3),
        dataclasses.replace(good, k=2),
        dataclasses.replace(good, n=2, d=2,
                            generator=codes.repetition_code(2).generator),
    ]
    for record in bad:
      with self.assertRaises(ValueError):
        tables.verify_record(record)


class TestLowerTable(parameterized.TestCase):
  """Test class for building, persisting and comparing lower-bound tables."""

  @classmethod
  def setUpClass(cls):
    super().setUpClass()
    cls.table = lcdkit.build_lower_table(14, budget=1, seed=0,
                                         verify_bounds=True)

  def test_short_rows_are_exact(self):
    for n in range(1, 8):
      for d in range(1, n + 1):
        self.assertEqual(self.table.k(n, d), lcdkit.exhaustive_lck_nd(n, d))

  def test_longer_cells(self):
    self.assertEqual(self.table.k(6, 3), 2)
    self.assertGreaterEqual(self.table.k(12, 3), 6)
    self.assertGreaterEqual(self.table.k(12, 4), 4)
    self.assertGreaterEqual(self.table.k(14, 3), 9)
    self.assertEqual(self.table.k(12, 1), 12)
    self.assertEqual(self.table.k(11, 2), 10)

  def test_records(self):
    self.assertLen(self.table.records, 14 * 15 // 2)
    for (n, d), record in self.table.records.items():
      self.assertEqual((record.n, record.d), (n, d))
      self.assertTrue(record.verified)
      self.assertIn(record.provenance, tables.PROVENANCE_TAGS)
      tables.check_record_bounds(record)
      if d < n:
        self.assertGreaterEqual(record.k, self.table.k(n, d + 1))

  def test_save_and_load(self):
    with tempfile.TemporaryDirectory() as tmp:
      path = os.path.join(tmp, "lower.table")
      lcdkit.save_table(self.table, path)
      loaded = lcdkit.load_table(path)
    self.assertEqual(loaded, self.table)
    self.assertIsNone(loaded.timestamp)
    self.assertEqual((loaded.nmax, loaded.budget, loaded.seed), (14, 1, 0))

  def test_rebuild_is_byte_identical(self):
    first = lcdkit.build_lower_table(9, budget=1, seed=4)
    second = lcdkit.build_lower_table(9, budget=1, seed=4, num_workers=2)
    contents = []
    with tempfile.TemporaryDirectory() as tmp:
      for i, table in enumerate((first, second)):
        path = os.path.join(tmp, f"lower{i}.table")
        lcdkit.save_table(table, path)
        with open(path, "rb") as f:
          contents.append(f.read())
    self.assertEqual(contents[0], contents[1])

  def test_tampered_record_is_rejected(self):
    text = tables.format_table(self.table)
    self.assertIn("\n11111\n", text)
    with self.assertRaisesRegex(ValueError, "not LCD"):
      tables.parse_table(text.replace("\n11111\n", "\n11110\n"))

  def test_rendering(self):
    small = lcdkit.BoundTable(
        immutabledict.immutabledict({
            c: r for c, r in self.table.records.items() if c[0] <= 3}),
        3, 1, 0)
    csv = tables.render_lower_table(small, "csv")
    self.assertEqual(csv.splitlines(),
                     ["n/d,1,2,3", "1,1,,", "2,2,0,", "3,3,2,1"])
    markdown = tables.render_lower_table(small, "md").splitlines()
    self.assertEqual(markdown[1], "|---|---|---|---|")
    self.assertEqual(markdown[4], "| 3 | 3 | 2 | 1 |")
    with self.assertRaises(ValueError):
      tables.render_lower_table(small, "html")

  def test_comparison_with_published(self):
    rows = tables.compare_lower_with_published(self.table)
    statuses = {(r.n, r.d): set() for r in rows}
    for r in rows:
      statuses[(r.n, r.d)].add(r.status)
    self.assertEqual(statuses[(6, 4)], {"published-excluded", "short"})
    self.assertNotIn("built-excluded", {r.status for r in rows})

  def test_published_table(self):
    self.assertEqual(tables.PUBLISHED_LOWER_TABLE[(24, 5)], 11)
    self.assertEqual(tables.PUBLISHED_LOWER_TABLE[(6, 4)], 2)
    self.assertNotIn((7, 3), tables.PUBLISHED_LOWER_TABLE)


class TestTableFormat(parameterized.TestCase):
  """Test class for the persisted table format."""

  def test_empty_table(self):
    table = lcdkit.BoundTable(immutabledict.immutabledict(), 0, 0, 7)
    self.assertEqual(tables.parse_table(tables.format_table(table)), table)

  @parameterized.parameters(
      ("1 1 1 0 family\n", "expected 1 rows"),
      ("1 1 x 0 family\n1\n", "n d k seed provenance"),
      ("1 1 1 0 magic\n1\n", "provenance"),
      ("3 1 2 0 family\n011\n100\n", "canonical"),
      ("1 1 1 0 family\n1\n%\n1 1 1 0 family\n1\n", "twice"),
  )
  def test_malformed_text(self, text: str, message: str):
    with self.assertRaisesRegex(ValueError, message):
      tables.parse_table(text)

  def test_rejects_bad_builds(self):
    with self.assertRaises(ValueError):
      lcdkit.build_lower_table(25, 1, 0)
    with self.assertRaises(ValueError):
      lcdkit.build_lower_table(3, -1, 0)


if __name__ == "__main__":
  absltest.main()
