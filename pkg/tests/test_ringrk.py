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
"""Tests for ring codes and the Gray map in ringrk.py."""
import os
import tempfile

from absl.testing import absltest
from absl.testing import parameterized
import lcdkit
from tests import oracles
import numpy as np

codes = lcdkit.codes
ringrk = lcdkit.ringrk
BitMatrix = lcdkit.BitMatrix
RkCode = lcdkit.RkCode
RkElement = lcdkit.RkElement
RkVector = lcdkit.RkVector


def _random_ring_code(rng: np.random.Generator, k: int, n: int) -> RkCode:
  generators = tuple(
      RkVector.from_ints(k, [int(v) for v in
                             rng.integers(0, 1 << (1 << k), size=n)])
      for _ in range(int(rng.integers(1, 3))))
  return RkCode(k, n, generators)


class TestRingArithmetic(parameterized.TestCase):
  """Test class for `RkElement` arithmetic and inner products."""

  def test_nilpotent_generators(self):
    u1 = RkElement.monomial(2, 0b01)
    u2 = RkElement.monomial(2, 0b10)
    self.assertEqual(u1 * u1, RkElement.zero(2))
    self.assertEqual(u1 * u2, RkElement.socle(2))
    self.assertEqual(u2 * u1, u1 * u2)

  @parameterized.parameters(1, 2, 3)
  def test_one_plus_u_is_an_involution(self, k: int):
    x = RkElement.one(k) + RkElement.monomial(k, 1)
    self.assertEqual(x * x, RkElement.one(k))
    self.assertTrue(x.is_unit())
    self.assertFalse(RkElement.monomial(k, 1).is_unit())

  def test_string_form(self):
    x = RkElement.from_string(1, "11")
    self.assertEqual(x, RkElement.one(1) + RkElement.monomial(1, 1))
    self.assertEqual(x.to_string(), "11")
    self.assertEqual(RkElement.socle(2).to_string(), "0001")
    self.assertEqual(RkElement.socle(2).support(), [3])

  @parameterized.parameters(
      (1, "1"),
      (1, "102"),
      (2, "01"),
  )
  def test_bad_strings(self, k: int, text: str):
    with self.assertRaises(ValueError):
      RkElement.from_string(k, text)

  def test_validation(self):
    with self.assertRaises(ValueError):
      RkElement(1, 4)
    with self.assertRaises(ValueError):
      RkElement(4, 0)
    with self.assertRaises(ValueError):
      RkElement.one(1) + RkElement.one(2)
    with self.assertRaises(ValueError):
      RkVector(1, ())
    with self.assertRaises(ValueError):
      RkVector(1, (RkElement.one(2),))

  def test_multiplication_is_associative(self):
    elements = [RkElement(2, c) for c in range(16)]
    for a in elements:
      for b in elements:
        for c in elements[::3]:
          self.assertEqual((a * b) * c, a * (b * c))

  def test_inner_product(self):
    ones = RkVector.from_ints(1, [1, 1])
    self.assertEqual(ringrk.inner_product(ones, ones), RkElement.zero(1))
    v = RkVector.from_ints(1, [1, 2])
    # 1 * 1 + u * u = 1.
    self.assertEqual(ringrk.inner_product(v, v), RkElement.one(1))
    with self.assertRaises(ValueError):
      ringrk.inner_product(ones, RkVector.from_ints(1, [1]))


class TestGrayMap(parameterized.TestCase):
  """Test class for the Gray map."""

  def test_small_images(self):
    np.testing.assert_array_equal(
        ringrk.gray_element(RkElement.monomial(1, 1)), [1, 1])
    np.testing.assert_array_equal(
        ringrk.gray_element(RkElement.one(1)), [0, 1])
    np.testing.assert_array_equal(
        ringrk.gray_element(RkElement.monomial(2, 0b10)), [0, 1, 0, 1])
    self.assertEqual(ringrk.ring_weight(RkVector.from_ints(1, [2, 1])), 3)

  @parameterized.parameters(1, 2, 3)
  def test_bijective_and_additive(self, k: int):
    elements = [RkElement(k, c) for c in range(1 << (1 << k))]
    images = {tuple(ringrk.gray_element(e)) for e in elements}
    self.assertLen(images, len(elements))
    for a in elements[:16]:
      for b in elements[:16]:
        np.testing.assert_array_equal(
            ringrk.gray_element(a + b),
            ringrk.gray_element(a) ^ ringrk.gray_element(b))

  @parameterized.parameters(1, 2)
  def test_pairing_becomes_coefficient_sum(self, k: int):
    # phi(x) . phi(y) is the sum of the coefficients of x y.
    elements = [RkElement(k, c) for c in range(1 << (1 << k))]
    for x in elements:
      for y in elements:
        dot = int(np.dot(ringrk.gray_element(x), ringrk.gray_element(y))) % 2
        self.assertEqual(dot, len((x * y).support()) % 2)

  def test_vector_bits(self):
    v = RkVector.from_ints(2, [3, 8])
    self.assertEqual(RkVector.from_bits(2, v.to_bits()), v)
    self.assertLen(ringrk.gray_vector(v), 8)


class TestRingCodes(parameterized.TestCase):
  """Test class for ring codes, duals and the LCD test."""

  def test_repetition_fixture(self):
    code = ringrk.read_ring_code(
        lcdkit.utils.data_path("ring_r1_repetition.rcode"))
    self.assertEqual((code.k, code.n, code.size()), (1, 3, 4))
    self.assertLen(code.codewords(), 4)
    image = lcdkit.gray_code_image(code)
    self.assertEqual((image.n, image.k), (6, 2))
    self.assertTrue(image.is_lcd())
    self.assertTrue(lcdkit.is_lcd_ring(code))

  def test_unit_generator_gives_full_space(self):
    code = RkCode(1, 1, (RkVector.from_ints(1, [1]),))
    image = lcdkit.gray_code_image(code)
    self.assertEqual((image.n, image.k), (2, 2))
    self.assertEqual(lcdkit.dual_ring_code(code).dimension(), 0)
    self.assertTrue(lcdkit.is_lcd_ring(code))

  @parameterized.parameters(1, 2)
  def test_length_one_lcd_codes_are_trivial(self, k: int):
    # Every proper nonzero ideal meets its annihilator in the socle.
    for c in range(1 << (1 << k)):
      a = RkElement(k, c)
      code = RkCode(k, 1, (RkVector(k, (a,)),))
      self.assertEqual(lcdkit.is_lcd_ring(code), c == 0 or a.is_unit())

  @parameterized.parameters((1, 1), (1, 2), (1, 3), (2, 1), (2, 2))
  def test_gray_image_of_dual_is_dual_of_image(self, k: int, n: int):
    rng = np.random.default_rng(10 * k + n)
    for _ in range(6):
      code = _random_ring_code(rng, k, n)
      dual = lcdkit.dual_ring_code(code)
      self.assertEqual(code.dimension() + dual.dimension(), n << k)
      image = lcdkit.gray_code_image(code)
      self.assertEqual(lcdkit.gray_code_image(dual), codes.dual(image))
      self.assertEqual(lcdkit.is_lcd_ring(code), image.is_lcd())

  def test_dual_matches_brute_force_pairing(self):
    rng = np.random.default_rng(5)
    code = _random_ring_code(rng, 1, 2)
    words = code.codewords()
    dual = lcdkit.dual_ring_code(code)
    for v in dual.codewords():
      for c in words:
        self.assertFalse(ringrk.inner_product(v, c))

  def test_gray_image_span(self):
    code = _random_ring_code(np.random.default_rng(2), 1, 3)
    image = lcdkit.gray_code_image(code)
    expected = {tuple(ringrk.gray_vector(v)) for v in code.codewords()}
    self.assertEqual(oracles.span(image.generator.to_bits()), expected)

  def test_empty_generator_list(self):
    code = RkCode(1, 2, ())
    self.assertEqual(code.dimension(), 0)
    self.assertEqual(lcdkit.gray_code_image(code).k, 0)
    self.assertTrue(lcdkit.is_lcd_ring(code))
    self.assertEqual(lcdkit.dual_ring_code(code).dimension(), 4)

  def test_same_code(self):
    unit = RkElement.one(1) + RkElement.monomial(1, 1)
    g = RkVector.from_ints(1, [1, 1])
    self.assertTrue(ringrk.same_code(RkCode(1, 2, (g,)),
                                     RkCode(1, 2, (g.scale(unit),))))
    self.assertFalse(ringrk.same_code(
        RkCode(1, 2, (RkVector.from_ints(1, [1, 0]),)),
        RkCode(1, 2, (RkVector.from_ints(1, [0, 1]),))))
    self.assertFalse(ringrk.same_code(RkCode(1, 2, ()), RkCode(2, 2, ())))

  def test_guards(self):
    big = RkCode(3, 4, (RkVector.from_ints(3, [1, 0, 0, 0]),))
    with self.assertRaisesRegex(ValueError, "guard"):
      lcdkit.gray_code_image(big)
    self.assertEqual(lcdkit.gray_code_image(big, max_length=None).n, 32)
    with self.assertRaisesRegex(ValueError, "guard"):
      lcdkit.dual_ring_code(RkCode(3, 3, ()))
    with self.assertRaises(ValueError):
      RkCode(1, 2, (RkVector.from_ints(1, [1]),))


class TestGramConstructions(parameterized.TestCase):
  """Test class for ring codes lifted from binary generators."""

  @parameterized.parameters(1, 2, 3)
  def test_identity_mode(self, k: int):
    code = ringrk.ring_code_from_binary_gram(
        BitMatrix.from_strings(["111"]), k, "identity")
    self.assertEqual(code.dimension(), 1 << k)
    self.assertTrue(lcdkit.is_lcd_ring(code, max_bits=24))
    self.assertTrue(lcdkit.gray_code_image(code, max_length=None).is_lcd())

  def test_identity_rows(self):
    code = ringrk.ring_code_from_binary_gram(
        lcdkit.gf2.identity(2), 1, "identity")
    image = lcdkit.gray_code_image(code)
    self.assertEqual((image.n, image.k), (4, 4))

  @parameterized.parameters(1, 2)
  def test_j_minus_i_mode(self, k: int):
    g = BitMatrix.from_strings(["1100", "0110"])
    code = ringrk.ring_code_from_binary_gram(g, k, "j_minus_i")
    self.assertEqual(code.dimension(), 2 << k)
    self.assertTrue(lcdkit.is_lcd_ring(code))

  @parameterized.parameters(
      (["111"], 1, "other"),
      (["110"], 1, "identity"),
      (["111"], 1, "j_minus_i"),
      (["1100", "0110"], 1, "identity"),
      (["111"], 4, "identity"),
  )
  def test_rejected_inputs(self, rows, k: int, mode: str):
    with self.assertRaises(ValueError):
      ringrk.ring_code_from_binary_gram(BitMatrix.from_strings(rows), k, mode)


class TestRingTextFormat(parameterized.TestCase):
  """Test class for the ring code file format."""

  def test_round_trip(self):
    code = RkCode(2, 2, (RkVector.from_ints(2, [1, 6]),
                         RkVector.from_ints(2, [8, 0])))
    text = ringrk.format_ring_code(code)
    self.assertEqual(text.splitlines()[0], "2 2 2")
    self.assertEqual(ringrk.parse_ring_code(text), code)
    with tempfile.TemporaryDirectory() as tmp:
      path = os.path.join(tmp, "c.rcode")
      ringrk.write_ring_code(code, path)
      self.assertEqual(ringrk.read_ring_code(path), code)

  @parameterized.parameters(
      ("", "header"),
      ("3 1\n", "expected"),
      ("3 1 2\n10 10 10\n", "announces"),
      ("2 1 1\n10\n", "Line 2"),
      ("2 1 1\n10 1\n", "Line 2"),
      ("2 4 0\n", "Ring index"),
  )
  def test_malformed_text(self, text: str, message: str):
    with self.assertRaisesRegex(ValueError, message):
      ringrk.parse_ring_code(text)


if __name__ == "__main__":
  absltest.main()
