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
"""Exact integer and rational helpers."""
import fractions
import math
from typing import Iterable, TypeVar

from lcdkit._src.utils import types

Scalar = types.Scalar
TScalar = TypeVar("TScalar", int, fractions.Fraction)


def product(iterable_object: Iterable[TScalar]) -> TScalar:
  """Computes the product of all elements in the iterable."""
  x = 1

  for element in iterable_object:
    x = x * element

  return x


def binomial(n: int, i: int) -> int:
  """`n choose i`, zero outside `0 <= i <= n`."""
  if i < 0 or i > n:
    return 0
  return math.comb(n, i)


def ceil_div(a: int, b: int) -> int:
  """Ceiling of `a / b` for positive `b`."""
  return -(-a // b)


def floor_log2(value: Scalar) -> int:
  """Largest integer `k` with `2**k <= value`, for `value >= 1`."""
  value = fractions.Fraction(value)
  if value < 1:
    raise ValueError(f"floor_log2 needs a value >= 1, got {value}.")
  k = (value.numerator // value.denominator).bit_length() - 1
  while fractions.Fraction(2) ** (k + 1) <= value:
    k += 1
  return k
