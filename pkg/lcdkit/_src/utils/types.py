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
"""lcdkit annotation types."""
import fractions
from typing import Sequence, Tuple, Union

import numpy as np

# Types for annotation
Array = np.ndarray
Words = np.ndarray
Bits = np.ndarray
Rational = fractions.Fraction
Scalar = Union[int, fractions.Fraction]
Seed = int
Cell = Tuple[int, int]
IndexSet = Sequence[int]

WORD_BITS = 64
WORD_DTYPE = np.uint64


def num_words(cols: int) -> int:
  """Returns how many 64-bit words hold `cols` bits (at least one)."""
  if cols < 0:
    raise ValueError(f"Number of columns must be non-negative, got {cols}.")
  return max(1, -(-cols // WORD_BITS))


def is_binary(bits: Array) -> bool:
  """Whether every entry of `bits` is 0 or 1."""
  return bool(np.all((bits == 0) | (bits == 1)))
