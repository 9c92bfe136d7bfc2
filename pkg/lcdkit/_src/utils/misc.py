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
"""Bit twiddling, seeding and data-location helpers."""
import hashlib
import os
from typing import Iterator, Sequence

import numpy as np

from lcdkit._src.utils import types

Array = types.Array
Words = types.Words

DATA_DIR_ENV_VAR = "LCDKIT_DATA"

_POPCOUNT_8 = np.array([bin(x).count("1") for x in range(256)], dtype=np.int64)


def popcount_rows(words: Words) -> Array:
  """Returns the Hamming weight of every row of a `(rows, words)` array."""
  words = np.ascontiguousarray(words, dtype=np.uint64)
  if words.ndim != 2:
    raise ValueError(f"Expected a 2D array of words, got {words.ndim} dims.")
  if words.shape[0] == 0:
    return np.zeros((0,), dtype=np.int64)
  as_bytes = words.astype("<u8").view(np.uint8)
  return _POPCOUNT_8[as_bytes].sum(axis=1)


def popcount(values: Array) -> Array:
  """Elementwise Hamming weight of a non-negative integer array."""
  values = np.ascontiguousarray(values, dtype=np.uint64)
  flat = values.reshape(-1, 1)
  return popcount_rows(flat).reshape(values.shape)


def parity(value: int) -> int:
  """Parity of the number of set bits of a python integer."""
  return bin(value).count("1") & 1


def bits_to_int(bits: Sequence[int]) -> int:
  """Little-endian packing: `bits[j]` becomes bit `j` of the result."""
  value = 0
  for j, b in enumerate(bits):
    if b:
      value |= 1 << j
  return value


def int_to_bits(value: int, length: int) -> np.ndarray:
  """Inverse of `bits_to_int` for a fixed `length`."""
  if value >> length:
    raise ValueError(f"Value {value} does not fit in {length} bits.")
  return np.array([(value >> j) & 1 for j in range(length)], dtype=np.uint8)


def gray_flip_positions(num_bits: int) -> Iterator[int]:
  """Yields the bit flipped at each step of the reflected Gray code.

  Starting from zero, flipping the yielded positions in order visits all
  `2**num_bits` values exactly once.

  Args:
    num_bits: The number of bits of the Gray code.

  Yields:
    `2**num_bits - 1` bit positions.
  """
  for step in range(1, 1 << num_bits):
    yield (step & -step).bit_length() - 1


def derive_seed(master_seed: int, *keys: int) -> int:
  """Derives an independent 63-bit seed from a master seed and integer keys."""
  text = ":".join(str(x) for x in (master_seed,) + tuple(keys))
  digest = hashlib.sha256(text.encode("ascii")).digest()
  return int.from_bytes(digest[:8], "little") >> 1


def data_dir() -> str:
  """Returns the fixtures directory, honouring the `LCDKIT_DATA` variable."""
  override = os.environ.get(DATA_DIR_ENV_VAR)
  if override:
    return override
  return os.path.join(
      os.path.dirname(os.path.dirname(os.path.dirname(__file__))), "data")


def data_path(name: str) -> str:
  """Returns the path of a named fixture file."""
  path = os.path.join(data_dir(), name)
  if not os.path.exists(path):
    raise ValueError(f"Fixture {name!r} not found in {data_dir()!r}.")
  return path
