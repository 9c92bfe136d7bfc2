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
"""Codes over `R_k = F_2[u_1, ..., u_k] / (u_i^2)` and their Gray images.

An element of `R_k` is a sum of monomials `u_A = prod_{i in A} u_i` over
subsets `A` of `{1..k}`. Subsets are bit masks (`u_i` is bit `i - 1`) and an
element is stored as an integer whose bit `A` is the coefficient of `u_A`.
"""
import dataclasses
from typing import List, Optional, Sequence, Tuple

from absl import logging
import numpy as np

from lcdkit._src import codes
from lcdkit._src import gf2
from lcdkit._src import utils

BitMatrix = gf2.BitMatrix
LinearCode = codes.LinearCode

MAX_RING_INDEX = 3
# Default guard on the binary length `n 2^k` of Gray images.
DEFAULT_MAX_GRAY_LENGTH = 24
# Guard on `log2 |R_k^n| = n 2^k` for ambient-space computations.
DEFAULT_MAX_AMBIENT_BITS = 20


def _check_index(k: int):
  if not 1 <= k <= MAX_RING_INDEX:
    raise ValueError(f"Ring index must be in [1, {MAX_RING_INDEX}], got {k}.")


@dataclasses.dataclass(frozen=True)
class RkElement:
  """An element of `R_k`; bit `A` of `coeffs` is the coefficient of `u_A`."""
  k: int
  coeffs: int

  def __post_init__(self):
    _check_index(self.k)
    if not 0 <= self.coeffs < (1 << (1 << self.k)):
      raise ValueError(f"Coefficients {self.coeffs:#x} do not fit R_{self.k}.")

  @classmethod
  def zero(cls, k: int) -> "RkElement":
    return cls(k, 0)

  @classmethod
  def one(cls, k: int) -> "RkElement":
    return cls(k, 1)

  @classmethod
  def monomial(cls, k: int, mask: int) -> "RkElement":
    """The monomial `u_A` for the subset mask `A`."""
    return cls(k, 1 << mask)

  @classmethod
  def socle(cls, k: int) -> "RkElement":
    """The generator `u_1 u_2 ... u_k` of the socle."""
    return cls.monomial(k, (1 << k) - 1)

  @classmethod
  def from_string(cls, k: int, text: str) -> "RkElement":
    """Parses `2^k` characters, character `A` being the coefficient of `u_A`."""
    if len(text) != 1 << k or set(text) - {"0", "1"}:
      raise ValueError(f"Expected {1 << k} characters from {{0,1}} for an "
                       f"element of R_{k}, got {text!r}.")
    return cls(k, utils.bits_to_int([int(c) for c in text]))

  def to_string(self) -> str:
    return "".join(str(b) for b in utils.int_to_bits(self.coeffs, 1 << self.k))

  def support(self) -> List[int]:
    return [a for a in range(1 << self.k) if (self.coeffs >> a) & 1]

  def is_unit(self) -> bool:
    return bool(self.coeffs & 1)

  def __add__(self, other: "RkElement") -> "RkElement":
    return add(self, other)

  def __mul__(self, other: "RkElement") -> "RkElement":
    return mul(self, other)

  def __bool__(self) -> bool:
    return bool(self.coeffs)


def _check_same_ring(a: RkElement, b: RkElement):
  if a.k != b.k:
    raise ValueError(f"Elements of R_{a.k} and R_{b.k} cannot be combined.")


def add(a: RkElement, b: RkElement) -> RkElement:
  _check_same_ring(a, b)
  return RkElement(a.k, a.coeffs ^ b.coeffs)


def mul(a: RkElement, b: RkElement) -> RkElement:
  """Product in `R_k`: `u_A u_B` is `u_{A|B}` if `A & B` is empty, else 0."""
  _check_same_ring(a, b)
  out = 0
  support_b = b.support()
  for x in a.support():
    for y in support_b:
      if not x & y:
        out ^= 1 << (x | y)
  return RkElement(a.k, out)


@dataclasses.dataclass(frozen=True)
class RkVector:
  """A vector of `R_k^n`."""
  k: int
  entries: Tuple[RkElement, ...]

  def __post_init__(self):
    entries = tuple(self.entries)
    object.__setattr__(self, "entries", entries)
    if not entries:
      raise ValueError("Vectors need at least one coordinate.")
    for e in entries:
      if e.k != self.k:
        raise ValueError(f"Entry over R_{e.k} in a vector over R_{self.k}.")

  @classmethod
  def from_ints(cls, k: int, values: Sequence[int]) -> "RkVector":
    return cls(k, tuple(RkElement(k, v) for v in values))

  @property
  def n(self) -> int:
    return len(self.entries)

  def scale(self, a: RkElement) -> "RkVector":
    return RkVector(self.k, tuple(mul(a, e) for e in self.entries))

  def to_bits(self) -> np.ndarray:
    """Coefficient embedding into `F_2^(n 2^k)`, coordinate-major."""
    size = 1 << self.k
    return np.concatenate(
        [utils.int_to_bits(e.coeffs, size) for e in self.entries])

  @classmethod
  def from_bits(cls, k: int, bits: Sequence[int]) -> "RkVector":
    size = 1 << k
    bits = list(bits)
    return cls(k, tuple(
        RkElement(k, utils.bits_to_int(bits[i:i + size]))
        for i in range(0, len(bits), size)))


def inner_product(v: RkVector, w: RkVector) -> RkElement:
  """`[v, w] = sum_i v_i w_i`."""
  if v.k != w.k or v.n != w.n:
    raise ValueError(f"Cannot pair a vector of R_{v.k}^{v.n} with one of "
                     f"R_{w.k}^{w.n}.")
  out = RkElement.zero(v.k)
  for a, b in zip(v.entries, w.entries):
    out = add(out, mul(a, b))
  return out


def _gray(coeffs: np.ndarray) -> np.ndarray:
  if coeffs.shape[0] == 1:
    return coeffs
  half = coeffs.shape[0] // 2
  low = _gray(coeffs[:half])
  high = _gray(coeffs[half:])
  return np.concatenate([high, low ^ high])


def gray_element(e: RkElement) -> np.ndarray:
  """The Gray map `phi_k`, a `2^k` bit vector.

  Writing `c = c_1 + u_k c_2` with `c_1, c_2` over `R_(k-1)`,
  `phi_k(c) = (phi_(k-1)(c_2), phi_(k-1)(c_1) + phi_(k-1)(c_2))` and `phi_0`
  is the identity on `F_2`.

  Args:
    e: The ring element.

  Returns:
    A uint8 array of length `2^k`.
  """
  return _gray(utils.int_to_bits(e.coeffs, 1 << e.k))


def gray_vector(v: RkVector) -> np.ndarray:
  return np.concatenate([gray_element(e) for e in v.entries])


def ring_weight(v: RkVector) -> int:
  """Hamming weight of the Gray image."""
  return int(gray_vector(v).sum())


@dataclasses.dataclass(frozen=True)
class RkCode:
  """The `R_k`-submodule of `R_k^n` generated by `generators`."""
  k: int
  n: int
  generators: Tuple[RkVector, ...]

  def __post_init__(self):
    _check_index(self.k)
    generators = tuple(self.generators)
    object.__setattr__(self, "generators", generators)
    for g in generators:
      if g.k != self.k or g.n != self.n:
        raise ValueError(f"Generator over R_{g.k}^{g.n} in a code over "
                         f"R_{self.k}^{self.n}.")

  def module_spanning_set(self) -> List[RkVector]:
    """`u_A g` for every generator `g` and subset `A`; spans over `F_2`."""
    return [g.scale(RkElement.monomial(self.k, a))
            for g in self.generators for a in range(1 << self.k)]

  def f2_basis(self) -> BitMatrix:
    """Reduced basis of the code under the coefficient embedding."""
    width = self.n << self.k
    spanning = self.module_spanning_set()
    if not spanning:
      return gf2.zero(0, width)
    g = BitMatrix.from_bits(np.stack([v.to_bits() for v in spanning]))
    return gf2.rref(g).reduced

  def dimension(self) -> int:
    """`log2 |C|`."""
    return self.f2_basis().rows

  def size(self) -> int:
    return 1 << self.dimension()

  def codewords(
      self, max_bits: int = DEFAULT_MAX_AMBIENT_BITS) -> List[RkVector]:
    """All codewords, when there are at most `2^max_bits` of them."""
    basis = self.f2_basis()
    if basis.rows > max_bits:
      raise ValueError(f"Code has 2^{basis.rows} codewords, above the guard "
                       f"2^{max_bits}.")
    if basis.rows == 0:
      return [RkVector.from_ints(self.k, [0] * self.n)]
    table = gf2.unpack_bits(
        codes.enumerate_codewords(LinearCode(basis)), basis.cols)
    return [RkVector.from_bits(self.k, row) for row in table]


def same_code(c1: RkCode, c2: RkCode) -> bool:
  """Whether two generator lists give the same set of codewords."""
  if (c1.k, c1.n) != (c2.k, c2.n):
    return False
  return c1.f2_basis() == c2.f2_basis()


def gray_code_image(
    c: RkCode, max_length: Optional[int] = DEFAULT_MAX_GRAY_LENGTH
) -> LinearCode:
  """The binary code `phi(C)` of length `n 2^k`.

  `phi` is `F_2`-linear, so the image is spanned by the images of
  `u_A g` over generators `g` and subsets `A`.

  Args:
    c: The ring code.
    max_length: Guard on `n 2^k`; `None` disables it.

  Returns:
    The canonical binary code, with `|phi(C)| = |C|`.
  """
  length = c.n << c.k
  if max_length is not None and length > max_length:
    raise ValueError(f"Gray image length {length} exceeds the guard "
                     f"{max_length}.")
  spanning = c.module_spanning_set()
  if not spanning:
    return LinearCode(gf2.zero(0, length))
  return LinearCode(BitMatrix.from_bits(
      np.stack([gray_vector(v) for v in spanning])))


def _check_ambient(c: RkCode, max_bits: int):
  bits = c.n << c.k
  if bits > max_bits:
    raise ValueError(f"Ambient space R_{c.k}^{c.n} has 2^{bits} elements, "
                     f"above the guard 2^{max_bits}.")


def dual_ring_code(
    c: RkCode, max_bits: int = DEFAULT_MAX_AMBIENT_BITS) -> RkCode:
  """The dual code `{v : [v, c] = 0 for every codeword c}`.

  `v -> ([v, b])_b` over an `F_2` spanning set `b` of `C` is `F_2`-linear, and
  its kernel is the dual. The kernel is an `R_k`-submodule, so its `F_2`
  basis also generates it as a ring code.

  Args:
    c: The ring code.
    max_bits: Guard on `n 2^k`.

  Returns:
    The dual code.
  """
  _check_ambient(c, max_bits)
  size = 1 << c.k
  width = c.n * size
  spanning = c.module_spanning_set()
  if not spanning:
    units = np.eye(width, dtype=np.uint8)
    return RkCode(c.k, c.n, tuple(RkVector.from_bits(c.k, u) for u in units))
  # Row `p` holds the pairings of the `p`-th unit vector with the spanning set.
  images = np.zeros((width, len(spanning) * size), dtype=np.uint8)
  for p in range(width):
    unit = np.zeros((width,), dtype=np.uint8)
    unit[p] = 1
    e = RkVector.from_bits(c.k, unit)
    images[p] = np.concatenate([
        utils.int_to_bits(inner_product(e, b).coeffs, size) for b in spanning])
  kernel = gf2.null_space(BitMatrix.from_bits(images.T))
  return RkCode(c.k, c.n, tuple(
      RkVector.from_bits(c.k, row) for row in kernel.to_bits()))


def is_lcd_ring(c: RkCode, max_bits: int = DEFAULT_MAX_AMBIENT_BITS) -> bool:
  """Whether `C & C^perp = {0}`."""
  d = dual_ring_code(c, max_bits)
  basis, dual_basis = c.f2_basis(), d.f2_basis()
  if basis.rows == 0 or dual_basis.rows == 0:
    return True
  return codes.intersection_dimension(
      LinearCode(basis), LinearCode(dual_basis)) == 0


RING_GRAM_MODES = ("identity", "j_minus_i")


def ring_code_from_binary_gram(g: BitMatrix, k: int, mode: str) -> RkCode:
  """The `R_k`-code generated by the rows of a binary matrix `g`.

  Args:
    g: The binary generator, with `g g^T = I` (mode `identity`) or
      `g g^T = J - I` and an even number of rows (mode `j_minus_i`).
    k: The ring index.
    mode: One of `RING_GRAM_MODES`.

  Returns:
    The ring code, which is LCD.
  """
  _check_index(k)
  if mode not in RING_GRAM_MODES:
    raise ValueError(f"Unknown Gram mode {mode!r}; expected one of "
                     f"{RING_GRAM_MODES}.")
  if g.rows == 0:
    raise ValueError("Need at least one row.")
  rows = g.rows
  if mode == "identity":
    expected = gf2.identity(rows)
  else:
    if rows % 2:
      raise ValueError(f"Mode j_minus_i needs an even number of rows, got "
                       f"{rows}.")
    expected = gf2.add(gf2.all_ones(rows), gf2.identity(rows))
  if gf2.gram(g) != expected:
    raise ValueError(f"Gram condition of mode {mode!r} fails.")
  generators = tuple(RkVector.from_ints(k, [int(b) for b in row])
                     for row in g.to_bits())
  logging.vlog(1, "Ring code over R_%d from a %dx%d binary matrix.", k,
               g.rows, g.cols)
  return RkCode(k, g.cols, generators)


# Text format: a `n k g` header, then `g` lines of `n` tokens, each token the
# `2^k` coefficients of one coordinate.


def parse_ring_code(text: str) -> RkCode:
  lines = []
  for number, line in enumerate(text.splitlines(), start=1):
    line = line.strip()
    if line and not line.startswith("#"):
      lines.append((number, line))
  if not lines:
    raise ValueError("Empty ring code text: missing the `n k g` header.")
  number, header = lines[0]
  fields = header.split()
  if len(fields) != 3 or not all(f.isdigit() for f in fields):
    raise ValueError(f"Line {number}: expected `n k g`, got {header!r}.")
  n, k, num_generators = (int(f) for f in fields)
  _check_index(k)
  if len(lines) - 1 != num_generators:
    raise ValueError(f"Header announces {num_generators} generators, found "
                     f"{len(lines) - 1}.")
  generators = []
  for number, line in lines[1:]:
    tokens = line.split()
    if len(tokens) != n:
      raise ValueError(f"Line {number}: expected {n} tokens, got "
                       f"{len(tokens)}.")
    try:
      generators.append(RkVector(
          k, tuple(RkElement.from_string(k, t) for t in tokens)))
    except ValueError as e:
      raise ValueError(f"Line {number}: {e}") from e
  return RkCode(k, n, tuple(generators))


def format_ring_code(c: RkCode) -> str:
  lines = [f"{c.n} {c.k} {len(c.generators)}"]
  for g in c.generators:
    lines.append(" ".join(e.to_string() for e in g.entries))
  return "\n".join(lines) + "\n"


def read_ring_code(path: str) -> RkCode:
  with open(path, "r") as f:
    return parse_ring_code(f.read())


def write_ring_code(c: RkCode, path: str):
  with open(path, "w") as f:
    f.write(format_ring_code(c))
