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
"""LCD code factories.

A generator matrix `G` with `G G^T` invertible spans an LCD code, so codes
come from:

* rows of orthogonal matrices (`Q Q^T = I`), sampled by random walks over
  permutations and transvections, or read off self-dual codes in systematic
  form `(I | X)`;
* matrices with Gram matrix `J - I` and an even number of rows;
* point-block incidence matrices of 2-designs with `r k (r - lambda)` odd;
* parity-check matrices with distinct columns and invertible Gram matrix.
"""
import dataclasses
import itertools
from typing import List, NamedTuple, Optional, Sequence, Tuple

from absl import logging
import numpy as np

from lcdkit._src import codes
from lcdkit._src import gf2
from lcdkit._src import utils

BitMatrix = gf2.BitMatrix
LinearCode = codes.LinearCode
IndexSet = utils.IndexSet
Words = utils.Words

# Enumeration is exhaustive row-by-row backtracking, so kept tiny.
_MAX_ENUMERATED_ORDER = 4
# Row subsets with more rows than this are not materialised by `RowSpan`.
_MAX_SPAN_ROWS = 20


@dataclasses.dataclass(frozen=True)
class OrthogonalMatrix:
  """A square matrix `q` with `q q^T = I`.

  Attributes:
    q: The matrix.
    column_permutation: When read off a self-dual code, the column order
      (old column `column_permutation[i]` became column `i`) that put its
      generator in systematic form; the identity otherwise.
  """
  q: BitMatrix
  column_permutation: Tuple[int, ...] = ()

  def __post_init__(self):
    if not is_orthogonal(self.q):
      raise ValueError("Matrix is not orthogonal: q q^T != I.")
    if not self.column_permutation:
      object.__setattr__(self, "column_permutation",
                         tuple(range(2 * self.n)))

  @property
  def n(self) -> int:
    return self.q.rows


@dataclasses.dataclass(frozen=True)
class Design:
  """A 2-design given by its blocks over the points `0..v-1`."""
  v: int
  blocks: Tuple[Tuple[int, ...], ...]

  def __post_init__(self):
    blocks = tuple(tuple(sorted(block)) for block in self.blocks)
    object.__setattr__(self, "blocks", blocks)
    if not blocks:
      raise ValueError("A design needs at least one block.")
    sizes = {len(block) for block in blocks}
    if len(sizes) != 1:
      raise ValueError(f"Blocks have different sizes {sorted(sizes)}.")
    for block in blocks:
      if len(set(block)) != len(block) or not all(
          0 <= p < self.v for p in block):
        raise ValueError(f"Block {block} is not a subset of range({self.v}).")
    replication = {sum(p in block for block in blocks) for p in range(self.v)}
    if len(replication) != 1:
      raise ValueError(f"Points lie on different numbers of blocks "
                       f"{sorted(replication)}.")
    pairs = {sum(p in block and q in block for block in blocks)
             for p, q in itertools.combinations(range(self.v), 2)}
    if len(pairs) > 1:
      raise ValueError(f"Point pairs lie on different numbers of blocks "
                       f"{sorted(pairs)}: the design is not balanced.")

  @classmethod
  def from_blocks(cls, v: int, blocks: Sequence[Sequence[int]]) -> "Design":
    return cls(v, tuple(tuple(block) for block in blocks))

  @property
  def b(self) -> int:
    return len(self.blocks)

  @property
  def block_size(self) -> int:
    return len(self.blocks[0])

  @property
  def r(self) -> int:
    return sum(0 in block for block in self.blocks)

  @property
  def lam(self) -> int:
    if self.v < 2:
      return 0
    return sum(0 in block and 1 in block for block in self.blocks)

  def incidence(self) -> BitMatrix:
    """The `v x b` point-block incidence matrix."""
    bits = np.zeros((self.v, self.b), dtype=np.uint8)
    for j, block in enumerate(self.blocks):
      bits[list(block), j] = 1
    return BitMatrix.from_bits(bits)


class BibdCode(NamedTuple):
  code: LinearCode
  measured_distance: int
  claimed_distance_bound: int
  claim_violated: bool


def is_orthogonal(m: BitMatrix) -> bool:
  if m.rows != m.cols:
    raise ValueError(f"Orthogonality needs a square matrix, got {m.shape}.")
  return gf2.gram(m) == gf2.identity(m.rows)


def transvection_matrix(u: Sequence[int]) -> OrthogonalMatrix:
  """The matrix of `x -> x + (x . u) u`, i.e. `I + u^T u`, for weight-4 `u`."""
  u = np.asarray(u, dtype=np.uint8)
  weight = int(u.sum())
  if u.ndim != 1 or weight != 4:
    raise ValueError(f"Transvections need a weight-4 vector, got weight "
                     f"{weight}.")
  n = u.shape[0]
  bits = np.eye(n, dtype=np.uint8) ^ np.outer(u, u).astype(np.uint8)
  return OrthogonalMatrix(BitMatrix.from_bits(bits))


def permutation_matrix(perm: Sequence[int]) -> OrthogonalMatrix:
  """Row `i` is the unit vector `e_{perm[i]}`."""
  n = len(perm)
  bits = np.zeros((n, n), dtype=np.uint8)
  bits[np.arange(n), list(perm)] = 1
  return OrthogonalMatrix(BitMatrix.from_bits(bits))


def random_orthogonal(
    n: int,
    seed: utils.Seed,
    walk_length: Optional[int] = None,
) -> OrthogonalMatrix:
  """Samples an orthogonal matrix by a random walk on group generators.

  Every step multiplies by either a uniformly random permutation matrix or
  the transvection of a fresh uniformly random weight-4 vector, each with
  probability one half.

  Args:
    n: The order, at least 4.
    seed: Seed of the numpy generator; equal seeds give equal matrices.
    walk_length: Number of steps; defaults to `8 n`.

  Returns:
    The sampled matrix.
  """
  if n < 4:
    raise ValueError(f"Random walks need n >= 4 (enumerate smaller orders), "
                     f"got {n}.")
  if walk_length is None:
    walk_length = 8 * n
  if walk_length < 0:
    raise ValueError(f"walk_length must be non-negative, got {walk_length}.")
  rng = np.random.default_rng(seed)
  q = gf2.identity(n)
  for _ in range(walk_length):
    if rng.integers(2):
      step = permutation_matrix(rng.permutation(n))
    else:
      u = np.zeros((n,), dtype=np.uint8)
      u[rng.choice(n, size=4, replace=False)] = 1
      step = transvection_matrix(u)
    q = gf2.multiply(step.q, q)
  return OrthogonalMatrix(q)


def enumerate_orthogonal(n: int) -> List[OrthogonalMatrix]:
  """All orthogonal `n x n` matrices, by row-by-row backtracking."""
  if not 1 <= n <= _MAX_ENUMERATED_ORDER:
    raise ValueError(f"Enumeration is supported for 1 <= n <= "
                     f"{_MAX_ENUMERATED_ORDER}, got {n}.")
  odd = [x for x in range(1, 1 << n) if utils.parity(x)]
  found = []

  def extend(rows: List[int]):
    if len(rows) == n:
      found.append(OrthogonalMatrix(gf2.from_row_ints(rows, n)))
      return
    for x in odd:
      if all(not utils.parity(x & y) for y in rows):
        extend(rows + [x])

  extend([])
  return found


def orthogonal_group_order_formula(n: int) -> int:
  """The literature value `2^(m^2) prod_{i <= m} (2^(2i) - 1)`, `m = n // 2`.

  It does not match enumeration at every order; see `compare_group_orders`.
  """
  if n < 1:
    raise ValueError(f"Need n >= 1, got {n}.")
  m = n // 2
  return (1 << (m * m)) * utils.product((1 << (2 * i)) - 1
                                        for i in range(1, m + 1))


class GroupOrderComparison(NamedTuple):
  n: int
  enumerated: int
  formula: int

  @property
  def agree(self) -> bool:
    return self.enumerated == self.formula


def compare_group_orders(
    nmax: int = _MAX_ENUMERATED_ORDER) -> List[GroupOrderComparison]:
  """Enumerated orthogonal group orders against the formula, `n <= nmax`."""
  out = []
  for n in range(1, nmax + 1):
    row = GroupOrderComparison(n, len(enumerate_orthogonal(n)),
                               orthogonal_group_order_formula(n))
    if not row.agree:
      logging.warning("Orthogonal group order at n=%d: enumerated %d, "
                      "formula %d.", n, row.enumerated, row.formula)
    out.append(row)
  return out


def orthogonal_from_selfdual(
    g: BitMatrix,
    allow_permutation: bool = True,
) -> OrthogonalMatrix:
  """Reads `X` off the systematic form `(I | X)` of a self-dual code.

  Args:
    g: A `k x 2k` generator of a self-dual code.
    allow_permutation: Whether the columns may be permuted when the pivots of
      the row reduction are not the first `k` columns.

  Returns:
    The orthogonal matrix `X`, with the column permutation used.

  Raises:
    ValueError: if `g` is not self-dual, or a permutation is needed but not
      allowed (the message reports it).
  """
  if g.cols != 2 * g.rows:
    raise ValueError(f"A self-dual generator is k x 2k, got {g.shape}.")
  if gf2.rank(g) != g.rows or gf2.gram(g) != gf2.zero(g.rows, g.rows):
    raise ValueError("Matrix does not generate a self-dual code.")
  reduced, pivots, _ = gf2.rref(g)
  free = [c for c in range(g.cols) if c not in set(pivots)]
  permutation = tuple(pivots) + tuple(free)
  if permutation != tuple(range(g.cols)):
    if not allow_permutation:
      raise ValueError(f"No systematic form without permuting columns; "
                       f"permutation needed: {permutation}.")
    logging.info("Systematic form needs column permutation %s.", permutation)
  x = gf2.column_submatrix(reduced, free)
  return OrthogonalMatrix(x, column_permutation=permutation)


def selfdual_from_orthogonal(x: OrthogonalMatrix) -> LinearCode:
  """The `[2n, n]` self-dual code generated by `(I | X)`."""
  return LinearCode(gf2.augment_columns(gf2.identity(x.n), x.q))


def lcd_from_orthonormal_rows(g: BitMatrix) -> LinearCode:
  """The code spanned by `g` with `g g^T = I`."""
  if g.rows == 0 or gf2.gram(g) != gf2.identity(g.rows):
    raise ValueError("Rows are not orthonormal: g g^T != I.")
  return LinearCode(g)


def lcd_from_orthogonal_rows(q: OrthogonalMatrix,
                             rows: IndexSet) -> LinearCode:
  """The LCD code spanned by the selected rows of an orthogonal matrix."""
  rows = list(rows)
  if not rows:
    raise ValueError("Need a nonempty set of rows.")
  if len(set(rows)) != len(rows):
    raise ValueError(f"Rows {rows} contain duplicates.")
  return lcd_from_orthonormal_rows(gf2.row_submatrix(q.q, rows))


def lcd_from_gram_j_minus_i(g: BitMatrix) -> LinearCode:
  """The LCD code spanned by `g` with `g g^T = J - I` and even row count."""
  k = g.rows
  if k == 0:
    raise ValueError("Need at least one row.")
  expected = gf2.add(gf2.all_ones(k), gf2.identity(k))
  if gf2.gram(g) != expected:
    raise ValueError("Gram matrix is not J - I.")
  if k % 2:
    raise ValueError(f"Gram matrix J - I of odd order {k} is singular: the "
                     "code is not LCD.")
  return LinearCode(g)


def bibd_code(design: Design) -> BibdCode:
  """The LCD code spanned by the point rows of the incidence matrix.

  `det(Q Q^T) = r k (r - lambda)^(v - 1)`, so the code is LCD when that
  product is odd. The distance bound `2 (r - lambda)` found in the literature
  is recorded next to the measured distance and flagged when it fails.

  Args:
    design: The 2-design.

  Returns:
    The `[b, v]` code with its audit fields.

  Raises:
    ValueError: if one of `r`, `k`, `r - lambda` is even.
  """
  factors = {"r": design.r, "k": design.block_size,
             "r - lambda": design.r - design.lam}
  even = [f"{name} = {value}" for name, value in factors.items()
          if value % 2 == 0]
  if even:
    raise ValueError(f"r k (r - lambda) is even: {', '.join(even)}.")
  code = LinearCode(design.incidence())
  if not codes.is_lcd(code):
    raise ValueError("Incidence matrix does not span an LCD code.")
  measured = codes.minimum_distance(code)
  claimed = 2 * (design.r - design.lam)
  violated = measured < claimed
  if violated:
    logging.warning("Design code [%d,%d,%d] is below the claimed distance "
                    "%d.", code.n, code.k, measured, claimed)
  return BibdCode(code, measured, claimed, violated)


def parse_design(text: str) -> Design:
  """Parses a `v b` header followed by `b` lines of 0-based points."""
  lines = []
  for number, line in enumerate(text.splitlines(), start=1):
    line = line.strip()
    if line and not line.startswith("#"):
      lines.append((number, line))
  if not lines:
    raise ValueError("Empty design text: missing the `v b` header.")
  number, header = lines[0]
  fields = header.split()
  if len(fields) != 2 or not all(f.isdigit() for f in fields):
    raise ValueError(f"Line {number}: expected `v b`, got {header!r}.")
  v, b = int(fields[0]), int(fields[1])
  if len(lines) - 1 != b:
    raise ValueError(f"Header announces {b} blocks, found {len(lines) - 1}.")
  blocks = []
  for number, line in lines[1:]:
    try:
      blocks.append(tuple(int(p) for p in line.split()))
    except ValueError as e:
      raise ValueError(f"Line {number}: bad block {line!r}.") from e
  return Design.from_blocks(v, blocks)


def read_design(path: str) -> Design:
  with open(path, "r") as f:
    return parse_design(f.read())


def load_selfdual_fixture(name: str) -> BitMatrix:
  """Reads a self-dual generator matrix from the fixtures directory."""
  return codes.read_matrix(utils.data_path(name))


class RowSpan:
  """All codewords spanned by a growing list of rows, with their distance."""

  def __init__(
      self,
      cols: int,
      rows: Tuple[int, ...] = (),
      table: Optional[Words] = None,
      distance: Optional[int] = None,
  ):
    self.cols = cols
    self.rows = rows
    if table is None:
      table = np.zeros((1, utils.num_words(cols)), dtype=utils.WORD_DTYPE)
    self.table = table
    # `None` while the span is zero.
    self.distance = distance

  def extend(self, index: int, words: Words) -> "RowSpan":
    """The span with one more row, `index` being its label."""
    if len(self.rows) >= _MAX_SPAN_ROWS:
      raise ValueError(f"Spans of more than {_MAX_SPAN_ROWS} rows are not "
                       "materialised.")
    shifted = self.table ^ words
    low = int(utils.popcount_rows(shifted).min())
    distance = low if self.distance is None else min(self.distance, low)
    return RowSpan(self.cols, self.rows + (index,),
                   np.concatenate([self.table, shifted], axis=0), distance)


def best_row_subset(
    q: BitMatrix,
    d: int,
    node_budget: int,
    rng: np.random.Generator,
) -> Tuple[int, ...]:
  """Largest set of rows of `q` whose span has minimum distance `>= d`.

  A randomized greedy pass seeds the incumbent, then a depth-first search
  over include/exclude decisions improves it until `node_budget` nodes were
  visited. Adding a row never increases the distance of a span, so a branch
  is cut as soon as the distance drops below `d`, and when even taking every
  remaining row cannot beat the incumbent. With a large enough budget the
  search is exhaustive.

  Args:
    q: The matrix whose rows are candidates.
    d: The required minimum distance.
    node_budget: Number of search nodes to visit.
    rng: Randomness for the greedy pass.

  Returns:
    The sorted row indices, possibly empty.
  """
  words = q.words
  candidates = [i for i in range(q.rows)
                if int(utils.popcount_rows(words[i:i + 1])[0]) >= d]
  limit = min(len(candidates), _MAX_SPAN_ROWS)

  best: Tuple[int, ...] = ()
  span = RowSpan(q.cols)
  for i in rng.permutation(candidates):
    if len(span.rows) == limit:
      break
    grown = span.extend(int(i), words[i])
    if grown.distance >= d:
      span = grown
  best = tuple(sorted(span.rows))

  nodes = 0

  def search(position: int, current: RowSpan):
    nonlocal best, nodes
    if nodes >= node_budget:
      return
    nodes += 1
    if len(current.rows) > len(best):
      best = tuple(sorted(current.rows))
    if len(current.rows) == limit:
      return
    if len(current.rows) + len(candidates) - position <= len(best):
      return
    for p in range(position, len(candidates)):
      if len(current.rows) + len(candidates) - p <= len(best):
        return
      i = candidates[p]
      grown = current.extend(i, words[i])
      if grown.distance >= d:
        search(p + 1, grown)
      if nodes >= node_budget:
        return

  search(0, RowSpan(q.cols))
  logging.vlog(2, "Row subset search: d=%d best=%d after %d nodes.", d,
               len(best), nodes)
  return best


def parity_check_lcd(
    n: int,
    r: int,
    d: int,
    rng: np.random.Generator,
    attempts: int = 64,
) -> Optional[LinearCode]:
  """Random LCD code of length `n`, dimension `n - r` and distance `>= d`.

  The parity-check matrix `H` takes `n` distinct nonzero columns of `F_2^r`
  (distance at least 3), restricted to odd-weight columns for `d = 4`. The
  code is LCD iff its dual, spanned by `H`, is, i.e. iff `H H^T` is
  invertible.

  With odd-weight columns `H H^T 1` is the diagonal of `H H^T`, and an
  invertible symmetric matrix `M` with diagonal `M v` has `v^T M v = r`
  (mod 2). Here `v = 1` and `1^T H H^T 1 = n`, so `d = 4` needs
  `n = r (mod 2)`; other lengths return `None` at once.

  Args:
    n: The length.
    r: The redundancy.
    d: The distance, 3 or 4.
    rng: Source of the random column choices.
    attempts: Number of column choices tried.

  Returns:
    The code, or `None` when no attempt gave an invertible `H H^T`.
  """
  if d not in (3, 4):
    raise ValueError(f"Parity-check construction supports d in (3, 4), got "
                     f"{d}.")
  if not 1 <= r < n:
    raise ValueError(f"Need 1 <= r < n, got r={r}, n={n}.")
  columns = [x for x in range(1, 1 << r)
             if d == 3 or utils.parity(x)]
  if len(columns) < n:
    return None
  if d == 4 and (n - r) % 2:
    logging.vlog(1, "No odd-column parity check for n=%d, r=%d.", n, r)
    return None
  for _ in range(attempts):
    chosen = rng.choice(len(columns), size=n, replace=False)
    bits = np.array([utils.int_to_bits(columns[c], r) for c in chosen],
                    dtype=np.uint8).T
    h = BitMatrix.from_bits(bits)
    if gf2.determinant(gf2.gram(h)):
      return codes.dual(LinearCode(h))
  return None
