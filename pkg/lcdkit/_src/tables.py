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
"""Exhaustive oracles, randomized search and the table of LCD lower bounds.

`LCD[n, k]` is the largest minimum distance of a binary `[n, k]` LCD code and
`LCK[n, d]` the largest dimension of a binary LCD code of length `n` and
minimum distance at least `d`.
"""
import dataclasses
import functools
import itertools
import time
from typing import (Dict, Iterator, List, Mapping, NamedTuple, Optional,
                    Sequence, Tuple)

from absl import logging
import immutabledict
import numpy as np
from typing_extensions import TypeAlias

from lcdkit._src import codes
from lcdkit._src import construct
from lcdkit._src import gf2
from lcdkit._src import lpbound
from lcdkit._src import ringrk
from lcdkit._src import utils

BitMatrix = gf2.BitMatrix
LinearCode = codes.LinearCode
Cell = utils.Cell
# Per dimension `k = 0..n`: the best LCD distance and witness row integers.
Profile: TypeAlias = Tuple[Tuple[int, Tuple[int, ...]], ...]

PROVENANCE_TAGS = (
    "orthogonal-rows",
    "self-dual",
    "bibd",
    "gray",
    "combinator",
    "exhaustive",
    "family",
    "parity-check",
)

# Largest length of the exhaustive oracles.
MAX_EXHAUSTIVE_LENGTH = 9
# Lengths up to this one are settled by the exhaustive oracle during search.
_EXHAUSTIVE_SEARCH_LENGTH = 7
# Largest length of the lower-bound table.
MAX_TABLE_LENGTH = 24
# Codewords materialised at once by the oracle, over all candidates.
_CHUNK_WORDS = 1 << 20
# Nodes of the row-subset search spent on each orthogonal matrix.
_NODE_BUDGET = 2000

# Orthogonal matrices read off the shipped self-dual codes, by order.
SELFDUAL_FIXTURES = immutabledict.immutabledict({
    4: "fixture_hamming_sd.code",
    12: "fixture_golay_sd.code",
})


# Exhaustive oracles.


def _span_words(rows: np.ndarray) -> np.ndarray:
  """`(m, 2^k)` combinations of `(m, k)` integer rows, per candidate."""
  words = np.zeros((rows.shape[0], 1), dtype=np.int64)
  for i in range(rows.shape[1]):
    words = np.concatenate([words, words ^ rows[:, i:i + 1]], axis=1)
  return words


def _distance_and_lcd(rows: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
  """Minimum distances and LCD flags of a batch of generator matrices.

  A code is LCD iff its Gram matrix is invertible, i.e. iff no nonzero
  combination of the Gram rows vanishes.

  Args:
    rows: `(m, k)` integers, bit `j` of `rows[:, i]` being entry `(i, j)`.

  Returns:
    Two `(m,)` arrays: distances and booleans.
  """
  k = rows.shape[1]
  weights = utils.popcount(_span_words(rows))
  distance = weights[:, 1:].min(axis=1)
  gram = np.zeros_like(rows)
  for i in range(k):
    for j in range(k):
      gram[:, i] |= (utils.popcount(rows[:, i] & rows[:, j]) & 1) << j
  syndromes = _span_words(gram)
  return distance, np.all(syndromes[:, 1:] != 0, axis=1)


def _rref_patterns(n: int, k: int) -> Iterator[Tuple[Tuple[int, ...],
                                                     List[Tuple[int, int]]]]:
  """Pivot columns and free `(row, column)` slots of every RREF shape."""
  for pivots in itertools.combinations(range(n), k):
    pivot_set = set(pivots)
    slots = [(i, c) for i, p in enumerate(pivots)
             for c in range(p + 1, n) if c not in pivot_set]
    yield pivots, slots


def _scan_pattern(
    pivots: Tuple[int, ...],
    slots: Sequence[Tuple[int, int]],
) -> Tuple[int, Tuple[int, ...]]:
  """Best LCD distance, and a witness, over one RREF shape."""
  base = np.array([1 << p for p in pivots], dtype=np.int64)
  total = 1 << len(slots)
  chunk = max(1, _CHUNK_WORDS >> len(pivots))
  best, witness = 0, ()
  for start in range(0, total, chunk):
    assignment = np.arange(start, min(total, start + chunk), dtype=np.int64)
    rows = np.tile(base, (assignment.size, 1))
    for t, (i, c) in enumerate(slots):
      rows[:, i] |= ((assignment >> t) & 1) << c
    distance, lcd = _distance_and_lcd(rows)
    distance = np.where(lcd, distance, 0)
    j = int(np.argmax(distance))
    if distance[j] > best:
      best, witness = int(distance[j]), tuple(int(x) for x in rows[j])
  return best, witness


@functools.lru_cache(maxsize=None)
def _exhaustive_profile(n: int) -> Profile:
  """Enumerates every subspace of `F_2^n`, dimension by dimension."""
  if not 1 <= n <= MAX_EXHAUSTIVE_LENGTH:
    raise ValueError(f"Exhaustive enumeration supports 1 <= n <= "
                     f"{MAX_EXHAUSTIVE_LENGTH}, got {n}.")
  profile = [(0, ())]
  for k in range(1, n + 1):
    best, witness = 0, ()
    for pivots, slots in _rref_patterns(n, k):
      distance, rows = _scan_pattern(pivots, slots)
      if distance > best:
        best, witness = distance, rows
    profile.append((best, witness))
    logging.vlog(1, "LCD[%d,%d] = %d", n, k, best)
  return tuple(profile)


def exhaustive_lcd_nk(n: int, k: int) -> int:
  """`LCD[n, k]` by enumerating every `k`-dimensional subspace."""
  if not 1 <= k <= n:
    raise ValueError(f"Need 1 <= k <= n, got n={n}, k={k}.")
  return _exhaustive_profile(n)[k][0]


def exhaustive_lck_nd(n: int, d: int) -> int:
  """`LCK[n, d]`, the largest `k` of an LCD code with distance `>= d`."""
  if not 1 <= d <= n:
    raise ValueError(f"Need 1 <= d <= n, got n={n}, d={d}.")
  profile = _exhaustive_profile(n)
  return max([k for k in range(1, n + 1) if profile[k][0] >= d], default=0)


def exhaustive_witness(n: int, k: int) -> LinearCode:
  """An `[n, k, LCD[n, k]]` LCD code."""
  if not 1 <= k <= n:
    raise ValueError(f"Need 1 <= k <= n, got n={n}, k={k}.")
  return LinearCode(gf2.from_row_ints(_exhaustive_profile(n)[k][1], n))


class ExhaustiveClaim(NamedTuple):
  statement: str
  k: int
  claimed: int
  computed: int

  @property
  def holds(self) -> bool:
    return self.claimed == self.computed


def exhaustive_report() -> List[ExhaustiveClaim]:
  """Checks the conflicting statements `LCD[7,4] = 2` and `LCD[7,2] = 4`."""
  claims = [
      ExhaustiveClaim("LCD[7,4]=2", 4, 2, exhaustive_lcd_nk(7, 4)),
      ExhaustiveClaim("LCD[7,2]=4", 2, 4, exhaustive_lcd_nk(7, 2)),
  ]
  for claim in claims:
    logging.info("%s: computed %d (%s)", claim.statement, claim.computed,
                 "holds" if claim.holds else "fails")
  return claims


# Records and tables.


@dataclasses.dataclass(frozen=True)
class BoundRecord:
  """The best LCD code found for a cell `(n, d)`.

  Attributes:
    n: The length.
    d: The required minimum distance.
    k: The dimension of the code.
    generator: Its canonical `k x n` generator matrix.
    provenance: One of `PROVENANCE_TAGS`.
    seed: The seed of the search that produced it.
    verified: Whether LCD, distance and rank were checked.
  """
  n: int
  d: int
  k: int
  generator: BitMatrix
  provenance: str
  seed: int
  verified: bool = False

  def code(self) -> LinearCode:
    return LinearCode(self.generator)


def verify_record(record: BoundRecord) -> BoundRecord:
  """Rechecks a record and returns it marked verified.

  Raises:
    ValueError: naming the record's cell if any check fails.
  """
  cell = (record.n, record.d)
  if record.provenance not in PROVENANCE_TAGS:
    raise ValueError(f"Record {cell}: unknown provenance "
                     f"{record.provenance!r}.")
  if record.generator.cols != record.n:
    raise ValueError(f"Record {cell}: generator has {record.generator.cols} "
                     "columns.")
  code = record.code()
  if code.k != record.k or record.generator.rows != record.k:
    raise ValueError(f"Record {cell}: generator rank {code.k} differs from "
                     f"k = {record.k}.")
  if not codes.is_lcd(code):
    raise ValueError(f"Record {cell}: code is not LCD.")
  if record.k and codes.minimum_distance(code) < record.d:
    raise ValueError(f"Record {cell}: minimum distance "
                     f"{codes.minimum_distance(code)} is below {record.d}.")
  return dataclasses.replace(record, verified=True)


@dataclasses.dataclass(frozen=True)
class BoundTable:
  """Best-known records keyed by `(n, d)`."""
  records: immutabledict.immutabledict
  nmax: int
  budget: int
  seed: int
  # Wall-clock build time; never persisted.
  timestamp: Optional[float] = dataclasses.field(default=None, compare=False)

  def k(self, n: int, d: int) -> Optional[int]:
    record = self.records.get((n, d))
    return None if record is None else record.k


def _make_record(n, d, code, provenance, seed) -> BoundRecord:
  return BoundRecord(n, d, code.k, code.generator, provenance, seed)


def _family_candidates(n: int, d: int) -> Iterator[Tuple[str, LinearCode]]:
  if d == 1:
    yield "family", codes.full_code(n)
  if d <= 2 and n >= 2:
    yield "family", codes.best_even_lcd(n)
  yield "family", codes.best_one_dimensional_lcd(n)


def _pad(code: LinearCode, n: int) -> LinearCode:
  while code.n < n:
    code = codes.extend_zero_column(code)
  return code


def _fixture_candidates(
    n: int, d: int, rng: np.random.Generator,
) -> Iterator[Tuple[str, LinearCode]]:
  for order, name in SELFDUAL_FIXTURES.items():
    if order > n:
      continue
    q = construct.orthogonal_from_selfdual(
        construct.load_selfdual_fixture(name))
    rows = construct.best_row_subset(q.q, d, _NODE_BUDGET, rng)
    if rows:
      yield "self-dual", _pad(construct.lcd_from_orthogonal_rows(q, rows), n)


def _parity_check_candidates(
    n: int, d: int, attempts: int, rng: np.random.Generator,
) -> Iterator[Tuple[str, LinearCode]]:
  if d not in (3, 4):
    return
  r = 1
  while (1 << (r if d == 3 else r - 1)) - (1 if d == 3 else 0) < n:
    r += 1
  for redundancy in range(r, min(n, r + 3)):
    code = construct.parity_check_lcd(n, redundancy, d, rng, attempts)
    if code is not None:
      yield "parity-check", code


def _orthogonal_sources(
    m: int, seed: int, budget: int, walk_length: Optional[int],
) -> Iterator[construct.OrthogonalMatrix]:
  if m in SELFDUAL_FIXTURES:
    yield construct.orthogonal_from_selfdual(
        construct.load_selfdual_fixture(SELFDUAL_FIXTURES[m]))
  if m >= 4:
    for i in range(budget):
      yield construct.random_orthogonal(m, utils.derive_seed(seed, m, i),
                                        walk_length)


def _gray_candidates(
    n: int, d: int, seed: int, budget: int, walk_length: Optional[int],
    rng: np.random.Generator,
) -> Iterator[Tuple[str, LinearCode]]:
  for k in (1, 2):
    if n % (1 << k):
      continue
    m = n >> k
    for q in itertools.islice(
        _orthogonal_sources(m, seed, budget, walk_length), max(1, budget)):
      rows = construct.best_row_subset(q.q, d, _NODE_BUDGET, rng)
      if not rows:
        continue
      ring_code = ringrk.ring_code_from_binary_gram(
          gf2.row_submatrix(q.q, rows), k, "identity")
      yield "gray", ringrk.gray_code_image(ring_code, max_length=None)


def _combinator_candidates(
    n: int, d: int, known: Mapping[Cell, BoundRecord],
) -> Iterator[Tuple[str, LinearCode]]:
  def best(m, e):
    record = known.get((m, e))
    return record if record is not None and record.k else None

  padded = best(n - 1, d)
  if padded is not None:
    yield "combinator", codes.extend_zero_column(padded.code())
  for n1 in range(1, n // 2 + 1):
    left, right = best(n1, d), best(n - n1, d)
    if left is not None and right is not None:
      yield "combinator", codes.direct_sum(left.code(), right.code())
  for n1 in range(2, n):
    if n % n1 or n // n1 < 2:
      continue
    n2 = n // n1
    for d1 in range(1, n1 + 1):
      d2 = utils.ceil_div(d, d1)
      left, right = best(n1, d1), best(n2, d2) if d2 <= n2 else None
      if left is not None and right is not None:
        yield "combinator", codes.kronecker_code(left.code(), right.code())


def _walk_candidates(
    n: int, d: int, seed: int, budget: int, walk_length: Optional[int],
    rng: np.random.Generator,
) -> Iterator[Tuple[str, LinearCode]]:
  if n < 4:
    return
  for i in range(budget):
    q = construct.random_orthogonal(n, utils.derive_seed(seed, i), walk_length)
    rows = construct.best_row_subset(q.q, d, _NODE_BUDGET, rng)
    if rows:
      yield "orthogonal-rows", construct.lcd_from_orthogonal_rows(q, rows)


def _settled_dimension(n: int, d: int) -> Optional[int]:
  """`LCK[n, d]` where it is known in closed form or by enumeration."""
  if d == 1:
    return n
  if d == 2:
    return n - 1 if n % 2 else n - 2
  if d == n:
    return n % 2
  if n <= _EXHAUSTIVE_SEARCH_LENGTH:
    return exhaustive_lck_nd(n, d)
  return None


def search_lck_lower(
    n: int,
    d: int,
    budget: int,
    seed: utils.Seed,
    known: Optional[Mapping[Cell, BoundRecord]] = None,
    walk_length: Optional[int] = None,
) -> BoundRecord:
  """Best verified LCD code of length `n` and distance `>= d` found.

  Candidates come, in order, from elementary families, the exhaustive oracle
  (short lengths), rows of the orthogonal matrices of the shipped self-dual
  codes, parity-check constructions, Gray images of ring codes, combinators
  over the `known` records of shorter lengths, and `budget` random
  orthogonal walks. The search stops early once a settled value is reached.

  Args:
    n: The length, at most 30.
    d: The minimum distance.
    budget: Number of random orthogonal samples per source.
    seed: Master seed of the cell; equal seeds give equal records.
    known: Records of shorter lengths for the combinators.
    walk_length: Length of the random walks; defaults to `8 n`.

  Returns:
    The best record, with `k = 0` when nothing was found.
  """
  if not 1 <= n <= 30 or not 1 <= d <= n:
    raise ValueError(f"Need 1 <= d <= n <= 30, got n={n}, d={d}.")
  known = {} if known is None else known
  rng = np.random.default_rng(seed)
  target = _settled_dimension(n, d)
  ceiling = n - d + 1 if target is None else target
  best = BoundRecord(n, d, 0, gf2.zero(0, n), "family", seed)

  def sources() -> Iterator[Tuple[str, LinearCode]]:
    yield from _family_candidates(n, d)
    if n <= _EXHAUSTIVE_SEARCH_LENGTH:
      k = exhaustive_lck_nd(n, d)
      if k:
        yield "exhaustive", exhaustive_witness(n, k)
    if d >= 3:
      yield from _fixture_candidates(n, d, rng)
      yield from _parity_check_candidates(n, d, max(32, budget), rng)
      yield from _gray_candidates(n, d, seed, budget, walk_length, rng)
    yield from _combinator_candidates(n, d, known)
    if d >= 3:
      yield from _walk_candidates(n, d, seed, budget, walk_length, rng)

  for provenance, code in sources():
    if best.k >= ceiling:
      break
    if code.n != n or code.k <= best.k:
      continue
    if not codes.is_lcd(code) or codes.minimum_distance(code) < d:
      continue
    best = _make_record(n, d, code, provenance, seed)
    logging.vlog(1, "(%d,%d): k=%d from %s", n, d, best.k, provenance)
  return verify_record(best)


def _search_cell(
    cell: Cell,
    budget: int,
    master_seed: int,
    known: Mapping[Cell, BoundRecord],
    walk_length: Optional[int],
) -> BoundRecord:
  n, d = cell
  return search_lck_lower(n, d, budget, utils.derive_seed(master_seed, n, d),
                          known, walk_length)


def check_record_bounds(record: BoundRecord):
  """Raises if a record beats either LP upper bound."""
  lcd = lpbound.lcd_dimension_upper(record.n, record.d)
  classical = lpbound.classical_lp_dimension_upper(record.n, record.d)
  if record.k > lcd or record.k > classical:
    raise ValueError(f"Record ({record.n}, {record.d}) has k = {record.k} "
                     f"above the LP bounds {lcd} (LCD) / {classical} "
                     "(classical).")


def build_lower_table(
    nmax: int,
    budget: int,
    seed: utils.Seed,
    num_workers: Optional[int] = None,
    verify_bounds: bool = False,
    walk_length: Optional[int] = None,
) -> BoundTable:
  """Fills the grid `1 <= d <= n <= nmax` of lower bounds on `LCK[n, d]`.

  Lengths are processed in increasing order so that the combinators of a row
  can use every shorter row; the cells of a row are independent and run over
  `num_workers` processes. Each cell searches with its own seed derived from
  `seed`. A record of distance `>= d + 1` also witnesses `d`, so every row is
  closed downwards in `d`.

  Args:
    nmax: The largest length, at most 24.
    budget: Per-cell search budget.
    seed: Master seed.
    num_workers: Worker processes for the cells of a row.
    verify_bounds: Check every record against both LP upper bounds.
    walk_length: Random walk length; defaults to `8 n`.

  Returns:
    The table.
  """
  if not 1 <= nmax <= MAX_TABLE_LENGTH:
    raise ValueError(f"Tables support 1 <= nmax <= {MAX_TABLE_LENGTH}, got "
                     f"{nmax}.")
  if budget < 0:
    raise ValueError(f"Budget must be non-negative, got {budget}.")
  records: Dict[Cell, BoundRecord] = {}
  for n in range(1, nmax + 1):
    cells = [(n, d) for d in range(1, n + 1)]
    search = functools.partial(
        _search_cell, budget=budget, master_seed=seed, known=dict(records),
        walk_length=walk_length)
    row = dict(zip(cells, utils.parallel_map(search, cells, num_workers)))
    for d in range(n - 1, 0, -1):
      wider = row[(n, d + 1)]
      if wider.k > row[(n, d)].k:
        row[(n, d)] = dataclasses.replace(wider, d=d)
    if verify_bounds:
      for record in row.values():
        check_record_bounds(record)
    records.update(row)
    logging.info("Row n=%d: %s", n,
                 " ".join(str(row[(n, d)].k) for d in range(1, n + 1)))
  return BoundTable(immutabledict.immutabledict(records), nmax, budget, seed,
                    timestamp=time.time())


# Persistence: `#` header lines, then records separated by `%` lines, each an
# `n d k seed provenance` line followed by `k` bit rows.


def format_table(table: BoundTable) -> str:
  lines = ["# lcdkit lower bounds on LCK[n,d]",
           f"# nmax={table.nmax} budget={table.budget} seed={table.seed}"]
  for i, cell in enumerate(sorted(table.records)):
    record = table.records[cell]
    if i:
      lines.append("%")
    lines.append(f"{record.n} {record.d} {record.k} {record.seed} "
                 f"{record.provenance}")
    lines.extend(record.generator.to_strings())
  return "\n".join(lines) + "\n"


def _parse_header(line: str) -> Dict[str, int]:
  fields = {}
  for token in line.lstrip("#").split():
    if "=" in token:
      key, value = token.split("=", 1)
      if value.lstrip("-").isdigit():
        fields[key] = int(value)
  return fields


def parse_table(text: str) -> BoundTable:
  """Parses and re-verifies a persisted table."""
  meta = {"nmax": 0, "budget": 0, "seed": 0}
  chunks: List[List[Tuple[int, str]]] = [[]]
  for number, line in enumerate(text.splitlines(), start=1):
    line = line.strip()
    if not line:
      continue
    if line.startswith("#"):
      meta.update(_parse_header(line))
    elif line == "%":
      chunks.append([])
    else:
      chunks[-1].append((number, line))
  records = {}
  for chunk in chunks:
    if not chunk:
      continue
    number, head = chunk[0]
    fields = head.split()
    if len(fields) != 5 or not all(f.lstrip("-").isdigit()
                                   for f in fields[:4]):
      raise ValueError(f"Line {number}: expected `n d k seed provenance`, "
                       f"got {head!r}.")
    n, d, k, seed = (int(f) for f in fields[:4])
    rows = [row for _, row in chunk[1:]]
    if len(rows) != k or any(len(r) != n or set(r) - {"0", "1"}
                             for r in rows):
      raise ValueError(f"Record ({n}, {d}) at line {number}: expected {k} "
                       f"rows of {n} bits.")
    generator = BitMatrix.from_strings(rows, cols=n)
    if generator != LinearCode(generator).generator:
      raise ValueError(f"Record ({n}, {d}): generator is not canonical.")
    if (n, d) in records:
      raise ValueError(f"Record ({n}, {d}) appears twice.")
    records[(n, d)] = verify_record(
        BoundRecord(n, d, k, generator, fields[4], seed))
  return BoundTable(immutabledict.immutabledict(records), meta["nmax"],
                    meta["budget"], meta["seed"])


def save_table(table: BoundTable, path: str):
  with open(path, "w") as f:
    f.write(format_table(table))
  logging.info("Saved %d records to %s.", len(table.records), path)


def load_table(path: str) -> BoundTable:
  with open(path, "r") as f:
    return parse_table(f.read())


def render_lower_table(table: BoundTable, fmt: str) -> str:
  """CSV (`fmt="csv"`) or markdown (`fmt="md"`) grid of dimensions."""
  nmax = max([n for n, _ in table.records], default=table.nmax)
  columns = range(1, nmax + 1)

  def cell(n, d):
    k = table.k(n, d)
    return "" if k is None else str(k)

  if fmt == "csv":
    lines = ["n/d," + ",".join(str(d) for d in columns)]
    lines += [",".join([str(n)] + [cell(n, d) for d in columns])
              for n in columns]
  elif fmt == "md":
    lines = ["| n/d | " + " | ".join(str(d) for d in columns) + " |",
             "|---|" + "---|" * nmax]
    lines += [f"| {n} | " + " | ".join(cell(n, d) for d in columns) + " |"
              for n in columns]
  else:
    raise ValueError(f"Unknown table format {fmt!r}; expected csv or md.")
  return "\n".join(lines) + "\n"


# Published lower bounds for `n <= 24`; `-` marks cells left blank.
_PUBLISHED_LOWER_ROWS = (
    "1",
    "2 0",
    "3 2 1",
    "4 2 - 0",
    "5 4 1 - 1",
    "6 4 2 2 - 0",
    "7 6 - 2 - - 1",
    "8 6 - - - - - 0",
    "9 8 4 - - - - - 1",
    "10 8 - 3 - - - - - 0",
    "11 10 5 2 - - - - - - 1",
    "12 10 6 4 - - - - - - - 0",
    "13 12 6 5 - - - - - - - - 1",
    "14 12 9 7 4 - 2 - - - - - - 0",
    "15 14 5 4 4 - 2 - - - - - - - 1",
    "16 14 10 7 5 2 - - - - - - - - - 0",
    "17 16 7 7 6 2 - - - - - - - - - - 1",
    "18 16 - 8 5 3 - - - - - - - - - - - 0",
    "19 18 6 - - 2 - - - - - - - - - - - - 1",
    "20 18 11 8 - 5 - 4 3 - - - - - - - - - - 0",
    "21 20 - - 4 - - - 2 - - - - - - - - - - - 1",
    "22 20 14 12 7 - - 4 - - 2 - - - - - - - - - - 0",
    "23 22 13 9 - 6 5 3 - - - - - - - - - - - - - - 1",
    "24 22 16 14 11 9 8 7 4 2 - - - - - - - - - - - - - 0",
)


def _parse_lower_rows(rows: Sequence[str]) -> Dict[Cell, int]:
  table = {}
  for n, row in enumerate(rows, start=1):
    tokens = row.split()
    if len(tokens) != n:
      raise ValueError(f"Published row {n} has {len(tokens)} cells.")
    for d, token in enumerate(tokens, start=1):
      if token != "-":
        table[(n, d)] = int(token)
  return table


PUBLISHED_LOWER_TABLE = immutabledict.immutabledict(
    _parse_lower_rows(_PUBLISHED_LOWER_ROWS))


class LowerComparison(NamedTuple):
  n: int
  d: int
  built: Optional[int]
  published: Optional[int]
  status: str


def compare_lower_with_published(table: BoundTable) -> List[LowerComparison]:
  """Cells where the build and the published lower bounds part ways.

  Statuses: `short` (build below the published value), `exceeds` (build
  above it), `published-excluded` (the published value contradicts a known
  exclusion) and `built-excluded` (the build does, which would be a bug).

  Args:
    table: The built table.

  Returns:
    The flagged cells, sorted.
  """
  out = []
  cells = sorted(set(table.records) | {
      c for c in PUBLISHED_LOWER_TABLE if c[0] <= table.nmax})
  for n, d in cells:
    built = table.k(n, d)
    published = PUBLISHED_LOWER_TABLE.get((n, d))
    exclusion = lpbound.known_exclusions(n, d)
    if exclusion is not None and published is not None and (
        published >= exclusion):
      out.append(LowerComparison(n, d, built, published,
                                 "published-excluded"))
    if exclusion is not None and built is not None and built >= exclusion:
      out.append(LowerComparison(n, d, built, published, "built-excluded"))
    if built is None or published is None:
      continue
    if built < published:
      out.append(LowerComparison(n, d, built, published, "short"))
    elif built > published:
      out.append(LowerComparison(n, d, built, published, "exceeds"))
  return out
