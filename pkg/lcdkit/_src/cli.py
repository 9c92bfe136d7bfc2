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
"""The `lcdkit` command line.

Usage: `lcdkit <subcommand> [positional] --flag=value ...`; exit status 0 on
success, 1 on domain errors and 2 on usage errors.
"""
import dataclasses
import os
import sys
from typing import Callable, Dict, List, Optional, Sequence

from absl import app
from absl import flags
from absl import logging

from lcdkit._src import codes
from lcdkit._src import construct
from lcdkit._src import lpbound
from lcdkit._src import ringrk
from lcdkit._src import tables
from lcdkit._src import utils

FLAGS = flags.FLAGS

flags.DEFINE_integer("n", None, "Code length.")
flags.DEFINE_integer("d", None, "Minimum distance.")
flags.DEFINE_integer("k", None, "Code dimension, or ring index for `gray`.")
flags.DEFINE_integer("nmax", None, "Largest length of a table.")
flags.DEFINE_integer("dmax", None, "Largest distance printed by `lp-table`.")
flags.DEFINE_integer("budget", 16, "Search budget per table cell.")
flags.DEFINE_integer("seed", 0, "Master random seed.")
flags.DEFINE_integer("walk-len", None, "Random walk length (default 8n).")
flags.DEFINE_enum("format", "csv", ["csv", "md"], "Table output format.")
flags.DEFINE_string("in", None, "Input file.")
flags.DEFINE_string("out", None, "Output file.")
flags.DEFINE_bool("classical", False, "Print the classical LP bound only.")
flags.DEFINE_bool("diagnostics", False, "Also print diagnostic reports.")
flags.DEFINE_bool("verify_bounds", False,
                  "Check table records against both LP bounds.")
flags.DEFINE_integer("workers", 1, "Worker processes for table builds.")

_USAGE = """\
usage: lcdkit <subcommand> [options]

subcommands:
  check-lcd PATH                 LCD test and hull dimension of a code file
  mindist PATH                   minimum distance of a code file
  dual PATH --out PATH           dual code
  lp-bound --n N --d D [--classical] [--diagnostics]
  lp-table --nmax N [--dmax D] [--format csv|md] [--out PATH] [--diagnostics]
  sample-orth --n N [--seed S] [--walk-len L] [--out PATH] [--diagnostics]
  from-selfdual --in PATH [--out PATH]
  bibd --in PATH [--out PATH]
  gray --in PATH [--k K] [--out PATH]
  search --n N --d D [--budget B] [--seed S] [--walk-len L] [--out PATH]
  build-table --nmax N [--budget B] [--seed S] [--workers W] [--out PATH]
              [--format csv|md] [--verify_bounds] [--diagnostics]
  exhaustive --n N (--k K | --d D) [--diagnostics]
"""


class UsageError(Exception):
  """Raised for malformed command lines."""


def _flag(name: str):
  return FLAGS[name].value


def _require(*names: str):
  missing = [f"--{name}" for name in names if _flag(name) is None]
  if missing:
    raise UsageError(f"missing required flag(s): {', '.join(missing)}")


def _input_path(args: Sequence[str]) -> str:
  """The positional path, or `--in`; bare names fall back to the fixtures."""
  path = args[0] if args else _flag("in")
  if path is None:
    raise UsageError("missing input file")
  if os.path.exists(path):
    return path
  return utils.data_path(path)


def _emit(text: str):
  """Writes `text` to `--out`, or to stdout."""
  out = _flag("out")
  if out is None:
    sys.stdout.write(text)
  else:
    with open(out, "w") as f:
      f.write(text)


def _check_lcd(args: Sequence[str]):
  code = codes.read_code(_input_path(args))
  hull = codes.hull_dimension(code)
  verdict = "LCD" if hull == 0 else "not LCD"
  print(f"[{code.n},{code.k}] {verdict}, hull dim {hull}")


def _mindist(args: Sequence[str]):
  print(codes.minimum_distance(codes.read_code(_input_path(args))))


def _dual(args: Sequence[str]):
  _emit(codes.format_code(codes.dual(codes.read_code(_input_path(args)))))


def _lp_bound(args: Sequence[str]):
  del args
  _require("n", "d")
  n, d = _flag("n"), _flag("d")
  classical = lpbound.classical_lp_dimension_upper(n, d)
  if _flag("classical"):
    print(classical)
  else:
    lcd = lpbound.lcd_dimension_upper(n, d)
    print(lcd if lcd == classical else f"{lcd} (classical {classical})")
  if _flag("diagnostics"):
    for row in lpbound.diagnose_cell(n, d):
      print(f"k0={row.k0} U(h)={row.nonhomogeneous} U(0)={row.homogeneous}")


def _lp_table(args: Sequence[str]):
  del args
  _require("nmax")
  table = lpbound.emit_lp_table(_flag("nmax"), _flag("workers"))
  if _flag("dmax") is not None:
    table = dataclasses.replace(table, dmax=_flag("dmax"))
  _emit(table.render(_flag("format")))
  if _flag("diagnostics"):
    sys.stdout.write(lpbound.render_disagreements(
        lpbound.compare_with_published(table)))


def _sample_orth(args: Sequence[str]):
  del args
  _require("n")
  q = construct.random_orthogonal(_flag("n"), _flag("seed"), _flag("walk-len"))
  _emit(codes.format_matrix(q.q))
  if _flag("diagnostics"):
    for row in construct.compare_group_orders():
      print(f"|O({row.n},2)|: enumerated {row.enumerated}, formula "
            f"{row.formula}, {'agree' if row.agree else 'disagree'}")


def _from_selfdual(args: Sequence[str]):
  g = codes.read_matrix(_input_path(args))
  x = construct.orthogonal_from_selfdual(g)
  if x.column_permutation != tuple(range(g.cols)):
    print(f"column permutation: {' '.join(map(str, x.column_permutation))}")
  _emit(codes.format_matrix(x.q))


def _bibd(args: Sequence[str]):
  result = construct.bibd_code(construct.read_design(_input_path(args)))
  code = result.code
  note = " (claim violated)" if result.claim_violated else ""
  print(f"[{code.n},{code.k},{result.measured_distance}] LCD; claimed "
        f"distance >= {result.claimed_distance_bound}{note}")
  if _flag("out") is not None:
    codes.write_code(code, _flag("out"))


def _gray(args: Sequence[str]):
  ring_code = ringrk.read_ring_code(_input_path(args))
  if _flag("k") is not None and _flag("k") != ring_code.k:
    raise ValueError(f"--k={_flag('k')} but the file is over "
                     f"R_{ring_code.k}.")
  image = ringrk.gray_code_image(ring_code, max_length=None)
  print(f"[{image.n},{image.k}] "
        f"{'LCD' if codes.is_lcd(image) else 'not LCD'}")
  if _flag("out") is not None:
    codes.write_code(image, _flag("out"))


def _search(args: Sequence[str]):
  del args
  _require("n", "d")
  record = tables.search_lck_lower(_flag("n"), _flag("d"), _flag("budget"),
                                   _flag("seed"), walk_length=_flag("walk-len"))
  print(f"LCK[{record.n},{record.d}] >= {record.k} ({record.provenance})")
  if _flag("out") is not None and record.k:
    codes.write_code(record.code(), _flag("out"))


def _build_table(args: Sequence[str]):
  del args
  _require("nmax")
  table = tables.build_lower_table(
      _flag("nmax"), _flag("budget"), _flag("seed"),
      num_workers=_flag("workers"), verify_bounds=_flag("verify_bounds"),
      walk_length=_flag("walk-len"))
  if _flag("out") is not None:
    tables.save_table(table, _flag("out"))
  sys.stdout.write(tables.render_lower_table(table, _flag("format")))
  if _flag("diagnostics"):
    for row in tables.compare_lower_with_published(table):
      print(f"({row.n},{row.d}) built={row.built} published={row.published} "
            f"{row.status}")


def _exhaustive(args: Sequence[str]):
  del args
  _require("n")
  n = _flag("n")
  if _flag("k") is not None:
    print(tables.exhaustive_lcd_nk(n, _flag("k")))
  elif _flag("d") is not None:
    print(tables.exhaustive_lck_nd(n, _flag("d")))
  else:
    raise UsageError("exhaustive needs --k or --d")
  if _flag("diagnostics"):
    for claim in tables.exhaustive_report():
      print(f"{claim.statement}: computed {claim.computed}, "
            f"{'holds' if claim.holds else 'fails'}")


_SUBCOMMANDS: Dict[str, Callable[[Sequence[str]], None]] = {
    "check-lcd": _check_lcd,
    "mindist": _mindist,
    "dual": _dual,
    "lp-bound": _lp_bound,
    "lp-table": _lp_table,
    "sample-orth": _sample_orth,
    "from-selfdual": _from_selfdual,
    "bibd": _bibd,
    "gray": _gray,
    "search": _search,
    "build-table": _build_table,
    "exhaustive": _exhaustive,
}


def _usage(message: Optional[str] = None) -> int:
  if message:
    sys.stderr.write(f"error: {message}\n")
  sys.stderr.write(_USAGE)
  return 2


def _dispatch(args: List[str]) -> int:
  """Runs the subcommand in `args[1]` on already parsed flags."""
  if len(args) < 2:
    return _usage("missing subcommand")
  command = _SUBCOMMANDS.get(args[1])
  if command is None:
    return _usage(f"unknown subcommand {args[1]!r}")
  try:
    command(args[2:])
  except UsageError as e:
    return _usage(str(e))
  except (ValueError, OSError) as e:
    logging.vlog(1, "%s failed: %r", args[1], e)
    sys.stderr.write(f"error: {e}\n")
    return 1
  return 0


def _parse_flags(argv: Sequence[str]) -> List[str]:
  FLAGS.unparse_flags()
  return FLAGS(list(argv))


def cli_main(argv: Sequence[str]) -> int:
  """Parses `argv` (program name first) and runs the subcommand.

  Args:
    argv: The command line.

  Returns:
    The exit status.
  """
  try:
    args = _parse_flags(argv)
  except flags.Error as e:
    return _usage(str(e))
  return _dispatch(args)


def _parse_or_exit(argv: List[str]) -> List[str]:
  try:
    return _parse_flags(argv)
  except flags.Error as e:
    sys.exit(_usage(str(e)))


def main():
  app.run(_dispatch, flags_parser=_parse_or_exit)


if __name__ == "__main__":
  main()
