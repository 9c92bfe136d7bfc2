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
"""lcdkit public APIs."""

from lcdkit._src import cli
from lcdkit._src import codes
from lcdkit._src import construct
from lcdkit._src import gf2
from lcdkit._src import lpbound
from lcdkit._src import ringrk
from lcdkit._src import tables
from lcdkit._src import utils


__version__ = "0.1.0"

# GF(2) matrices
BitMatrix = gf2.BitMatrix
rref = gf2.rref
rank = gf2.rank
determinant = gf2.determinant
inverse = gf2.inverse
null_space = gf2.null_space
kronecker = gf2.kronecker

# Codes
LinearCode = codes.LinearCode
WeightDistribution = codes.WeightDistribution
dual = codes.dual
hull_dimension = codes.hull_dimension
is_lcd = codes.is_lcd
minimum_distance = codes.minimum_distance
weight_distribution = codes.weight_distribution
macwilliams_transform = codes.macwilliams_transform
read_code = codes.read_code
write_code = codes.write_code
set_max_enumeration_dimension = codes.set_max_enumeration_dimension
get_max_enumeration_dimension = codes.get_max_enumeration_dimension

# LP bounds
LinearProgram = lpbound.LinearProgram
UNBOUNDED = lpbound.UNBOUNDED
krawtchouk_table = lpbound.krawtchouk_table
lp_maximize = lpbound.lp_maximize
build_lcd_lp = lpbound.build_lcd_lp
lcd_dimension_upper = lpbound.lcd_dimension_upper
classical_lp_dimension_upper = lpbound.classical_lp_dimension_upper
emit_lp_table = lpbound.emit_lp_table

# Constructions
OrthogonalMatrix = construct.OrthogonalMatrix
Design = construct.Design
random_orthogonal = construct.random_orthogonal
orthogonal_from_selfdual = construct.orthogonal_from_selfdual
lcd_from_orthogonal_rows = construct.lcd_from_orthogonal_rows
lcd_from_gram_j_minus_i = construct.lcd_from_gram_j_minus_i
bibd_code = construct.bibd_code
parity_check_lcd = construct.parity_check_lcd

# The ring R_k
RkElement = ringrk.RkElement
RkVector = ringrk.RkVector
RkCode = ringrk.RkCode
gray_code_image = ringrk.gray_code_image
dual_ring_code = ringrk.dual_ring_code
is_lcd_ring = ringrk.is_lcd_ring

# Tables
BoundRecord = tables.BoundRecord
BoundTable = tables.BoundTable
exhaustive_lcd_nk = tables.exhaustive_lcd_nk
exhaustive_lck_nd = tables.exhaustive_lck_nd
search_lck_lower = tables.search_lck_lower
build_lower_table = tables.build_lower_table
save_table = tables.save_table
load_table = tables.load_table


__all__ = (
    # Modules
    "utils",
    "gf2",
    "codes",
    "lpbound",
    "construct",
    "ringrk",
    "tables",
    "cli",
    # GF(2) matrices
    "BitMatrix",
    "rref",
    "rank",
    "determinant",
    "inverse",
    "null_space",
    "kronecker",
    # Codes
    "LinearCode",
    "WeightDistribution",
    "dual",
    "hull_dimension",
    "is_lcd",
    "minimum_distance",
    "weight_distribution",
    "macwilliams_transform",
    "read_code",
    "write_code",
    "set_max_enumeration_dimension",
    "get_max_enumeration_dimension",
    # LP bounds
    "LinearProgram",
    "UNBOUNDED",
    "krawtchouk_table",
    "lp_maximize",
    "build_lcd_lp",
    "lcd_dimension_upper",
    "classical_lp_dimension_upper",
    "emit_lp_table",
    # Constructions
    "OrthogonalMatrix",
    "Design",
    "random_orthogonal",
    "orthogonal_from_selfdual",
    "lcd_from_orthogonal_rows",
    "lcd_from_gram_j_minus_i",
    "bibd_code",
    "parity_check_lcd",
    # The ring R_k
    "RkElement",
    "RkVector",
    "RkCode",
    "gray_code_image",
    "dual_ring_code",
    "is_lcd_ring",
    # Tables
    "BoundRecord",
    "BoundTable",
    "exhaustive_lcd_nk",
    "exhaustive_lck_nd",
    "search_lck_lower",
    "build_lower_table",
    "save_table",
    "load_table",
)

# Symbols under `_src` are not part of the lcdkit public API.
try:
  del _src  # pylint: disable=undefined-variable
except NameError:
  pass
