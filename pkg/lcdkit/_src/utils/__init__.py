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
"""lcdkit related utility classes and functions."""

from lcdkit._src.utils import math
from lcdkit._src.utils import misc
from lcdkit._src.utils import parallel
from lcdkit._src.utils import types

# types
Array = types.Array
Words = types.Words
Bits = types.Bits
Rational = types.Rational
Scalar = types.Scalar
Seed = types.Seed
Cell = types.Cell
IndexSet = types.IndexSet
WORD_BITS = types.WORD_BITS
WORD_DTYPE = types.WORD_DTYPE
num_words = types.num_words
is_binary = types.is_binary
del types

# misc
DATA_DIR_ENV_VAR = misc.DATA_DIR_ENV_VAR
popcount = misc.popcount
popcount_rows = misc.popcount_rows
parity = misc.parity
bits_to_int = misc.bits_to_int
int_to_bits = misc.int_to_bits
gray_flip_positions = misc.gray_flip_positions
derive_seed = misc.derive_seed
data_dir = misc.data_dir
data_path = misc.data_path
del misc

# math
product = math.product
binomial = math.binomial
ceil_div = math.ceil_div
floor_log2 = math.floor_log2
del math

# parallel
parallel_map = parallel.parallel_map
del parallel
