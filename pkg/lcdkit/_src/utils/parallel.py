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
"""Utilities for spreading independent work items over worker processes."""
from concurrent import futures
from typing import Callable, List, Optional, Sequence, TypeVar

from absl import logging

T = TypeVar("T")
S = TypeVar("S")


def parallel_map(
    func: Callable[[S], T],
    items: Sequence[S],
    num_workers: Optional[int] = None,
) -> List[T]:
  """Order-preserving map of `func` over `items`, possibly over processes.

  `func` must be picklable (e.g. a `functools.partial` of a module level
  function) and free of side effects. The results come back in the order of
  `items`, whichever worker finishes first, so the output is deterministic.

  Args:
    func: The function to apply.
    items: The inputs.
    num_workers: Number of worker processes. `None`, `0` or `1` maps
      sequentially in the calling process.

  Returns:
    A list with `func(item)` for every item.
  """
  if not num_workers or num_workers <= 1 or len(items) <= 1:
    return [func(item) for item in items]

  logging.vlog(1, "Mapping %d items over %d workers.", len(items),
               num_workers)
  with futures.ProcessPoolExecutor(max_workers=num_workers) as executor:
    return list(executor.map(func, items))
