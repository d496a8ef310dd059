# Copyright 2026 The Hurwitz Orbits Authors
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

"""Braid group orbits on tuples in finite groups."""

from ._hurwitz import (
    Group,
    IndeterminateError,
    braid_equivalent,
    classes,
    evaluate,
    h2,
    nielsen,
    orbit,
    run_cli,
    sigma,
    stability,
    stable_equivalent,
)

__all__ = [
    "Group",
    "IndeterminateError",
    "braid_equivalent",
    "classes",
    "evaluate",
    "h2",
    "nielsen",
    "orbit",
    "run_cli",
    "sigma",
    "stability",
    "stable_equivalent",
]
