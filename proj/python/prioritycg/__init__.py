# Copyright 2026 The pcg Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Priority-based congestion games.

Profiles are dicts mapping the 1-based player id (as a string) to a resource
name, or to a list of names for non-singleton strategies::

    game = prioritycg.Game.load("t1.json")
    result = game.solve("insertion")
    result.profile            # {"1": "a", "2": "b"}
    game.cost(result.profile, 1)
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Union

from . import _core
from ._core import PcgError

__all__ = ["Game", "PcgError", "Solution", "generate"]

Profile = dict


@dataclass
class Solution:
    profile: Profile
    converged: bool
    steps: dict
    counters: dict = field(default_factory=dict)
    diagnostics: list = field(default_factory=list)
    trace_csv: str = ""


class Game:
    def __init__(self, text: str):
        self._game = _core.Game.from_json(text)

    @classmethod
    def load(cls, path: Union[str, Path]) -> "Game":
        return cls(Path(path).read_text())

    @classmethod
    def from_dict(cls, data: dict) -> "Game":
        return cls(json.dumps(data))

    @property
    def num_players(self) -> int:
        return self._game.num_players

    @property
    def resources(self) -> list:
        return self._game.resources

    @property
    def consistent(self) -> bool:
        return self._game.consistent

    def to_dict(self) -> dict:
        return json.loads(self._game.to_json())

    def cost(self, profile: Profile, player: int) -> str:
        """Exact cost of `player` as "p/q" or "inf"."""
        return self._game.cost(json.dumps(profile), player)

    def is_pure_nash(self, profile: Profile) -> bool:
        return self._game.is_pure_nash(json.dumps(profile))

    def solve(self, method: str = "layered", *, repair: bool = False,
              policy: str = "roundrobin", max_steps: int = 100000) -> Solution:
        raw = self._game.solve(method, repair, policy, max_steps)
        raw["profile"] = json.loads(raw["profile"])
        return Solution(**raw)

    def equilibria(self, max_profiles: int = 2_000_000) -> list:
        return [json.loads(p) for p in self._game.equilibria(max_profiles)]

    def certify_trace(self, csv_text: str) -> dict:
        return self._game.certify_trace(csv_text)


def generate(seed: int, **params) -> Game:
    """Random valid instance; keyword arguments mirror the `gen` command."""
    return Game(_core.generate(seed, **params))
