"""Finite Kripke models, teams, and the relational image machinery.

A team is any ``frozenset`` of world names of one model.  Worlds and
propositions keep their declaration order, and every set-valued output is
reported in that order, so equal inputs always print identically.

Model file format (line based, ``#`` starts a comment)::

    worlds a b c
    prop p a b        # p holds exactly in a and b
    prop q c
    edge a b
    edge a c
    team a b          # optional default team for the CLI
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

Team = frozenset

DEFAULT_TEAM_LIMIT = 20


class ModelFormatError(ValueError):
    """Malformed model text."""


class EnumerationLimitError(RuntimeError):
    """A power-set walk would exceed the configured world-count limit."""


class KripkeModel:
    """Finite Kripke model over a finite proposition signature.

    Immutable after construction: all fields are read-only tuples,
    frozensets and private adjacency tables, so models can be shared
    freely between threads.
    """

    def __init__(self, worlds, edges=(), valuation=None, name="model", team=None):
        self.name = str(name)
        self.worlds = tuple(worlds)
        if len(set(self.worlds)) != len(self.worlds):
            raise ModelFormatError(f"duplicate world name in {self.name!r}")
        self._index = {w: i for i, w in enumerate(self.worlds)}

        valuation = dict(valuation or {})
        self.signature = tuple(valuation)
        if len(set(self.signature)) != len(self.signature):
            raise ModelFormatError("duplicate proposition name")
        self.valuation = {}
        for prop, members in valuation.items():
            members = tuple(members)
            for w in members:
                if w not in self._index:
                    raise ModelFormatError(f"valuation of {prop!r} names unknown world {w!r}")
            self.valuation[prop] = frozenset(members)

        rel = []
        succ = {w: [] for w in self.worlds}
        pred = {w: [] for w in self.worlds}
        for u, v in edges:
            if u not in self._index or v not in self._index:
                raise ModelFormatError(f"edge {u} {v} names an unknown world")
            if (u, v) not in rel:
                rel.append((u, v))
                succ[u].append(v)
                pred[v].append(u)
        self.rel = frozenset(rel)
        self._succ = {w: tuple(sorted(vs, key=self._index.__getitem__)) for w, vs in succ.items()}
        self._pred = {w: tuple(sorted(us, key=self._index.__getitem__)) for w, us in pred.items()}

        self.default_team = None if team is None else self.team(team)

    def __repr__(self):
        return f"KripkeModel({self.name!r}, |W|={len(self.worlds)})"

    @property
    def full_team(self) -> Team:
        return frozenset(self.worlds)

    def world(self, name: str) -> str:
        if name not in self._index:
            raise ValueError(f"unknown world {name!r} in model {self.name!r}")
        return name

    def team(self, members: Iterable[str]) -> Team:
        """Validate `members` against the world set and freeze them."""
        team = frozenset(members)
        for w in team:
            if w not in self._index:
                raise ValueError(f"unknown world {w!r} in model {self.name!r}")
        return team

    def successors(self, world: str) -> tuple[str, ...]:
        return self._succ[world]

    def predecessors(self, world: str) -> tuple[str, ...]:
        return self._pred[world]

    def holds(self, prop: str, world: str) -> bool:
        return world in self.valuation[prop]

    def sort_team(self, team: Iterable[str]) -> tuple[str, ...]:
        """Team members in declaration order."""
        return tuple(sorted(team, key=self._index.__getitem__))

    def format_team(self, team: Iterable[str]) -> str:
        return "{" + ", ".join(self.sort_team(team)) + "}"


def image(model: KripkeModel, team: Iterable[str]) -> Team:
    """Worlds reachable in one step from some member of `team`."""
    team = model.team(team)
    out = set()
    for w in team:
        out.update(model.successors(w))
    return frozenset(out)


def preimage(model: KripkeModel, team: Iterable[str]) -> Team:
    """Worlds with at least one successor in `team`."""
    team = model.team(team)
    out = set()
    for w in team:
        out.update(model.predecessors(w))
    return frozenset(out)


def is_successor_team(model: KripkeModel, team: Iterable[str], other: Iterable[str]) -> bool:
    """True iff every member of `other` is reached from `team` and every
    member of `team` reaches into `other`."""
    team = model.team(team)
    other = model.team(other)
    return other <= image(model, team) and team <= preimage(model, other)


def _iter_choice_teams(model: KripkeModel, team: Team) -> Iterator[Team]:
    # May repeat teams; callers needing a set must deduplicate.
    if not team:
        yield frozenset()
        return
    rows = [model.successors(w) for w in model.sort_team(team)]
    if any(not row for row in rows):
        return
    for pick in itertools.product(*rows):
        yield frozenset(pick)


def choice_successor_teams(model: KripkeModel, team: Iterable[str]) -> set[Team]:
    """All teams obtained by picking one successor per member of `team`.

    Empty when some member is a dead end (and `team` is non-empty); the
    empty team yields ``{frozenset()}``.  Every satisfying successor team
    of `team` contains one of these as a subset, which is what makes them
    sufficient witnesses for the diamond under downward-closed logics.
    """
    return set(_iter_choice_teams(model, model.team(team)))


def all_teams(model: KripkeModel, limit: int = DEFAULT_TEAM_LIMIT) -> Iterator[Team]:
    """All 2^|W| teams, smallest first, then in declaration order.

    Raises EnumerationLimitError when the model has more than `limit`
    worlds; evaluation itself carries no such cap, only power-set walks.
    """
    if len(model.worlds) > limit:
        raise EnumerationLimitError(
            f"model {model.name!r} has {len(model.worlds)} worlds; "
            f"power-set enumeration is capped at {limit}"
        )

    def generate():
        for size in range(len(model.worlds) + 1):
            for combo in itertools.combinations(model.worlds, size):
                yield frozenset(combo)

    return generate()


def load_model(text: str, name: str = "model") -> KripkeModel:
    """Parse the line-based model format; see the module docstring."""
    worlds = None
    props: dict[str, list[str]] = {}
    edges: list[tuple[str, str]] = []
    team = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        keyword, rest = fields[0], fields[1:]
        if keyword == "worlds":
            if worlds is not None:
                raise ModelFormatError(f"line {lineno}: second worlds line")
            worlds = rest
        elif keyword == "prop":
            if not rest:
                raise ModelFormatError(f"line {lineno}: prop line needs a name")
            if rest[0] in props:
                raise ModelFormatError(f"line {lineno}: duplicate proposition {rest[0]!r}")
            props[rest[0]] = rest[1:]
        elif keyword == "edge":
            if len(rest) != 2:
                raise ModelFormatError(f"line {lineno}: edge needs exactly two worlds")
            edges.append((rest[0], rest[1]))
        elif keyword == "team":
            if team is not None:
                raise ModelFormatError(f"line {lineno}: second team line")
            team = rest
        else:
            raise ModelFormatError(f"line {lineno}: unknown directive {keyword!r}")
    if worlds is None:
        raise ModelFormatError("missing worlds line")
    try:
        return KripkeModel(worlds, edges, props, name=name, team=team)
    except ValueError as exc:
        raise ModelFormatError(str(exc)) from exc


def load_model_file(path) -> KripkeModel:
    """Read a model file; the file stem becomes the model name."""
    from pathlib import Path

    path = Path(path)
    return load_model(path.read_text(), name=path.stem)


def full_valuation_model(props: Iterable[str], name: str | None = None) -> KripkeModel:
    """Edgeless model with one world per truth assignment to `props`.

    World ``w10`` makes the first proposition true and the second false,
    and so on; worlds appear in binary counting order.
    """
    props = tuple(props)
    worlds = []
    valuation: dict[str, list[str]] = {p: [] for p in props}
    for bits in itertools.product("01", repeat=len(props)):
        w = "w" + "".join(bits)
        worlds.append(w)
        for p, b in zip(props, bits):
            if b == "1":
                valuation[p].append(w)
    return KripkeModel(worlds, (), valuation, name=name or f"FULL{len(props)}")
