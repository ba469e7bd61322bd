"""Team-semantics evaluation plus the pointwise evaluator for ML formulas.

Truth of a formula in a team follows the usual clauses: literals by
inclusion or disjointness, conjunction on the whole team, splitting
disjunction by a cover of the team, diamond through successor teams, box
on the relational image, intuitionistic disjunction by either side, and
the dependence atom by functional determination of its target across the
team, with members read pointwise.

Two implementation shortcuts are sound for every formula of the supported
grammar and are cross-checked against brute-force oracles in the test
suite: the empty team satisfies everything, and the diamond only needs
the teams produced by picking one successor per world (every other
successor team contains one of those, and all supported logics are
downward closed).
"""

from __future__ import annotations

from dataclasses import dataclass

from .kripke import (
    EnumerationLimitError,
    KripkeModel,
    Team,
    _iter_choice_teams,
    all_teams,
    image,
)
from .syntax import (
    And,
    Bot,
    Box,
    Dep,
    Dia,
    Formula,
    Fragment,
    FragmentError,
    IDis,
    NegProp,
    Or,
    Prop,
    Top,
    classify,
)


def _check_signature(model: KripkeModel, f: Formula) -> None:
    # Identity-memoized walk: translation outputs share subtrees heavily,
    # so a plain tree walk could visit the same node millions of times.
    signature = set(model.signature)
    seen: set[int] = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if id(g) in seen:
            continue
        seen.add(id(g))
        if isinstance(g, (Prop, NegProp)):
            if g.name not in signature:
                raise ValueError(
                    f"unknown proposition {g.name!r} in model {model.name!r}"
                )
        elif isinstance(g, (And, Or, IDis)):
            stack.append(g.left)
            stack.append(g.right)
        elif isinstance(g, (Dia, Box)):
            stack.append(g.inner)
        elif isinstance(g, Dep):
            stack.extend(g.args)
            stack.append(g.target)


class Evaluator:
    """Memoized evaluator bound to one model.

    Caches are keyed by subformula identity and team, so a single instance
    may be reused across many teams and formulas of one model.  Instances
    are not synchronized; confine each to one thread.
    """

    def __init__(self, model: KripkeModel):
        self.model = model
        self._team_cache: dict = {}
        self._point_cache: dict = {}

    def evaluate(self, team: Team, f: Formula) -> bool:
        key = (id(f), team)
        cached = self._team_cache.get(key)
        if cached is None:
            cached = self._team_cache[key] = self._team(team, f)
        return cached

    def evaluate_point(self, world: str, f: Formula) -> bool:
        key = (id(f), world)
        cached = self._point_cache.get(key)
        if cached is None:
            cached = self._point_cache[key] = self._point(world, f)
        return cached

    def _team(self, team: Team, f: Formula) -> bool:
        if not team:
            return True
        if isinstance(f, Top):
            return True
        if isinstance(f, Bot):
            return False
        if isinstance(f, Prop):
            return team <= self.model.valuation[f.name]
        if isinstance(f, NegProp):
            return not (team & self.model.valuation[f.name])
        if isinstance(f, And):
            return self.evaluate(team, f.left) and self.evaluate(team, f.right)
        if isinstance(f, IDis):
            return self.evaluate(team, f.left) or self.evaluate(team, f.right)
        if isinstance(f, Or):
            members = self.model.sort_team(team)
            for mask in range(1 << len(members)):
                part = frozenset(
                    members[i] for i in range(len(members)) if mask >> i & 1
                )
                if self.evaluate(part, f.left) and self.evaluate(team - part, f.right):
                    return True
            return False
        if isinstance(f, Dia):
            return any(
                self.evaluate(s, f.inner)
                for s in _iter_choice_teams(self.model, team)
            )
        if isinstance(f, Box):
            return self.evaluate(image(self.model, team), f.inner)
        if isinstance(f, Dep):
            determined: dict = {}
            for w in team:
                pattern = tuple(self.evaluate_point(w, a) for a in f.args)
                value = self.evaluate_point(w, f.target)
                if determined.setdefault(pattern, value) != value:
                    return False
            return True
        raise TypeError(f"not a formula: {f!r}")

    def _point(self, world: str, f: Formula) -> bool:
        if isinstance(f, Top):
            return True
        if isinstance(f, Bot):
            return False
        if isinstance(f, Prop):
            return world in self.model.valuation[f.name]
        if isinstance(f, NegProp):
            return world not in self.model.valuation[f.name]
        if isinstance(f, And):
            return self.evaluate_point(world, f.left) and self.evaluate_point(world, f.right)
        if isinstance(f, Or):
            return self.evaluate_point(world, f.left) or self.evaluate_point(world, f.right)
        if isinstance(f, Dia):
            return any(
                self.evaluate_point(v, f.inner) for v in self.model.successors(world)
            )
        if isinstance(f, Box):
            return all(
                self.evaluate_point(v, f.inner) for v in self.model.successors(world)
            )
        raise FragmentError(f"pointwise evaluation needs an ML formula, got {f!s}")


def evaluate(model: KripkeModel, team, f: Formula) -> bool:
    """Truth of `f` in the given team of `model`."""
    _check_signature(model, f)
    return Evaluator(model).evaluate(model.team(team), f)


def evaluate_point(model: KripkeModel, world: str, f: Formula) -> bool:
    """Classical pointwise truth of an ML formula; agrees with `evaluate`
    on singleton teams."""
    if classify(f) is not Fragment.ML:
        raise FragmentError(f"pointwise evaluation needs an ML formula, got {f!s}")
    _check_signature(model, f)
    return Evaluator(model).evaluate_point(model.world(world), f)


@dataclass
class Extension:
    """The family of teams of one model satisfying a formula."""

    model: KripkeModel
    satisfying: frozenset[Team]

    def __contains__(self, team) -> bool:
        return frozenset(team) in self.satisfying


def extension(model: KripkeModel, f: Formula, limit: int = 20) -> Extension:
    """Exact satisfying-team family, by evaluating every team of `model`."""
    _check_signature(model, f)
    ev = Evaluator(model)
    return Extension(
        model,
        frozenset(t for t in all_teams(model, limit) if ev.evaluate(t, f)),
    )


__all__ = [
    "Evaluator",
    "Extension",
    "EnumerationLimitError",
    "evaluate",
    "evaluate_point",
    "extension",
]
