"""k-bisimulation by partition refinement, team bisimulation, Hintikka
formulas, and formulas defining a class of teams up to bisimulation.

Refinement runs on the disjoint union of the two models, so worlds of
different models land in comparable classes for free.  Level 0 groups
worlds by their valuation; level j+1 groups worlds that share a level-j
class and whose successors meet the same set of level-j classes.  Two
worlds are j-bisimilar exactly when they share a level-j class.
"""

from __future__ import annotations

from dataclasses import dataclass

from .kripke import KripkeModel, Team
from .syntax import (
    Bot,
    Box,
    Dia,
    Formula,
    NegProp,
    Prop,
    conjoin,
    disjoin,
    idis_join,
)

_Unit = tuple[int, str]


def _check_shared_signature(a: KripkeModel, b: KripkeModel) -> None:
    if a.signature != b.signature:
        raise ValueError(
            f"models {a.name!r} and {b.name!r} declare different signatures: "
            f"{a.signature} vs {b.signature}"
        )


@dataclass
class BisimClasses:
    """Bisimulation classes of the disjoint union of two models.

    ``levels[j][(side, world)]`` is the level-j class id of a world; side 0
    is the first model, side 1 the second.  Class ids are renumbered in
    first-seen order, so equal partitions get equal tables.
    """

    k: int
    levels: tuple[dict[_Unit, int], ...]

    def class_of(self, side: int, world: str, level: int | None = None) -> int:
        return self.levels[self.k if level is None else level][(side, world)]

    def bisimilar(self, world_a: str, world_b: str, level: int | None = None) -> bool:
        """j-bisimilarity of a side-0 world and a side-1 world."""
        level = self.k if level is None else level
        return self.class_of(0, world_a, level) == self.class_of(1, world_b, level)

    def team_classes(self, side: int, team: Team, level: int | None = None) -> frozenset[int]:
        """Set of classes met by a team."""
        level = self.k if level is None else level
        return frozenset(self.class_of(side, w, level) for w in team)


def bisim_classes(a: KripkeModel, b: KripkeModel, k: int) -> BisimClasses:
    """Partition-refine the disjoint union of `a` and `b` for k rounds.

    Once a round no longer splits any class the partition is final and is
    copied to all remaining levels.
    """
    _check_shared_signature(a, b)
    models = (a, b)
    units: list[_Unit] = [(0, w) for w in a.worlds] + [(1, w) for w in b.worlds]

    def renumber(keys: dict[_Unit, object]) -> dict[_Unit, int]:
        ids: dict[object, int] = {}
        out = {}
        for u in units:
            out[u] = ids.setdefault(keys[u], len(ids))
        return out

    level = renumber(
        {
            (side, w): tuple(w in models[side].valuation[p] for p in a.signature)
            for side, w in units
        }
    )
    levels = [level]
    for _ in range(k):
        prev = levels[-1]
        nxt = renumber(
            {
                (side, w): (
                    prev[(side, w)],
                    frozenset(prev[(side, v)] for v in models[side].successors(w)),
                )
                for side, w in units
            }
        )
        if nxt == prev:
            levels.extend(prev for _ in range(k + 1 - len(levels)))
            break
        levels.append(nxt)
    return BisimClasses(k, tuple(levels))


def team_bisimilar(a: KripkeModel, team_a, b: KripkeModel, team_b, k: int) -> bool:
    """True iff the two teams meet the same set of k-bisimulation classes."""
    classes = bisim_classes(a, b, k)
    return classes.team_classes(0, a.team(team_a)) == classes.team_classes(
        1, b.team(team_b)
    )


def hintikka(model: KripkeModel, world: str, k: int) -> Formula:
    """Characteristic ML formula of (model, world) up to depth k.

    Level 0 is the full literal description of the world over the model's
    signature.  Each further level conjoins the previous one with one
    diamond per (distinct) successor formula and a box over their
    disjunction; a dead end contributes ``[]F``.  A world satisfies the
    depth-k formula of another exactly when the two are k-bisimilar.
    """
    model.world(world)
    memo: dict[tuple[str, int], Formula] = {}

    def chi(w: str, j: int) -> Formula:
        key = (w, j)
        if key in memo:
            return memo[key]
        if j == 0:
            out = conjoin(
                Prop(p) if w in model.valuation[p] else NegProp(p)
                for p in model.signature
            )
        else:
            succ: list[Formula] = []
            for v in model.successors(w):
                c = chi(v, j - 1)
                if c not in succ:
                    succ.append(c)
            parts: list[Formula] = [chi(w, j - 1)]
            parts.extend(Dia(c) for c in succ)
            parts.append(Box(disjoin(succ)))
            out = conjoin(parts)
        memo[key] = out
        return out

    return chi(world, k)


def defining_formula(exemplars, k: int) -> Formula:
    """Formula in ML(\\/) picking out the exemplars' team class.

    `exemplars` is a non-empty sequence of (model, team) pairs over one
    signature.  The result holds in exactly those (model, team) pairs that
    are team k-bisimilar to a subteam of some exemplar; an empty exemplar
    team contributes F, which only the empty team satisfies.
    """
    exemplars = [(model, model.team(team)) for model, team in exemplars]
    if not exemplars:
        raise ValueError("need at least one (model, team) exemplar")
    first = exemplars[0][0]
    for model, _ in exemplars[1:]:
        _check_shared_signature(first, model)

    blocks: list[Formula] = []
    for model, team in exemplars:
        chis: list[Formula] = []
        for w in model.sort_team(team):
            c = hintikka(model, w, k)
            if c not in chis:
                chis.append(c)
        block = disjoin(chis)
        if block not in blocks:
            blocks.append(block)
    return idis_join(blocks)
