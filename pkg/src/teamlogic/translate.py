"""Translations between the logics, built on a small theory of world types.

Fix an ordered set of ML formulas (a `TypeContext`).  The type of a world
is the set of context members true there, and the type set of a team
collects its members' types.  Three formula builders drive everything:

* `type_formula` pins a single type: it holds pointwise exactly at worlds
  of that type.
* `at_most_k_types` holds in a team iff its members realize at most k
  distinct types (k splitting disjunctions of a constancy conjunction).
* `non_subset_formula` holds in a team iff a given type set is *not*
  contained in the team's type set.

`to_emdl` eliminates intuitionistic disjunction: it normalizes the input
to a disjunction over a context Psi, then conjoins `non_subset_formula`
over every candidate type set that would refute the disjunction (those
with no context member common to all their types).  Type sets no model
realizes only add vacuously true conjuncts, so no satisfiability check is
needed.  `to_mlidis` goes the other way, expanding each dependence atom
into an intuitionistic disjunction over all ways the members' truth
patterns can determine the target.

Both directions blow up doubly exponentially, which is intrinsic, so they
carry small size guards.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .kripke import KripkeModel
from .semantics import Evaluator, evaluate_point
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
    Or,
    Top,
    classify,
    conjoin,
    contains_dep,
    contains_idis,
    disjoin,
    idis_join,
    negate,
)

DEP_MEMBER_LIMIT = 3
NORMAL_FORM_LIMIT = 4

WorldType = frozenset  # frozenset of context indices
TypeSet = frozenset  # frozenset of WorldType


class TranslationSizeError(RuntimeError):
    """The translation output would be astronomically large."""


@dataclass(frozen=True)
class TypeContext:
    """Ordered, structurally distinct ML formulas used to type worlds."""

    members: tuple[Formula, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        if len(set(self.members)) != len(self.members):
            raise ValueError("context members must be distinct")
        for m in self.members:
            if classify(m) is not Fragment.ML:
                raise FragmentError(f"context member {m!s} is not an ML formula")

    def __len__(self) -> int:
        return len(self.members)


def index_subsets(n: int) -> Iterator[WorldType]:
    """All subsets of range(n), full set first, empty set last."""
    for mask in range((1 << n) - 1, -1, -1):
        yield frozenset(i for i in range(n) if mask >> i & 1)


def world_type(model: KripkeModel, world: str, ctx: TypeContext) -> WorldType:
    """Indices of the context members true at `world`."""
    return frozenset(
        i for i, m in enumerate(ctx.members) if evaluate_point(model, world, m)
    )


def team_types(model: KripkeModel, team, ctx: TypeContext) -> TypeSet:
    """The set of world types realized in `team`."""
    return frozenset(world_type(model, w, ctx) for w in model.team(team))


def type_formula(gamma, ctx: TypeContext) -> Formula:
    """ML formula true pointwise exactly at worlds of type `gamma`:
    the members of `gamma` conjoined with the negations of the rest."""
    gamma = frozenset(gamma)
    parts = [m for i, m in enumerate(ctx.members) if i in gamma]
    parts += [negate(m) for i, m in enumerate(ctx.members) if i not in gamma]
    return conjoin(parts)


def _constancy(ctx: TypeContext) -> Formula:
    return conjoin(Dep((), m) for m in ctx.members)


def at_most_k_types(ctx: TypeContext, k: int) -> Formula:
    """EMDL formula true in a team iff it realizes at most k context types.

    Built as k splitting disjunctions of the conjunction of constancy
    atoms; the base case is F, which only the empty team satisfies.
    """
    out: Formula = Bot()
    gamma = _constancy(ctx)
    for _ in range(k):
        out = Or(out, gamma)
    return out


def non_subset_formula(types, ctx: TypeContext) -> Formula:
    """EMDL formula true in (model, team) iff `types` is not a subset of
    the team's type set.

    A team refutes containment by splitting into a part realizing only
    types outside `types` and a part realizing fewer types than `types`
    has.  `types` must be non-empty.
    """
    tt = frozenset(frozenset(g) for g in types)
    if not tt:
        raise ValueError("the type set must be non-empty")
    outside = [g for g in index_subsets(len(ctx)) if g not in tt]
    return Or(
        disjoin(type_formula(g, ctx) for g in outside),
        at_most_k_types(ctx, len(tt) - 1),
    )


def idis_normal_form(f: Formula) -> tuple[Formula, ...]:
    """Rewrite an ML(\\/) formula as a flat intuitionistic disjunction.

    Returns the distinct ML disjuncts; their \\/ is team-equivalent to `f`.
    Conjunction, splitting disjunction and both modalities distribute over
    \\/, so the rewrite just pulls every \\/ to the top.
    """
    if contains_dep(f):
        raise FragmentError("normal form applies to ML(\\/) formulas, not dep atoms")
    return _nf(f)


def _dedup(items) -> tuple:
    out = []
    for x in items:
        if x not in out:
            out.append(x)
    return tuple(out)


def _nf(f: Formula) -> tuple[Formula, ...]:
    if isinstance(f, IDis):
        return _dedup(_nf(f.left) + _nf(f.right))
    if isinstance(f, And):
        return _dedup(And(a, b) for a in _nf(f.left) for b in _nf(f.right))
    if isinstance(f, Or):
        return _dedup(Or(a, b) for a in _nf(f.left) for b in _nf(f.right))
    if isinstance(f, Dia):
        return _dedup(Dia(a) for a in _nf(f.inner))
    if isinstance(f, Box):
        return _dedup(Box(a) for a in _nf(f.inner))
    return (f,)


def _balanced_and(items: list[Formula]) -> Formula:
    # Keeps the tree shallow; the eliminator below conjoins tens of
    # thousands of parts and a right fold would overflow recursion later.
    if not items:
        return Top()
    if len(items) == 1:
        return items[0]
    mid = len(items) // 2
    return And(_balanced_and(items[:mid]), _balanced_and(items[mid:]))


def to_emdl(f: Formula) -> Formula:
    """Team-equivalent EMDL formula for an ML(\\/) input.

    Guarded at `NORMAL_FORM_LIMIT` normal-form disjuncts: with n disjuncts
    the conjunction ranges over up to 2^(2^n) candidate type sets.
    """
    psi = idis_normal_form(f)
    if len(psi) > NORMAL_FORM_LIMIT:
        raise TranslationSizeError(
            f"normal form has {len(psi)} disjuncts; elimination is capped at "
            f"{NORMAL_FORM_LIMIT}"
        )
    ctx = TypeContext(psi)
    n = len(ctx)
    gammas = list(index_subsets(n))
    thetas = {g: type_formula(g, ctx) for g in gammas}
    # Shared prefix formulas for "at most k types", k = 0 .. 2^n - 1.
    bounds: list[Formula] = [Bot()]
    constancy = _constancy(ctx)
    for _ in range(len(gammas) - 1):
        bounds.append(Or(bounds[-1], constancy))

    conjuncts: list[Formula] = []
    for picks in itertools.product((False, True), repeat=len(gammas)):
        tt = [g for g, used in zip(gammas, picks) if used]
        if not tt:
            continue
        if any(all(i in g for g in tt) for i in range(n)):
            # Some disjunct is true everywhere in such a team, so the
            # original formula already holds there; no conjunct needed.
            continue
        outside = [g for g in gammas if g not in tt]
        conjuncts.append(
            Or(disjoin(thetas[g] for g in outside), bounds[len(tt) - 1])
        )
    return _balanced_and(conjuncts)


def to_mlidis(f: Formula) -> Formula:
    """Team-equivalent ML(\\/) formula for an ML, MDL or EMDL input.

    Each dependence atom becomes an intuitionistic disjunction with one
    disjunct per function from member-truth patterns to target values;
    the disjunct asserts, per pattern, the pinned target value.  An atom
    with m distinct members yields 2^(2^m) disjuncts, so m is guarded at
    `DEP_MEMBER_LIMIT`.
    """
    if contains_idis(f):
        raise FragmentError("dep expansion applies to ML/MDL/EMDL formulas, not \\/")
    return _expand(f)


def _expand(f: Formula) -> Formula:
    if isinstance(f, And):
        return And(_expand(f.left), _expand(f.right))
    if isinstance(f, Or):
        return Or(_expand(f.left), _expand(f.right))
    if isinstance(f, Dia):
        return Dia(_expand(f.inner))
    if isinstance(f, Box):
        return Box(_expand(f.inner))
    if isinstance(f, Dep):
        return _expand_dep(f)
    return f


def _and_simplified(a: Formula, b: Formula) -> Formula:
    if isinstance(a, Top):
        return b
    if isinstance(b, Top):
        return a
    return And(a, b)


def _expand_dep(dep: Dep) -> Formula:
    members = _dedup(dep.args)
    if len(members) > DEP_MEMBER_LIMIT:
        raise TranslationSizeError(
            f"dependence atom has {len(members)} distinct members; expansion "
            f"is capped at {DEP_MEMBER_LIMIT}"
        )
    ctx = TypeContext(members)
    gammas = list(index_subsets(len(members)))
    thetas = [type_formula(g, ctx) for g in gammas]
    value = {True: dep.target, False: negate(dep.target)}
    disjuncts = []
    for assignment in itertools.product((True, False), repeat=len(gammas)):
        disjuncts.append(
            disjoin(
                _and_simplified(theta, value[v])
                for theta, v in zip(thetas, assignment)
            )
        )
    return idis_join(disjuncts)


def team_equivalent(
    a: Formula, b: Formula, models, limit: int = 20
) -> bool:
    """Exhaustively compare two formulas on every team of every model."""
    from .kripke import all_teams

    for model in models:
        ev = Evaluator(model)
        for team in all_teams(model, limit):
            if ev.evaluate(team, a) != ev.evaluate(team, b):
                return False
    return True
