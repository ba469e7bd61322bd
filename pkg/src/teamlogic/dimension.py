"""Maximal and minimal team families, dimension estimates, coherence.

For a formula f and model K the satisfying teams form a downward-closed
family, so two antichains describe it completely: the maximal satisfying
teams, and the minimal falsifying teams.  The largest number of maximal
teams any single model exhibits, and the largest minimal-falsifying team
any model exhibits, are the two semantic dimensions of f; enumeration
over models can only ever witness lower bounds for them, while the
syntactic estimate below is an upper bound for both.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .kripke import KripkeModel, Team, all_teams
from .semantics import Evaluator, _check_signature
from .syntax import (
    And,
    Bot,
    Box,
    Dep,
    Dia,
    Formula,
    IDis,
    NegProp,
    Or,
    Prop,
    Top,
    idis_count,
    render,
    symbol_size,
)


def _team_truth(model: KripkeModel, f: Formula, limit: int) -> dict[Team, bool]:
    """Truth value of every team, size-ascending.

    Supersets of a falsifying team are falsifying (all supported logics
    are downward closed), so those teams are filled in without evaluation.
    """
    _check_signature(model, f)
    ev = Evaluator(model)
    truth: dict[Team, bool] = {}
    for team in all_teams(model, limit):
        if team and any(not truth[team - {w}] for w in team):
            truth[team] = False
            continue
        truth[team] = ev.evaluate(team, f)
    return truth


def _families(truth: dict[Team, bool], model: KripkeModel):
    maximal = [
        t
        for t, sat in truth.items()
        if sat and not any(truth[t | {w}] for w in model.worlds if w not in t)
    ]
    minimal = [
        t
        for t, sat in truth.items()
        if not sat and all(truth[t - {w}] for w in t)
    ]
    return maximal, minimal


def maximal_teams(model: KripkeModel, f: Formula, limit: int = 20) -> set[Team]:
    """Maximal satisfying teams; every satisfying team sits inside one."""
    maximal, _ = _families(_team_truth(model, f, limit), model)
    return set(maximal)


def minimal_falsifying_teams(model: KripkeModel, f: Formula, limit: int = 20) -> set[Team]:
    """Minimal falsifying teams; all their strict subteams satisfy `f`."""
    _, minimal = _families(_team_truth(model, f, limit), model)
    return set(minimal)


def upper_dimension_estimate(f: Formula) -> int:
    """Compositional upper bound on the number of maximal satisfying teams
    in any one model.

    Literals and constants bound it by 1, conjunction and splitting
    disjunction multiply, intuitionistic disjunction adds, modalities pass
    through, and a dependence atom with n members contributes 2^(2^n).
    """
    if isinstance(f, (Top, Bot, Prop, NegProp)):
        return 1
    if isinstance(f, (And, Or)):
        return upper_dimension_estimate(f.left) * upper_dimension_estimate(f.right)
    if isinstance(f, IDis):
        return upper_dimension_estimate(f.left) + upper_dimension_estimate(f.right)
    if isinstance(f, (Dia, Box)):
        return upper_dimension_estimate(f.inner)
    if isinstance(f, Dep):
        return 2 ** (2 ** len(f.args))
    raise TypeError(f"not a formula: {f!r}")


def is_coherent(model: KripkeModel, f: Formula, n: int, limit: int = 20) -> bool:
    """True iff on `model`, truth of `f` in any team is equivalent to its
    truth in all subteams of size at most `n`."""
    truth = _team_truth(model, f, limit)
    for team, sat in truth.items():
        members = model.sort_team(team)
        small = all(
            truth[frozenset(sub)]
            for size in range(min(n, len(members)) + 1)
            for sub in itertools.combinations(members, size)
        )
        if sat != small:
            return False
    return True


@dataclass
class ModelFamilies:
    """Exact team families of one model, in enumeration order."""

    model: KripkeModel
    maximal: tuple[Team, ...]
    minimal_falsifying: tuple[Team, ...]


@dataclass
class DimensionReport:
    """Per-model exact families plus the syntactic estimate.

    `witnessed_upper` is the largest maximal-family size seen and
    `witnessed_lower` the largest minimal-falsifying team size seen; both
    are lower bounds for the corresponding dimension, never exact values,
    since no finite model collection exhausts all models.
    """

    formula: Formula
    per_model: tuple[ModelFamilies, ...]
    estimate: int
    witnessed_upper: int
    witnessed_lower: int
    idis_occurrences: int
    size: int

    def to_text(self) -> str:
        lines = [f"formula {render(self.formula)}"]
        for fam in self.per_model:
            model = fam.model
            lines.append(
                f"model {model.name}: |M|={len(fam.maximal)} "
                f"|N|={len(fam.minimal_falsifying)}"
            )
            lines.extend(f"  M {model.format_team(t)}" for t in fam.maximal)
            lines.extend(
                f"  N {model.format_team(t)}" for t in fam.minimal_falsifying
            )
        lines.append(
            f"Dim<={self.estimate} occ_ivee={self.idis_occurrences} size={self.size}"
        )
        lines.append(
            f"witnessed Dim>={self.witnessed_upper} dim>={self.witnessed_lower}"
        )
        return "\n".join(lines)


def dimension_report(models, f: Formula, limit: int = 20) -> DimensionReport:
    """Assemble the exact families for each model and the global estimate."""
    per_model = []
    witnessed_upper = 0
    witnessed_lower = 0
    for model in models:
        truth = _team_truth(model, f, limit)
        maximal, minimal = _families(truth, model)
        order = {t: i for i, t in enumerate(truth)}
        maximal.sort(key=order.__getitem__)
        minimal.sort(key=order.__getitem__)
        per_model.append(ModelFamilies(model, tuple(maximal), tuple(minimal)))
        witnessed_upper = max(witnessed_upper, len(maximal))
        witnessed_lower = max(witnessed_lower, max((len(t) for t in minimal), default=0))
    estimate = upper_dimension_estimate(f)
    if witnessed_upper > estimate or witnessed_lower > estimate:
        raise RuntimeError(
            "internal error: witnessed dimension exceeds the syntactic bound"
        )
    return DimensionReport(
        formula=f,
        per_model=tuple(per_model),
        estimate=estimate,
        witnessed_upper=witnessed_upper,
        witnessed_lower=witnessed_lower,
        idis_occurrences=idis_count(f),
        size=symbol_size(f),
    )
