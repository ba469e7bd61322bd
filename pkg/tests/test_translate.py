import itertools
import random

import pytest

from teamlogic import all_teams, evaluate, extension
from teamlogic.semantics import Evaluator
from teamlogic.syntax import (
    And,
    Bot,
    Box,
    Dep,
    Dia,
    Fragment,
    FragmentError,
    IDis,
    NegProp,
    Or,
    Prop,
    Top,
    classify,
    idis_count,
    idis_join,
    parse,
)
from teamlogic.translate import (
    TranslationSizeError,
    TypeContext,
    at_most_k_types,
    idis_normal_form,
    index_subsets,
    non_subset_formula,
    team_equivalent,
    team_types,
    to_emdl,
    to_mlidis,
    type_formula,
    world_type,
)

from genlogic import model_family, random_ml, random_mlidis, random_team_formula

P, Q, R = Prop("p"), Prop("q"), Prop("r")
CTX_PQ = TypeContext((P, Q))
CTX_P = TypeContext((P,))


def small_models(fixture_models):
    return [m for m in fixture_models if len(m.worlds) <= 3] + model_family(
        seed=51, count=3, max_worlds=3
    )


def test_context_validation():
    with pytest.raises(ValueError):
        TypeContext((P, P))
    with pytest.raises(FragmentError):
        TypeContext((IDis(P, Q),))


def test_world_type_examples(m1, m2, full2):
    assert world_type(m1, "a", CTX_PQ) == frozenset({0})
    assert world_type(m2, "a", CTX_PQ) == frozenset({0, 1})
    assert world_type(full2, "w00", CTX_PQ) == frozenset()


def test_team_types_examples(m1, m2):
    assert team_types(m1, {"a", "b"}, CTX_PQ) == {frozenset({0}), frozenset({1})}
    assert team_types(m1, frozenset(), CTX_PQ) == frozenset()
    assert team_types(m2, {"a", "b"}, CTX_P) == {frozenset({0})}


def test_type_formula_examples():
    assert type_formula({0}, CTX_PQ) == And(P, NegProp("q"))
    assert type_formula(frozenset(), CTX_PQ) == And(NegProp("p"), NegProp("q"))
    assert type_formula({0, 1}, CTX_PQ) == And(P, Q)
    assert type_formula(frozenset(), TypeContext(())) == Top()


def test_type_formula_pins_the_type(fixture_models):
    ctx = TypeContext((P, Dia(Q)))
    for gamma in index_subsets(2):
        theta = type_formula(gamma, ctx)
        for model in fixture_models:
            for w in model.worlds:
                from teamlogic import evaluate_point

                assert evaluate_point(model, w, theta) == (
                    world_type(model, w, ctx) == gamma
                )


def test_at_most_k_types_examples(m1):
    bound0 = at_most_k_types(CTX_PQ, 0)
    assert bound0 == Bot()
    assert not evaluate(m1, {"a"}, bound0)
    assert evaluate(m1, frozenset(), bound0)
    assert not evaluate(m1, {"a", "b"}, at_most_k_types(CTX_PQ, 1))
    assert evaluate(m1, {"a", "b"}, at_most_k_types(CTX_PQ, 2))


def test_at_most_k_types_counting_law(fixture_models):
    contexts = [CTX_P, CTX_PQ, TypeContext((P, Dia(Q)))]
    for ctx in contexts:
        for k in range(5):
            bound = at_most_k_types(ctx, k)
            assert classify(bound) in (Fragment.MDL, Fragment.EMDL) or bound == Bot()
            for model in fixture_models:
                for team in all_teams(model):
                    assert evaluate(model, team, bound) == (
                        len(team_types(model, team, ctx)) <= k
                    )


def test_non_subset_formula_examples(m1, m2):
    # all types present: the literal block is empty
    both = frozenset({frozenset({0}), frozenset()})
    xi = non_subset_formula(both, CTX_P)
    assert xi == Or(Bot(), at_most_k_types(CTX_P, 1))
    assert evaluate(m2, {"a"}, xi)  # tset {{p}} does not contain both types

    only_p = frozenset({frozenset({0})})
    xi2 = non_subset_formula(only_p, CTX_P)
    assert xi2 == Or(NegProp("p"), Bot())
    for model in (m1, m2):
        for team in all_teams(model):
            has_p_world = any(model.holds("p", w) for w in team)
            assert evaluate(model, team, xi2) == (not has_p_world)

    assert evaluate(m1, {"a"}, non_subset_formula({frozenset()}, CTX_P))


def test_non_subset_formula_rejects_empty():
    with pytest.raises(ValueError):
        non_subset_formula(frozenset(), CTX_P)


def test_non_subset_law(fixture_models):
    for ctx in (CTX_P, CTX_PQ):
        subsets = list(index_subsets(len(ctx.members)))
        for size in range(1, len(subsets) + 1):
            for tt in itertools.combinations(subsets, size):
                xi = non_subset_formula(frozenset(tt), ctx)
                for model in fixture_models:
                    for team in all_teams(model):
                        expected = not (
                            frozenset(tt) <= team_types(model, team, ctx)
                        )
                        assert evaluate(model, team, xi) == expected


def test_common_member_law(fixture_models):
    # a context member holds in a team iff it belongs to every realized type
    ctx = TypeContext((P, Dia(Q)))
    for model in fixture_models:
        for team in all_teams(model):
            types = team_types(model, team, ctx)
            for i, member in enumerate(ctx.members):
                in_all = all(i in g for g in types)
                assert evaluate(model, team, member) == in_all


def test_type_set_containment_transfers_idis_truth(fixture_models):
    psi = idis_join([And(P, Q), NegProp("p"), Dia(Q)])
    ctx = TypeContext(idis_normal_form(psi))
    units = [(m, t) for m in fixture_models for t in all_teams(m)]
    for (ma, ta), (mb, tb) in itertools.product(units, repeat=2):
        if evaluate(ma, ta, psi) and team_types(mb, tb, ctx) <= team_types(ma, ta, ctx):
            assert evaluate(mb, tb, psi)


# --- normal form -------------------------------------------------------------

def test_normal_form_examples():
    assert idis_normal_form(P) == (P,)
    assert idis_normal_form(parse("(p \\/ q) | r")) == (Or(P, R), Or(Q, R))
    assert idis_normal_form(parse("<>(p \\/ q)")) == (Dia(P), Dia(Q))
    assert idis_normal_form(parse("p \\/ p")) == (P,)


def test_normal_form_rejects_dep():
    with pytest.raises(FragmentError):
        idis_normal_form(parse("dep(; p)"))


def test_normal_form_members_are_ml():
    rng = random.Random(52)
    for _ in range(50):
        f = random_mlidis(rng, ("p", "q"), 2)
        for member in idis_normal_form(f):
            assert classify(member) is Fragment.ML


def test_normal_form_equivalence(fixture_models):
    rng = random.Random(53)
    models = small_models(fixture_models)
    for _ in range(50):
        f = random_mlidis(rng, ("p", "q"), 2)
        assert team_equivalent(f, idis_join(idis_normal_form(f)), models)


@pytest.mark.parametrize(
    "make",
    [
        lambda a, b, c: (And(a, IDis(b, c)), IDis(And(a, b), And(a, c))),
        lambda a, b, c: (Or(a, IDis(b, c)), IDis(Or(a, b), Or(a, c))),
        lambda a, b, c: (Dia(IDis(b, c)), IDis(Dia(b), Dia(c))),
        lambda a, b, c: (Box(IDis(b, c)), IDis(Box(b), Box(c))),
    ],
)
def test_idis_distribution_laws(fixture_models, make):
    rng = random.Random(54)
    models = small_models(fixture_models)
    for _ in range(25):
        a, b, c = (random_ml(rng, ("p", "q"), 1) for _ in range(3))
        lhs, rhs = make(a, b, c)
        assert team_equivalent(lhs, rhs, models)


# --- dependence-atom expansion ----------------------------------------------

def test_expand_constancy_atom():
    assert to_mlidis(parse("dep(; q)")) == IDis(Q, NegProp("q"))


def test_expand_unary_atom():
    out = to_mlidis(parse("dep(p; q)"))
    disjuncts = []
    g = out
    while isinstance(g, IDis):
        disjuncts.append(g.left)
        g = g.right
    disjuncts.append(g)
    assert len(disjuncts) == 4
    assert Or(And(P, Q), And(NegProp("p"), Q)) in disjuncts
    assert Or(And(P, Q), And(NegProp("p"), NegProp("q"))) in disjuncts
    assert idis_count(out) == 3


def test_expand_equivalence_on_full2(full2):
    atom = parse("dep(p; q)")
    assert team_equivalent(atom, to_mlidis(atom), [full2])
    assert not evaluate(full2, {"w00", "w01"}, to_mlidis(atom))


def test_expand_matches_atom(m2, fixture_models):
    assert not evaluate(m2, {"a", "b"}, to_mlidis(parse("dep(p; q)")))
    rng = random.Random(55)
    models = small_models(fixture_models)
    for _ in range(25):
        f = random_team_formula(rng, ("p", "q"), 1, plain_deps=False)
        out = to_mlidis(f)
        assert classify(out) in (Fragment.ML, Fragment.MLIDIS)
        assert team_equivalent(f, out, models)


def test_expand_deduplicates_members(fixture_models):
    doubled = Dep((P, P), Q)
    out = to_mlidis(doubled)
    assert idis_count(out) == 3  # one member after deduplication
    assert team_equivalent(doubled, out, small_models(fixture_models))


def test_expand_passes_ml_through():
    f = parse("p & <>q")
    assert to_mlidis(f) == f


def test_expand_guard():
    f = Dep((Prop("a1"), Prop("a2"), Prop("a3"), Prop("a4")), Q)
    with pytest.raises(TranslationSizeError):
        to_mlidis(f)
    # duplicated members do not trip the guard
    to_mlidis(Dep((P, P, Q, NegProp("r")), Q))


def test_expand_rejects_idis():
    with pytest.raises(FragmentError):
        to_mlidis(parse("p \\/ q"))


# --- intuitionistic-disjunction elimination -----------------------------------

def test_eliminate_simple(fixture_models):
    models = small_models(fixture_models)
    for text in ("p", "p \\/ q", "p & <>q", "p \\/ ~p"):
        f = parse(text)
        out = to_emdl(f)
        assert classify(out) in (Fragment.ML, Fragment.MDL, Fragment.EMDL)
        assert team_equivalent(f, out, models)


def test_eliminate_split_valuation(m1):
    f = parse("p \\/ ~p")
    out = to_emdl(f)
    assert not evaluate(m1, {"a", "b"}, f)
    assert not evaluate(m1, {"a", "b"}, out)


def test_eliminate_guard():
    f = idis_join([Prop(n) for n in ("a1", "a2", "a3", "a4", "a5")])
    with pytest.raises(TranslationSizeError):
        to_emdl(f)


def test_round_trip_small(fixture_models):
    models = small_models(fixture_models)
    for text in ("dep(; p)", "dep(; q) & p", "<>dep(; p)"):
        f = parse(text)
        expanded = to_mlidis(f)
        back = to_emdl(expanded)
        assert team_equivalent(f, expanded, models)
        assert team_equivalent(expanded, back, models)


def test_round_trip_unary_atom(m1, m2):
    f = parse("dep(p; q)")
    back = to_emdl(to_mlidis(f))
    for model in (m1, m2):
        assert extension(model, f).satisfying == extension(model, back).satisfying
