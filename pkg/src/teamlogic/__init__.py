"""Modal logics with team semantics: ML, ML(\\/), MDL and EMDL.

Model checking over finite Kripke models, k-bisimulation and team
bisimulation, Hintikka formulas, translations between the logics, and
dimension analysis of formulas.
"""

from .bisim import BisimClasses, bisim_classes, defining_formula, hintikka, team_bisimilar
from .dimension import (
    DimensionReport,
    dimension_report,
    is_coherent,
    maximal_teams,
    minimal_falsifying_teams,
    upper_dimension_estimate,
)
from .kripke import (
    EnumerationLimitError,
    KripkeModel,
    ModelFormatError,
    Team,
    all_teams,
    choice_successor_teams,
    full_valuation_model,
    image,
    is_successor_team,
    load_model,
    load_model_file,
    preimage,
)
from .semantics import Evaluator, Extension, evaluate, evaluate_point, extension
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
    ParseError,
    Prop,
    Top,
    classify,
    idis_count,
    modal_depth,
    negate,
    parse,
    render,
    symbol_size,
)
from .translate import (
    TranslationSizeError,
    TypeContext,
    at_most_k_types,
    idis_normal_form,
    non_subset_formula,
    team_types,
    to_emdl,
    to_mlidis,
    type_formula,
    world_type,
)

__all__ = [name for name in dir() if not name.startswith("_")]
