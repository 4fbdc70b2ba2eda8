from .dsl import ModExpr, ModuleDecl, ScenarioError, ScenarioSpec, parse_scenario
from .runner import (
    BUILTINS,
    InfiniteLengthError,
    RunReport,
    build,
    load_scenario,
    run_builtin,
    run_oracle_veronese,
    run_scenario,
    veronese_oracle_count,
)
