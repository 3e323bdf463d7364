"""Exact domination invariants of lexicographic products."""

import json

from ._core import (
    ConstructionError,
    Graph,
    InfeasibleError,
    PremiseError,
    bounds,
    check_ids,
    classify_small_value,
    count_minimum,
    formula,
    hk_witness,
    hunt,
    invariant,
    kinds,
    lex_product,
    min_witness,
    path_scheme_gamma2,
    path_scheme_row,
    path_scheme_size,
    small_value_witness,
    two_universal_witness,
    universal_lift_witness,
    validate,
    verify_json,
)


def verify(checks=None, config=None, corpus="", cap=0, workers=0):
    """Run checks and return the parsed report.

    config is either key=value text or a dict of the same keys.
    """
    if isinstance(config, dict):
        config = "\n".join(f"{k}={v}" for k, v in config.items())
    return json.loads(verify_json(list(checks or []), config or "", corpus, cap, workers))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
