"""Entanglement-assisted quantum classifier bindings."""

from ._eaqc import (  # noqa: F401
    Label,
    ModelParams,
    RunRecord,
    Sample,
    Dataset,
    State1Q,
    State2Q,
    TrainConfig,
    TrainMode,
    TrainPair,
    baseline_cost,
    bell_expectation,
    bell_operator,
    closed_form_bell,
    embed,
    forward,
    load_csv,
    make_pairs,
    pair_cost,
    predict,
    prepare_encoded_state,
    prob_minus,
    select_binary,
    split,
    su2_rotate,
    total_cost,
    train,
    training_state,
)
