"""Quantum Galton board circuits.

Builders for unbiased, uniformly biased and per-peg biased boards, a dense
statevector simulator with mid-circuit measurement and reset, an OpenQASM
2.0 subset emitter/parser, and the one-hot decode / block-rescale /
comparison statistics used to validate board output.
"""

from qgb._core import (
    BranchBudgetError,
    Circuit,
    CircuitValidationError,
    DecodeError,
    QasmParseError,
    binomial_pmf,
    build_biased_peg,
    build_biased_qgb,
    build_fine_grained_qgb,
    build_peg,
    build_qgb,
    decode_one_hot,
    decompose_cswap,
    emit_qasm,
    exact_distribution,
    gate_bound,
    parse_qasm,
    prefix_state,
    qasm_token_equal,
    rescale_blocks,
    run_shot,
    run_shots,
    summary_stats,
    total_variation,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "BranchBudgetError",
    "Circuit",
    "CircuitValidationError",
    "DecodeError",
    "QasmParseError",
    "binomial_pmf",
    "build_biased_peg",
    "build_biased_qgb",
    "build_fine_grained_qgb",
    "build_peg",
    "build_qgb",
    "decode_one_hot",
    "decompose_cswap",
    "emit_qasm",
    "exact_distribution",
    "gate_bound",
    "parse_qasm",
    "prefix_state",
    "qasm_token_equal",
    "rescale_blocks",
    "run_shot",
    "run_shots",
    "summary_stats",
    "total_variation",
    "validate",
]
