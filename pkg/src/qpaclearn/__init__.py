"""Statevector simulation plus an amplitude-amplification tuning loop for
multi-controlled-X network circuits, with a parity-concept learning harness.
"""
from .amplify import (
    SCALE_ANGLE,
    amplified_probability,
    build_diffusion,
    build_preparation,
    flag_probability,
    max_rounds,
    threshold_angle,
    threshold_implication,
)
from .boolfunc import (
    Anf,
    anf_evaluate,
    anf_to_truth_table,
    bits_from_mask,
    mask_from_bits,
    parity_anf,
    truth_table_to_anf,
)
from .kernels import backend_name
from .learner import (
    LearnParams,
    LearnRecord,
    SampleBatch,
    Schedule,
    group_by_weight,
    learn,
    parity_update,
    sample_size,
    sampling_phase,
    schedule_values,
    stop_confidence,
)
from .oracle import Oracle, ProductDistribution, build_oracle, exact_error
from .statevector import (
    Circuit,
    Cz,
    McX,
    ReflectZero,
    Ry,
    StateVector,
    apply_circuit,
    apply_gate,
    apply_inverse,
    masked_probability,
    probability,
    sample,
)
from .tnn import TnnState

__version__ = "0.1.0"
