"""Circuit synthesis for binary-field arithmetic in redundant and normal bases.

The package lowers F_{2^m} addition, multiplication, squaring and inversion
into scheduled CNOT/Toffoli netlists for two representations with free
squaring: the redundant ghost-bit layout (available when m+1 is prime with 2
primitive) and Gaussian normal bases of type t. Classical reference
arithmetic lives in ``fields``; ``circuits`` holds the netlist IR with greedy
layering, simulation and the text format; ``multipliers`` and ``inverters``
do the synthesis; ``cli`` wires it into a command-line tool.
"""

from .circuits import (
    Circuit,
    Cnot,
    Gate,
    ResourceEstimate,
    Toffoli,
    cnot,
    concat,
    depth,
    emit,
    emit_lines,
    measure_stream,
    parse,
    resources,
    reverse,
    schedule,
    simulate,
    simulate_batch,
    toffoli,
)
from .errors import (
    ConstructionFailed,
    DegreeMismatch,
    DegreeTooSmall,
    ExponentOutOfRange,
    InvalidParams,
    NoGnbFound,
    ParseError,
    UnsupportedDegree,
    WidthMismatch,
)
from .fields import (
    FieldSpec,
    GhostBitElement,
    GnbElement,
    GnbParams,
    InverterPlan,
    PolyElement,
    Representation,
    addition_chain,
    check_ghost_bit_support,
    find_gnb_type,
    gbb_frobenius,
    gbb_identity,
    gbb_mult,
    gbb_square,
    ghost_square_perm,
    gnb_frobenius,
    gnb_identity,
    gnb_mult,
    gnb_square,
    gnb_verify_isomorphism,
    itoh_tsujii_inverse,
    make_gnb_params,
    phi_embed,
    phi_retract,
    validate_gnb_params,
)
from .inverters import (
    BoundsReport,
    InverterStructure,
    MultiplierBlock,
    ResourceBound,
    bounds_ghost,
    bounds_gnb,
    bounds_t,
    check_bounds,
    inverter_gates,
    inverter_structure,
    synth_inverter,
)
from .multipliers import (
    ColoringSchedule,
    StageSchedule,
    WirePermutation,
    cancel_pairs,
    gbb_self_mult_schedule,
    ghost_read_permutation,
    ghost_write_permutation,
    gnb_read_permutation,
    gnb_self_mult_deltas,
    gnb_self_mult_schedule,
    gnb_write_permutation,
    synth_add,
    synth_gbb_mult,
    synth_gbb_self_mult,
    synth_gnb_mult,
    synth_gnb_self_mult,
)

__version__ = "0.1.0"
