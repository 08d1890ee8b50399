"""Trellis representations of stabilizer codes and the algorithms that run on them."""

from .algorithms import (
    DecodeResult,
    MarginalTable,
    NoFinitePath,
    OpCounter,
    WeightEnumerator,
    ZeroMassCoset,
    min_sum,
    sum_product,
    weight_enumerator,
)
from .channel import PauliChannel, depolarizing, edge_weight, likelihood, sample_error
from .convolutional import ConvolutionalSpec, memory, sharp, unroll
from .pauli import (
    AllIdentityGenerator,
    CodeError,
    DependentGenerators,
    NonCommuting,
    Pauli,
    PauliString,
    StabilizerCode,
    coset_representative,
    pauli_add,
    star,
    syndrome,
    validate,
)
from .trellis import (
    Trellis,
    build_wolf_trellis,
    export_dot,
    is_trellis_oriented,
    state_profile,
    trellis_oriented_form,
)

__version__ = "0.1.0"
