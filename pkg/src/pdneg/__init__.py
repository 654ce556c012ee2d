"""Negations of finite probability distributions via negator functions."""

from .analysis import (
    CheckReport,
    IterationTrace,
    LinearityVerdict,
    Violation,
    boundary_range_check,
    check_negation_pair,
    contexts_containing,
    distance_to_uniform,
    entropy_delta,
    fixed_point_check,
    functional_equation_check,
    functional_equation_residual,
    independence_probe,
    iterate_negation,
    linearity_test,
    sample_distributions,
)
from .core import (
    Distribution,
    EntropyReport,
    entropy,
    point_distribution,
    uniform_distribution,
    validate_distribution,
)
from .errors import (
    ArgumentError,
    ComponentIndexError,
    ContextMismatch,
    ContextRequired,
    DescriptorError,
    EmptyMixture,
    GeneratorError,
    IndependenceRequired,
    InternalConsistencyError,
    LengthError,
    LengthMismatch,
    NegationError,
    NegatorRequired,
    RangeError,
    SumError,
    WeightError,
)
from .negators import (
    BUILTINS,
    IDENTITY,
    ROOT_SUM,
    UNIFORM,
    YAGER,
    Generator,
    Identity,
    Linear,
    Mixture,
    NegatorDescriptor,
    RootSum,
    Tsallis,
    Uniform,
    Yager,
    apply_transformation,
    evaluate,
    from_generator,
    linear_from_alpha,
    linear_from_boundary,
    mixture,
    parse_descriptor,
)

__version__ = "0.1.0"

__all__ = [
    "ArgumentError",
    "BUILTINS",
    "CheckReport",
    "ComponentIndexError",
    "ContextMismatch",
    "ContextRequired",
    "DescriptorError",
    "Distribution",
    "EmptyMixture",
    "EntropyReport",
    "Generator",
    "GeneratorError",
    "IDENTITY",
    "Identity",
    "IndependenceRequired",
    "InternalConsistencyError",
    "IterationTrace",
    "LengthError",
    "LengthMismatch",
    "Linear",
    "LinearityVerdict",
    "Mixture",
    "NegationError",
    "NegatorDescriptor",
    "NegatorRequired",
    "ROOT_SUM",
    "RangeError",
    "RootSum",
    "SumError",
    "Tsallis",
    "UNIFORM",
    "Uniform",
    "Violation",
    "WeightError",
    "YAGER",
    "Yager",
    "apply_transformation",
    "boundary_range_check",
    "check_negation_pair",
    "contexts_containing",
    "distance_to_uniform",
    "entropy",
    "entropy_delta",
    "evaluate",
    "fixed_point_check",
    "from_generator",
    "functional_equation_check",
    "functional_equation_residual",
    "independence_probe",
    "iterate_negation",
    "linear_from_alpha",
    "linear_from_boundary",
    "linearity_test",
    "mixture",
    "parse_descriptor",
    "point_distribution",
    "sample_distributions",
    "uniform_distribution",
    "validate_distribution",
]
