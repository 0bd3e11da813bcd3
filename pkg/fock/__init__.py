from .coefficients import bs_coeff, log_binomial, schmidt_coeff  # noqa: F401
from .params import DensityElementKey, DomainError, ModelError, ModelParams, SchmidtState, ZeroDetectionProbability  # noqa: F401
from .states import (  # noqa: F401
    mean_photon_mixed,
    mean_photon_pure,
    mean_photon_sq,
    mixed_density_element,
    mixed_density_elements,
    pdet_mixed,
    pdet_pure,
    pure_subtracted_state,
    sv_state,
)
