from .channel import ChannelMatrix4, SignalParams, channel_matrix, channel_quadrature, homodyne_density, mutual_information, pure_generators  # noqa: F401
from .erf import erf  # noqa: F401
from .information import i_mixed, i_pure, i_sq  # noqa: F401
