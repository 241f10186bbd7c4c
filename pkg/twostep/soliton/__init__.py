from twostep.soliton.config import FlowConfig, load_flow_config
from twostep.soliton.residual import FloatAlgebra, soliton_residual
from twostep.soliton.search import (
    CERTIFICATE_FOUND,
    CERTIFICATE_HEURISTIC,
    NO_CERTIFICATE,
    FlowTrace,
    rationalize,
    search,
)
