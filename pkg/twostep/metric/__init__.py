from twostep.metric.connection import Connection, levi_civita
from twostep.metric.gray import CurvatureTensor, curvature, gray_check
from twostep.metric.hermitian import (
    HermitianReport,
    chern_flat_check,
    hermitian_report,
    quasi_kahler_check,
    skt_check,
)
from twostep.metric.inner_product import InnerProduct
from twostep.metric.ricci import (
    einstein_check,
    ricci,
    ricci_one_one,
    ricci_orthonormal,
    scalar_curvature,
)
from twostep.metric.solitons import SolitonCertificate, minimal_check, nilsoliton_check
