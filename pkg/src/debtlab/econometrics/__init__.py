"""Small-sample estimators: OLS with robust errors, VAR, unit roots, ARDL, LP, LSTAR."""

from .ardl import BoundsResult, ardl_bounds
from .lstar import LstarResult, lstar_fit
from .placebo import PlaceboResult, placebo_interacted
from .projections import ProjectionTable, local_projections
from .regression import (
    ChowResult,
    RankDeficientError,
    RegressionResult,
    WelchResult,
    chow_test,
    hac_cov,
    hac_se,
    hc3_cov,
    ols,
    stars,
    wald_test,
    welch_ttest,
)
from .unitroot import AdfResult, adf_test, mackinnon_pvalue
from .var import ImpulseResponse, VarFit, var1_fit, var_irf_fevd

__all__ = [
    "BoundsResult",
    "ardl_bounds",
    "LstarResult",
    "lstar_fit",
    "PlaceboResult",
    "placebo_interacted",
    "ProjectionTable",
    "local_projections",
    "ChowResult",
    "RankDeficientError",
    "RegressionResult",
    "WelchResult",
    "chow_test",
    "hac_cov",
    "hac_se",
    "hc3_cov",
    "ols",
    "stars",
    "wald_test",
    "welch_ttest",
    "AdfResult",
    "adf_test",
    "mackinnon_pvalue",
    "ImpulseResponse",
    "VarFit",
    "var1_fit",
    "var_irf_fevd",
]
