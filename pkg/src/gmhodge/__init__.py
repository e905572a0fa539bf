"""Exact Brieskorn-module reductions, Gauss-Manin connections, mixed Hodge
bases and Picard-Fuchs equations for tame polynomials over Q."""

from .brieskorn import (
    ModuleClass,
    NotTame,
    ReductionResult,
    TameContext,
    make_context,
    n0_reduce_prime,
    n0_reduce_second,
    reduce_n,
    reduce_n_homog,
    reduce_top,
    reduce_top_homog,
)
from .forms import FormN, FormNm1, FormTop, dform, dform_n, wedge_df
from .gaussmanin import (
    ConnectionMatrix,
    GMData,
    ValidationFailed,
    char_S,
    eta_f_cofactors,
    make_gm,
    squarefree_S,
)
from .groebner import (
    GroebnerBasis,
    MonomialOrder,
    QuotientBasis,
    QuotientInfinite,
    groebner,
    is_tame,
    mult_matrix,
    normal_form,
    okbase,
)
from .mhs import (
    DBetaResult,
    HodgeIndexSets,
    MHSBasis,
    X0Matrix,
    changebase,
    dbeta,
    ge_step,
    imk,
    muldF,
)
from .parser import ParseError, parse_poly, parse_tpoly
from .picardfuchs import PFEquation, lin_dep_over_Qt, pfeq
from .poly import BadWeights, MultiPoly, WeightedVars, homogenize, lasthomo, wdeg
from .tpoly import TFrac, TPoly

__version__ = "0.1.0"
