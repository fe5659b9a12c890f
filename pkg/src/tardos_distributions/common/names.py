# DOC: names and constants shared by the whole package

# REGION: [Package]

PACKAGE = "tardos-distributions"

LOG_LEVEL_ENV = "TARDOS_LOG_LEVEL"
DEFAULT_LOG_LEVEL = "WARNING"

DEFAULT_SEED = 0x7A2D05

# ENDREGION: [Package]


# REGION: [Distribution families]

GAUSS_LEGENDRE = "gauss_legendre"
DISCRETE_ARCSINE = "discrete_arcsine"
CHEBYSHEV_GAUSS = "chebyshev_gauss"
ARCSINE = "arcsine"

DISCRETE_FAMILIES = (GAUSS_LEGENDRE, DISCRETE_ARCSINE, CHEBYSHEV_GAUSS)
FAMILIES = DISCRETE_FAMILIES + (ARCSINE,)

FAMILY_ALIASES = {
    "gl": GAUSS_LEGENDRE,
    "gauss-legendre": GAUSS_LEGENDRE,
    GAUSS_LEGENDRE: GAUSS_LEGENDRE,
    "darcsine": DISCRETE_ARCSINE,
    "discrete-arcsine": DISCRETE_ARCSINE,
    DISCRETE_ARCSINE: DISCRETE_ARCSINE,
    "cheb": CHEBYSHEV_GAUSS,
    "chebyshev-gauss": CHEBYSHEV_GAUSS,
    CHEBYSHEV_GAUSS: CHEBYSHEV_GAUSS,
    "arcsine": ARCSINE,
}

REFERENCE = "reference"

# ENDREGION: [Distribution families]


# REGION: [Cutoff schedules]

SCHEDULE_NONE = "none"
SCHEDULE_POWER43 = "power43"
SCHEDULE_CONSTANT = "constant"

DEFAULT_SCHEDULE = SCHEDULE_POWER43

# ENDREGION: [Cutoff schedules]


# REGION: [Strategies]

INTERLEAVING = "interleaving"
MAJORITY = "majority"
MINORITY = "minority"
COIN_FLIP = "coin_flip"

MINIMIZING = "minimizing"
CUSTOM_PROFILE = "custom_profile"

STRATEGIES = (INTERLEAVING, MAJORITY, MINORITY, COIN_FLIP)

STRATEGY_ALIASES = {
    INTERLEAVING: INTERLEAVING,
    MAJORITY: MAJORITY,
    MINORITY: MINORITY,
    COIN_FLIP: COIN_FLIP,
    "coin-flip": COIN_FLIP,
    "coinflip": COIN_FLIP,
    MINIMIZING: MINIMIZING,
}

# ENDREGION: [Strategies]


# REGION: [Commands]

DIST_COMMAND = "dist"
CDF_COMMAND = "cdf"
MU_COMMAND = "mu"
SWEEP_COMMAND = "sweep"
CONVERGE_COMMAND = "converge"
PARAMS_COMMAND = "params"
SIMULATE_COMMAND = "simulate"
NOTEBOOK_COMMAND = "notebook"

FORMAT_CSV = "csv"
FORMAT_JSON = "json"
FORMAT_IPYNB = "ipynb"

# ENDREGION: [Commands]


# REGION: [Output columns]

DIST_COLUMNS = ["family", "c", "k", "point", "probability"]
CDF_COLUMNS = ["family", "points", "cutoff", "p", "cdf"]
MU_COLUMNS = ["distribution", "c_tilde", "strategy", "mu", "dl", "second_moment", "variance"]
SWEEP_COLUMNS = ["family", "c_tilde", "points", "strategy", "mu", "dl"]
CONVERGE_COLUMNS = ["c", "alpha", "max_point_err", "max_weight_err_scaled", "normalizer_gap", "cdf_sup_err"]
PARAMS_COLUMNS = ["colluders", "users", "epsilon1", "code_length", "threshold", "dl_constant", "mu"]
ACCUSATION_COLUMNS = ["user", "score", "accused"]
PROFILE_COLUMNS = ["sigma", "theta"]

FLOAT_FORMAT = "%.17g"

# ENDREGION: [Output columns]
