from decouple import config


# Precisão (bits) usada pelo contexto mpmath.iv do módulo bounds.
BOUNDS_PRECISION = config("LIPATHS_PRECISION", default=256, cast=int)
BOUNDS_MAX_PRECISION = config("LIPATHS_MAX_PRECISION", default=4096, cast=int)
PARAM_CHECK_T_MAX = config("LIPATHS_PARAM_T_MAX", default=100, cast=int)

LOWERBOUND_MAX_ELL = config("LIPATHS_MAX_ELL", default=3, cast=int)
ORACLE_DEFAULT_CAP = config("LIPATHS_ORACLE_CAP", default=200, cast=int)
DEFAULT_SEED = config("LIPATHS_SEED", default=0, cast=int)

LOG_LEVEL = str(config("LIPATHS_LOG_LEVEL", default="WARNING")).strip().upper()
LOG_FORMAT = "%(levelname)-5.5s [%(name)s] %(message)s"
