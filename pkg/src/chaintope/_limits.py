import os

from .errors import TooLarge

ENV_VAR = "CHAINTOPE_MAX_M"

# default caps on the vector size m
GENERICITY_MAX_M = 24
FACE_MAX_M = 14
PANINA_MAX_M = 9


def max_m(default):
    value = os.environ.get(ENV_VAR)
    if value:
        return int(value)
    return default


def check_size(m, default, what, exc=TooLarge):
    limit = max_m(default)
    if m > limit:
        raise exc(f"{what}: m={m} exceeds the cap {limit} (set {ENV_VAR} to raise it)")
