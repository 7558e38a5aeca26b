import os


def _int_env(key, default=None):
    value = os.environ.get(key)
    if value is None or value.strip() == '':
        return default
    return int(value)


class Config:
    """Base Config class"""

    # Enumeration bounds; RT_MAX_N overrides both when set
    RT_MAX_N = _int_env('RT_MAX_N')
    SYT_MAX_SIZE = RT_MAX_N if RT_MAX_N is not None else 12
    CELLS_MAX_SIZE = RT_MAX_N if RT_MAX_N is not None else 7
    # refine only sums closed-form counts, so it gets its own bound
    REFINE_MAX_SIZE = _int_env('RT_REFINE_MAX_N', 30)

    # selftest settings
    SELFTEST_MAX_N = _int_env('RT_SELFTEST_MAX_N', 8)
    SELFTEST_WORKERS = _int_env('RT_SELFTEST_WORKERS', 1)
    SELFTEST_BRUHAT_EXHAUSTIVE_N = 5
    # the closure oracle keeps a bitset per permutation, so it stops at S_7
    SELFTEST_CLOSURE_MAX_N = 7
    SELFTEST_RANDOM_PAIRS = _int_env('RT_SELFTEST_RANDOM_PAIRS', 10_000)
    SELFTEST_SHAPES_MAX_N = 10
    SELFTEST_REFINE_MAX_N = 14

    LOG_LEVEL = os.environ.get('RT_LOG_LEVEL', 'WARNING').upper()

    # output settings
    JSON_SCHEMA_VERSION = '1'


def get_limit(name):
    """Read a bound from the active app config, falling back to Config"""
    from flask import current_app, has_app_context

    if has_app_context():
        return current_app.config.get(name, getattr(Config, name))
    return getattr(Config, name)
