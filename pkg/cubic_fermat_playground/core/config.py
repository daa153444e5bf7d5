import functools
import logging
import pathlib

import appdirs

from cubic_fermat_playground.core.search import SearchBounds


try:
    import tomllib
except ModuleNotFoundError:
    import tomli as tomllib


logger = logging.getLogger(__name__)

APP_NAME = "cubic-fermat-playground"

DEFAULT_CONFIG = {
    "search": {"max_denominator": 12, "max_height": 10_000, "workers": 1},
    "reference": {
        "online": False,
        "url": "https://www.lmfdb.org/api/ec_curvedata/",
        "timeout": 10,
        "cache_dir": None,
    },
}


@functools.cache
def get_config() -> dict:
    config_path = pathlib.Path("config.toml")
    config = {section: dict(values) for section, values in DEFAULT_CONFIG.items()}
    if not config_path.exists():
        logger.warning("Missing a config, using built-in defaults.")
        return config
    with open(config_path, "rb") as f:
        loaded = tomllib.load(f)
    for section, values in loaded.items():
        if section not in config:
            logger.warning(f"Ignoring unknown config section [{section}].")
            continue
        config[section].update(values)
    return config


def get_search_bounds() -> SearchBounds:
    search = get_config()["search"]
    return SearchBounds(search["max_denominator"], search["max_height"])


def get_workers() -> int:
    return get_config()["search"]["workers"]


def get_cache_dir() -> pathlib.Path:
    configured = get_config()["reference"]["cache_dir"]
    if configured:
        return pathlib.Path(configured)
    return pathlib.Path(appdirs.user_cache_dir(APP_NAME))
