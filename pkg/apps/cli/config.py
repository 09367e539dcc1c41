"""
Run configuration: a key=value file merged with command-line flags.

The file is read through a throwaway ``environ.Env`` subclass with its own
ENVIRON mapping, so reading it never touches ``os.environ``.
"""

import logging
from pathlib import Path

import environ

from apps.core.exceptions import ConfigurationError

logger = logging.getLogger(__name__)

CONFIG_KEYS = ('shape', 'series', 'rank', 'n', 'weights', 'suite', 'q', 'tol', 'exact', 'format', 'output')


def read_config_file(path):
    """key=value pairs of a config file, with ``q`` as a list and ``exact`` as a bool."""
    path = Path(path)
    if not path.is_file():
        raise ConfigurationError(f"Config file {path} not found.")
    env_class = type('RunConfigEnv', (environ.Env,), {'ENVIRON': {}})
    env_class.read_env(str(path))
    env = env_class()
    config = {}
    for key in env_class.ENVIRON:
        name = key.lower()
        if name not in CONFIG_KEYS:
            raise ConfigurationError(f"{path}: unknown key {key!r}.")
        if name == 'q':
            config[name] = env.list(key)
        elif name == 'exact':
            config[name] = env.bool(key)
        else:
            config[name] = env.str(key)
    logger.debug("Read %d keys from %s", len(config), path)
    return config


def merge_options(command, options):
    """Config-file keys overridden by every flag that was given."""
    config = read_config_file(options['config']) if options.get('config') else {}
    for name in CONFIG_KEYS:
        value = options.get(name)
        if value is None or value is False or value == []:
            continue
        config[name] = value
    config['command'] = command
    return config
