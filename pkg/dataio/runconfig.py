"""Per-run JSON configs. Keys mirror the long cli flags, with dashes
turned into underscores. Precedence: cli flag > config > default."""
import logging
log = logging.getLogger('runconfig')

import argparse
from enforce_typing import enforce_types
import json

from core.errors import ParseError, SchemaError

@enforce_types
def loadRunConfig(path: str) -> dict:
    with open(path, 'r', encoding='utf-8') as f:
        try:
            config = json.load(f)
        except json.JSONDecodeError as e:
            raise ParseError(e.lineno, "%s: %s" % (path, e.msg))
    if not isinstance(config, dict):
        raise SchemaError("%s: top level must be an object" % path)
    config = {key.replace('-', '_'): value for key, value in config.items()}
    log.debug("Loaded config %s: %s", path, sorted(config))
    return config

@enforce_types
def mergeConfig(args: argparse.Namespace, config: dict,
                defaults: dict) -> argparse.Namespace:
    """
    @description
      Fill in the flags left unset (None) on `args`, first from `config`,
      then from `defaults`.

    @exceptions
      SchemaError -- config has a key that is not a flag of this command
    """
    merged = argparse.Namespace(**vars(args))
    unknown = sorted(set(config) - set(vars(args)))
    if unknown:
        raise SchemaError("unknown config keys: %s" % ', '.join(unknown))
    for source in (config, defaults):
        for key, value in source.items():
            if getattr(merged, key, None) is None:
                setattr(merged, key, value)
    return merged
