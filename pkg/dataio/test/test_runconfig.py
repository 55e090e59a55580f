import argparse
from enforce_typing import enforce_types
import json
import pytest

from core.errors import ParseError, SchemaError
from dataio.runconfig import loadRunConfig, mergeConfig

@enforce_types
def _configFile(tmp_path, obj) -> str:
    path = str(tmp_path / 'run.json')
    with open(path, 'w') as f:
        json.dump(obj, f)
    return path

@enforce_types
def testLoad(tmp_path):
    config = loadRunConfig(_configFile(tmp_path, {'max-iters': 5, 'seed': 3}))
    assert config == {'max_iters': 5, 'seed': 3}

@enforce_types
def testLoadErrors(tmp_path):
    with pytest.raises(SchemaError):
        loadRunConfig(_configFile(tmp_path, [1, 2]))
    path = str(tmp_path / 'broken.json')
    with open(path, 'w') as f:
        f.write('{"seed": 3,\n "b": }')
    with pytest.raises(ParseError) as e:
        loadRunConfig(path)
    assert e.value.line == 2

@enforce_types
def testPrecedence():
    args = argparse.Namespace(seed=7, b=None, w=None, epsilon=None)
    merged = mergeConfig(args, {'seed': 1, 'b': 400},
                         {'b': 100, 'w': 100, 'epsilon': 0.01})
    assert merged.seed == 7 #flag beats config
    assert merged.b == 400 #config beats default
    assert (merged.w, merged.epsilon) == (100, 0.01)
    assert args.b is None #input untouched

@enforce_types
def testUnknownKey():
    args = argparse.Namespace(seed=None)
    with pytest.raises(SchemaError):
        mergeConfig(args, {'sede': 1}, {})
