import json
import os
import tempfile

import numpy as np
import pytest

from mumsep import enableDebugLog
from mumsep import codec, states
from mumsep.criteria import theorem2
from mumsep.errors import ConfigurationError, InvalidStateError, ShapeError
from mumsep.mum import buildMums, transposeMums

enableDebugLog()


def test_format_float():
    assert(codec.formatFloat(0.1) == '0.10000000000000001')
    assert(codec.formatFloat(-0.0) == '0')
    assert(codec.formatFloat(0.5, 12) == '0.5')
    with pytest.raises(ValueError):
        codec.formatFloat(float('nan'))


def test_dumps():
    text = codec.dumps({'a': 0.5, 'b': [1, 2.5], 'c': True, 'd': None, 'e': 'x'})
    assert(text == '{"a": 0.5,"b": [1, 2.5],"c": true,"d": null,"e": "x"}')
    assert(json.loads(codec.dumps({'k': [[1.0, 0.0]]}, indent=2)) == {'k': [[1.0, 0.0]]})
    with pytest.raises(TypeError):
        codec.dumps(object())


def test_matrix_json():
    m = np.array([[1, 2j], [-2j, 3]])
    assert(np.array_equal(codec.matrixFromJson(codec.matrixToJson(m)), m))
    with pytest.raises(ShapeError):
        codec.matrixFromJson([[1.0, 0.0], [0.0, 0.0], [1.0, 0.0]])


def test_save_load():
    s = buildMums(3)
    rho = states.randomSeparable([3, 3], 3, 2)
    with tempfile.TemporaryDirectory() as tmp:
        mums_path = os.path.join(tmp, 'mums.json')
        rho_path = os.path.join(tmp, 'rho.json')
        codec.saveMums(s, mums_path)
        codec.saveDensity(rho, rho_path)
        assert(codec.loadMums(mums_path) == s)
        assert(codec.loadDensity(rho_path) == rho)

        report_path = os.path.join(tmp, 'report.json')
        codec.saveReport(theorem2(s, transposeMums(s), rho), report_path)
        with open(report_path) as f:
            obj = json.load(f)
        assert(obj['theorem'] == 'T2')
        assert(obj['verdict'] == 'not-detected')


def test_load_errors():
    with tempfile.TemporaryDirectory() as tmp:
        with pytest.raises(ConfigurationError):
            codec.loadDensity(os.path.join(tmp, 'missing.json'))

        bad = os.path.join(tmp, 'bad.json')
        with open(bad, 'w') as f:
            f.write('{"dims": [2], ')
        with pytest.raises(ConfigurationError):
            codec.loadDensity(bad)

        twice = os.path.join(tmp, 'twice.json')
        with open(twice, 'w') as f:
            json.dump({'dims': [2], 'matrix': [[1, 0], [0, 0], [0, 0], [1, 0]]}, f)
        with pytest.raises(InvalidStateError):
            codec.loadDensity(twice)


def test_write_csv():
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, 'scan.csv')
        codec.writeCsv(path, ['p', 'J', 'detected'], [[0.5, 1.0 / 3, True], [1.0, 2.0, False]])
        with open(path) as f:
            lines = f.read().splitlines()
    assert(lines == ['p,J,detected', '0.5,0.333333333333,true', '1,2,false'])


if __name__ == '__main__':
    test_format_float()
    test_dumps()
    test_matrix_json()
    test_save_load()
    test_load_errors()
    test_write_csv()
