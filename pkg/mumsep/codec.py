"""JSON and CSV encodings of MUM sets, density matrices and criterion reports.

Complex matrices are row-major arrays of `[re, im]` pairs. Floats are written
with 17 significant digits in JSON (exact round trip) and 12 in CSV.
"""
import csv
import json
import logging
import math
import os

import numpy as np

from mumsep.common import CSV_DIGITS, JSON_DIGITS
from mumsep.errors import ConfigurationError, InvalidStateError, ShapeError
from mumsep.mum import MumSet
from mumsep.states import DensityMatrix

logger = logging.getLogger('mumsep')


def formatFloat(x, digits=JSON_DIGITS):
    x = float(x)
    if not math.isfinite(x):
        raise ValueError("Cannot encode non-finite number %r" % x)
    text = '%.*g' % (digits, x)
    if text == '-0':
        text = '0'
    return text


def _isNumber(v):
    return (isinstance(v, (int, float, np.integer, np.floating)) and
            not isinstance(v, (bool, np.bool_)))


def _dumpScalar(obj, digits):
    if isinstance(obj, (bool, np.bool_)) or obj is None:
        return json.dumps(bool(obj) if obj is not None else None)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return formatFloat(obj, digits)
    if isinstance(obj, str):
        return json.dumps(obj)
    raise TypeError("Cannot encode %r" % type(obj))


def dumps(obj, indent=None, digits=JSON_DIGITS, _level=0):
    """`json.dumps` with floats at a fixed number of significant digits.

    Output only depends on the value, so identical inputs give byte-identical
    text.
    """
    pad = '' if indent is None else '\n' + ' ' * (indent * (_level + 1))
    end = '' if indent is None else '\n' + ' ' * (indent * _level)
    if isinstance(obj, dict):
        if not obj:
            return '{}'
        items = [pad + json.dumps(str(k)) + ': ' + dumps(v, indent, digits, _level + 1)
                 for k, v in obj.items()]
        return '{' + ','.join(items) + end + '}'
    if isinstance(obj, (list, tuple, np.ndarray)):
        if len(obj) == 0:
            return '[]'
        # leaf rows of numbers stay on one line
        if all(_isNumber(v) for v in obj):
            return '[' + ', '.join(dumps(v, None, digits) for v in obj) + ']'
        items = [pad + dumps(v, indent, digits, _level + 1) for v in obj]
        return '[' + ','.join(items) + end + ']'
    return _dumpScalar(obj, digits)


def matrixToJson(m):
    m = np.asarray(m, dtype=np.complex128)
    return [[float(z.real), float(z.imag)] for z in m.reshape(-1)]


def matrixFromJson(entries, dim=None):
    try:
        arr = np.asarray(entries, dtype=np.float64)
    except (TypeError, ValueError):
        raise ShapeError("Matrix entries must be [re, im] pairs")
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ShapeError("Matrix entries must be [re, im] pairs, got shape %s" % (arr.shape,))
    n = arr.shape[0]
    side = int(round(math.sqrt(n))) if dim is None else dim
    if side * side != n:
        raise ShapeError("%d entries do not form a square matrix of side %d" % (n, side))
    return (arr[:, 0] + 1j * arr[:, 1]).reshape(side, side)


def mumsToDict(s: MumSet):
    return {
        'd': s.d,
        'M': s.M,
        't': s.t,
        'kappa': s.kappa,
        'operators': [[matrixToJson(p) for p in s.measurement(b)] for b in range(s.M)],
    }


def mumsFromDict(obj):
    try:
        d = int(obj['d'])
        M = int(obj['M'])
        kappa = float(obj['kappa'])
        t = None if obj.get('t') is None else float(obj['t'])
        rows = obj['operators']
    except (KeyError, TypeError, ValueError) as e:
        raise ConfigurationError("Malformed MUM set: %s" % e)
    if d < 1 or M < 1:
        raise ShapeError("MUM set needs d >= 1 and M >= 1, got d=%d M=%d" % (d, M))
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ShapeError("MUM set operators must be a list of measurements")
    if len(rows) != M or any(len(r) != d for r in rows):
        raise ShapeError("MUM set must hold %d measurements of %d operators" % (M, d))
    ops = np.array([[matrixFromJson(p, d) for p in r] for r in rows])
    return MumSet(d, t, kappa, ops)


def densityToDict(rho: DensityMatrix):
    return {
        'dims': list(rho.dims),
        'matrix': matrixToJson(rho.matrix),
    }


def densityFromDict(obj):
    try:
        dims = [int(x) for x in obj['dims']]
        entries = obj['matrix']
    except (KeyError, TypeError, ValueError) as e:
        raise ConfigurationError("Malformed density matrix: %s" % e)
    D = int(np.prod(dims))
    rho = DensityMatrix(matrixFromJson(entries, D), dims, check=False)
    failures = rho.validate()
    if failures:
        raise InvalidStateError("Loaded density matrix is invalid: %s" % '; '.join(failures))
    return rho


def _writeText(path, text):
    if os.path.exists(path):
        logger.warning("Output path (%s) existed, overwriting!", path)
    with open(path, 'w', newline='\n') as f:
        f.write(text)
        f.write('\n')
    logger.info("Written: %s", path)


def _readJson(path):
    if not os.path.exists(path):
        raise ConfigurationError("Invalid input path (%s)!" % path)
    with open(path, 'r') as f:
        try:
            return json.load(f)
        except json.JSONDecodeError as e:
            raise ConfigurationError("Malformed JSON in %s: %s" % (path, e))


def saveMums(s: MumSet, path):
    _writeText(path, dumps(mumsToDict(s)))


def loadMums(path):
    return mumsFromDict(_readJson(path))


def saveDensity(rho: DensityMatrix, path):
    _writeText(path, dumps(densityToDict(rho)))


def loadDensity(path):
    return densityFromDict(_readJson(path))


def saveReport(report, path):
    _writeText(path, dumps(report.asDict(), indent=2))


def writeCsv(path, header, rows, digits=CSV_DIGITS):
    """Write rows to CSV, floats at `digits` significant digits."""
    if os.path.exists(path):
        logger.warning("Output path (%s) existed, overwriting!", path)

    def cell(v):
        if isinstance(v, (bool, np.bool_)):
            return 'true' if v else 'false'
        if isinstance(v, (float, np.floating)):
            return formatFloat(v, digits)
        return v

    with open(path, 'w', newline='') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(header)
        for r in rows:
            writer.writerow([cell(v) for v in r])
    logger.info("Written: %s", path)
