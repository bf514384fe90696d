"""Command line front end.

    mumsep mums build --d 3 --out mums3.json
    mumsep mums verify --in mums3.json
    mumsep state gen --kind isotropic --d 3 --p 0.9 --out rho.json
    mumsep crit eval --theorem T2 --state rho.json --sets mums3.json mums3t.json
    mumsep scan isotropic --d 3 --theorem T2 --step 1e-3 --out iso3.csv
    mumsep scan ghz --d 2 --m 3 --theorem T4 --step 1e-2 --out ghz.csv
    mumsep sweep separable --dims 3,3 --count 200 --seed 7 --theorem T2

Exit codes: 0 success, 2 usage or configuration error, 3 verification
failure, 4 numeric integrity error, 5 soundness regression.
"""
import argparse
import logging
import os
import sys
from dataclasses import dataclass, field
from typing import List, Optional

import mumsep
from mumsep import codec, states
from mumsep.common import DETECT_TOL, VERIFY_TOL
from mumsep.criteria import CriterionFactory, kNonsepCheck
from mumsep.criteria.common import STRATEGIES
from mumsep.errors import ConfigurationError, MumsepError
from mumsep.mum import buildMums, transposeMums, verifyMums
from mumsep.partition import parsePartition
from mumsep.scan import SCAN_HEADER, pGrid, thresholdOf
from mumsep.scan import scanIsotropic, scanNoisyGhz, sweepSeparable
from mumsep.utils import enableDebugLog, getSupportedCriteria

logger = logging.getLogger('mumsep')

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFY = 3
EXIT_NUMERIC = 4
EXIT_SOUNDNESS = 5


def _parseDims(text):
    try:
        return [int(x) for x in text.split(',')]
    except ValueError:
        raise ConfigurationError("Invalid dims '%s', expecting e.g. 3,3" % text)


@dataclass
class RunConfig:
    """Everything one command needs, validated before any computation."""
    command: str = ''
    d: Optional[int] = None
    m: Optional[int] = None
    dims: Optional[List[int]] = None
    M: Optional[int] = None
    t: Optional[float] = None
    p: Optional[float] = None
    theorem: Optional[str] = None
    strategy: str = 'exact'
    seed: int = 0
    count: Optional[int] = None
    terms: int = 4
    kind: Optional[str] = None
    start: float = 0.0
    stop: float = 1.0
    step: float = 1e-3
    partition: Optional[str] = None
    transpose: bool = False
    conjugate: bool = False
    input: Optional[str] = None
    state: Optional[str] = None
    sets: List[str] = field(default_factory=list)
    output: Optional[str] = None
    tol: float = VERIFY_TOL
    detect_tol: float = DETECT_TOL

    @staticmethod
    def fromArgs(args):
        fields = RunConfig.__dataclass_fields__.keys()
        values = {k: v for k, v in vars(args).items() if k in fields and v is not None}
        if isinstance(values.get('dims'), str):
            values['dims'] = _parseDims(values['dims'])
        return RunConfig(**values)

    def validate(self):
        self.validateSizes()
        self.validateInputs()

    def validateSizes(self):
        if self.d is not None and self.d < 2:
            raise ConfigurationError("Dimension must be >= 2, got %d" % self.d)
        if self.m is not None and self.m < 2:
            raise ConfigurationError("Party count must be >= 2, got %d" % self.m)
        if self.dims is not None and any(x < 2 for x in self.dims):
            raise ConfigurationError("All dims must be >= 2, got %s" % self.dims)
        if not self.step > 0:
            raise ConfigurationError("Grid step must be positive, got %s" % self.step)
        if self.count is not None and self.count < 1:
            raise ConfigurationError("Count must be >= 1, got %d" % self.count)
        if self.terms < 1:
            raise ConfigurationError("Terms must be >= 1, got %d" % self.terms)

    def validateInputs(self):
        if self.strategy not in STRATEGIES:
            raise ConfigurationError("Unknown strategy '%s'" % self.strategy)
        if self.theorem is not None and self.theorem not in getSupportedCriteria():
            raise ConfigurationError("Unknown theorem '%s', expecting one of %s"
                                     % (self.theorem, getSupportedCriteria()))
        for path in [self.input, self.state] + list(self.sets):
            if path is not None and not os.path.exists(path):
                raise ConfigurationError("Invalid input path (%s)!" % path)


def _emit(obj):
    sys.stdout.write(codec.dumps(obj, indent=2))
    sys.stdout.write('\n')


def cmd_mums_build(cfg: RunConfig):
    s = buildMums(cfg.d, cfg.t)
    if cfg.transpose:
        s = transposeMums(s)
    if cfg.M is not None:
        s = s.truncate(cfg.M)
    if cfg.output:
        codec.saveMums(s, cfg.output)
    _emit({'d': s.d, 'M': s.M, 't': s.t, 'kappa': s.kappa})
    return EXIT_OK


def cmd_mums_verify(cfg: RunConfig):
    s = codec.loadMums(cfg.input)
    report = verifyMums(s, cfg.tol)
    _emit(report.asDict())
    return EXIT_OK if report.passed else EXIT_VERIFY


def _require(cfg, *names):
    missing = [n for n in names if getattr(cfg, n) is None]
    if missing:
        raise ConfigurationError("%s needs --%s" % (cfg.command, ', --'.join(missing)))


def _stateDims(cfg):
    if cfg.dims is None:
        _require(cfg, 'd')
        return [cfg.d]
    return cfg.dims


# kind -> (required options, builder)
STATE_BUILDERS = {
    'mixed': ((), lambda c: states.maximallyMixed(_stateDims(c))),
    'isotropic': (('d', 'p'), lambda c: states.isotropic(c.d, c.p)),
    'ghz': (('d', 'm'), lambda c: states.ghz(c.d, c.m)),
    'noisy-ghz': (('d', 'm', 'p'), lambda c: states.noisyGhz(c.d, c.m, c.p)),
    'random': ((), lambda c: states.randomDensity(_stateDims(c), c.seed)),
    'random-pure': ((), lambda c: states.randomPure(_stateDims(c), c.seed)),
    'random-product': ((), lambda c: states.randomProduct(_stateDims(c), c.seed)),
    'random-separable': ((), lambda c: states.randomSeparable(_stateDims(c), c.terms, c.seed)),
}


def cmd_state_gen(cfg: RunConfig):
    if cfg.kind not in STATE_BUILDERS:
        raise ConfigurationError("Unknown state kind '%s'" % cfg.kind)
    required, builder = STATE_BUILDERS[cfg.kind]
    _require(cfg, *required)
    rho = builder(cfg)
    codec.saveDensity(rho, cfg.output)
    _emit({'dims': list(rho.dims), 'purity': states.purity(rho)})
    return EXIT_OK


def cmd_eval(cfg: RunConfig):
    rho = codec.loadDensity(cfg.state)
    sets = [codec.loadMums(p) for p in cfg.sets]
    if cfg.partition is not None:
        primary = cfg.theorem if cfg.theorem in ('T4', 'T5') else 'T4'
        report = kNonsepCheck(rho, parsePartition(cfg.partition), sets, cfg.strategy,
                              primary, cfg.detect_tol)
    else:
        report = CriterionFactory.create(cfg.theorem, sets, rho, strategy=cfg.strategy,
                                         tol=cfg.detect_tol, conjugate=cfg.conjugate).run()
    if cfg.output:
        codec.saveReport(report, cfg.output)
    _emit(report.asDict())
    return EXIT_OK


def _scanOutput(cfg, rows):
    if cfg.output:
        codec.writeCsv(cfg.output, SCAN_HEADER, rows)
    threshold = thresholdOf(rows)
    _emit({'points': len(rows), 'threshold': threshold})
    return EXIT_OK


def cmd_scan_isotropic(cfg: RunConfig):
    grid = pGrid(cfg.start, cfg.stop, cfg.step)
    rows = scanIsotropic(cfg.d, cfg.theorem, grid, cfg.strategy, cfg.t, cfg.detect_tol)
    return _scanOutput(cfg, rows)


def cmd_scan_ghz(cfg: RunConfig):
    grid = pGrid(cfg.start, cfg.stop, cfg.step)
    partition = None if cfg.partition is None else parsePartition(cfg.partition)
    rows = scanNoisyGhz(cfg.d, cfg.m, grid, cfg.theorem, cfg.strategy, partition, cfg.detect_tol)
    return _scanOutput(cfg, rows)


def cmd_sweep_separable(cfg: RunConfig):
    if cfg.count is None or cfg.count < 1:
        raise ConfigurationError("Sweep needs --count >= 1")
    partition = None if cfg.partition is None else parsePartition(cfg.partition)
    max_margin, reports = sweepSeparable(cfg.dims, cfg.count, cfg.seed, cfg.theorem,
                                         cfg.strategy, cfg.terms, partition, cfg.detect_tol)
    _emit({'count': len(reports), 'max_margin': max_margin})
    if max_margin > cfg.detect_tol:
        logger.error("Soundness regression: separable state with margin %.3e", max_margin)
        return EXIT_SOUNDNESS
    return EXIT_OK


COMMANDS = {
    ('mums', 'build'): cmd_mums_build,
    ('mums', 'verify'): cmd_mums_verify,
    ('state', 'gen'): cmd_state_gen,
    ('crit', 'eval'): cmd_eval,
    ('scan', 'isotropic'): cmd_scan_isotropic,
    ('scan', 'ghz'): cmd_scan_ghz,
    ('sweep', 'separable'): cmd_sweep_separable,
}


def _gridArgs(p):
    p.add_argument('--start', type=float, default=0.0, help="First grid value of p")
    p.add_argument('--stop', type=float, default=1.0, help="Last grid value of p")
    p.add_argument('--step', type=float, default=1e-3, help="Grid step")


def buildParser():
    description = "mumsep " + mumsep.__version__ + ", " + mumsep.DESCRIPTION
    parser = argparse.ArgumentParser(prog='mumsep', description=description,
                                     formatter_class=argparse.RawTextHelpFormatter)
    parser.add_argument('--version', action='version', version=mumsep.__version__)
    parser.add_argument('--debug', action='store_true', help="Dump debug log to stderr")
    groups = parser.add_subparsers(dest='group', required=True)
    theorems = getSupportedCriteria()

    mums = groups.add_parser('mums', help="Build or verify MUM sets")
    mums_sub = mums.add_subparsers(dest='action', required=True)
    p = mums_sub.add_parser('build', help="Build a complete set of d+1 MUMs")
    p.add_argument('--d', type=int, required=True, help="Dimension")
    p.add_argument('--t', type=float, help="Construction parameter, default maximal")
    p.add_argument('--M', type=int, help="Keep only the first M measurements")
    p.add_argument('--transpose', action='store_true', help="Transpose every operator")
    p.add_argument('--out', dest='output', help="Path of the MUM set JSON")
    p = mums_sub.add_parser('verify', help="Verify the MUM conditions of a set")
    p.add_argument('--in', dest='input', required=True, help="Path of the MUM set JSON")
    p.add_argument('--tol', type=float, default=VERIFY_TOL, help="Tolerance")

    state = groups.add_parser('state', help="Generate density matrices")
    state_sub = state.add_subparsers(dest='action', required=True)
    p = state_sub.add_parser('gen', help="Write a density matrix JSON")
    p.add_argument('--kind', choices=list(STATE_BUILDERS), required=True)
    p.add_argument('--d', type=int, help="Local dimension")
    p.add_argument('--m', type=int, help="Number of parties (GHZ)")
    p.add_argument('--dims', type=str, help="Comma separated dims, e.g. 2,3")
    p.add_argument('--p', type=float, help="Weight of the entangled part")
    p.add_argument('--terms', type=int, default=4, help="Product terms (random-separable)")
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--out', dest='output', required=True)

    crit = groups.add_parser('crit', help="Evaluate separability criteria")
    crit_sub = crit.add_subparsers(dest='action', required=True)
    p = crit_sub.add_parser('eval', help="Evaluate one criterion on a state")
    p.add_argument('--theorem', choices=theorems, required=True)
    p.add_argument('--state', required=True, help="Density matrix JSON")
    p.add_argument('--sets', nargs='*', default=[], help="MUM set JSON per party (or block)")
    p.add_argument('--strategy', choices=STRATEGIES, default='exact')
    p.add_argument('--partition', help="Blocks of 0-based parties, e.g. '0,1|2'")
    p.add_argument('--conjugate', action='store_true', help="MUB: conjugate second party")
    p.add_argument('--detect-tol', dest='detect_tol', type=float, default=DETECT_TOL)
    p.add_argument('--out', dest='output', help="Also write the report here")

    scan = groups.add_parser('scan', help="Threshold scans")
    scan_sub = scan.add_subparsers(dest='action', required=True)
    p = scan_sub.add_parser('isotropic', help="Scan the isotropic family")
    p.add_argument('--d', type=int, required=True)
    p.add_argument('--theorem', choices=theorems, default='T2')
    p.add_argument('--strategy', choices=STRATEGIES, default='exact')
    p.add_argument('--t', type=float, help="Construction parameter, default maximal")
    _gridArgs(p)
    p.add_argument('--out', dest='output', help="CSV of (p, J, bound, margin, detected)")
    p = scan_sub.add_parser('ghz', help="Scan the noisy GHZ family")
    p.add_argument('--d', type=int, required=True)
    p.add_argument('--m', type=int, required=True)
    p.add_argument('--theorem', choices=theorems, default='T4')
    p.add_argument('--strategy', choices=STRATEGIES, default='exact')
    p.add_argument('--partition', help="Blocks of 0-based parties, e.g. '0,1|2'")
    _gridArgs(p)
    p.add_argument('--out', dest='output', help="CSV of (p, J, bound, margin, detected)")

    sweep = groups.add_parser('sweep', help="Soundness sweeps")
    sweep_sub = sweep.add_subparsers(dest='action', required=True)
    p = sweep_sub.add_parser('separable', help="Evaluate random fully separable states")
    p.add_argument('--dims', type=str, required=True, help="Comma separated dims, e.g. 3,3")
    p.add_argument('--count', type=int, required=True)
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--theorem', choices=theorems, required=True)
    p.add_argument('--strategy', choices=STRATEGIES, default='exact')
    p.add_argument('--terms', type=int, default=4)
    p.add_argument('--partition', help="Blocks of 0-based parties, e.g. '0,1|2,3'")
    p.add_argument('--detect-tol', dest='detect_tol', type=float, default=DETECT_TOL,
                   help="Margin above which a separable state counts as a false positive")
    return parser


def cmd_main(argv=None):
    parser = buildParser()
    args = parser.parse_args(argv)
    if args.debug:
        enableDebugLog()

    try:
        cfg = RunConfig.fromArgs(args)
        cfg.command = '%s %s' % (args.group, args.action)
        cfg.validate()
        logger.debug("Running %s", cfg)
        return COMMANDS[(args.group, args.action)](cfg)
    except MumsepError as e:
        where = getattr(e, 'where', None)
        if where is not None:
            sys.stderr.write("error: %s (b=%d, n=%d)\n" % (e, where[0] + 1, where[1] + 1))
        else:
            sys.stderr.write("error: %s\n" % e)
        return e.exit_code
