"""pbacli.py -- the `pba` command line. Each subcommand prints one JSON
report to stdout (or to -o); logs go to stderr.

Exit codes: 0 success (maybe with warnings), 1 computation failure,
2 usage error."""
import logging
log = logging.getLogger('pbacli')

import argparse
from enforce_typing import enforce_types
import json
import math
import numpy
import sys
import time
import typing

from core import estimators
from core.BiasReport import ESTIMATORS, biasReport
from core.errors import InvalidParams, ProxyBiasError, SchemaError
from core.JointTable import JointTable, buildJointTable
from core.Rates import Rates
from dataio.datasetio import COMMON, EVALUATION, SplitSpec, \
    describeDataset, readDataset, splitDataset, writeDataset
from dataio.runconfig import loadRunConfig, mergeConfig
from engine.SamplingStrategy import ESTIMATE_FIELDS, SamplingStrategy
from sampling.estimates import bootstrapInterval, directEstimation, \
    plugInBias
from sampling.experiments import correctionExperiment, strategySweep, \
    sweepSummary
from sampling.oracles import FileExchangeOracle
from sampling.runs import STRATEGIES, runSampling
from simulate.generator import exactTable, expectedNaive, sampleRecords, \
    sampleTable
from simulate.SimParams import SimParams
from theory.constructions import bayesCounterexample, \
    bayesCounterexampleRows
from theory.gamma import gammaScan
from util.constants import BOTH, DEFAULT_BATCH_SIZE, DEFAULT_EPSILON, \
    DEFAULT_GRID_STEP, DEFAULT_LABELS_PER_ITER, DEFAULT_MAX_ITERS, \
    POLL_INTERVAL, POLL_TIMEOUT, PREDICTED_A, TRUE_A

EXIT_OK, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2

#flags that steer the cli itself, not a command
GLOBAL_KEYS = ('command', 'config', 'verbose', 'quiet', 'output')

SIM_FLAGS = ('alpha', 'beta', 'r', 's', 'g1', 'g2', 'coupling',
             'score_noise')
SIM_DEFAULTS = {k: v for k, v in SimParams().toDict().items()
                if k in SIM_FLAGS}

#flags parsed as floats
FLOAT_FLAGS = SIM_FLAGS + ('U', 'step', 'epsilon', 'tolerance',
                           'labeled_fraction', 'smoothing', 'poll_interval',
                           'timeout')

INLINE, FILE_EXCHANGE = 'inline', 'file-exchange'

#audit --estimator value -> report field it fills
ESTIMATOR_FIELDS = {'naive': 'naive_signed', 'corrected': 'corrected_abs',
                    'general': 'general_signed', 'direct': 'direct_abs'}

class UsageError(Exception):
    pass

#====================================================================
#subcommands. Each takes the merged args and returns
# (result, warnings, ok), ok False meaning nothing could be estimated.

def cmdAudit(args) -> typing.Tuple[dict, list, bool]:
    _require(args, 'input')
    _checkChoice(args, 'estimator', ESTIMATORS + ('all',))
    if args.common_data is not None and args.labeled_fraction is not None:
        raise UsageError("give --common-data or --labeled-fraction, not both")
    if args.bootstrap < 0:
        raise UsageError("--bootstrap must be >= 0")

    records = readDataset(args.input)
    eval_recs, common_recs = records, None
    if args.common_data is not None:
        common_recs = readDataset(args.common_data)
    elif args.labeled_fraction is not None:
        f = args.labeled_fraction
        if not 0.0 < f < 1.0:
            raise UsageError("--labeled-fraction must be in (0,1)")
        parts = splitDataset(records, SplitSpec(fractions=(0.0, 1.0 - f, f),
                                                seed=args.seed))
        eval_recs, common_recs = parts[EVALUATION], parts[COMMON]

    requested = ESTIMATORS if args.estimator == 'all' else (args.estimator,)
    common_table = None if common_recs is None else _tableOf(common_recs)
    report = biasReport(_tableOf(eval_recs), common_table, requested,
                        args.smoothing)

    if common_recs is not None:
        _fillPlugIn(report, records, common_recs)
    labeled = common_recs
    if labeled is None and all(r.a is not None for r in records):
        labeled = records
    warnings = report.warnings()
    if args.bootstrap > 0 and labeled:
        warnings += _fillIntervals(report, labeled, args)

    result = {'dataset': describeDataset(args.input, records).toDict(),
              'n_evaluation': len(eval_recs),
              'n_common': 0 if common_recs is None else len(common_recs),
              'report': report.toDict()}
    ok = any(getattr(report, ESTIMATOR_FIELDS[name]) is not None
             for name in requested)
    return result, warnings, ok

@enforce_types
def _tableOf(records: list) -> JointTable:
    """Count table over whichever attribute columns are filled everywhere"""
    has_a = all(r.a is not None for r in records)
    has_a_hat = all(r.a_hat is not None for r in records)
    if has_a and has_a_hat:
        return buildJointTable(records, BOTH)
    if has_a:
        return buildJointTable(records, TRUE_A)
    return buildJointTable(records, PREDICTED_A) #raises if a_hat is missing

def _fillPlugIn(report, records: list, common_recs: list) -> None:
    """Plug-in estimate when the common records are part of the input"""
    input_ids = set(r.id for r in records)
    if not all(r.id in input_ids for r in common_recs):
        report.setDegenerate('plug_in_abs', 'CommonDataNotInInput')
        return
    known = {r.id: r for r in common_recs}
    pool = [known.get(r.id, r) for r in records]
    try:
        report.setEstimate('plug_in_abs', abs(plugInBias(pool, known)))
    except ProxyBiasError as e:
        report.setDegenerate('plug_in_abs', e.code)

def _fillIntervals(report, labeled: list, args) -> list:
    """Percentile bootstrap over the labeled records for the corrected and
    direct estimates; returns warnings"""
    warnings = []
    estimators_to_run = {'direct_abs': directEstimation}
    if report.naive_signed is not None:
        naive_abs = abs(report.naive_signed)

        def corrected(recs: list) -> float:
            table = buildJointTable(recs, BOTH)
            profile = estimators.errorProfile(table, args.smoothing)
            gamma = estimators.distortionFactor(profile.g1, profile.g2,
                                                estimators.rates(table))
            return estimators.correctedBias(naive_abs, gamma)[0]
        estimators_to_run['corrected_abs'] = corrected

    for field, func in estimators_to_run.items():
        if getattr(report, field) is None:
            continue
        try:
            lo, hi = bootstrapInterval(labeled, func, args.bootstrap,
                                       seed=args.seed,
                                       progress=not args.quiet)
            report.intervals[field] = [lo, hi]
        except ProxyBiasError as e:
            warnings.append("%s interval: %s" % (field, e.code))
    return warnings

def cmdSimulate(args) -> typing.Tuple[dict, list, bool]:
    if args.n < 1:
        raise UsageError("-n must be >= 1, got %d" % args.n)
    params = _simParams(args, args.seed)
    table = exactTable(params)
    sampled = sampleTable(params, args.n)
    result = {
        'params': params.toDict(), 'n': args.n,
        'exact': {
            'true_bias_signed': estimators.trueBias(table),
            'naive_signed': estimators.naiveBias(table),
            'expected_naive_signed': expectedNaive(params),
            'gamma': estimators.distortionFactor(
                params.g1, params.g2, Rates(params.r, params.s)),
            'ci_violation': estimators.ciViolation(table)},
        'sampled': {'n_positive': int(sampled.mass(y=1))}}
    warnings = []
    for name, func in (('true_bias_signed', estimators.trueBias),
                       ('naive_signed', estimators.naiveBias)):
        try:
            result['sampled'][name] = func(sampled)
        except ProxyBiasError as e:
            result['sampled'][name] = None
            warnings.append("sampled %s: %s" % (name, e.code))
    if args.csv is not None:
        writeDataset(sampleRecords(params, args.n), args.csv)
        result['csv'] = args.csv
    return result, warnings, True

def cmdSample(args) -> typing.Tuple[dict, list, bool]:
    _require(args, 'input')
    _checkChoice(args, 'strategy', STRATEGIES)
    _checkChoice(args, 'oracle', (INLINE, FILE_EXCHANGE))
    records = readDataset(args.input)
    ss = SamplingStrategy(args.b, args.w, args.epsilon, args.max_iters,
                          args.budget, args.seed)
    oracle = None
    if args.oracle == FILE_EXCHANGE:
        _require(args, 'exchange_dir')
        oracle = FileExchangeOracle(args.exchange_dir, args.budget,
                                    args.poll_interval, args.timeout)

    warnings = []
    try:
        estimate, trace = runSampling(args.strategy, records, ss, oracle,
                                      progress=not args.quiet)
    except ProxyBiasError as e:
        if e.trace is None:
            raise
        estimate, trace = None, e.trace
        warnings.append("estimate_abs: %s" % e.code)
    result = {'strategy': args.strategy, 'estimate_abs': estimate,
              'reason': trace.reason,
              'labels_used': trace.labelsUsed()[-1],
              'trace': trace.toDict()}
    if args.oracle == INLINE:
        try:
            result['true_bias_signed'] = estimators.trueBias(
                buildJointTable(records, TRUE_A))
        except ProxyBiasError as e:
            result['true_bias_signed'] = None
            warnings.append("true_bias_signed: %s" % e.code)
    if args.csv is not None:
        trace.toCsv(args.csv)
        result['csv'] = args.csv
    return result, warnings, estimate is not None

def cmdSweep(args) -> typing.Tuple[dict, list, bool]:
    _checkChoice(args, 'field', ESTIMATE_FIELDS)
    if args.seeds < 1:
        raise UsageError("--seeds must be >= 1")
    params = _simParams(args, args.seed)
    seeds = list(range(args.seed, args.seed + args.seeds))
    sweep = strategySweep(params, args.n, seeds, args.b, args.w,
                          args.tolerance, args.field,
                          progress=not args.quiet)
    summary = sweepSummary(sweep)
    warnings = ["%s never reached the target on %d seeds" % (name, k)
                for name, k in sweep.isna().sum().items() if k > 0]
    if args.csv is not None:
        sweep.to_csv(args.csv, index=False, float_format='%.12g')
    result = {'params': params.toDict(), 'seeds': seeds,
              'rows': sweep.to_dict('records'), 'summary': summary}
    return result, warnings, True

def cmdCompare(args) -> typing.Tuple[dict, list, bool]:
    params = _simParams(args, args.seed)
    result = correctionExperiment(params, args.n_eval, args.n_common,
                                  args.runs, args.seed,
                                  progress=not args.quiet)
    warnings = ["%s failed on %d of %d runs" % (name, k, args.runs)
                for name, k in sorted(result['failures'].items()) if k > 0]
    result['params'] = params.toDict()
    ok = any(v is not None for v in result['mae'].values())
    return result, warnings, ok

def cmdScanGamma(args) -> typing.Tuple[dict, list, bool]:
    for name in ('r', 's', 'U'):
        _require(args, name)
    if args.step <= 0.0:
        raise UsageError("--step must be > 0")
    scan = gammaScan(args.r, args.s, args.U, args.step)
    result = scan.toDict()
    if args.csv is not None:
        scan.toCsv(args.csv)
        result['csv'] = args.csv
    warnings = []
    if result['n_degenerate'] > 0:
        warnings.append("gamma is 0/0 at %d grid points"
                        % result['n_degenerate'])
    return result, warnings, True

def cmdCounterexample(args) -> typing.Tuple[dict, list, bool]:
    report = biasReport(bayesCounterexample())
    rows = bayesCounterexampleRows().to_dict('records')
    return {'rows': rows, 'report': report.toDict()}, report.warnings(), True

def _simParams(args, seed: int) -> SimParams:
    return SimParams(seed=seed, **{k: getattr(args, k) for k in SIM_FLAGS})

def _require(args, name: str) -> None:
    if getattr(args, name) is None:
        raise UsageError("missing %s" % name.replace('_', '-'))

def _checkChoice(args, name: str, choices: tuple) -> None:
    if getattr(args, name) not in choices:
        raise UsageError("%s must be one of %s, got %r"
                         % (name, ', '.join(choices), getattr(args, name)))

#====================================================================
#command table: name -> (function, defaults for flags left unset)

_SAMPLING_DEFAULTS = {'b': DEFAULT_BATCH_SIZE, 'w': DEFAULT_LABELS_PER_ITER,
                      'seed': 0}

COMMANDS: typing.Dict[str, typing.Tuple[typing.Callable, dict]] = {
    'audit': (cmdAudit, {'estimator': 'all', 'bootstrap': 0, 'seed': 0,
                         'smoothing': 0.0}),
    'simulate': (cmdSimulate, dict(SIM_DEFAULTS, n=10000, seed=0)),
    'sample': (cmdSample, dict(_SAMPLING_DEFAULTS, strategy='active',
                               epsilon=DEFAULT_EPSILON,
                               max_iters=DEFAULT_MAX_ITERS, oracle=INLINE,
                               poll_interval=POLL_INTERVAL,
                               timeout=POLL_TIMEOUT)),
    'sweep': (cmdSweep, dict(SIM_DEFAULTS, **_SAMPLING_DEFAULTS, n=14000,
                             seeds=10, tolerance=0.02, field='plug_in')),
    'compare': (cmdCompare, dict(SIM_DEFAULTS, n_eval=10000, n_common=250,
                                 runs=100, seed=0)),
    'scan-gamma': (cmdScanGamma, {'step': DEFAULT_GRID_STEP}),
    'counterexample': (cmdCounterexample, {}),
}

#====================================================================
#parser

def buildParser() -> argparse.ArgumentParser:
    """Flags default to None so that config files can fill them in"""
    parser = argparse.ArgumentParser(
        prog='pba',
        description="Audit equal-opportunity bias when sensitive attributes "
                    "come from a noisy attribute classifier.")
    parser.add_argument('--config', help="JSON file of flag values")
    parser.add_argument('-o', '--output', help="write the report here "
                        "instead of stdout")
    level = parser.add_mutually_exclusive_group()
    level.add_argument('-v', '--verbose', action='store_true')
    level.add_argument('-q', '--quiet', action='store_true')
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')

    p = sub.add_parser('audit', help="bias estimates for a dataset")
    p.add_argument('input', nargs='?', help="dataset csv")
    p.add_argument('--estimator',
                   choices=ESTIMATORS + ('all',))
    p.add_argument('--common-data', help="csv with true attributes")
    p.add_argument('--labeled-fraction', type=float,
                   help="hold out this share of the input as common data")
    p.add_argument('--bootstrap', type=int, metavar='N',
                   help="add percentile intervals from N resamples")
    p.add_argument('--smoothing', type=float)
    p.add_argument('--seed', type=int)

    p = sub.add_parser('simulate', help="draw a synthetic dataset")
    _addSimFlags(p)
    p.add_argument('-n', type=int)
    p.add_argument('--seed', type=int)
    p.add_argument('--csv', help="write the records here")

    p = sub.add_parser('sample', help="estimate by revealing attributes")
    p.add_argument('input', nargs='?', help="pool csv")
    p.add_argument('--strategy', choices=STRATEGIES)
    _addSamplingFlags(p)
    p.add_argument('--epsilon', type=float)
    p.add_argument('--max-iters', type=int)
    p.add_argument('--oracle', choices=(INLINE, FILE_EXCHANGE))
    p.add_argument('--exchange-dir')
    p.add_argument('--poll-interval', type=float)
    p.add_argument('--timeout', type=float)
    p.add_argument('--budget', type=int)
    p.add_argument('--csv', help="write the trace here")

    p = sub.add_parser('sweep', help="labels needed per sampling strategy")
    _addSimFlags(p)
    _addSamplingFlags(p)
    p.add_argument('-n', type=int)
    p.add_argument('--seeds', type=int, help="number of seeds")
    p.add_argument('--tolerance', type=float)
    p.add_argument('--field', choices=ESTIMATE_FIELDS)
    p.add_argument('--csv', help="write one row per seed here")

    p = sub.add_parser('compare', help="corrected vs naive vs direct error")
    _addSimFlags(p)
    p.add_argument('--n-eval', type=int)
    p.add_argument('--n-common', type=int)
    p.add_argument('--runs', type=int)
    p.add_argument('--seed', type=int)

    p = sub.add_parser('scan-gamma', help="gamma along an error budget")
    p.add_argument('--r', type=float)
    p.add_argument('--s', type=float)
    p.add_argument('--U', type=float)
    p.add_argument('--step', type=float)
    p.add_argument('--csv', help="write the curve here")

    sub.add_parser('counterexample',
                   help="Bayes-optimal attribute classifier counterexample")
    return parser

def _addSimFlags(p: argparse.ArgumentParser) -> None:
    for name in SIM_FLAGS:
        p.add_argument('--' + name.replace('_', '-'), type=float)

def _addSamplingFlags(p: argparse.ArgumentParser) -> None:
    p.add_argument('-b', type=int, help="batch size")
    p.add_argument('-w', type=int, help="labels per iteration")
    p.add_argument('--seed', type=int)

#====================================================================
#main

def main(argv: typing.Optional[list] = None) -> int:
    parser = buildParser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if not e.code else EXIT_USAGE
    _configureLogging(args)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE

    func, defaults = COMMANDS[args.command]
    start = time.monotonic()
    report: dict = {'command': args.command, 'warnings': [], 'error': None}
    code = EXIT_OK
    try:
        config = loadRunConfig(args.config) if args.config else {}
        args = _coerce(mergeConfig(args, config, defaults))
        report['config'] = {k: v for k, v in sorted(vars(args).items())
                            if k not in GLOBAL_KEYS}
        report['seed'] = getattr(args, 'seed', None)
        result, warnings, ok = func(args)
        report['result'] = result
        report['warnings'] = warnings
        code = EXIT_OK if ok else EXIT_FAILURE
    except (UsageError, InvalidParams, SchemaError) as e:
        log.error("usage: %s", e)
        report['error'] = _errorDict(e)
        code = EXIT_USAGE
    except (ProxyBiasError, OSError) as e:
        log.error("%s failed: %s", args.command, e)
        report['error'] = _errorDict(e)
        code = EXIT_FAILURE
    report['wall_time'] = time.monotonic() - start

    text = json.dumps(jsonReady(report), indent=2, sort_keys=True,
                      allow_nan=False)
    if args.output:
        with open(args.output, 'w') as f:
            f.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    log.info("%s done, exit code %d", args.command, code)
    return code

def _configureLogging(args) -> None:
    level = logging.INFO
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING
    logging.basicConfig(stream=sys.stderr, level=level, force=True,
                        format="%(name)s %(levelname)s: %(message)s")

def _coerce(args: argparse.Namespace) -> argparse.Namespace:
    """Config files may give 1 where a float flag is meant"""
    for key in FLOAT_FLAGS:
        value = getattr(args, key, None)
        if isinstance(value, int) and not isinstance(value, bool):
            setattr(args, key, float(value))
    return args

def _errorDict(e: Exception) -> dict:
    return {'code': getattr(e, 'code', type(e).__name__),
            'message': str(e)}

@enforce_types
def jsonReady(x):
    """Copy of x that json can dump: nan/inf become None, numpy scalars
    become python ones, tuples become lists"""
    if isinstance(x, dict):
        return {str(k): jsonReady(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonReady(v) for v in x]
    if isinstance(x, (bool, numpy.bool_)):
        return bool(x)
    if isinstance(x, numpy.integer):
        return int(x)
    if isinstance(x, (float, numpy.floating)):
        return float(x) if math.isfinite(x) else None
    return x
