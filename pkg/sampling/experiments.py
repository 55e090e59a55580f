"""Seeded Monte Carlo experiments on synthetic populations"""
import logging
log = logging.getLogger('experiments')

from enforce_typing import enforce_types
import numpy
import pandas as pd
from tqdm import tqdm
import typing

from core import estimators
from core.BiasReport import biasReport
from core.errors import InvalidParams
from core.JointTable import buildJointTable
from engine.SamplingEngine import SamplingEngine
from engine.SamplingStrategy import SamplingStrategy, SamplingTarget
from engine.SamplingTrace import labelsToReach
from simulate.generator import sampleRecords, sampleTable
from simulate.SimParams import SimParams
from sampling.runs import ACTIVE, POSITIVE, UNIFORM, buildState
from util.constants import TRUE_A

CORRECTION_ESTIMATORS = ('naive', 'corrected', 'direct')
SWEEP_STRATEGIES = (ACTIVE, UNIFORM, POSITIVE)

@enforce_types
def correctionExperiment(params: SimParams, n_eval: int = 10000,
                         n_common: int = 250, n_runs: int = 100,
                         seed: int = 0, progress: bool = False) -> dict:
    """
    @description
      Per run, draw an evaluation set (label classifier outputs plus
      predicted attributes) and a small common set with true attributes
      from independent seeds. Score the naive estimate and the corrected
      one (g's and r, s from the common set) against the evaluation set's
      true bias, next to the direct estimate on the common set alone.

    @return
      dict with mean absolute error per estimator, how many runs each
      estimator failed on, and the run count
    """
    if min(n_eval, n_common, n_runs) < 1:
        raise InvalidParams("n_eval, n_common and n_runs must be >= 1")
    children = numpy.random.SeedSequence(seed).spawn(n_runs)
    errors: typing.Dict[str, list] = {k: [] for k in CORRECTION_ESTIMATORS}
    failures = {k: 0 for k in CORRECTION_ESTIMATORS}
    for child in tqdm(children, disable=not progress):
        eval_seed, common_seed = (int(x) for x in child.generate_state(2))
        eval_table = sampleTable(params.withSeed(eval_seed), n_eval)
        common_table = sampleTable(params.withSeed(common_seed), n_common)
        report = biasReport(eval_table, common_table,
                            requested=('naive', 'corrected', 'direct'))
        truth = abs(estimators.trueBias(eval_table))
        for name, value in (('naive', report.naive_signed),
                            ('corrected', report.corrected_abs),
                            ('direct', report.direct_abs)):
            if value is None:
                failures[name] += 1
            else:
                errors[name].append(abs(abs(value) - truth))

    mae = {k: (float(numpy.mean(v)) if v else None)
           for k, v in errors.items()}
    log.info("correction experiment over %d runs: %s", n_runs, mae)
    return {'mae': mae, 'failures': failures, 'n_runs': n_runs,
            'n_eval': n_eval, 'n_common': n_common, 'seed': seed}

@enforce_types
def strategySweep(params: SimParams, n: int = 14000,
                  seeds: typing.Optional[list] = None,
                  b: int = 100, w: int = 100, tolerance: float = 0.02,
                  field: str = 'plug_in',
                  progress: bool = False) -> pd.DataFrame:
    """
    @description
      For each seed, draw a pool of n records and run active, uniform and
      positive sampling on it until `field` is within `tolerance` of the
      pool's true bias (convergence does not stop these runs).

    @return
      DataFrame, one row per seed: seed, true_bias, and labels-to-reach
      per strategy (nan where the pool ran out first)
    """
    seeds = list(range(10)) if seeds is None else seeds
    rows = []
    for seed in tqdm(seeds, disable=not progress):
        pool = sampleRecords(params.withSeed(int(seed)), n)
        truth = estimators.trueBias(buildJointTable(pool, TRUE_A))
        row: dict = {'seed': int(seed), 'true_bias': truth}
        for name in SWEEP_STRATEGIES:
            strategy = SamplingStrategy(b=b, w=w, max_iters=n // b + 1,
                                        seed=int(seed))
            strategy.setStopOnConvergence(False)
            strategy.setTarget(SamplingTarget(truth, tolerance, field))
            state = buildState(name, pool, strategy)
            trace = SamplingEngine(state).run()
            reached = labelsToReach(trace, truth, tolerance, field)
            row[name] = numpy.nan if reached is None else reached
        log.info("sweep seed %s: %s", seed, row)
        rows.append(row)
    return pd.DataFrame(rows, columns=['seed', 'true_bias'] +
                        list(SWEEP_STRATEGIES))

@enforce_types
def sweepSummary(sweep: pd.DataFrame) -> dict:
    """Median labels-to-reach per strategy (unreached counts as
    infinite) and how often active beat uniform and positive"""
    filled = sweep[list(SWEEP_STRATEGIES)].fillna(numpy.inf)
    medians = {name: float(filled[name].median())
               for name in SWEEP_STRATEGIES}
    return {
        'median_labels': {k: (None if v == numpy.inf else v)
                          for k, v in medians.items()},
        'active_below_uniform': int((filled[ACTIVE] < filled[UNIFORM]).sum()),
        'active_at_most_positive':
            int((filled[ACTIVE] <= filled[POSITIVE]).sum()),
        'n_seeds': len(sweep),
    }
