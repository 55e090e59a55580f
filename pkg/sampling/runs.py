"""Entry points for one sampling run per strategy"""
import logging
log = logging.getLogger('runs')

from enforce_typing import enforce_types
import typing

from core.errors import InvalidParams, ProxyBiasError
from engine.SamplingEngine import SamplingEngine
from engine.SamplingStrategy import SamplingStrategy
from engine.SamplingTrace import SamplingTrace
from sampling.ActiveSamplingState import ActiveSamplingState
from sampling.BaselineSamplingState import ALL_RECORDS, POSITIVES, \
    BaselineSamplingState
from sampling.oracles import InMemoryOracle, OracleBase
from sampling.PoolSamplingState import DIRECT, GENERAL, PoolSamplingState

ACTIVE, UNIFORM, POSITIVE, DIRECT_STRATEGY = \
    'active', 'uniform', 'positive', 'direct'
STRATEGIES = (ACTIVE, UNIFORM, POSITIVE, DIRECT_STRATEGY)

@enforce_types
def buildState(name: str, pool: list, strategy: SamplingStrategy,
               oracle: typing.Optional[OracleBase] = None) \
        -> PoolSamplingState:
    """
    @description
      The sampling state for strategy `name`:
        active -- uncertainty sampling over y=1, general estimate
        uniform -- uniform over all records, general estimate
        positive -- uniform over y=1 records, general estimate
        direct -- uniform over y=1 records, direct estimate

    @arguments
      oracle -- defaults to an InMemoryOracle over `pool` capped at
        strategy.budget
    """
    if name not in STRATEGIES:
        raise InvalidParams("unknown strategy '%s'" % name)
    if oracle is None:
        oracle = InMemoryOracle(pool, strategy.budget)
    trace = SamplingTrace(name)
    if name == ACTIVE:
        return ActiveSamplingState(pool, oracle, strategy, trace)
    if name == UNIFORM:
        return BaselineSamplingState(pool, oracle, strategy, trace,
                                     ALL_RECORDS, GENERAL)
    if name == POSITIVE:
        return BaselineSamplingState(pool, oracle, strategy, trace,
                                     POSITIVES, GENERAL)
    return BaselineSamplingState(pool, oracle, strategy, trace,
                                 POSITIVES, DIRECT)

@enforce_types
def runSampling(name: str, pool: list, strategy: SamplingStrategy,
                oracle: typing.Optional[OracleBase] = None,
                output_dir: typing.Optional[str] = None,
                progress: bool = False) -> typing.Tuple[float, SamplingTrace]:
    """
    @description
      Run strategy `name` to completion.

    @return
      estimate -- final |alpha - beta| estimate
      trace -- SamplingTrace

    @raises
      ProxyBiasError -- the final estimate failed (DegenerateDeltas,
        MissingGroup, ...); the exception carries the finished trace
    """
    state = buildState(name, pool, strategy, oracle)
    trace = SamplingEngine(state, output_dir, progress).run()
    try:
        estimate = state.finalEstimate()
    except ProxyBiasError as e:
        e.trace = trace
        raise
    log.info("%s sampling: estimate %.6g with %d labels (%s)", name,
             estimate, state.labels_used, trace.reason)
    return estimate, trace

@enforce_types
def activeSampling(pool: list, strategy: typing.Optional[SamplingStrategy] = None,
                   oracle: typing.Optional[OracleBase] = None,
                   output_dir: typing.Optional[str] = None,
                   progress: bool = False) -> typing.Tuple[float, SamplingTrace]:
    return runSampling(ACTIVE, pool, strategy or SamplingStrategy(),
                       oracle, output_dir, progress)

@enforce_types
def uniformSampling(pool: list, strategy: typing.Optional[SamplingStrategy] = None,
                    oracle: typing.Optional[OracleBase] = None,
                    output_dir: typing.Optional[str] = None,
                    progress: bool = False) -> typing.Tuple[float, SamplingTrace]:
    return runSampling(UNIFORM, pool, strategy or SamplingStrategy(),
                       oracle, output_dir, progress)

@enforce_types
def positiveSampling(pool: list, strategy: typing.Optional[SamplingStrategy] = None,
                     oracle: typing.Optional[OracleBase] = None,
                     output_dir: typing.Optional[str] = None,
                     progress: bool = False) -> typing.Tuple[float, SamplingTrace]:
    return runSampling(POSITIVE, pool, strategy or SamplingStrategy(),
                       oracle, output_dir, progress)
