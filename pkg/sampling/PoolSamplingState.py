import logging
log = logging.getLogger('poolstate')

from enforce_typing import enforce_types
import math
import numpy
import typing

from core import estimators
from core.errors import BudgetExhausted, EmptyInput, InvalidParams, \
    MissingConditioningEvent, MissingField, MissingGroup, PoolExhausted, \
    ProxyBiasError
from core.ErrorProfile import ErrorProfile
from core.JointTable import JointTable, tableFromColumns
from core.PredictionRecord import RecordColumns
from core.Rates import Rates
from engine.SamplingStateBase import SamplingStateBase
from engine.SamplingStrategy import SamplingStrategy
from engine.SamplingTrace import BUDGET_EXHAUSTED, POOL_EXHAUSTED, \
    SamplingTrace
from sampling.estimates import plugInFromColumns
from sampling.oracles import OracleBase
from util.strutil import valueStr

#estimator kinds
GENERAL, DIRECT = 'general', 'direct'

#attribute-classifier quantities tracked on the labeled set:
# name -> (event, given)
QUANTITIES = {
    'g1': ({'a_hat': 1}, {'y': 1, 'a': 0}),
    'g2': ({'a_hat': 0}, {'y': 1, 'a': 1}),
    'delta1': ({'a_hat': 1}, {'y': 1, 'a': 0, 'y_hat': 1}),
    'delta2': ({'a_hat': 0}, {'y': 1, 'a': 1, 'y_hat': 1}),
}

NAN = float('nan')

@enforce_types
class PoolSamplingState(SamplingStateBase):
    """
    @description
      A pool of records whose true attributes get revealed batch by batch
      through an oracle. Children decide which records form the sampling
      frame, which drawn records get revealed, and when r, s are updated.

      After every reveal the labeled set yields g1, g2, delta1, delta2;
      a quantity whose conditioning event is still empty keeps its
      previous value (initially 0) and is flagged undefined.

    @attributes
      revealed -- bool mask over the pool
      quantities -- current g1, g2, delta1, delta2
      defined -- were they computable at the last update?
      r, s -- current base-rate estimates
      estimate, plug_in, direct -- current signed estimates (nan if not
        computable)
    """

    def __init__(self, pool: list, oracle: OracleBase,
                 ss: SamplingStrategy, trace: SamplingTrace,
                 estimator: str = GENERAL):
        super().__init__(ss, trace)
        assert estimator in (GENERAL, DIRECT), estimator
        if not pool:
            raise EmptyInput("empty pool")
        self.cols = RecordColumns(pool)
        if len(set(self.cols.ids)) != len(self.cols):
            raise InvalidParams("record ids in the pool are not unique")
        missing = numpy.flatnonzero(self.cols.a_hat < 0)
        if missing.size > 0:
            raise MissingField(self.cols.ids[int(missing[0])], 'a_hat')

        pos = self.cols.y == 1
        if not pos.any():
            raise MissingGroup("pool has no y=1 records")
        self.p_pos = float(pos.mean())
        self.naive = estimators.naiveComponents(
            tableFromColumns(self.cols.y, None, self.cols.y_hat,
                             self.cols.a_hat))

        self.oracle = oracle
        self.estimator = estimator
        self.rng = numpy.random.default_rng(ss.seed)

        n = len(self.cols)
        self.revealed = numpy.zeros(n, dtype=bool)
        self.a_true = numpy.full(n, -1, dtype=numpy.int8)
        self.labels_used = 0

        self.quantities = {q: 0.0 for q in QUANTITIES}
        self.defined = {q: False for q in QUANTITIES}
        self.r, self.s = 0.0, 0.0
        self.estimate, self.plug_in, self.direct = NAN, NAN, NAN

    #==================================================================
    #hooks for children
    def frame(self) -> numpy.ndarray:
        """Indices of the records batches are drawn from"""
        raise NotImplementedError('implement in child')

    def choose(self, batch: numpy.ndarray) -> numpy.ndarray:
        """Which of the drawn indices to reveal"""
        return batch

    def afterReveal(self, table: JointTable, changes: dict) -> None:
        """Update r, s and maybe stop; `changes` has |new - old| per
        quantity, None where undefined"""
        raise NotImplementedError('implement in child')

    def measuresQuantities(self) -> bool:
        """Update g1, g2, delta1, delta2 from this tick's labeled set?"""
        return True

    #==================================================================
    #one tick
    def step(self) -> bool:
        candidates = self.frame()
        candidates = candidates[~self.revealed[candidates]]
        if len(candidates) < self.ss.b:
            return self._halt(POOL_EXHAUSTED, PoolExhausted,
                              "%d unlabeled candidates left, batch needs %d"
                              % (len(candidates), self.ss.b))
        batch = self.rng.choice(candidates, size=self.ss.b, replace=False)
        chosen = self.choose(batch)
        if not self.oracle.budget.canAfford(len(chosen)):
            return self._halt(BUDGET_EXHAUSTED, BudgetExhausted,
                              "budget cannot cover %d more" % len(chosen))

        self._reveal(chosen)
        table = self.labeledTable()
        if self.measuresQuantities():
            changes = self._updateQuantities(table)
        else:
            changes = {q: None for q in QUANTITIES}
        self.afterReveal(table, changes)
        self._updateEstimates(table)
        return True

    def _halt(self, reason: str, err_class, msg: str) -> bool:
        if self.tick == 0:
            raise err_class(msg)
        self.stop(reason)
        return False

    def _reveal(self, idx: numpy.ndarray) -> None:
        ids = [self.cols.ids[int(i)] for i in idx]
        answers = self.oracle.reveal(ids)
        for i, id_ in zip(idx, ids):
            self.a_true[i] = int(answers[id_])
        self.revealed[idx] = True
        self.labels_used += len(ids)

    #==================================================================
    #statistics on the labeled set
    def labeledTable(self) -> JointTable:
        idx = numpy.flatnonzero(self.revealed)
        c = self.cols
        return tableFromColumns(c.y[idx], self.a_true[idx], c.y_hat[idx],
                                c.a_hat[idx])

    def _updateQuantities(self, table: JointTable) -> dict:
        changes: typing.Dict[str, typing.Optional[float]] = {}
        for name, (event, given) in QUANTITIES.items():
            try:
                value = float(table.conditional(event, given))
            except MissingConditioningEvent:
                self.defined[name] = False
                changes[name] = None
                continue
            changes[name] = abs(value - self.quantities[name])
            self.quantities[name] = value
            self.defined[name] = True
        return changes

    def ratesFrom(self, table: JointTable) -> typing.Optional[Rates]:
        """r = P(y=1) in the pool times the a=1 share among labeled y=1
        records; s likewise. None without labeled y=1 records."""
        n1 = table.mass(y=1, a=1)
        n0 = table.mass(y=1, a=0)
        if n1 + n0 == 0:
            return None
        return Rates(self.p_pos * n1 / (n1 + n0), self.p_pos * n0 / (n1 + n0))

    def profile(self) -> ErrorProfile:
        q = self.quantities
        return ErrorProfile(q['g1'], q['g2'], q['delta1'], q['delta2'])

    def generalEstimate(self) -> float:
        """Signed alpha - beta from the pool's naive components and the
        current g's, deltas and rates. Raises like generalCorrectedBias."""
        alpha_hat, beta_hat = self.naive
        return estimators.generalCorrectedBias(
            alpha_hat, beta_hat, self.profile(), Rates(self.r, self.s))

    def _updateEstimates(self, table: JointTable) -> None:
        self.direct = _orNan(lambda: estimators.trueBias(table))
        a_eff = numpy.where(self.revealed, self.a_true, self.cols.a_hat)
        self.plug_in = _orNan(lambda: plugInFromColumns(
            self.cols.y, self.cols.y_hat, a_eff))
        general = NAN
        if any(self.defined.values()):
            general = _orNan(self.generalEstimate)
        self.estimate = general if self.estimator == GENERAL else self.direct

    def finalEstimate(self) -> float:
        """|estimate| at the end of a run; raises what the estimator
        raises (DegenerateDeltas, MissingGroup, ...)"""
        if self.estimator == GENERAL:
            undefined = sorted(q for q, ok in self.defined.items() if not ok)
            if undefined:
                log.warning("final estimate: empty conditioning event for %s "
                            "at the last update, using %s instead",
                            ', '.join(undefined),
                            ', '.join(valueStr(self.quantities[q])
                                      for q in undefined))
            return abs(self.generalEstimate())
        return abs(estimators.trueBias(self.labeledTable()))

    def snapshot(self) -> dict:
        row = {'iteration': self.tick, 'labels_used': self.labels_used,
               'r': self.r, 's': self.s, 'estimate': self.estimate,
               'estimator': self.estimator, 'plug_in': self.plug_in,
               'direct': self.direct}
        row.update(self.quantities)
        return row

def _orNan(func) -> float:
    try:
        value = func()
    except ProxyBiasError as e:
        log.debug("estimate undefined: %s", e)
        return NAN
    return value if math.isfinite(value) else NAN
