"""Oracles disclose true sensitive attributes on request.

Every disclosure goes through the oracle's OracleBudget, so an id is never
revealed twice and a capped budget is never overrun."""
import logging
log = logging.getLogger('oracles')

from enforce_typing import enforce_types
import os
import pandas as pd
import time
import typing

from core.errors import MissingField, OracleTimeout, ParseError, SchemaError
from engine.OracleBudget import OracleBudget
from util.constants import POLL_INTERVAL, POLL_TIMEOUT

@enforce_types
class OracleBase:
    def __init__(self, budget: typing.Optional[int] = None):
        self.budget = OracleBudget(budget)

    def reveal(self, ids: list) -> typing.Dict[str, bool]:
        """Charge the budget for `ids`, then return {id: true a}"""
        self.budget.check(ids)
        answers = self._answer(ids)
        self.budget.spend(ids)
        missing = [id_ for id_ in ids if id_ not in answers]
        assert not missing, "oracle left ids unanswered: %s" % missing[:5]
        return {id_: answers[id_] for id_ in ids}

    def _answer(self, ids: list) -> typing.Dict[str, bool]:
        raise NotImplementedError('implement in child')

@enforce_types
class InMemoryOracle(OracleBase):
    """Answers from records that carry their true attribute. Callers see
    the attribute only through reveal()."""

    def __init__(self, records: list, budget: typing.Optional[int] = None):
        super().__init__(budget)
        self._truth: typing.Dict[str, typing.Optional[bool]] = \
            {rec.id: rec.a for rec in records}

    def _answer(self, ids: list) -> typing.Dict[str, bool]:
        answers = {}
        for id_ in ids:
            a = self._truth[id_]
            if a is None:
                raise MissingField(id_, 'a')
            answers[id_] = a
        return answers

@enforce_types
class FileExchangeOracle(OracleBase):
    """
    @description
      Hands each request to an outside annotator through files in
      `exchange_dir`. Request k is written as request_<k>.csv (column id);
      the oracle then polls for answer_<k>.csv (columns id, a with a in
      {0,1}) and raises OracleTimeout if it does not show up in time.
    """

    def __init__(self, exchange_dir: str,
                 budget: typing.Optional[int] = None,
                 poll_interval: float = POLL_INTERVAL,
                 timeout: float = POLL_TIMEOUT):
        super().__init__(budget)
        self.exchange_dir = exchange_dir
        self.poll_interval = poll_interval
        self.timeout = timeout
        self.num_requests = 0
        if not os.path.exists(exchange_dir):
            os.makedirs(exchange_dir)

    def requestPath(self, k: int) -> str:
        return os.path.join(self.exchange_dir, "request_%03d.csv" % k)

    def answerPath(self, k: int) -> str:
        return os.path.join(self.exchange_dir, "answer_%03d.csv" % k)

    def _answer(self, ids: list) -> typing.Dict[str, bool]:
        k = self.num_requests
        self.num_requests += 1
        pd.DataFrame({'id': ids}).to_csv(self.requestPath(k), index=False)
        log.info("Wrote request for %d attributes to %s; waiting for %s",
                 len(ids), self.requestPath(k), self.answerPath(k))

        answer_path = self.answerPath(k)
        start = time.monotonic()
        while not os.path.exists(answer_path):
            if time.monotonic() - start > self.timeout:
                raise OracleTimeout("no %s after %gs"
                                    % (answer_path, self.timeout))
            time.sleep(self.poll_interval)
        return _readAnswer(answer_path, ids)

def _readAnswer(path: str, ids: list) -> typing.Dict[str, bool]:
    df = pd.read_csv(path, dtype=str, keep_default_na=False)
    for col in ('id', 'a'):
        if col not in df.columns:
            raise SchemaError("%s: missing column '%s'" % (path, col))
    answers = {}
    for i, (id_, a) in enumerate(zip(df['id'], df['a'])):
        if a.strip() not in ('0', '1'):
            raise ParseError(i + 2, "a must be 0 or 1, got '%s'" % a)
        answers[id_.strip()] = a.strip() == '1'
    for id_ in ids:
        if id_ not in answers:
            raise MissingField(id_, 'a')
    return answers
