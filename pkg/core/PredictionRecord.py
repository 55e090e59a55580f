import logging
log = logging.getLogger('record')

from enforce_typing import enforce_types
import numpy
import typing

from util.strutil import StrMixin

@enforce_types
class PredictionRecord(StrMixin):
    """
    @description
      One example as seen by the auditor.

    @attributes
      id -- opaque string
      y -- true label; True is the positive class
      y_hat -- label classifier output f(x); True means f(x)=1
      a_hat -- attribute classifier output h(x), or None
      a -- true sensitive attribute, or None when not (yet) known
      score -- attribute classifier confidence P(a=1|x) in [0,1], or None
    """

    def __init__(self, id: str, y: bool, y_hat: bool,
                 a_hat: typing.Optional[bool] = None,
                 a: typing.Optional[bool] = None,
                 score: typing.Optional[float] = None):
        if score is not None:
            assert 0.0 <= score <= 1.0, "score %s not in [0,1]" % score
        self.id = id
        self.y = y
        self.y_hat = y_hat
        self.a_hat = a_hat
        self.a = a
        self.score = score

    def uncertainty(self) -> float:
        """|score - 0.5|; smaller means h is less sure"""
        assert self.score is not None, "record %s has no score" % self.id
        return abs(self.score - 0.5)

    def withoutA(self) -> 'PredictionRecord':
        """Copy with the true attribute hidden"""
        return PredictionRecord(self.id, self.y, self.y_hat,
                                self.a_hat, None, self.score)

    def withA(self, a: bool) -> 'PredictionRecord':
        return PredictionRecord(self.id, self.y, self.y_hat,
                                self.a_hat, a, self.score)

    def key(self) -> tuple:
        return (self.id, self.y, self.y_hat, self.a_hat, self.a, self.score)

    def __eq__(self, other) -> bool:
        return isinstance(other, PredictionRecord) and \
            self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

@enforce_types
class RecordColumns:
    """Column view of a record sequence, for vectorized tallies.
    Missing optional values are -1 in the int columns and nan in score."""

    def __init__(self, records: list):
        n = len(records)
        self.ids: typing.List[str] = [r.id for r in records]
        self.y = numpy.fromiter((r.y for r in records), dtype=numpy.int8,
                                count=n)
        self.y_hat = numpy.fromiter((r.y_hat for r in records),
                                    dtype=numpy.int8, count=n)
        self.a = numpy.fromiter((_opt(r.a) for r in records),
                                dtype=numpy.int8, count=n)
        self.a_hat = numpy.fromiter((_opt(r.a_hat) for r in records),
                                    dtype=numpy.int8, count=n)
        self.score = numpy.fromiter(
            (numpy.nan if r.score is None else r.score for r in records),
            dtype=float, count=n)

    def __len__(self) -> int:
        return len(self.ids)

def _opt(x) -> int:
    return -1 if x is None else int(x)
