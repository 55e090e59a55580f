import logging
log = logging.getLogger('jointtable')

from enforce_typing import enforce_types
import itertools
import numpy
import typing

from core.errors import EmptyInput, MissingAxis, MissingConditioningEvent, \
    MissingField
from core.PredictionRecord import RecordColumns
from util.constants import AXES, ATTRIBUTE_SOURCES, BOTH, PREDICTED_A, \
    TRUE_A, CONSISTENCY_TOL, SAFETY
from util.mathutil import Number, ratio
from util.strutil import StrMixin

@enforce_types
class JointTable(StrMixin):
    """
    @description
      Mass over the 16 cells of (y, a, y_hat, a_hat). Either exact integer
      counts (then every conditional is an exact Fraction) or float
      probabilities. Immutable after construction.

      When built without true attributes (or without predicted ones), that
      axis is collapsed: all mass sits at index 0 and queries touching the
      axis raise MissingAxis.

    @attributes
      has_a -- is the true-attribute axis populated?
      has_a_hat -- is the predicted-attribute axis populated?
    """

    def __init__(self, cells: numpy.ndarray,
                 has_a: bool = True, has_a_hat: bool = True):
        assert cells.shape == (2, 2, 2, 2), "need one mass per cell"
        assert (cells >= 0).all(), "cell masses must be nonnegative"
        if cells.dtype.kind in 'iu':
            self._cells = cells.astype(numpy.int64)
        else:
            self._cells = cells.astype(float)
        if not has_a:
            assert self._cells[:, 1, :, :].sum() == 0
        if not has_a_hat:
            assert self._cells[:, :, :, 1].sum() == 0
        self._cells.flags.writeable = False
        self.has_a = has_a
        self.has_a_hat = has_a_hat

    @classmethod
    def fromCounts(cls, counts, has_a: bool = True, has_a_hat: bool = True):
        return cls(numpy.asarray(counts, dtype=numpy.int64), has_a, has_a_hat)

    @classmethod
    def fromProbs(cls, probs, has_a: bool = True, has_a_hat: bool = True):
        return cls(numpy.asarray(probs, dtype=float), has_a, has_a_hat)

    #==================================================================
    #core
    @property
    def cells(self) -> numpy.ndarray:
        return self._cells

    def isCounts(self) -> bool:
        return self._cells.dtype.kind in 'iu'

    def total(self) -> Number:
        return self._scalar(self._cells.sum())

    def normalized(self):
        """Same table as probabilities summing to 1"""
        tot = float(self._cells.sum())
        if tot <= 0.0:
            raise EmptyInput("table has no mass")
        return JointTable(self._cells / tot, self.has_a, self.has_a_hat)

    def mass(self, **fixed) -> Number:
        """Total mass of cells matching every fixed axis value, e.g.
        mass(y=1, a=0). Integer for count tables."""
        index = []
        for axis in AXES:
            if axis in fixed:
                self._checkAxis(axis)
                index.append(int(fixed[axis]))
            else:
                index.append(slice(None))
        for axis in fixed:
            assert axis in AXES, "unknown axis '%s'" % axis
        return self._scalar(self._cells[tuple(index)].sum())

    def conditional(self, event: dict, given: dict) -> Number:
        """P(event | given). Exact Fraction on count tables.
        Raises MissingConditioningEvent when `given` has zero mass."""
        den = self.mass(**given)
        if den == 0:
            raise MissingConditioningEvent(_eventStr(given))
        both = dict(given)
        for axis, val in event.items():
            if axis in both and int(both[axis]) != int(val):
                return self._scalar(0)
            both[axis] = val
        return ratio(self.mass(**both), den)

    def nonzeroCells(self) -> int:
        return int((self._cells > 0).sum())

    def checkConsistency(self) -> float:
        """Largest disagreement between P(y_hat=1, a_hat=1 | y, a) computed
        as a direct cell ratio and as a chain of conditionals. Only
        defined on fully populated tables; returns 0.0 otherwise."""
        if not (self.has_a and self.has_a_hat):
            return 0.0
        worst = 0.0
        for y, a, yh, ah in itertools.product((0, 1), repeat=4):
            if self.mass(y=y, a=a, y_hat=yh) == 0:
                continue
            direct = ratio(self.mass(y=y, a=a, y_hat=yh, a_hat=ah),
                           self.mass(y=y, a=a))
            chained = self.conditional({'y_hat': yh}, {'y': y, 'a': a}) * \
                self.conditional({'a_hat': ah}, {'y': y, 'a': a, 'y_hat': yh})
            worst = max(worst, abs(float(direct) - float(chained)))
        if SAFETY:
            assert worst <= CONSISTENCY_TOL, worst
        return worst

    #==================================================================
    #helpers
    def _checkAxis(self, axis: str) -> None:
        if axis == 'a' and not self.has_a:
            raise MissingAxis("table built without true attributes")
        if axis == 'a_hat' and not self.has_a_hat:
            raise MissingAxis("table built without predicted attributes")

    def _scalar(self, x) -> Number:
        if self.isCounts():
            return int(x)
        return float(x)

    def __eq__(self, other) -> bool:
        return isinstance(other, JointTable) and \
            self.has_a == other.has_a and \
            self.has_a_hat == other.has_a_hat and \
            numpy.array_equal(self._cells, other._cells)

    def __hash__(self) -> int:
        return hash((self._cells.tobytes(), self.has_a, self.has_a_hat))

def _eventStr(event: dict) -> str:
    return ",".join("%s=%d" % (k, int(v)) for k, v in event.items())

@enforce_types
def buildJointTable(records: list, attribute_source: str = BOTH) -> JointTable:
    """
    @description
      Tally records into an exact count table.

    @arguments
      records -- list of PredictionRecord
      attribute_source -- TrueA, PredictedA or Both: which attribute axes
        to populate. A collapsed axis keeps all its mass at index 0.

    @return
      JointTable of integer counts, total = len(records)
    """
    assert attribute_source in ATTRIBUTE_SOURCES, attribute_source
    if not records:
        raise EmptyInput("no records to tally")
    use_a = attribute_source in (TRUE_A, BOTH)
    use_a_hat = attribute_source in (PREDICTED_A, BOTH)

    cols = RecordColumns(records)
    if use_a:
        _requireColumn(cols.a, cols.ids, 'a')
    if use_a_hat:
        _requireColumn(cols.a_hat, cols.ids, 'a_hat')

    table = tableFromColumns(cols.y, cols.a if use_a else None,
                             cols.y_hat, cols.a_hat if use_a_hat else None)
    log.debug("tallied %d records (%s) into %d nonzero cells",
              len(records), attribute_source, table.nonzeroCells())
    return table

@enforce_types
def tableFromColumns(y: numpy.ndarray, a: typing.Optional[numpy.ndarray],
                     y_hat: numpy.ndarray,
                     a_hat: typing.Optional[numpy.ndarray]) -> JointTable:
    """Count table from 0/1 columns of equal length. A None attribute
    column collapses that axis."""
    n = len(y)
    zeros = numpy.zeros(n, dtype=numpy.int64)
    a_col = zeros if a is None else a.astype(numpy.int64)
    a_hat_col = zeros if a_hat is None else a_hat.astype(numpy.int64)
    assert len(y_hat) == n and len(a_col) == n and len(a_hat_col) == n
    flat = (y.astype(numpy.int64) * 8 + a_col * 4 +
            y_hat.astype(numpy.int64) * 2 + a_hat_col)
    counts = numpy.bincount(flat, minlength=16).reshape(2, 2, 2, 2)
    return JointTable.fromCounts(counts, has_a=a is not None,
                                 has_a_hat=a_hat is not None)

def _requireColumn(col: numpy.ndarray, ids: list, field: str) -> None:
    missing = numpy.flatnonzero(col < 0)
    if missing.size > 0:
        raise MissingField(ids[int(missing[0])], field)

@enforce_types
def tableFromCellMasses(masses: dict, has_a: bool = True,
                        has_a_hat: bool = True) -> JointTable:
    """Build from {(y, a, y_hat, a_hat): mass}. Integer masses give a
    count table, anything else a probability table."""
    is_int = all(isinstance(m, int) and not isinstance(m, bool)
                 for m in masses.values())
    cells = numpy.zeros((2, 2, 2, 2), dtype=numpy.int64 if is_int else float)
    for key, m in masses.items():
        assert len(key) == 4, key
        cells[tuple(int(k) for k in key)] += m
    return JointTable(cells, has_a, has_a_hat)
