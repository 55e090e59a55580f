"""datasetio.py -- Has routines PredictionRecord lists <=> csv files, and
the seeded three-way split of a dataset.

File format: header row, comma delimiter, UTF-8. Columns
  id,y,y_hat,a,a_hat,score
y, y_hat, a, a_hat are 0 or 1; score is a decimal in [0,1]. id, y and
y_hat are required; a blank a, a_hat or score means 'absent'. Extra
columns are ignored."""
import logging
log = logging.getLogger('datasetio')

from enforce_typing import enforce_types
import math
import numpy
import pandas as pd
import re
import typing

from core.errors import InfeasibleSplit, ParseError, SchemaError
from core.PredictionRecord import PredictionRecord
from util.strutil import StrMixin

SCHEMA_VERSION = 1
REQUIRED_COLUMNS = ('id', 'y', 'y_hat')
OPTIONAL_COLUMNS = ('a', 'a_hat', 'score')
HEADER = list(REQUIRED_COLUMNS + OPTIONAL_COLUMNS)

#partitions of a split, in slicing order
TRAIN, EVALUATION, COMMON = 'train', 'evaluation', 'common'
PARTS = (TRAIN, EVALUATION, COMMON)

#==================================================================
#reading

@enforce_types
class DatasetFile(StrMixin):
    """What a dataset file holds: record count, and which optional columns
    are filled on every row"""

    def __init__(self, path: str, num_records: int, has_a: bool,
                 has_a_hat: bool, has_score: bool,
                 schema_version: int = SCHEMA_VERSION):
        self.path = path
        self.schema_version = schema_version
        self.num_records = num_records
        self.has_a = has_a
        self.has_a_hat = has_a_hat
        self.has_score = has_score

    def toDict(self) -> dict:
        return {'path': self.path, 'schema_version': self.schema_version,
                'num_records': self.num_records, 'has_a': self.has_a,
                'has_a_hat': self.has_a_hat, 'has_score': self.has_score}

@enforce_types
def readDataset(path: str) -> typing.List[PredictionRecord]:
    """
    @description
      Parse a dataset csv into records, one per data row.

    @return
      records -- list of PredictionRecord

    @exceptions
      SchemaError -- no header, or a required column is missing
      ParseError -- a bad value or a repeated id; `line` is the 1-based
        line number in the file (the header is line 1)
    """
    try:
        df = pd.read_csv(path, dtype=str, keep_default_na=False,
                         skipinitialspace=True)
    except pd.errors.EmptyDataError:
        raise SchemaError("%s: empty file, expected header %s"
                          % (path, ','.join(HEADER)))
    except pd.errors.ParserError as e:
        match = re.search(r"line (\d+)", str(e))
        raise ParseError(int(match.group(1)) if match else 0, str(e))
    df = df.fillna('') #short rows
    for col in REQUIRED_COLUMNS:
        if col not in df.columns:
            raise SchemaError("%s: missing required column '%s'" % (path, col))

    def column(name: str) -> list:
        return list(df[name]) if name in df.columns else [''] * len(df)

    records = []
    seen: typing.Set[str] = set()
    rows = zip(column('id'), column('y'), column('y_hat'), column('a'),
               column('a_hat'), column('score'))
    for i, (id_, y, y_hat, a, a_hat, score) in enumerate(rows):
        line = i + 2
        id_ = id_.strip()
        if not id_:
            raise ParseError(line, "blank id")
        if id_ in seen:
            raise ParseError(line, "duplicate id '%s'" % id_)
        seen.add(id_)
        records.append(PredictionRecord(
            id_, _parseBit(y, 'y', line), _parseBit(y_hat, 'y_hat', line),
            a_hat=_parseOptBit(a_hat, 'a_hat', line),
            a=_parseOptBit(a, 'a', line),
            score=_parseScore(score, line)))
    log.info("Read %d records from %s", len(records), path)
    return records

def _parseBit(s: str, name: str, line: int) -> bool:
    s = s.strip()
    if s not in ('0', '1'):
        raise ParseError(line, "%s must be 0 or 1, got '%s'" % (name, s))
    return s == '1'

def _parseOptBit(s: str, name: str, line: int) -> typing.Optional[bool]:
    if not s.strip():
        return None
    return _parseBit(s, name, line)

def _parseScore(s: str, line: int) -> typing.Optional[float]:
    s = s.strip()
    if not s:
        return None
    try:
        score = float(s)
    except ValueError:
        raise ParseError(line, "score must be a number, got '%s'" % s)
    if math.isnan(score) or not 0.0 <= score <= 1.0:
        raise ParseError(line, "score must be in [0,1], got '%s'" % s)
    return score

@enforce_types
def describeDataset(path: str, records: list) -> DatasetFile:
    return DatasetFile(
        path, len(records),
        has_a=bool(records) and all(r.a is not None for r in records),
        has_a_hat=bool(records) and all(r.a_hat is not None for r in records),
        has_score=bool(records) and all(r.score is not None for r in records))

#==================================================================
#writing

@enforce_types
def writeDataset(records: list, path: str) -> None:
    """Write records so that readDataset(path) gives them back exactly"""
    def bit(x) -> str:
        return '' if x is None else ('1' if x else '0')

    df = pd.DataFrame(
        [[r.id, bit(r.y), bit(r.y_hat), bit(r.a), bit(r.a_hat),
          '' if r.score is None else repr(r.score)] for r in records],
        columns=HEADER)
    df.to_csv(path, index=False)
    log.info("Wrote %d records to %s", len(records), path)

#==================================================================
#splitting

@enforce_types
class SplitSpec(StrMixin):
    """
    @description
      How to cut a dataset into train / evaluation / common parts.
      Give either counts or fractions, one value per part.

      counts must add up to the number of records. fractions must add up
      to 1; the train and evaluation sizes round down and the common part
      takes the rest.

      train is held out unused (the classifiers were trained elsewhere),
      evaluation feeds the naive estimate, common holds the records with
      known true attributes.
    """

    def __init__(self, counts: typing.Optional[tuple] = None,
                 fractions: typing.Optional[tuple] = None, seed: int = 0):
        if (counts is None) == (fractions is None):
            raise InfeasibleSplit("give exactly one of counts, fractions")
        for values in (counts, fractions):
            if values is not None and len(values) != len(PARTS):
                raise InfeasibleSplit("need %d values, got %d"
                                      % (len(PARTS), len(values)))
        if counts is not None and min(counts) < 0:
            raise InfeasibleSplit("negative count in %s" % (counts,))
        if fractions is not None:
            if min(fractions) < 0.0:
                raise InfeasibleSplit("negative fraction in %s"
                                      % (fractions,))
            if abs(sum(fractions) - 1.0) > 1e-9:
                raise InfeasibleSplit("fractions add up to %g, not 1"
                                      % sum(fractions))
        self.counts = counts
        self.fractions = fractions
        self.seed = seed

    def sizes(self, n: int) -> typing.Tuple[int, int, int]:
        if self.counts is not None:
            if sum(self.counts) != n:
                raise InfeasibleSplit("counts %s add up to %d, have %d records"
                                      % (self.counts, sum(self.counts), n))
            return tuple(int(c) for c in self.counts) #type: ignore
        train = int(math.floor(self.fractions[0] * n))
        evaluation = int(math.floor(self.fractions[1] * n))
        return (train, evaluation, n - train - evaluation)

@enforce_types
def splitDataset(records: list, spec: SplitSpec) -> typing.Dict[str, list]:
    """Seeded shuffle, then contiguous slices of spec.sizes(). Parts are
    disjoint and together hold every record once."""
    n = len(records)
    sizes = spec.sizes(n)
    order = numpy.random.default_rng(spec.seed).permutation(n)
    parts, start = {}, 0
    for name, size in zip(PARTS, sizes):
        parts[name] = [records[int(i)] for i in order[start:start + size]]
        start += size
    assert start == n
    log.info("Split %d records into %s", n, dict(zip(PARTS, sizes)))
    return parts
