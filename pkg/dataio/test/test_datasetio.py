from enforce_typing import enforce_types
import pytest

from core.errors import InfeasibleSplit, ParseError, SchemaError
from core.PredictionRecord import PredictionRecord
from dataio.datasetio import COMMON, EVALUATION, TRAIN, SplitSpec, \
    describeDataset, readDataset, splitDataset, writeDataset

@enforce_types
def _write(tmp_path, text: str) -> str:
    path = str(tmp_path / 'data.csv')
    with open(path, 'w') as f:
        f.write(text)
    return path

@enforce_types
def _records(n: int) -> list:
    return [PredictionRecord("r%d" % i, bool(i % 2), bool(i % 3),
                             a_hat=bool(i % 5), a=bool(i % 7),
                             score=(i % 10) / 10.0)
            for i in range(n)]

#==================================================================
#reading
@enforce_types
def testReadFullRow(tmp_path):
    path = _write(tmp_path, "id,y,y_hat,a,a_hat,score\nr1,1,1,0,1,0.62\n")
    recs = readDataset(path)
    assert recs == [PredictionRecord("r1", True, True, a_hat=True, a=False,
                                     score=0.62)]

@enforce_types
def testReadBlankOptionals(tmp_path):
    path = _write(tmp_path, "id,y,y_hat,a,a_hat,score\n"
                            "r1,1,0,,1,\nr2,0,1,,0,0.3\n")
    recs = readDataset(path)
    assert [r.a for r in recs] == [None, None]
    assert recs[0].score is None and recs[1].score == 0.3
    info = describeDataset(path, recs)
    assert info.num_records == 2
    assert not info.has_a
    assert info.has_a_hat
    assert not info.has_score
    assert "DatasetFile" in str(info)

@enforce_types
def testReadMissingOptionalColumns(tmp_path):
    path = _write(tmp_path, "y,id,y_hat,extra\n1,r1,0,zzz\n")
    recs = readDataset(path)
    assert recs == [PredictionRecord("r1", True, False)]

@enforce_types
def testReadBadValues(tmp_path):
    bad_rows = {"r2,2,1,0,1,0.5": 3, "r2,1,1,x,1,0.5": 3,
                "r2,1,1,0,1,1.5": 3, "r2,1,1,0,1,abc": 3,
                "r1,1,1,0,1,0.5": 3, ",1,1,0,1,0.5": 3}
    for row, line in bad_rows.items():
        path = _write(tmp_path, "id,y,y_hat,a,a_hat,score\n"
                                "r1,1,1,0,1,0.5\n" + row + "\n")
        with pytest.raises(ParseError) as e:
            readDataset(path)
        assert e.value.line == line, row

@enforce_types
def testReadSchemaErrors(tmp_path):
    with pytest.raises(SchemaError):
        readDataset(_write(tmp_path, "id,y,a\nr1,1,0\n"))
    with pytest.raises(SchemaError):
        readDataset(_write(tmp_path, ""))

@enforce_types
def testRoundTrip(tmp_path):
    recs = _records(50) + [PredictionRecord("odd", False, True),
                           PredictionRecord("tiny", True, True,
                                            score=1.0 / 3.0)]
    path = str(tmp_path / 'out.csv')
    writeDataset(recs, path)
    assert readDataset(path) == recs

#==================================================================
#splitting
@enforce_types
def testSplitExactCounts():
    recs = _records(2883)
    parts = splitDataset(recs, SplitSpec(counts=(1500, 1133, 250), seed=1))
    assert [len(parts[k]) for k in (TRAIN, EVALUATION, COMMON)] == \
        [1500, 1133, 250]
    ids = [r.id for k in (TRAIN, EVALUATION, COMMON) for r in parts[k]]
    assert sorted(ids) == sorted(r.id for r in recs)

@enforce_types
def testSplitDeterministic():
    recs = _records(100)
    spec = SplitSpec(fractions=(0.5, 0.3, 0.2), seed=4)
    assert splitDataset(recs, spec) == splitDataset(recs, spec)
    other = splitDataset(recs, SplitSpec(fractions=(0.5, 0.3, 0.2), seed=5))
    assert other != splitDataset(recs, spec)

@enforce_types
def testSplitFractions():
    recs = _records(101)
    parts = splitDataset(recs, SplitSpec(fractions=(0.5, 0.3, 0.2)))
    assert [len(parts[k]) for k in (TRAIN, EVALUATION, COMMON)] == \
        [50, 30, 21]

    whole = splitDataset(recs, SplitSpec(fractions=(1.0, 0.0, 0.0)))
    assert sorted(r.id for r in whole[TRAIN]) == sorted(r.id for r in recs)
    assert whole[EVALUATION] == [] and whole[COMMON] == []

@enforce_types
def testInfeasibleSplits():
    recs = _records(10)
    with pytest.raises(InfeasibleSplit):
        splitDataset(recs, SplitSpec(counts=(5, 5, 5)))
    with pytest.raises(InfeasibleSplit):
        splitDataset(recs, SplitSpec(counts=(5, 2, 2)))
    with pytest.raises(InfeasibleSplit):
        SplitSpec(fractions=(0.5, 0.5, 0.5))
    with pytest.raises(InfeasibleSplit):
        SplitSpec(counts=(5, -1, 6))
    with pytest.raises(InfeasibleSplit):
        SplitSpec(counts=(5, 5))
    with pytest.raises(InfeasibleSplit):
        SplitSpec()
    with pytest.raises(InfeasibleSplit):
        SplitSpec(counts=(1, 1, 1), fractions=(1.0, 0.0, 0.0))
