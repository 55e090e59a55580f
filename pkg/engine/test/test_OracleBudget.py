from enforce_typing import enforce_types
import pytest

from core.errors import BudgetExhausted, InvalidParams
from engine.OracleBudget import OracleBudget

@enforce_types
def testUncapped():
    budget = OracleBudget()
    assert budget.queriesUsed() == 0
    assert budget.remaining() is None
    assert budget.canAfford(10 ** 9)

    budget.spend(['a', 'b'])
    budget.spend(['c'])
    assert budget.queriesUsed() == 3
    assert budget.revealed() == frozenset(['a', 'b', 'c'])
    assert budget.isRevealed('b')
    assert not budget.isRevealed('z')
    assert 'unlimited' in str(budget)

@enforce_types
def testCapped():
    budget = OracleBudget(3)
    budget.spend(['a', 'b'])
    assert budget.remaining() == 1
    assert budget.canAfford(1)
    assert not budget.canAfford(2)

    with pytest.raises(BudgetExhausted):
        budget.spend(['c', 'd'])
    assert budget.queriesUsed() == 2 #all or nothing

    budget.spend(['c'])
    assert budget.remaining() == 0
    assert 'budget=3' in str(budget)

@enforce_types
def testZeroBudget():
    budget = OracleBudget(0)
    assert budget.canAfford(0)
    with pytest.raises(BudgetExhausted):
        budget.check(['a'])

@enforce_types
def testNoRevealTwice():
    budget = OracleBudget()
    budget.spend(['a'])
    with pytest.raises(ValueError):
        budget.spend(['a'])
    with pytest.raises(ValueError):
        budget.spend(['b', 'b'])
    assert budget.queriesUsed() == 1

@enforce_types
def testCheckDoesNotSpend():
    budget = OracleBudget(5)
    budget.check(['a', 'b'])
    assert budget.queriesUsed() == 0

@enforce_types
def testBadBudget():
    with pytest.raises(InvalidParams):
        OracleBudget(-1)
