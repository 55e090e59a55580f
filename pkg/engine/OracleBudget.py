import logging
log = logging.getLogger('budget')

from enforce_typing import enforce_types
import typing

from core.errors import BudgetExhausted, InvalidParams

@enforce_types
class OracleBudget:
    """An OracleBudget is the ledger of an oracle: which record ids have had
    their true attribute disclosed, and how many more may be.

    queriesUsed() always equals the number of distinct revealed ids."""

    def __init__(self, budget: typing.Optional[int] = None):
        if budget is not None and budget < 0:
            raise InvalidParams("budget must be >= 0, got %d" % budget)
        self.budget = budget
        self._revealed: typing.Set[str] = set()

    def queriesUsed(self) -> int:
        return len(self._revealed)

    def revealed(self) -> typing.FrozenSet[str]:
        return frozenset(self._revealed)

    def isRevealed(self, id: str) -> bool:
        return id in self._revealed

    def remaining(self) -> typing.Optional[int]:
        """None when uncapped"""
        if self.budget is None:
            return None
        return self.budget - len(self._revealed)

    def canAfford(self, n: int) -> bool:
        remaining = self.remaining()
        return remaining is None or n <= remaining

    def check(self, ids: list) -> None:
        """Raise unless `ids` could be spent right now"""
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate ids in one request")
        again = [id_ for id_ in ids if id_ in self._revealed]
        if again:
            raise ValueError("ids already revealed: %s" % again[:5])
        if not self.canAfford(len(ids)):
            raise BudgetExhausted(
                "request of %d exceeds remaining budget %d"
                % (len(ids), self.remaining()))

    def spend(self, ids: list) -> None:
        """Record the disclosure of `ids`. All or nothing."""
        self.check(ids)
        self._revealed.update(ids)
        log.debug("revealed %d ids, %d used", len(ids), len(self._revealed))

    def __str__(self) -> str:
        s = []
        s += ["OracleBudget={"]
        s += ['queries_used=%d' % self.queriesUsed()]
        s += ['; budget=%s' % ('unlimited' if self.budget is None
                               else self.budget)]
        s += [" /OracleBudget}"]
        return "".join(s)
