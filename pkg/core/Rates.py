from enforce_typing import enforce_types

from core.errors import MissingGroup
from util.strutil import StrMixin

@enforce_types
class Rates(StrMixin):
    """Joint base rates r = P(y=1, a=1) and s = P(y=1, a=0).
    Zero rates are allowed here but flagged; estimators that divide by
    r or s call requireBoth()."""

    def __init__(self, r: float, s: float):
        assert r >= 0.0 and s >= 0.0, (r, s)
        assert r + s <= 1.0 + 1e-12, (r, s)
        self.r = r
        self.s = s

    @property
    def missing_group(self) -> bool:
        return self.r == 0.0 or self.s == 0.0

    def requireBoth(self) -> None:
        if self.r == 0.0:
            raise MissingGroup("no mass on (y=1, a=1)")
        if self.s == 0.0:
            raise MissingGroup("no mass on (y=1, a=0)")

    def ratio(self) -> float:
        """r/s, the ratio of base rates"""
        self.requireBoth()
        return self.r / self.s

    def toDict(self) -> dict:
        return {'r': self.r, 's': self.s, 'missing_group': self.missing_group}
