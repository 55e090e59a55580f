from enforce_typing import enforce_types
import typing

from util.mathutil import isProb
from util.strutil import StrMixin

@enforce_types
class ErrorProfile(StrMixin):
    """
    Attribute-classifier error rates on the positive class.

    g1 = P(a_hat != a | a=0, y=1)
    g2 = P(a_hat != a | a=1, y=1)
    delta1 = P(a_hat=1 | y_hat=1, a=0, y=1)
    delta2 = P(a_hat=0 | y_hat=1, a=1, y=1)

    Deltas are None when their conditioning event is empty.
    """

    def __init__(self, g1: float, g2: float,
                 delta1: typing.Optional[float] = None,
                 delta2: typing.Optional[float] = None):
        for name, v in (('g1', g1), ('g2', g2),
                        ('delta1', delta1), ('delta2', delta2)):
            assert v is None or isProb(v), "%s=%s not in [0,1]" % (name, v)
        self.g1 = g1
        self.g2 = g2
        self.delta1 = delta1
        self.delta2 = delta2

    def hasDeltas(self) -> bool:
        return self.delta1 is not None and self.delta2 is not None

    def asTuple(self) -> tuple:
        return (self.g1, self.g2, self.delta1, self.delta2)

    def toDict(self) -> dict:
        return {'g1': self.g1, 'g2': self.g2,
                'delta1': self.delta1, 'delta2': self.delta2}
