"""Parameters of a synthetic audit population"""
import logging
log = logging.getLogger('simparams')

from enforce_typing import enforce_types
import typing

from core.errors import InvalidParams
from util.mathutil import isProb
from util.strutil import StrMixin

@enforce_types
class NegRates(StrMixin):
    """
    The y=0 slice. Estimators never look at it, but uniform sampling
    over all records does.

    alpha, beta -- P(y_hat=1 | y=0, a=1), P(y_hat=1 | y=0, a=0)
    g1, g2 -- P(a_hat != a | y=0, a=0), P(a_hat != a | y=0, a=1)
    p_a1 -- P(a=1 | y=0)
    """

    def __init__(self, alpha: float, beta: float, g1: float, g2: float,
                 p_a1: float):
        self.alpha = alpha
        self.beta = beta
        self.g1 = g1
        self.g2 = g2
        self.p_a1 = p_a1
        for name, v in self.toDict().items():
            if not isProb(v):
                raise InvalidParams("neg_rates.%s=%s not in [0,1]" % (name, v))

    def toDict(self) -> dict:
        return {'alpha': self.alpha, 'beta': self.beta, 'g1': self.g1,
                'g2': self.g2, 'p_a1': self.p_a1}

@enforce_types
class SimParams(StrMixin):
    """
    @description
      Ground truth of a synthetic population, seen on the positive class:
      alpha, beta -- P(y_hat=1 | y=1, a=1), P(y_hat=1 | y=1, a=0)
      r, s -- P(y=1, a=1), P(y=1, a=0)
      g1, g2 -- P(a_hat != a | y=1, a=0), P(a_hat != a | y=1, a=1)

      coupling in [-1, 1] moves the joint of (label error, attribute error)
      inside each (y, a) cell away from independence, keeping both
      marginals fixed. 0 means y_hat and a_hat are independent given (y, a);
      +-1 is the most extreme coupling the marginals allow.

      score_noise is the spread of the attribute scores; the default y=0
      slice mirrors the positive class (same g1, g2; y_hat=1 rates 1-alpha
      and 1-beta; P(a=1 | y=0) = r/(r+s)).
    """

    def __init__(self, alpha: float = 0.7, beta: float = 0.5,
                 r: float = 0.25, s: float = 0.25,
                 g1: float = 0.2, g2: float = 0.3,
                 coupling: float = 0.0, score_noise: float = 0.25,
                 seed: int = 0,
                 neg_rates: typing.Optional[NegRates] = None):
        for name, v in (('alpha', alpha), ('beta', beta), ('r', r), ('s', s),
                        ('g1', g1), ('g2', g2)):
            if not isProb(v):
                raise InvalidParams("%s=%s not in [0,1]" % (name, v))
        if r + s > 1.0:
            raise InvalidParams("r + s = %g > 1" % (r + s))
        if not (-1.0 <= coupling <= 1.0):
            raise InvalidParams("coupling=%g not in [-1,1]" % coupling)
        if score_noise < 0.0:
            raise InvalidParams("score_noise=%g < 0" % score_noise)

        self.alpha = alpha
        self.beta = beta
        self.r = r
        self.s = s
        self.g1 = g1
        self.g2 = g2
        self.coupling = coupling
        self.score_noise = score_noise
        self.seed = seed

        self.neg_rates_default = neg_rates is None
        if neg_rates is None:
            p_a1 = r / (r + s) if r + s > 0.0 else 0.5
            neg_rates = NegRates(1.0 - alpha, 1.0 - beta, g1, g2, p_a1)
            log.debug("y=0 slice uses default rates %s", neg_rates)
        self.neg_rates = neg_rates

    def trueBias(self) -> float:
        """alpha - beta"""
        return self.alpha - self.beta

    def withSeed(self, seed: int) -> 'SimParams':
        return SimParams(self.alpha, self.beta, self.r, self.s, self.g1,
                         self.g2, self.coupling, self.score_noise, seed,
                         None if self.neg_rates_default else self.neg_rates)

    def toDict(self) -> dict:
        return {'alpha': self.alpha, 'beta': self.beta, 'r': self.r,
                's': self.s, 'g1': self.g1, 'g2': self.g2,
                'coupling': self.coupling, 'score_noise': self.score_noise,
                'seed': self.seed, 'neg_rates': self.neg_rates.toDict(),
                'neg_rates_default': self.neg_rates_default}

    @classmethod
    def fromDict(cls, d: dict) -> 'SimParams':
        """Inverse of toDict. Missing keys take the defaults."""
        d = dict(d)
        neg = d.pop('neg_rates', None)
        if d.pop('neg_rates_default', False):
            neg = None
        unknown = set(d) - {'alpha', 'beta', 'r', 's', 'g1', 'g2',
                            'coupling', 'score_noise', 'seed'}
        if unknown:
            raise InvalidParams("unknown SimParams keys: %s" % sorted(unknown))
        for k, v in d.items():
            if k != 'seed':
                d[k] = float(v)
        if neg is not None:
            neg = NegRates(**{k: float(v) for k, v in neg.items()})
        return cls(neg_rates=neg, **d)
