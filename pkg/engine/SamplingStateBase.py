import logging
log = logging.getLogger('samplingstate')

from enforce_typing import enforce_types
import typing

from engine.SamplingStrategy import SamplingStrategy
from engine.SamplingTrace import SamplingTrace, REASONS, TARGET_REACHED

@enforce_types
class SamplingStateBase(object):

    def __init__(self, ss: SamplingStrategy, trace: SamplingTrace):
        #number of iterations elapsed; 0 is the initial batch
        self.tick = 0

        #holds b, w, epsilon, max_iters, etc.
        self.ss = ss

        #one row per tick
        self.trace = trace

        #set by a step that ends the run
        self.stop_reason: typing.Optional[str] = None

    def takeStep(self) -> None:
        """This happens once per tick. A step that stops the run before
        revealing anything adds no row."""
        revealed = self.step()
        if revealed:
            self.trace.takeStep(self)
            target = self.ss.target
            if self.stop_reason is None and target is not None and \
               target.isReached(self.trace.last()):
                self.stop(TARGET_REACHED)

    def step(self) -> bool:
        """Reveal the next batch and update estimates. Return False if
        nothing was revealed."""
        raise NotImplementedError('implement in child')

    def snapshot(self) -> dict:
        raise NotImplementedError('implement in child')

    def stop(self, reason: str) -> None:
        assert reason in REASONS, reason
        if self.stop_reason is None:
            log.info("Stop at tick %d: %s", self.tick, reason)
            self.stop_reason = reason
