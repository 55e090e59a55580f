#conftest.py for engine/test

from enforce_typing import enforce_types

from engine.SamplingStateBase import SamplingStateBase
from engine.SamplingStrategy import SamplingStrategy
from engine.SamplingTrace import COLUMNS, SamplingTrace

#==================================================================
#testing stubs
class StubState(SamplingStateBase):
    """Reveals 10 labels per tick; its estimate walks down by 0.1 from 1.0.
    Optionally stops itself, or reveals nothing, at a given tick."""

    def __init__(self, max_iters: int = 3, stop_at=None, stop_reason=None,
                 idle_at=None):
        ss = SamplingStrategy(b=10, w=10, max_iters=max_iters)
        super().__init__(ss, SamplingTrace('stub'))
        self.stop_at = stop_at
        self.stop_with = stop_reason
        self.idle_at = idle_at
        self.labels_used = 0

    def step(self) -> bool:
        if self.tick == self.idle_at:
            self.stop(self.stop_with)
            return False
        self.labels_used += 10
        if self.tick == self.stop_at:
            self.stop(self.stop_with)
        return True

    def snapshot(self) -> dict:
        row = {col: 0.0 for col in COLUMNS}
        row.update({'iteration': self.tick, 'labels_used': self.labels_used,
                    'estimate': 1.0 - 0.1 * self.tick, 'estimator': 'general',
                    'plug_in': float('nan')})
        return row

@enforce_types
def stubRow(iteration: int, labels_used: int, estimate: float = 0.5) -> dict:
    row = {col: 0.0 for col in COLUMNS}
    row.update({'iteration': iteration, 'labels_used': labels_used,
                'estimate': estimate, 'estimator': 'general',
                'plug_in': float('nan'), 'direct': estimate})
    return row
