import logging
log = logging.getLogger('master')

from enforce_typing import enforce_types
from tqdm import tqdm
import os
import typing

from engine.SamplingTrace import MAX_ITERS, SamplingTrace

@enforce_types
class SamplingEngine(object):
    """
    @description
      Runs a sampling loop.

    @attributes
      state -- child of SamplingStateBase
      output_dir -- where trace.csv goes; None to keep it in memory
      progress -- show a tqdm bar?
    """

    def __init__(self, state, output_dir: typing.Optional[str] = None,
                 progress: bool = False):
        self.state = state
        self.output_dir = output_dir
        self.output_csv = "trace.csv" #magic number
        self.progress = progress

    def run(self) -> SamplingTrace:
        """
        @description
          Runs the sampling loop! This is the main work routine.

        @return
          trace -- SamplingTrace with its terminal reason set; also
            written to output_dir/trace.csv when output_dir is given
        """
        log.info("Begin.")
        log.info(str(self.state.ss))

        total = self.state.ss.max_iters + 1
        with tqdm(total=total, disable=not self.progress) as pbar:
            while True:
                self.takeStep()
                pbar.update(1)
                if self.doStop():
                    break
                self.state.tick += 1

        trace = self.state.trace
        trace.setReason(self.state.stop_reason)
        self.logToCsv()
        log.info("Done: %s after %d rows", trace.reason, trace.numRows())
        return trace

    def takeStep(self) -> None:
        """Run one tick, updates self.state"""
        log.debug("=============================================")
        log.debug("Tick=%d: begin", self.state.tick)

        self.state.takeStep()

        log.debug("Tick=%d: done", self.state.tick)

    def doStop(self) -> bool:
        if self.state.stop_reason is not None:
            return True
        if self.state.tick >= self.state.ss.max_iters:
            self.state.stop(MAX_ITERS)
            return True
        return False

    def logToCsv(self) -> None:
        if self.output_dir is None:
            return
        if not os.path.exists(self.output_dir):
            os.makedirs(self.output_dir)
        full_filename = os.path.join(self.output_dir, self.output_csv)
        self.state.trace.toCsv(full_filename)
        log.info("Wrote %s", full_filename)
