import logging
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar

from config import EXECUTOR, EXECUTORS, MAX_WORKERS

logger = logging.getLogger(__name__)

T = TypeVar('T')
R = TypeVar('R')


class BatchRunner:
    """Runs one job per input record on a worker pool; results keep input order."""

    def __init__(self, max_workers: Optional[int] = None, executor: Optional[str] = None):
        """
        Initialize the runner.

        Args:
            max_workers (int): Pool size (defaults to MAX_WORKERS)
            executor (str): 'process' or 'thread' (defaults to EXECUTOR)
        """
        self.max_workers = max_workers or MAX_WORKERS
        self.kind = executor or EXECUTOR
        if self.kind not in EXECUTORS:
            raise ValueError(f"Unknown executor '{self.kind}'; expected one of {', '.join(EXECUTORS)}")
        self.executor = None
        self.is_running = False
        logger.info(f"Batch runner initialized ({self.max_workers} {self.kind} workers)")

    def start(self):
        """Start the worker pool."""
        try:
            if not self.is_running:
                if self.kind == 'process':
                    self.executor = ProcessPoolExecutor(max_workers=self.max_workers)
                else:
                    self.executor = ThreadPoolExecutor(max_workers=self.max_workers, thread_name_prefix='record')
                self.is_running = True
                logger.info("Batch runner started")
            else:
                logger.warning("Batch runner is already running")

        except Exception as e:
            logger.error(f"Error starting batch runner: {e}")
            raise

    def stop(self):
        """Stop the worker pool, waiting for running jobs."""
        try:
            if self.is_running:
                self.executor.shutdown(wait=True)
                self.executor = None
                self.is_running = False
                logger.info("Batch runner stopped")
            else:
                logger.warning("Batch runner is not running")

        except Exception as e:
            logger.error(f"Error stopping batch runner: {e}")
            raise

    def run(self, job: Callable[[T], R], items: Sequence[T]) -> List[R]:
        """
        Apply job to every item.

        A single item runs inline; several run on the pool. With process
        workers the job, the items and the results must pickle, so pass a
        module-level function (or a functools.partial of one). The first
        exception raised by a job propagates to the caller.

        Args:
            job: Function applied to each item
            items: Inputs, in output order

        Returns:
            List: job results in the order of items
        """
        if len(items) <= 1 or self.max_workers == 1:
            return [job(item) for item in items]

        started_here = not self.is_running
        if started_here:
            self.start()
        try:
            results = list(self.executor.map(job, items))
            logger.info(f"Processed {len(results)} records")
            return results
        finally:
            if started_here:
                self.stop()

    def __enter__(self):
        self.start()
        return self

    def __exit__(self, exc_type, exc, tb):
        self.stop()
        return False
