"""Bounded concurrent execution of verification suites."""

from __future__ import annotations

import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from qlittlewood.verify import SuiteParams, run_suite

if TYPE_CHECKING:
    from collections.abc import Sequence

    from qlittlewood.verify import SuiteReport

logger = logging.getLogger(__name__)

DEFAULT_CONCURRENCY = 1

# === Jobs ===


@dataclass(frozen=True, slots=True)
class SuiteJob:
    """Run one named suite with the given parameters."""

    suite: str
    params: SuiteParams = field(default_factory=SuiteParams)


# === Results ===


@dataclass(frozen=True, slots=True)
class SuiteFinished:
    """Report a suite that ran to completion, passing or not."""

    job: SuiteJob
    report: SuiteReport

    @property
    def passed(self) -> bool:
        return self.report.passed


@dataclass(frozen=True, slots=True)
class SuiteCrashed:
    """Report a suite that raised instead of producing a report."""

    job: SuiteJob
    error: str

    @property
    def passed(self) -> bool:
        return False


type SuiteResult = SuiteFinished | SuiteCrashed


def execute_job(job: SuiteJob) -> SuiteReport:
    """Entry point inside a worker process."""
    return run_suite(job.suite, job.params)


async def run_suites(
    jobs: Sequence[SuiteJob], concurrency: int = DEFAULT_CONCURRENCY
) -> list[SuiteResult]:
    """Run jobs with at most ``concurrency`` in flight; results follow job order.

    With ``concurrency == 1`` every job runs in a worker thread of this process,
    so suite caches are shared between jobs.
    """
    if concurrency < 1:
        msg = f"Concurrency must be at least 1, got {concurrency}"
        raise ValueError(msg)
    sem = asyncio.Semaphore(concurrency)
    loop = asyncio.get_running_loop()
    pool = ProcessPoolExecutor(max_workers=concurrency) if concurrency > 1 else None

    async def _run_one(index: int, job: SuiteJob) -> SuiteResult:
        async with sem:
            logger.debug("dispatching job %d: %s", index, job.suite)
            try:
                if pool is None:
                    report = await asyncio.to_thread(execute_job, job)
                else:
                    report = await loop.run_in_executor(pool, execute_job, job)
            except Exception as e:  # noqa: BLE001
                logger.warning("Suite %s crashed", job.suite, exc_info=True)
                return SuiteCrashed(job=job, error=f"{type(e).__name__}: {e}")
            logger.debug("job %d finished: %s", index, "pass" if report.passed else "FAIL")
            return SuiteFinished(job=job, report=report)

    try:
        return list(await asyncio.gather(*(_run_one(i, j) for i, j in enumerate(jobs))))
    finally:
        if pool is not None:
            pool.shutdown(wait=True)
