# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""Certifying every filling in a slope window."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

from ..internal_types import *
from ..config import FiberCoverConfig
from ..exceptions import FiberCoverError
from ..pkg_logging import logger
from ..util import iter_coprime_pairs
from ..word_algebra import TwistWord
from ..slope_calculus import Slope
from .certificate import Certificate, CertificateStatus
from .certify import certify

def window_slopes(window: int) -> List[Slope]:
    """Coprime slopes with |mu|, |lambda| <= window, one per +-pair, sorted."""
    if window < 1:
        raise FiberCoverError(f"Scan window must be >= 1, got {window}")
    slopes = {Slope(mu, lam).normalized() for mu, lam in iter_coprime_pairs(window)}
    return sorted(slopes)

def _certify_job(job: Tuple[str, Tuple[int, int], JsonableDict]) -> JsonableDict:
    word_text, (mu, lam), config_data = job
    config = FiberCoverConfig.from_jsonable(config_data, use_config_file=False)
    return certify(TwistWord.parse(word_text), Slope(mu, lam), config).to_jsonable()

def scan(
        word: TwistWord,
        window: int,
        config: Optional[FiberCoverConfig]=None,
        *,
        workers: int=1,
      ) -> List[Certificate]:
    """One certificate per slope in the window, sorted by slope.

       With workers > 1 the slopes are certified in worker processes; the
       output does not depend on the worker count.
    """
    if config is None:
        config = FiberCoverConfig()
    slopes = window_slopes(window)
    logger.debug(f"Scanning {len(slopes)} slopes of {word.to_text()!r} with {workers} workers")
    if workers <= 1:
        return [certify(word, s, config) for s in slopes]
    jobs = [(word.to_text(), s.as_tuple(), config.to_jsonable()) for s in slopes]
    with ProcessPoolExecutor(max_workers=workers) as executor:
        results = list(executor.map(_certify_job, jobs))
    return [Certificate.from_jsonable(data) for data in results]

def scan_summary(certificates: Iterable[Certificate]) -> Dict[str, int]:
    """Count of certificates per status, every status present."""
    counts = {status.value: 0 for status in CertificateStatus}
    for c in certificates:
        counts[c.status.value] += 1
    return counts
