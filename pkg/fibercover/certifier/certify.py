# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""
Certifying one filling M_h(mu, lambda).

Routes are tried in order until one yields a cover with b1 >= 1:

  1. the filled manifold itself (a fibered class survives, e.g. slope (0, 1));
  2. the case plan for the word, then for each matching framing transform,
     each plan realized by up to `witness_attempts` covers;
  3. when no case applies anywhere, low-index subgroups of the filled
     presentation.

Refusals become certificate statuses; nothing but an internal
inconsistency between the homology pipelines escapes.
"""

from __future__ import annotations

import time

from ..internal_types import *
from ..config import FiberCoverConfig
from ..exceptions import (
    FiberCoverError,
    DegenerateSolutionError,
    HomologyMismatchError,
    NoApplicableCase,
    SearchBudgetExhausted,
  )
from ..pkg_logging import logger
from ..word_algebra import TwistWord, bundle_invariants
from ..slope_calculus import Slope, FramingTransform, apply_framing, BUILTIN_TRANSFORMS
from ..cover_engine import CoverRep, Intertwiner
from ..quotient_factory import plan_cover, realize_plan
from ..homology_engine import (
    HomologyCertificate,
    b1_filled_cover,
    low_index_subgroups,
    mapping_torus_presentation,
    reidemeister_schreier,
  )
from .certificate import Certificate, CertificateStatus, witness_hash

TRIVIAL_CASE = 'trivial'
LOW_INDEX_CASE = 'low-index'

def degree_one_cover() -> Tuple[CoverRep, Intertwiner]:
    """The filled manifold as its own cover."""
    return CoverRep([0], [0]), Intertwiner([0])

def framing_routes(word: TwistWord, config: FiberCoverConfig) -> List[FramingTransform]:
    """The transforms whose source matches a power of word, built-in ones first."""
    transforms: List[FramingTransform] = []
    if config.use_framing_transforms:
        transforms.extend(BUILTIN_TRANSFORMS)
    transforms.extend(FramingTransform.from_jsonable(t) for t in config.extra_transforms)
    return [t for t in transforms if t.match_power(word) is not None]

class _Outcome:
    """What the routes tried so far have turned up."""

    failures: Dict[str, str]
    exhausted: bool
    degenerate: bool
    case_applied: bool

    def __init__(self) -> None:
        self.failures = {}
        self.exhausted = False
        self.degenerate = False
        self.case_applied = False

    def status(self) -> CertificateStatus:
        if self.exhausted:
            return CertificateStatus.SEARCH_EXHAUSTED
        if self.degenerate:
            return CertificateStatus.DEGENERATE
        return CertificateStatus.HYPOTHESIS_FAILS

class _Certifier:
    word: TwistWord
    slope: Slope
    config: FiberCoverConfig
    outcome: _Outcome
    start: float

    def __init__(self, word: TwistWord, s: Slope, config: FiberCoverConfig):
        self.word = word
        self.slope = s
        self.config = config
        self.outcome = _Outcome()
        self.start = time.perf_counter()

    def finish(self, status: CertificateStatus, **kwargs: Any) -> Certificate:
        cert = Certificate(
            self.word,
            self.slope,
            status,
            failures=self.outcome.failures,
            seconds=time.perf_counter() - self.start,
            config=self.config.to_jsonable(),
            **kwargs
          )
        logger.debug(f"{cert} after {cert.seconds:.3f}s")
        return cert

    def certified(
            self,
            case_tag: str,
            word: TwistWord,
            s: Slope,
            degree: int,
            homology: HomologyCertificate,
            witness: JsonableDict,
            framing: Optional[FramingTransform]=None,
          ) -> Certificate:
        witness = dict(witness, homology=homology.to_jsonable())
        return self.finish(
            CertificateStatus.CERTIFIED,
            case_tag=case_tag,
            degree=degree,
            b1=homology.b1,
            torsion=homology.torsion,
            certified_word=word,
            certified_slope=s,
            framing=None if framing is None else framing.to_jsonable(),
            witness=witness,
            witness_hash=witness_hash(word.to_text(), s, witness),
            reason=f"b1 = {homology.b1} on a degree {degree} cover",
          )

    def try_trivial(self) -> Optional[Certificate]:
        rep, tau = degree_one_cover()
        homology = b1_filled_cover(self.word, rep, tau, self.slope)
        if homology.b1 < 1:
            self.outcome.failures[TRIVIAL_CASE] = f"filled manifold has b1 = 0, torsion {homology.torsion}"
            return None
        return self.certified(TRIVIAL_CASE, self.word, self.slope, 1, homology, dict(kind=TRIVIAL_CASE))

    def try_cases(self, label: str, word: TwistWord, s: Slope, framing: Optional[FramingTransform]) -> Optional[Certificate]:
        try:
            plan = plan_cover(bundle_invariants(word), s, use_swapped=self.config.use_swapped_invariants)
        except NoApplicableCase as e:
            for key, reason in e.failures.items():
                self.outcome.failures[f"{label}/{key}"] = reason
            return None
        self.outcome.case_applied = True
        key = f"{label}/{plan.case_tag.value}"
        found_b1_zero = 0
        try:
            for candidate in realize_plan(
                    plan,
                    degree_cap=self.config.degree_cap,
                    node_budget=self.config.node_budget,
                    attempts=self.config.witness_attempts,
                    group_order_cap=self.config.group_order_cap
                  ):
                homology = b1_filled_cover(plan.word, candidate.rep, candidate.tau, plan.slope)
                if homology.b1 >= 1:
                    witness = dict(
                        kind='cover',
                        plan=plan.to_jsonable(),
                        cover=candidate.rep.to_jsonable(),
                        tau=candidate.tau.to_jsonable(),
                        construction=candidate.to_jsonable(),
                      )
                    return self.certified(plan.case_tag.value, plan.word, plan.slope, candidate.degree, homology, witness, framing)
                found_b1_zero += 1
                logger.debug(f"{key}: cover of degree {candidate.degree} has b1 = 0")
        except SearchBudgetExhausted as e:
            self.outcome.exhausted = True
            self.outcome.failures[key] = f"search exhausted: {e}"
            return None
        except HomologyMismatchError:
            raise
        except DegenerateSolutionError as e:
            self.outcome.degenerate = True
            self.outcome.failures[key] = f"degenerate: {e}"
            return None
        except FiberCoverError as e:
            self.outcome.degenerate = True
            self.outcome.failures[key] = f"construction failed: {e}"
            return None
        # covers exist but none within the attempts has positive b1; not a negative result
        self.outcome.exhausted = True
        self.outcome.failures[key] = f"{found_b1_zero} covers with b1 = 0 within {self.config.witness_attempts} attempts"
        return None

    def try_low_index(self) -> Optional[Certificate]:
        p = mapping_torus_presentation(self.word, self.slope, max_relator_length=self.config.max_relator_length)
        if not p.explicit:
            self.outcome.failures[LOW_INDEX_CASE] = f"relators exceed max_relator_length {self.config.max_relator_length}"
            return None
        result = low_index_subgroups(p, self.config.index_cap, node_budget=self.config.node_budget)
        for action in result:
            if action.degree == 1:
                continue
            sub = reidemeister_schreier(p, action)
            b1, torsion = sub.abelianization()
            if b1 >= 1:
                homology = HomologyCertificate(b1, torsion, 0, 0, None)
                witness = dict(kind=LOW_INDEX_CASE, action=action.to_jsonable())
                return self.certified(LOW_INDEX_CASE, self.word, self.slope, action.degree, homology, witness)
        extent = "complete" if result.complete else f"cut short after {result.nodes} nodes"
        self.outcome.failures[LOW_INDEX_CASE] = f"no subgroup of index <= {self.config.index_cap} with b1 >= 1 ({extent})"
        return None

    def run(self) -> Certificate:
        cert = self.try_trivial()
        if cert is not None:
            return cert
        cert = self.try_cases("direct", self.word, self.slope, None)
        if cert is not None:
            return cert
        for t in framing_routes(self.word, self.config):
            try:
                word, s = apply_framing(t, self.word, self.slope)
            except FiberCoverError as e:
                self.outcome.failures[t.name] = str(e)
                continue
            cert = self.try_cases(t.name, word, s, t)
            if cert is not None:
                return cert
        if not self.outcome.case_applied and self.config.index_cap > 0:
            cert = self.try_low_index()
            if cert is not None:
                return cert
        status = self.outcome.status()
        caps = self.config.caps() if status is CertificateStatus.SEARCH_EXHAUSTED else None
        return self.finish(status, caps=caps, reason="; ".join(f"{k}: {v}" for k, v in self.outcome.failures.items()))

def certify(word: TwistWord, s: Slope, config: Optional[FiberCoverConfig]=None) -> Certificate:
    """Certify that the filling of the bundle with monodromy `word` along s is
       virtually Z-representable, or report why not.

       Deterministic for a fixed config. Never raises for a valid word and slope,
       except HomologyMismatchError, which signals an internal inconsistency.
    """
    if config is None:
        config = FiberCoverConfig()
    certifier = _Certifier(word, s, config)
    try:
        return certifier.run()
    except HomologyMismatchError:
        raise
    except FiberCoverError as e:
        logger.warning(f"Certifying {word.to_text()!r} {s} failed: {e}")
        certifier.outcome.failures['error'] = str(e)
        certifier.outcome.degenerate = True
        return certifier.finish(certifier.outcome.status(), reason=str(e))
