# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""
Offline re-verification of certificates.

Nothing computed during certification is trusted: the cover is rebuilt from
its cut data, the lifting conditions are re-checked and the homology is
recomputed from scratch.
"""

from __future__ import annotations

from ..internal_types import *
from ..constants import DEFAULT_MAX_RELATOR_LENGTH
from ..exceptions import FiberCoverError, MalformedCertificateError
from ..pkg_logging import logger
from ..word_algebra import TwistWord
from ..slope_calculus import Slope
from ..cover_engine import (
    CoverRep,
    Intertwiner,
    build_rep,
    check_condition_I_II,
    is_intertwiner,
    surgery_lifts,
  )
from ..homology_engine import (
    CosetAction,
    HomologyCertificate,
    b1_filled_cover,
    mapping_torus_presentation,
    reidemeister_schreier,
  )
from .certificate import Certificate, witness_hash
from .certify import TRIVIAL_CASE, LOW_INDEX_CASE, degree_one_cover

def _matches(cert: Certificate, degree: int, b1: int, torsion: List[int]) -> bool:
    if cert.degree != degree:
        logger.debug(f"Certificate degree {cert.degree} != recomputed {degree}")
        return False
    if cert.b1 != b1 or cert.torsion != torsion:
        logger.debug(f"Certificate homology b1={cert.b1} {cert.torsion} != recomputed b1={b1} {torsion}")
        return False
    return True

def _verify_cover(cert: Certificate, word: TwistWord, s: Slope, witness: JsonableDict) -> bool:
    try:
        rep = CoverRep.from_jsonable(cast(JsonableDict, witness['cover']))
        tau = Intertwiner.from_jsonable(cast(List[int], witness['tau']))
        recorded = HomologyCertificate.from_jsonable(cast(JsonableDict, witness['homology']))
    except KeyError as e:
        raise MalformedCertificateError(f"Cover witness is missing field {e}") from e
    except (TypeError, ValueError) as e:
        raise MalformedCertificateError(f"Malformed cover witness: {e}") from e
    cd = rep.cut_data
    if cd is not None:
        rebuilt = build_rep(cd)
        if rebuilt.px != rep.px or rebuilt.py != rep.py:
            logger.debug("Cover images do not match its cut data")
            return False
        if len(cd.advance) == 0:
            cond_i, cond_ii = check_condition_I_II(cd)
            if not (cond_i and cond_ii):
                logger.debug(f"Cut data fails conditions I/II: I={cond_i} II={cond_ii}")
                return False
    if tau.degree != rep.degree or not is_intertwiner(rep, word, tau):
        logger.debug("Recorded tau is not an intertwiner")
        return False
    if not surgery_lifts(rep, tau, None, s, monodromy=word):
        logger.debug(f"Surgery curve {s} does not lift")
        return False
    homology = b1_filled_cover(word, rep, tau, s)
    if homology != recorded:
        logger.debug(f"Recorded {recorded} != recomputed {homology}")
        return False
    return _matches(cert, rep.degree, homology.b1, homology.torsion)

def _verify_trivial(cert: Certificate, word: TwistWord, s: Slope) -> bool:
    rep, tau = degree_one_cover()
    homology = b1_filled_cover(word, rep, tau, s)
    return _matches(cert, 1, homology.b1, homology.torsion)

def _verify_low_index(cert: Certificate, word: TwistWord, s: Slope, witness: JsonableDict) -> bool:
    try:
        data = cast(JsonableDict, witness['action'])
        images = [[int(v) - 1 for v in img] for img in cast(List[List[int]], data['images'])]
        basepoint = int(cast(int, data.get('basepoint', 1))) - 1
    except (KeyError, TypeError, ValueError) as e:
        raise MalformedCertificateError(f"Malformed low-index witness: {e}") from e
    max_length = int(cast(int, cert.config.get('max_relator_length', DEFAULT_MAX_RELATOR_LENGTH)))
    p = mapping_torus_presentation(word, s, max_relator_length=max_length)
    p.require_explicit()
    action = CosetAction(images, basepoint=basepoint)
    b1, torsion = reidemeister_schreier(p, action).abelianization()
    return _matches(cert, action.degree, b1, torsion)

def verify_certificate(c: Union[Certificate, Jsonable]) -> bool:
    """Re-run the condition checks, the lift checks and the homology computation
       for a certificate, returning True iff everything it claims reproduces.

       A certificate that is not certified claims nothing beyond b1 < 1 being
       unproven, and verifies as long as it does not report a positive b1.
       Raises MalformedCertificateError if the certificate cannot be read.
    """
    cert = c if isinstance(c, Certificate) else Certificate.from_jsonable(c)
    if not cert.certified:
        return cert.b1 is None or cert.b1 < 1
    witness = cert.witness
    word = cert.certified_word
    s = cert.certified_slope
    if witness is None or word is None or s is None or cert.b1 is None:
        raise MalformedCertificateError("Certified certificate lacks its witness, certified word, slope or b1")
    if cert.witness_hash != witness_hash(word.to_text(), s, witness):
        logger.debug("Witness hash does not match the witness payload")
        return False
    if cert.b1 < 1:
        return False
    kind = witness.get('kind')
    try:
        if kind == TRIVIAL_CASE:
            return cert.case_tag == TRIVIAL_CASE and _verify_trivial(cert, word, s)
        if kind == LOW_INDEX_CASE:
            return cert.case_tag == LOW_INDEX_CASE and _verify_low_index(cert, word, s, witness)
        if kind == 'cover':
            return _verify_cover(cert, word, s, witness)
    except MalformedCertificateError:
        raise
    except FiberCoverError as e:
        logger.debug(f"Re-verification of {cert} failed: {e}")
        return False
    raise MalformedCertificateError(f"Unknown witness kind {kind!r}")
