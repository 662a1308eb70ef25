# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""
Certificates: the outcome of certifying one filling, with everything needed
to re-check a positive result offline.
"""

from __future__ import annotations

from aenum import Enum as AEnum

from ..internal_types import *
from ..constants import CERTIFICATE_SCHEMA
from ..exceptions import FiberCoverError, MalformedCertificateError
from ..util import sha256_of_jsonable
from ..word_algebra import TwistWord, parse_twist_word
from ..slope_calculus import Slope

class CertificateStatus(AEnum):
    """How certification of a filling ended. Only CERTIFIED is a claim."""

    CERTIFIED = 'certified'
    """A cover of the filling with b1 >= 1 was built and checked."""

    HYPOTHESIS_FAILS = 'hypothesis-fails'
    """No case guard holds, under any tried framing."""

    SEARCH_EXHAUSTED = 'search-exhausted'
    """A case applies but the searches ended within their caps without a cover of positive b1."""

    DEGENERATE = 'degenerate'
    """A case applies but its construction has no cover for these parameters."""

def witness_hash(word_text: str, slope: Slope, witness: JsonableDict) -> str:
    """sha256 over the certified word, slope and witness payload."""
    return sha256_of_jsonable(dict(word=word_text, slope=slope.to_jsonable(), witness=witness))

class Certificate:
    word: TwistWord
    slope: Slope
    status: CertificateStatus

    case_tag: Optional[str]
    """Case tag of the construction used; "trivial" or "low-index" for the non-case paths."""

    degree: Optional[int]
    b1: Optional[int]
    torsion: Optional[List[int]]

    certified_word: Optional[TwistWord]
    """The monodromy the cover was built for: the input, its cyclic normal form,
       its swap or a framing image."""

    certified_slope: Optional[Slope]

    framing: Optional[JsonableDict]
    """The framing transform applied, if any."""

    witness: Optional[JsonableDict]
    """The cover, intertwiner, quotient and homology data a verifier needs."""

    witness_hash: Optional[str]

    reason: str

    failures: Dict[str, str]
    """Why each attempted route did not certify."""

    caps: Optional[Dict[str, Any]]
    """The search caps in force, for search-exhausted results."""

    seconds: float

    config: JsonableDict
    """Snapshot of the configuration used."""

    def __init__(
            self,
            word: TwistWord,
            slope: Slope,
            status: CertificateStatus,
            *,
            case_tag: Optional[str]=None,
            degree: Optional[int]=None,
            b1: Optional[int]=None,
            torsion: Optional[List[int]]=None,
            certified_word: Optional[TwistWord]=None,
            certified_slope: Optional[Slope]=None,
            framing: Optional[JsonableDict]=None,
            witness: Optional[JsonableDict]=None,
            witness_hash: Optional[str]=None,
            reason: str='',
            failures: Optional[Dict[str, str]]=None,
            caps: Optional[Dict[str, Any]]=None,
            seconds: float=0.0,
            config: Optional[JsonableDict]=None,
          ):
        self.word = word
        self.slope = slope
        self.status = status
        self.case_tag = case_tag
        self.degree = degree
        self.b1 = b1
        self.torsion = None if torsion is None else list(torsion)
        self.certified_word = certified_word
        self.certified_slope = certified_slope
        self.framing = framing
        self.witness = witness
        self.witness_hash = witness_hash
        self.reason = reason
        self.failures = {} if failures is None else dict(failures)
        self.caps = None if caps is None else dict(caps)
        self.seconds = seconds
        self.config = {} if config is None else dict(config)

    @property
    def certified(self) -> bool:
        return self.status is CertificateStatus.CERTIFIED

    def to_jsonable(self) -> JsonableDict:
        return dict(
            schema=CERTIFICATE_SCHEMA,
            word=self.word.to_text(),
            slope=self.slope.to_jsonable(),
            status=self.status.value,
            case=self.case_tag,
            degree=self.degree,
            b1=self.b1,
            torsion=self.torsion,
            certified_word=None if self.certified_word is None else self.certified_word.to_text(),
            certified_slope=None if self.certified_slope is None else self.certified_slope.to_jsonable(),
            framing=self.framing,
            witness=self.witness,
            witness_hash=self.witness_hash,
            reason=self.reason,
            failures=dict(self.failures),
            caps=self.caps,
            timing=dict(seconds=self.seconds),
            config=self.config,
          )

    @classmethod
    def from_jsonable(cls, data: Jsonable) -> Certificate:
        """Raises MalformedCertificateError on a wrong schema or a missing or ill-typed field."""
        if not isinstance(data, dict):
            raise MalformedCertificateError(f"Certificate must be a JSON object, got {type(data).__name__}")
        schema = data.get('schema')
        if schema != CERTIFICATE_SCHEMA:
            raise MalformedCertificateError(f"Unsupported certificate schema {schema!r}")
        try:
            word = parse_twist_word(cast(str, data['word']))
            slope = Slope.from_jsonable(data['slope'])
            status = CertificateStatus(data['status'])
            certified_word_text = data.get('certified_word')
            certified_slope_data = data.get('certified_slope')
            b1 = data.get('b1')
            degree = data.get('degree')
            torsion = data.get('torsion')
            timing = cast(Dict[str, Any], data.get('timing') or {})
            result = cls(
                word,
                slope,
                status,
                case_tag=cast(Optional[str], data.get('case')),
                degree=None if degree is None else int(cast(int, degree)),
                b1=None if b1 is None else int(cast(int, b1)),
                torsion=None if torsion is None else [int(v) for v in cast(List[int], torsion)],
                certified_word=None if certified_word_text is None else parse_twist_word(cast(str, certified_word_text)),
                certified_slope=None if certified_slope_data is None else Slope.from_jsonable(certified_slope_data),
                framing=cast(Optional[JsonableDict], data.get('framing')),
                witness=cast(Optional[JsonableDict], data.get('witness')),
                witness_hash=cast(Optional[str], data.get('witness_hash')),
                reason=str(data.get('reason', '')),
                failures={str(k): str(v) for k, v in cast(Dict[str, Any], data.get('failures') or {}).items()},
                caps=cast(Optional[Dict[str, Any]], data.get('caps')),
                seconds=float(cast(float, timing.get('seconds', 0.0))),
                config=cast(Optional[JsonableDict], data.get('config')),
              )
        except KeyError as e:
            raise MalformedCertificateError(f"Certificate is missing field {e}") from e
        except (TypeError, ValueError, FiberCoverError) as e:
            raise MalformedCertificateError(f"Malformed certificate: {e}") from e
        if result.certified:
            if result.witness is None or result.certified_word is None or result.certified_slope is None or result.b1 is None:
                raise MalformedCertificateError("Certified certificate lacks its witness, certified word, slope or b1")
        return result

    def csv_row(self) -> List[Any]:
        """word, mu, lambda, status, case, degree, b1."""
        return [
            self.word.to_text(),
            self.slope.mu,
            self.slope.lam,
            self.status.value,
            '' if self.case_tag is None else self.case_tag,
            '' if self.degree is None else self.degree,
            '' if self.b1 is None else self.b1,
          ]

    def __str__(self) -> str:
        detail = f", case={self.case_tag}, degree={self.degree}, b1={self.b1}" if self.certified else ""
        return f"Certificate({self.word.to_text()!r} {self.slope}: {self.status.value}{detail})"

    def __repr__(self) -> str:
        return str(self)

CSV_HEADER = ['word', 'mu', 'lambda', 'status', 'case', 'degree', 'b1']
