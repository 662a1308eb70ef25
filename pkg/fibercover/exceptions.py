#
# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""Exceptions defined by this package"""

from typing import Optional, Dict, List, Any

class FiberCoverError(Exception):
  """Base class for all error exceptions defined by this package."""
  pass

class WordSyntaxError(FiberCoverError):
  """A monodromy word could not be parsed."""
  position: int
  """0-based character offset of the offending token."""

  def __init__(self, msg: str, position: int):
    super().__init__(f"{msg} (at position {position})")
    self.position = position

class SlopeError(FiberCoverError):
  """A filling slope is zero or its coordinates are not coprime."""
  pass

class PatternMismatchError(FiberCoverError):
  """A monodromy word does not match the source pattern of a framing transform."""
  pass

class DisconnectedCoverError(FiberCoverError):
  """Cut data produced a non-transitive action."""
  orbits: List[List[int]]

  def __init__(self, orbits: List[List[int]]):
    sizes = ", ".join(str(len(o)) for o in orbits)
    super().__init__(f"Cover is disconnected: {len(orbits)} orbits of sizes {sizes}")
    self.orbits = orbits

class SearchBudgetExhausted(FiberCoverError):
  """A bounded search reached its cap without finding a result. Never a mathematical negative."""
  caps: Dict[str, Any]

  def __init__(self, msg: str, caps: Optional[Dict[str, Any]]=None):
    super().__init__(msg)
    self.caps = {} if caps is None else dict(caps)

class DegenerateSolutionError(FiberCoverError):
  """A construction has no cover for these parameters (e.g., a zero modulus)."""
  pass

class GuardViolation(FiberCoverError):
  """The slope guard of a case does not hold."""
  case_tag: str
  reason: str

  def __init__(self, case_tag: str, reason: str):
    super().__init__(f"Case {case_tag} guard violated: {reason}")
    self.case_tag = case_tag
    self.reason = reason

class NoApplicableCase(FiberCoverError):
  """No cover construction applies to a word and slope."""
  failures: Dict[str, str]

  def __init__(self, failures: Dict[str, str]):
    if len(failures) == 0:
      msg = "No case applies"
    else:
      msg = "No case applies: " + "; ".join(f"{k}: {v}" for k, v in failures.items())
    super().__init__(msg)
    self.failures = dict(failures)

class RelatorActionError(FiberCoverError):
  """A relator acts nontrivially on cosets, so the action does not factor through the group."""
  pass

class PreconditionError(FiberCoverError):
  """An operation was called with arguments violating its precondition."""
  pass

class MalformedCertificateError(FiberCoverError):
  """A serialized certificate is missing fields or has the wrong schema."""
  pass

class HomologyMismatchError(FiberCoverError):
  """The rewriting and Wang-sequence homology pipelines disagree. Always a bug."""
  pass
