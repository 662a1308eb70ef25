# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""
General utility functions
"""
from __future__ import annotations

import os
import json
import hashlib
import tempfile
from math import gcd

from .internal_types import *

def canonical_json(data: Jsonable) -> str:
    """Serialize to JSON with sorted keys and no whitespace, for hashing."""
    return json.dumps(data, sort_keys=True, separators=(',', ':'))

def sha256_of_jsonable(data: Jsonable) -> str:
    """Return the hex sha256 digest of the canonical JSON form of data."""
    return hashlib.sha256(canonical_json(data).encode('utf-8')).hexdigest()

def atomic_write_text(filename: str, text: str) -> None:
    """Write text to filename by writing a sibling temp file and renaming it over the target."""
    dirname = os.path.dirname(os.path.abspath(filename))
    fd, tmp_name = tempfile.mkstemp(dir=dirname, prefix='.fibercover-', suffix='.tmp')
    try:
        with os.fdopen(fd, 'w') as f:
            f.write(text)
        os.replace(tmp_name, filename)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise

def iter_coprime_pairs(window: int) -> Iterator[Tuple[int, int]]:
    """Yield every coprime (a, b) with |a|, |b| <= window and (a, b) != (0, 0),
       in ascending lexicographic order."""
    for a in range(-window, window + 1):
        for b in range(-window, window + 1):
            if gcd(a, b) == 1:
                yield (a, b)
