# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""Certificates for fillings: certify, scan and offline verification."""

from .certificate import Certificate, CertificateStatus, CSV_HEADER, witness_hash
from .certify import certify, framing_routes, degree_one_cover, TRIVIAL_CASE, LOW_INDEX_CASE
from .scan import scan, scan_summary, window_slopes
from .verify import verify_certificate
