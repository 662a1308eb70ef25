#
# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""Tests for fibercover.certifier"""

import copy

import pytest

from fibercover.config import FiberCoverConfig
from fibercover.exceptions import FiberCoverError, MalformedCertificateError
from fibercover.word_algebra import parse_twist_word
from fibercover.slope_calculus import Slope
from fibercover.cover_engine import lifting_intertwiner
from fibercover.quotient_factory import case3b_cover
from fibercover.homology_engine import b1_filled_cover
from fibercover.certifier import (
    Certificate,
    CertificateStatus,
    certify,
    scan,
    scan_summary,
    window_slopes,
    framing_routes,
    verify_certificate,
  )

def quiet_config(**kwargs):
    kwargs.setdefault('index_cap', 0)
    return FiberCoverConfig(use_config_file=False, **kwargs)

@pytest.fixture(scope='module')
def case1_certificate():
    return certify(parse_twist_word("Dx Dy^4"), Slope(5, 4), quiet_config())

def test_case1_end_to_end(case1_certificate):
    cert = case1_certificate
    assert cert.status is CertificateStatus.CERTIFIED
    assert cert.case_tag == '1'
    assert cert.b1 >= 1
    construction = cert.witness['construction']
    # the cover is the regular representation of the quotient on four rows
    assert cert.degree == 4 * construction['group_order']
    assert construction['quotient']['degree'] == construction['group_order']
    assert cert.witness['plan']['case'] == '1'
    homology = cert.witness['homology']
    # a fixed class of the lifted monodromy lies outside the boundary span
    assert homology['witness'] is not None
    # rewriting and the Wang sequence agree on the unfilled cover
    assert homology['unfilled_b1'] == 1 + homology['fix_rank']
    assert verify_certificate(cert)

def test_certificate_json_round_trip(case1_certificate):
    data = case1_certificate.to_jsonable()
    assert data['schema'] == 'fibercover/1'
    again = Certificate.from_jsonable(data)
    assert again.to_jsonable() == data
    assert verify_certificate(data)

def test_verify_rejects_tampered_sigma(case1_certificate):
    data = copy.deepcopy(case1_certificate.to_jsonable())
    sigma = data['witness']['cover']['cut_data']['sigma'][0]
    sigma[0], sigma[1] = sigma[1], sigma[0]
    assert not verify_certificate(data)

def test_verify_rejects_edited_b1(case1_certificate):
    data = copy.deepcopy(case1_certificate.to_jsonable())
    data['b1'] += 1
    assert not verify_certificate(data)
    data['b1'] = 0
    assert not verify_certificate(data)

def test_verify_rejects_wrong_schema(case1_certificate):
    data = copy.deepcopy(case1_certificate.to_jsonable())
    data['schema'] = 'fibercover/0'
    with pytest.raises(MalformedCertificateError):
        verify_certificate(data)

def test_verify_rejects_missing_witness(case1_certificate):
    data = copy.deepcopy(case1_certificate.to_jsonable())
    del data['witness']
    with pytest.raises(MalformedCertificateError):
        verify_certificate(data)

def test_certify_is_deterministic(case1_certificate):
    again = certify(parse_twist_word("Dx Dy^4"), Slope(5, 4), quiet_config())
    a = case1_certificate.to_jsonable()
    b = again.to_jsonable()
    del a['timing'], b['timing']
    assert a == b

def test_case3b_end_to_end():
    cert = certify(parse_twist_word("Dx Dy^6"), Slope(1, 2), quiet_config())
    assert cert.status is CertificateStatus.CERTIFIED
    assert cert.case_tag == '3b'
    assert cert.degree == 30
    assert cert.b1 >= 1
    assert verify_certificate(cert)

def test_case3b_cover_with_lambda_five():
    word = parse_twist_word("Dx^10 Dy^6")
    s = Slope(1, 5)
    rep = case3b_cover(10, s, monodromy=word)
    tau = lifting_intertwiner(rep, word, s)
    assert tau is not None
    assert b1_filled_cover(word, rep, tau, s).b1 >= 1

def test_n_equal_one_fails_hypothesis():
    cert = certify(parse_twist_word("Dx Dy"), Slope(1, 1), quiet_config())
    assert cert.status is CertificateStatus.HYPOTHESIS_FAILS
    assert cert.b1 is None
    assert 'trivial' in cert.failures
    assert any(key.startswith('direct/') for key in cert.failures)
    assert verify_certificate(cert)

def test_low_index_fallback_reports_failure():
    # H_1 of this filling is trivial, so there is no subgroup of index 2
    cert = certify(parse_twist_word("Dx Dy"), Slope(1, 1), quiet_config(index_cap=2))
    assert cert.status is CertificateStatus.HYPOTHESIS_FAILS
    assert 'low-index' in cert.failures

def test_fibered_class_shortcut():
    cert = certify(parse_twist_word("Dx Dy^4"), Slope(0, 1), quiet_config())
    assert cert.status is CertificateStatus.CERTIFIED
    assert cert.case_tag == 'trivial'
    assert cert.degree == 1
    assert cert.b1 >= 1
    assert verify_certificate(cert)

@pytest.mark.parametrize("text,mu,lam", [("Dx^3", 1, 2), ("Dx^3 Dy^6", 1, 1), ("", 1, 0)])
def test_certify_never_raises(text, mu, lam):
    cert = certify(parse_twist_word(text), Slope(mu, lam), quiet_config())
    assert cert.status in set(CertificateStatus)
    assert cert.config['index_cap'] == 0

def test_search_exhausted_reports_caps():
    # the (3, 3, 4) triangle group has no transitive quotient on 2 points
    cert = certify(parse_twist_word("Dx Dy^4"), Slope(5, 4), quiet_config(degree_cap=2, use_framing_transforms=False))
    assert cert.status is CertificateStatus.SEARCH_EXHAUSTED
    assert cert.caps['degree_cap'] == 2

def test_framing_routes():
    h2 = parse_twist_word("Dx Dy Dx Dy")
    names = [t.name for t in framing_routes(h2, quiet_config())]
    assert "h^2 -> g^2" in names
    assert "h^2 -> (-h)^2" in names
    assert framing_routes(h2, quiet_config(use_framing_transforms=False)) == []
    extra = dict(source="Dx Dy", target="Dx Dy", slope_map=[[1, 0], [0, 1]], name="noop")
    assert [t.name for t in framing_routes(parse_twist_word("Dx Dy"), quiet_config(extra_transforms=[extra]))] == ["noop"]

def test_window_slopes():
    assert [s.as_tuple() for s in window_slopes(1)] == [(0, 1), (1, -1), (1, 0), (1, 1)]
    assert len(window_slopes(2)) == 8
    with pytest.raises(FiberCoverError):
        window_slopes(0)

def test_scan_window_one():
    certs = scan(parse_twist_word("Dx Dy"), 1, quiet_config())
    assert [c.slope.as_tuple() for c in certs] == [(0, 1), (1, -1), (1, 0), (1, 1)]
    by_slope = {c.slope.as_tuple(): c for c in certs}
    assert by_slope[(0, 1)].status is CertificateStatus.CERTIFIED
    assert by_slope[(0, 1)].case_tag == 'trivial'
    summary = scan_summary(certs)
    assert sum(summary.values()) == len(certs)
    assert set(summary) == {s.value for s in CertificateStatus}
    assert all(verify_certificate(c) for c in certs)

def test_six_rows_certify_through_3b():
    cert = certify(parse_twist_word("Dx^10 Dy^6"), Slope(1, 5), quiet_config())
    assert cert.status is CertificateStatus.CERTIFIED
    assert cert.case_tag == '3b'
    assert cert.degree == 30
    assert cert.framing is None
    assert verify_certificate(cert)

def test_h_squared_certifies_through_g_squared():
    cert = certify(parse_twist_word("(Dx Dy)^2"), Slope(1, 3), quiet_config())
    assert cert.status is CertificateStatus.CERTIFIED
    assert cert.framing['name'] == "h^2 -> g^2"
    assert cert.certified_slope == Slope(1, 2)
    assert cert.case_tag == '2a'
    construction = cert.witness['construction']
    assert cert.degree == 5 * construction['group_order']
    assert any(key.startswith('direct/') for key in cert.failures)
    assert verify_certificate(cert)

@pytest.mark.parametrize("mu,lam", [(1, 2), (1, 4)])
def test_h18_reaches_cases_only_through_framing(mu, lam):
    config = quiet_config(degree_cap=8, node_budget=50_000, group_order_cap=500)
    cert = certify(parse_twist_word("(Dx Dy)^18"), Slope(mu, lam), config)
    # n = 1 in both variants of the word itself
    assert any(key.startswith('direct/') for key in cert.failures)
    assert cert.status is not CertificateStatus.HYPOTHESIS_FAILS
    if cert.certified:
        assert cert.framing is not None
        assert verify_certificate(cert)
    else:
        assert any(key.startswith("h^18 -> g^18/") for key in cert.failures)
        assert cert.caps is None or cert.caps['group_order_cap'] == 500

def test_scan_h_squared_partitions_window():
    config = quiet_config(degree_cap=8, node_budget=50_000, group_order_cap=500)
    certs = scan(parse_twist_word("(Dx Dy)^2"), 1, config)
    assert [c.slope.as_tuple() for c in certs] == [s.as_tuple() for s in window_slopes(1)]
    summary = scan_summary(certs)
    assert sum(summary.values()) == len(certs) == 4
    for c in certs:
        if c.certified:
            assert c.case_tag == 'trivial' or c.framing is not None
            assert verify_certificate(c)
        else:
            assert c.framing is None and c.b1 is None
