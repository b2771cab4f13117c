import pytest

from ulrichcert.certify import (
    BRANCH_CHI_MISMATCH,
    BRANCH_DIVISIBILITY,
    BRANCH_INCONCLUSIVE,
    BRANCH_RANK1,
    INCONCLUSIVE,
    NONEXISTENT,
    certify_complete_intersection,
    certify_line_bundle,
    certify_veronese,
    chi_integrality_check,
    prime_power_screen,
    reduce_to_dim4,
    replay,
    replay_matches,
)
from ulrichcert.errors import OutOfTheoremScope
from ulrichcert.exactcore import parse_scalar
from ulrichcert.invariants import CIContext


def ctx(m, degrees, a, r):
    return CIContext.from_data(m, degrees, a, r)


def test_prime_power_screen():
    assert prime_power_screen(5, 2, 2) == ["2^3 | r"]
    assert prime_power_screen(6, 2, 3) == ["2^4 | r"]
    assert prime_power_screen(4, 5, 2) == []  # gcd(a, 6) = 1 passes the screen
    assert prime_power_screen(4, 7, 3) == []
    assert prime_power_screen(4, 6, 1) == ["2^3 | r", "3^1 | r"]
    with pytest.raises(ValueError):
        prime_power_screen(0, 2, 2)


def test_chi_integrality_translations():
    for a in range(1, 11):
        for r in range(1, 7):
            assert chi_integrality_check(2, a, r) == (r * (a - 1) % 2 == 0)
            assert chi_integrality_check(3, a, r) == (r * (a**2 - 1) % 6 == 0)


def test_chi_integrality_line_always_holds():
    for a in range(1, 10):
        for r in range(1, 5):
            assert chi_integrality_check(1, a, r)


def test_screen_consistency_with_integrality():
    # a divisibility violation must come with an integrality failure for n >= 4
    for n in range(1, 9):
        for a in range(1, 11):
            for r in range(1, 7):
                if prime_power_screen(n, a, r) and n > 3:
                    assert not chi_integrality_check(n, a, r), (n, a, r)


def test_line_bundle_certificates():
    cert = certify_line_bundle(ctx(4, (1,), 2, 1))
    assert cert.branch == BRANCH_RANK1
    assert cert.witnesses["interval"] == [4, 1]
    assert cert.conclusion == NONEXISTENT

    cert = certify_line_bundle(ctx(4, (2, 2), 3, 1))
    assert cert.witnesses["interval"] == [10, 2]
    assert cert.conclusion == NONEXISTENT

    # on the line the interval closes up and nothing is contradicted
    cert = certify_line_bundle(ctx(1, (1,), 2, 1))
    assert cert.witnesses["interval"] == [1, 1]
    assert cert.conclusion == INCONCLUSIVE


def test_line_bundle_always_nonexistent_in_scope():
    # for m >= 2 and a >= 2 the interval is empty whatever the degrees are
    for m in range(2, 7):
        for a in range(2, 6):
            for degrees in [(1,), (2,), (4, 3), (2, 2, 2)]:
                cert = certify_line_bundle(ctx(m, degrees, a, 1))
                assert cert.conclusion == NONEXISTENT


def test_reduce_to_dim4():
    reduced = reduce_to_dim4(ctx(6, (2, 2), 2, 2))
    assert (reduced.m, reduced.degrees) == (4, (2, 2, 2, 2))
    reduced = reduce_to_dim4(ctx(4, (1,), 3, 2))
    assert reduced.degrees == (1, 1, 1, 1)
    reduced = reduce_to_dim4(ctx(5, (3, 1, 1), 2, 2))
    assert reduced.degrees == (3, 2, 1, 1)
    with pytest.raises(ValueError):
        reduce_to_dim4(ctx(3, (2,), 2, 2))


def test_certify_ci_headline_case():
    cert = certify_complete_intersection(ctx(4, (1,), 2, 2))
    assert cert.branch == BRANCH_CHI_MISMATCH
    assert cert.conclusion == NONEXISTENT
    assert cert.witnesses["delta_chi"] == "5/16"
    assert cert.witnesses["v_value"] == "1350"
    assert cert.witnesses["factor"] == 4320
    assert cert.hypotheses_attested == ("X is P^4",)


def test_certify_ci_rank3_high_dimension():
    cert = certify_complete_intersection(ctx(5, (3,), 2, 3))
    assert cert.branch == BRANCH_CHI_MISMATCH
    assert cert.conclusion == NONEXISTENT
    assert cert.witnesses["factor"] == 3840
    assert "higher-dimensional" in cert.hypotheses_attested[0]


def test_certify_ci_excluded_types():
    for degrees, label in [((2,), "(2, 1, ..., 1)"), ((2, 2), "(2, 2, 1, ..., 1)")]:
        for a in (2, 3):
            cert = certify_complete_intersection(ctx(4, degrees, a, 2))
            assert cert.branch == BRANCH_INCONCLUSIVE
            assert cert.conclusion == INCONCLUSIVE
            assert cert.witnesses["excluded_type"] == label
    # padded presentations of the same types are also recognized
    cert = certify_complete_intersection(ctx(4, (2, 1, 1, 1), 3, 2))
    assert cert.conclusion == INCONCLUSIVE


def test_certify_ci_rank1_routes_to_interval():
    cert = certify_complete_intersection(ctx(4, (3, 2), 5, 1))
    assert cert.branch == BRANCH_RANK1
    assert cert.conclusion == NONEXISTENT


def test_certify_ci_scope_errors():
    with pytest.raises(OutOfTheoremScope):
        certify_complete_intersection(ctx(3, (2,), 2, 2))
    with pytest.raises(ValueError):
        ctx(4, (2,), 2, 4)


def test_certify_ci_witness_recheck():
    cert = certify_complete_intersection(ctx(4, (3, 2), 3, 2))
    delta = parse_scalar(cert.witnesses["delta_chi"])
    value = parse_scalar(cert.witnesses["v_value"])
    d = 1
    for deg in cert.witnesses["reduced_degrees"]:
        d *= deg
    assert delta * cert.witnesses["factor"] == d * value
    assert value > 0


def test_certify_veronese_examples():
    cert = certify_veronese(4, 3, 2)
    assert cert.branch == BRANCH_CHI_MISMATCH and cert.conclusion == NONEXISTENT

    cert = certify_veronese(5, 2, 2)
    assert cert.branch == BRANCH_DIVISIBILITY
    assert cert.witnesses["violated"] == ["2^3 | r"]

    cert = certify_veronese(6, 2, 1)
    assert cert.branch == BRANCH_DIVISIBILITY

    cert = certify_veronese(7, 2, 3)
    assert cert.branch == BRANCH_CHI_MISMATCH
    assert cert.witnesses["reduced_degrees"] == [2, 2, 2, 1]

    cert = certify_veronese(5, 3, 1)
    assert cert.branch == BRANCH_RANK1


def test_certify_veronese_scope():
    for n, a, r in [(3, 2, 2), (4, 1, 2), (4, 2, 4), (2, 5, 1)]:
        with pytest.raises(OutOfTheoremScope):
            certify_veronese(n, a, r)


def test_certificate_json_shape():
    payload = certify_veronese(5, 2, 2).to_json()
    assert list(payload) == ["input", "branch", "witnesses", "hypotheses_attested", "conclusion"]


def test_padding_invariance_of_certificates():
    lhs = certify_complete_intersection(ctx(4, (3, 2), 3, 2))
    rhs = certify_complete_intersection(ctx(4, (3, 2, 1, 1, 1), 3, 2))
    assert lhs.payload() == rhs.payload()
    assert lhs.input != rhs.input  # the echo keeps the caller's presentation


def test_replay_round_trip():
    for spec in [(4, 2, 2), (5, 2, 3), (6, 3, 2), (8, 4, 1)]:
        cert = certify_veronese(*spec)
        assert replay_matches(cert)
        assert replay(cert).to_json() == cert.to_json()
    ci_cert = certify_complete_intersection(ctx(5, (2, 2), 3, 3))
    assert replay_matches(ci_cert)
