"""Certificates: emission, re-verification, tamper detection.

Every certificate must verify from its serialized matrices alone, byte
identical across runs, and any single-entry edit must flip the verdict
with a meaningful failed-claim name.
"""

import copy
import json
from math import gcd

import pytest

from sl23.certify import (
    VerifyResult,
    certify,
    dumps,
    loads,
    maxsub_table,
    q_divisibility_scan,
    verify,
)

ALL_CASES = [(9, 3), (9, 2), (10, 2), (10, 5), (11, 2), (11, 3)]


@pytest.fixture(scope="module")
def base():
    return certify(9, 3)


@pytest.fixture(scope="module")
def c11():
    return certify(11, 2)


@pytest.fixture(scope="module")
def c103():
    return certify(10, 3)


def tampered(cert, path, value):
    c = copy.deepcopy(cert)
    node = c
    for k in path[:-1]:
        node = node[k]
    node[path[-1]] = value
    return verify(c)


# --- maximal subgroup order table ------------------------------------------


def test_maxsub_table_q2():
    t2 = {e.case: e for e in maxsub_table(2)}
    assert len(t2) == 14
    assert t2[14].applicable
    assert t2[14].orders == ((None, 244823040),)
    assert t2[7].orders == ((None, 22517),)
    assert not t2[6].applicable and "q >= 5" in t2[6].reason
    assert not t2[12].applicable  # q = 2 is excluded by name
    assert not t2[10].applicable  # q even
    assert not t2[8].applicable  # 2 is not a proper power
    assert not t2[11].applicable  # 2 is not a square
    order1 = 2**55
    for i in range(1, 11):
        order1 *= 2**i - 1
    assert t2[1].orders == ((None, order1),)
    assert t2[1].label.startswith("E_")


def test_maxsub_table_q4():
    t4 = {e.case: e for e in maxsub_table(4)}
    assert t4[8].applicable
    assert len(t4[8].orders) == 1 and t4[8].orders[0][0] == 2
    o8 = 2**55
    for i in range(2, 12):
        o8 *= 2**i - 1
    o8 *= gcd(11, (4 - 1) // (2 - 1))
    assert t4[8].orders[0][1] == o8
    assert t4[11].applicable and t4[11].orders[0][0] == 2
    o11 = 2**55 * gcd(11, 1)
    for i in range(2, 12):
        o11 *= 2**i - 1 if i % 2 == 0 else 2**i + 1
    assert t4[11].orders[0][1] == o11
    assert not t4[14].applicable
    assert not t4[9].applicable


def test_maxsub_table_odd_q():
    t3 = {e.case: e for e in maxsub_table(3)}
    assert t3[10].applicable and t3[12].applicable
    assert not t3[13].applicable  # needs q = p with p = 1 (mod 3)
    assert t3[12].orders == ((None, 2**3 * 3 * 11 * 23 * gcd(11, 2)),)
    t7 = {e.case: e for e in maxsub_table(7)}
    assert t7[13].applicable
    assert t7[13].orders == ((None, 2**10 * 3**5 * 5 * 11 * gcd(11, 6)),)
    t5 = {e.case: e for e in maxsub_table(5)}
    assert t5[6].applicable
    assert t5[6].orders[0][1] == 39916800 * 4**10


def test_maxsub_table_prime_powers():
    t64 = {e.case: e for e in maxsub_table(64)}
    assert [q0 for q0, _ in t64[8].orders] == [4, 8]  # 64 = 4^3 = 8^2
    t23 = {e.case: e for e in maxsub_table(23)}
    assert not t23[12].applicable  # 23 = 0 (mod 23), not in the residue list


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_divisibility_scan_hits_only_cyclic_normalizer(q):
    rows = q_divisibility_scan(q)
    hot = [r.entry.case for r in rows if any(r.divisible)]
    assert hot == [7], (q, hot)


# --- certificate round trips -------------------------------------------------


@pytest.mark.parametrize("n,q", ALL_CASES)
def test_round_trip(n, q):
    cert = certify(n, q)
    r = verify(cert)
    assert r.ok, (n, q, r.failed_claim)
    assert bool(r)
    r2 = verify(loads(dumps(cert)))
    assert r2.ok, (n, q, r2.failed_claim)


@pytest.mark.parametrize("n,q", ALL_CASES)
def test_byte_stable(n, q):
    assert dumps(certify(n, q)) == dumps(certify(n, q))


def test_serialization_shape(base):
    text = dumps(base)
    assert text.endswith("\n")
    obj = json.loads(text)
    assert list(obj) == list(base)
    # all leaf integers are decimal strings
    assert obj["q"] == "3"
    assert isinstance(obj["matrices"]["x"][0][0], str)


def test_verify_result_truthiness():
    good = VerifyResult(True, None)
    bad = VerifyResult(False, "order of z")
    assert bool(good) and not bool(bad)
    assert bad.failed_claim == "order of z"


# --- tamper detection ---------------------------------------------------------


def test_tamper_matrix_entry(base):
    flip = "1" if base["matrices"]["x"][0][0] != "1" else "0"
    r = tampered(base, ("matrices", "x", 0, 0), flip)
    assert not r.ok and r.failed_claim


def test_tamper_order(base):
    r = tampered(base, ("orders", "z"), "5")
    assert not r.ok and r.failed_claim == "order of z"


def test_tamper_alpha(base):
    r = tampered(base, ("alphas", 2), "0")
    assert not r.ok and r.failed_claim


def test_tamper_assumptions(base):
    r = tampered(base, ("assumptions", 0), "trust me")
    assert not r.ok and r.failed_claim == "assumptions"


def test_tamper_q_factor(base):
    r = tampered(base, ("Q_factors", 0, 0), "4")
    assert not r.ok and r.failed_claim == "Q factorization"


def test_tamper_seed(base):
    r = tampered(base, ("seed",), "1")
    assert not r.ok and r.failed_claim == "seed consistency"


def test_tamper_charpoly(base):
    c = copy.deepcopy(base)
    row = c["charpoly"]["z"]
    row[0] = "1" if row[0] != "1" else "0"
    assert not verify(c).ok


def test_tamper_maxsub_scan(c11):
    c = copy.deepcopy(c11)
    c["maxsub_scan"][6]["orders"][0]["order"] = "1"
    assert not verify(c).ok
    c = copy.deepcopy(c11)
    c["maxsub_scan"][13]["orders"][0]["divisible"] = True
    r = verify(c)
    assert not r.ok and r.failed_claim == "maxsub table"


def test_tamper_witness_word(c103):
    assert verify(c103).ok
    c = copy.deepcopy(c103)
    c["construction"]["words"][1]["order"] = "3"
    r = verify(c)
    assert not r.ok and r.failed_claim == "witness word order"


def test_tamper_prime_pair(c103):
    c = copy.deepcopy(c103)
    c["construction"]["prime_pair"] = ["61", "5"]
    r = verify(c)
    assert not r.ok and r.failed_claim in (
        "prime pair",
        "prime pair divides group order",
    )


def test_malformed_certificates(base):
    c = copy.deepcopy(base)
    del c["alphas"]
    assert not verify(c).ok
    c = copy.deepcopy(base)
    c["extra"] = "x"
    assert not verify(c).ok
    assert not verify({"version": "1"}).ok
    assert not verify([1, 2]).ok
    r = verify({"version": "2"})
    assert not r.ok and r.failed_claim == "version"
    c = copy.deepcopy(base)
    c["n"] = "10"  # shape no longer matches the tag
    assert not verify(c).ok


def test_tamper_construction_tag(base):
    r = tampered(base, ("construction", "tag"), "special")
    assert not r.ok


# --- assumption strings ---------------------------------------------------------


def test_assumption_lines():
    a9 = certify(9, 3)["assumptions"]
    assert len(a9) == 2
    assert "3280" in a9[0]
    assert "PSL_9(3)" in a9[1]
    a92 = certify(9, 2)["assumptions"]
    assert "73*127" in a92[0]
    a11 = certify(11, 2)["assumptions"]
    assert "fourteen-row" in a11[0]
