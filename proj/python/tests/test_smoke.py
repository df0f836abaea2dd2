import json
from fractions import Fraction

import pytest

import catcrypt


def load(name):
    return json.loads((catcrypt.corpus_dir() / name).read_text())


def test_shannon_otp_secure():
    code, report = catcrypt.check("check-shannon", "shannon-otp-1.json")
    assert code == 0
    assert report["verdict"] == "secure"
    assert report["witness"] is None


def test_identity_insecure_with_witness():
    code, report = catcrypt.check("check-dy", "dy-identity.json")
    assert code == 1
    assert report["verdict"] == "insecure"
    assert report["witness"]["kind"] == "algebraic"


def test_malformed_input():
    code, report = catcrypt.check("check-dy", "does-not-exist.json")
    assert code == 2
    assert report["verdict"] is None
    with pytest.raises(ValueError, match="line 1"):
        catcrypt.algebraically_secure("{")


def test_library_calls():
    assert catcrypt.algebraically_secure(load("dy-otp-2.json"))
    assert not catcrypt.decryption_condition(load("dy-constant.json"))
    assert not catcrypt.shannon_secure(load("shannon-fixed-key.json"))
    assert catcrypt.max_ind_cpa_advantage(load("ens-identity.json"), 3) == Fraction(1, 2)
    assert catcrypt.max_ind_cpa_advantage(load("ens-otp.json"), 3) == 0
    assert catcrypt.threshold("1/l^2", 3) == Fraction(1, 9)


def test_indcca2_bit_flip():
    code, report = catcrypt.check("check-indcca2", "ens-malleable-otp.json",
                                  adversaries="cca2-bitflip.json")
    assert code == 1
    assert report["horizon"]["L"] == 2
    rows = {(r["subject"], r["level"]): r for r in report["levels"]}
    assert rows[("bit-flip", 1)]["note"] == "guess probability 1/1"
    assert rows[("oracle-ignoring", 2)]["advantage"]["exact"] == "0/1"


def test_selftest_deterministic():
    a = catcrypt.check("selftest", seed=3, instances=10)
    assert a == catcrypt.check("selftest", seed=3, instances=10)
    assert catcrypt.check("selftest", instances=0)[1]["verdict"] == "vacuous"
