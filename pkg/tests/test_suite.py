"""Verification-suite plumbing: config loading, corpus determinism, and
the unit-root qualification used by the degree-recovery section."""

import json

import pytest

from iwaknot.errors import ConfigParse
from iwaknot.laurent import parse_poly
from iwaknot.suite import (
    DEFAULT_CONFIG,
    build_corpus,
    load_config,
    run_suite,
    unit_root_reduction_ok,
)


def test_load_config_default():
    config = load_config(None)
    assert config == DEFAULT_CONFIG
    assert config is not DEFAULT_CONFIG  # caller gets a copy


def test_load_config_json(tmp_path):
    path = tmp_path / "conf.json"
    path.write_text(json.dumps({"corpus_size": 3, "primes": [2, 3]}))
    config = load_config(str(path))
    assert config["corpus_size"] == 3
    assert config["primes"] == [2, 3]
    assert config["seed"] == DEFAULT_CONFIG["seed"]  # untouched keys survive


def test_load_config_toml(tmp_path):
    path = tmp_path / "conf.toml"
    path.write_text('corpus_size = 4\nprimes = [5, 7]\n')
    config = load_config(str(path))
    assert config["corpus_size"] == 4
    assert config["primes"] == [5, 7]


def test_load_config_errors(tmp_path):
    with pytest.raises(ConfigParse):
        load_config(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("[1, 2, 3]")
    with pytest.raises(ConfigParse):
        load_config(str(bad))


def test_build_corpus_deterministic():
    a = build_corpus(20240814, 10)
    b = build_corpus(20240814, 10)
    assert [(n, f.terms) for n, f in a] == [(n, f.terms) for n, f in b]
    c = build_corpus(1, 10)
    assert [f.terms for _, f in a] != [f.terms for _, f in c]
    names = [n for n, _ in a]
    assert "figure_eight" in names and "mu4_factor" in names


def test_unit_root_reduction_ok_known_cases():
    # fig8 mod 5: roots have order 2 and 4 -> m = 4 works
    assert unit_root_reduction_ok(parse_poly("t^2-3*t+1"), 5)
    # primitive quartic mod 2: root order 15 > 12, no single m works
    assert not unit_root_reduction_ok(parse_poly("t^4+t^3+1"), 2)
    assert not unit_root_reduction_ok(parse_poly("-43*t^4+35*t^3-22*t^2-6*t-3"), 2)
    # all roots are 5th roots of unity
    assert unit_root_reduction_ok(parse_poly("t^4+t^3+t^2+t+1"), 2)
    # degree drops mod p: disqualified
    assert not unit_root_reduction_ok(parse_poly("5*t^2-t-1"), 5)


def test_run_suite_smoke():
    config = {
        "corpus_size": 2,
        "primes": [2, 3],
        "ms": [1, 2],
        "twist_n_lo": -1,
        "twist_n_hi": 1,
        "twist_primes": [2, 3],
    }
    report = run_suite(config)
    assert report.verdict == "PASS"
    sections = [r["section"] for r in report.rows]
    assert sections == DEFAULT_CONFIG["sections"]
    assert all(r["fails"] == 0 for r in report.rows)


def test_run_suite_rejects_unknown_section():
    with pytest.raises(ConfigParse):
        run_suite({"sections": ["nonsense"]})
