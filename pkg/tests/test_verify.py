import json
from fractions import Fraction

import pytest

import nsmac.verify as V
from nsmac import SYMBOLIC, EvalField, QTRat
from nsmac.verify import ResourceBound, relation_corpus, run_suite

FAST = EvalField.random(7)


@pytest.mark.parametrize("name, n, D", [
    ("cauchy", 2, 2),
    ("eigen", 2, 3),
    ("relations", 2, 0),
    ("specialization", 2, 2),
    ("lemma24", 2, 2),
])
@pytest.mark.parametrize("field", [SYMBOLIC, FAST], ids=["symbolic", "fastcheck"])
def test_suites_pass(name, n, D, field):
    res = run_suite(name, n, D, field=field)
    assert res.passed, res.counterexample
    assert res.checks > 0


def test_exact_only_suites_note_fastcheck():
    res = run_suite("reproducing", 1, 1, k=1, field=FAST)
    assert res.passed
    assert res.notes


def test_orthogonality_small():
    assert run_suite("orthogonality", 2, 1, k=1).passed


def test_relation_corpus_is_fixed():
    a = relation_corpus(3)
    b = relation_corpus(3)
    assert len(a) == 20 and a == b


def test_counterexample_reported(monkeypatch):
    monkeypatch.setattr(V, "coeff_a", lambda lam: QTRat(7))
    res = run_suite("cauchy", 2, 1)
    assert not res.passed
    cx = res.counterexample
    assert cx["identity"] == "E-kernel coefficient"
    assert cx["where"] == {"lam": [0, 0]}
    assert cx["right"] == "7"
    json.dumps(res.to_dict())


def test_time_limit():
    with pytest.raises(ResourceBound):
        run_suite("eigen", 3, 4, time_limit=0.0)


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope", 2, 1)


def test_combinatorial_identities():
    assert V.combinatorial_identities(3, 3).passed
