# Copyright 2026 The ordproof Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ==============================================================================

import pathlib

import pytest

import ordproof as op

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


def test_ordinals():
    a = op.Ordinal("w^2*3 + 5")
    assert str(a) == "w^2*3 + 5"
    assert op.Ordinal("w + w^2") == op.Ordinal("w^2")
    assert op.Ordinal("w") < op.Ordinal("w+1")
    assert str(op.Ordinal("w").fund(1)) == "2"
    assert op.Ordinal("w").num_bound(1) == 3
    assert str(op.Ordinal(3) + "w") == "w"
    with pytest.raises(ValueError):
        op.Ordinal("w^")


def test_fast_growing_hierarchy():
    assert [op.fgh_eval(1, n) for n in range(4)] == [1, 3, 5, 7]
    assert op.fgh_eval(2, 3) == 2**4 * 4 - 1
    assert op.fgh_eval("w", 2) is None
    assert op.fgh_eval("w", 2, cap=10**12) == op.fgh_eval(3, 2, cap=10**12)
    assert op.fgh_cmp("w", 1, 8) == 7
    assert op.fgh_cmp("w", 1, 7) is None


def test_step_down():
    r = op.sd_verify("fund(0)@w", base=0)
    assert str(r["bo"]) == "1"
    assert r["valid"] and r["semantics"] == "holds"


def test_proofs_and_extraction():
    text = (DATA / "demo-2plus2.sexp").read_text()
    assert op.proof_check(text, 2) is None
    m = op.proof_metrics(text, 2)
    assert m["dcut"] <= 1 and m["height"] > 0
    r = op.extract(text, n=2)
    assert r["outcome"] == "witness" and r["witness"] == 4
    assert r["bound_confirmed"] is True
    r = op.extract((DATA / "demo-refl.sexp").read_text(), stop="axiom")
    assert r["witness"] == 0
    assert {"iteration", "rule", "ord", "kEnd", "truth", "action"} <= set(r["trace"][0])
    r = op.extract(text, max_iter=0)
    assert r["outcome"] == "exhausted" and r["reason"] == "iteration-limit"
    with pytest.raises(ValueError):
        op.proof_check("(ax (seq (= 0 0)")


def test_infinite_terms():
    text = "(E0 (embed " + (DATA / "demo-refl.sexp").read_text() + " 1))"
    m = op.inf_metrics(text)
    assert m["dcut"] <= 1
    assert op.Ordinal("w") < m["pord"]
