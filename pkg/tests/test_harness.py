import json

import pytest

from amenability import algebra as alg
from amenability import harness as h
from amenability.algebra import validate
from amenability.corpus import by_name, corpus
from amenability.fileformat import dumps


def _corpus_instances():
    return [h.AlgebraInstance(e.algebra, e.name) for e in corpus()]


class TestGenerate:
    def test_deterministic(self):
        first = h.generate(7, 15, 8)
        second = h.generate(7, 15, 8)
        assert [r for _, r in first] == [r for _, r in second]
        assert [a.table for a, _ in first] == [a.table for a, _ in second]

    def test_dimension_cap_and_validity(self):
        for a, recipe in h.generate(3, 40, 4):
            assert 1 <= a.dim <= 4
            assert validate(a).ok
            assert a.label == recipe

    def test_rejects_bad_cap(self):
        with pytest.raises(ValueError):
            h.generate(0, 1, 0)

    def test_unitize_z1_recipe_gives_truncated_polynomials(self):
        hits = [a for seed in range(40) for a, r in h.generate(seed, 20, 4) if r == "unitize(Z1)"]
        assert hits
        assert all(a.table == by_name("Qx2").table for a in hits)


class TestChecks:
    def test_registry_ids(self):
        assert set(h.REGISTRY) == {
            "T2.1.i", "T2.1.ii", "T2.1.iii", "T2.1.iv", "C2.2", "T2.4", "T3.1", "C3.2", "T3.3",
            "T3.4", "T3.5", "C3.7", "T3.6", "C3.8", "T4.1", "C4.2", "T4.3", "T5.op", "T5.bidual",
            "DECOMP", "BRIDGE"}
        for c in h.REGISTRY.values():
            assert c.finite_dim_note

    def test_unknown_id(self):
        with pytest.raises(h.UnknownCheck):
            h.run_check("T9.9", [])

    def test_decomp_on_corpus(self):
        out = h.run_check("DECOMP", _corpus_instances())
        assert out.counterexamples == [] and out.passed == len(corpus())

    def test_opposite_on_truncated_polynomials(self):
        out = h.run_check("T5.op", [h.AlgebraInstance(by_name("Qx2"))])
        assert out.status == "pass" and out.passed == 1

    def test_unitization_zero_point_iff(self):
        inst = h.LauInstance(by_name("Z1"), alg.scalars(), (1,))
        out = h.run_check("T3.1", [inst])
        assert out.passed == 1 and out.vacuous_count == 0
        ctx = h.Context()
        assert ctx.zpa(by_name("Z1")) is False and ctx.zpa(inst.product) is False

    def test_vacuous_is_not_pass(self):
        # T4.3 needs unital factors; zero algebras never are
        out = h.run_check("T4.3", [h.TensorInstance(by_name("Z1"), by_name("Z2"))])
        assert out.passed == 0 and out.vacuous_count == 1 and out.status == "untested"

    def test_shape_mismatch_is_untested(self):
        out = h.run_check("T4.1", _corpus_instances())
        assert out.instances_tried == 0 and out.status == "untested"

    def test_conditional_is_inconclusive(self):
        out = h.run_check("BRIDGE", [h.AlgebraInstance(by_name("Qsqrt2"))])
        assert out.inconclusive_count == 1 and out.status == "inconclusive"

    def test_negated_entry_finds_counterexamples(self):
        bad = h.REGISTRY["DECOMP"].negated()
        out = h.run_check(bad, _corpus_instances())
        assert len(out.counterexamples) == len(corpus())

    def test_negated_registry_gives_nonzero_exit(self):
        registry = {"DECOMP": h.REGISTRY["DECOMP"].negated()}
        summary = h.check_all(0, 0, 12, registry=registry)
        assert summary.counterexample_found and summary.exit_code == 1


class TestDirectSumFinding:
    """Z1 is cyclically amenable but Z1 (+) Z1 = Z2 is not."""

    def test_counterexample_and_witness(self, tmp_path):
        inst = h.LauInstance(by_name("Z1"), by_name("Z1"), (0,), "sum(Z1, Z1)")
        out = h.run_check("T3.6", [inst])
        assert [w["check"]["clause"] for w in out.counterexamples] == ["(ii)"]
        path = tmp_path / "w.json"
        path.write_text(dumps(out.counterexamples[0]))
        w = h.load_witness(path)
        assert h.reverify(w)
        assert w["instance"]["provenance"] == "sum(Z1, Z1)"

    def test_tampered_witness_does_not_reverify(self):
        inst = h.LauInstance(by_name("Z1"), by_name("Z1"), (0,))
        w = h.run_check("T3.6", [inst]).counterexamples[0]
        w = json.loads(json.dumps(w))
        w["instance"]["right"] = h.instance_to_dict(h.AlgebraInstance(alg.scalars()))["algebra"]
        assert not h.reverify(w)


class TestInstances:
    def test_instance_round_trip(self):
        insts = h.build_instances(1, 3, 8)
        shapes = {i.shape for i in insts}
        assert shapes == {"algebra", "lau", "tensor", "morphism"}
        for inst in insts[::7]:
            again = h.instance_from_dict(json.loads(dumps(h.instance_to_dict(inst))))
            assert again == inst

    def test_self_sums_included(self):
        provs = {i.provenance for i in h.build_instances(0, 0, 12) if i.shape == "lau"}
        assert "sum(Z1, Z1)" in provs

    def test_morphism_kinds(self):
        kinds = {i.kind for i in h.build_instances(2, 5, 10) if i.shape == "morphism"}
        assert {"quotient", "lau_projection", "isomorphism", "tensor_slice"} <= kinds


class TestSummary:
    def test_small_run_deterministic(self):
        ids = ["DECOMP", "T3.6", "C2.2", "T4.1"]
        s1 = h.check_all(5, 8, 6, ids)
        s2 = h.check_all(5, 8, 6, ids)
        assert dumps(s1.to_dict()) == dumps(s2.to_dict())
        assert s1.text() == s2.text()

    def test_witnesses_written(self, tmp_path):
        inst = h.LauInstance(by_name("Z1"), by_name("Z1"), (0,))
        s = h.Summary(0, 0, 2, 1, [h.run_check("T3.6", [inst])])
        paths = h.write_witnesses(s, tmp_path / "w")
        assert paths and all(h.reverify(h.load_witness(p)) for p in paths)
