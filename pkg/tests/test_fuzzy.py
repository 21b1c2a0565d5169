import random

import pytest

from tenselab.algebra import CapExceeded, evaluate
from tenselab.fuzzy import (
    FuzzyInstance,
    build_fuzzy_algebra,
    dunn2_failure_instance,
    fuzzy_op,
    make_fuzzy_instance,
)
from tenselab.lattice import chain, diamond

import numpy as np

# ---------------------------------------------------------------- oracles


def _op_ref(inst, kind, phi):
    """Fold the defining join/meet by hand, one point at a time."""
    base = inst.base
    u = len(inst.universe)
    out = []
    for x in range(u):
        if kind in ("dia", "bdia"):
            acc = base.bottom
            for y in range(u):
                r = inst.r(x, y) if kind == "dia" else inst.r(y, x)
                acc = int(base.join[acc, base.meet[r, phi[y]]])
        else:
            acc = base.top
            for y in range(u):
                r = inst.r(x, y) if kind == "box" else inst.r(y, x)
                acc = int(base.meet[acc, base.imp[r, phi[y]]])
        out.append(acc)
    return tuple(out)


def _random_instance(rng):
    base = rng.choice([chain(2), chain(3), diamond()])
    u = rng.randrange(1, 4)
    universe = tuple(f"u{i}" for i in range(u))
    rel = {
        (x, y): base.names[rng.randrange(base.n)]
        for x in universe
        for y in universe
    }
    return make_fuzzy_instance(base, universe, rel)


class TestInstances:
    def test_relation_lookup(self):
        inst = dunn2_failure_instance()
        assert inst.base.names[inst.r("x", "y")] == "b"
        assert inst.base.names[inst.r(0, 0)] == "a"

    def test_partial_relation_rejected(self):
        with pytest.raises(ValueError, match="total"):
            make_fuzzy_instance(chain(2), ("x", "y"), {("x", "x"): "1"})

    def test_bad_shapes(self):
        with pytest.raises(ValueError):
            FuzzyInstance(chain(2), (), np.zeros((0, 0), dtype=np.int64))
        with pytest.raises(ValueError):
            FuzzyInstance(
                chain(2), ("x",), np.array([[7]], dtype=np.int64)
            )


class TestOperators:
    def test_against_reference(self):
        rng = random.Random(20240818)
        for _ in range(150):
            inst = _random_instance(rng)
            u = len(inst.universe)
            phi = tuple(rng.randrange(inst.base.n) for _ in range(u))
            for kind in ("dia", "box", "bdia", "bbox"):
                assert fuzzy_op(inst, kind, phi) == _op_ref(inst, kind, phi)

    def test_bad_kind_and_arity(self):
        inst = dunn2_failure_instance()
        with pytest.raises(ValueError):
            fuzzy_op(inst, "fia", (0, 0))
        with pytest.raises(ValueError):
            fuzzy_op(inst, "dia", (0,))


class TestProductAlgebra:
    def test_componentwise_order(self):
        inst = dunn2_failure_instance()
        res = build_fuzzy_algebra(inst)
        base = inst.base
        alg = res.algebra.base
        for i, phi in enumerate(res.carrier):
            for j, psi in enumerate(res.carrier):
                expected = all(base.leq[a, b] for a, b in zip(phi, psi))
                assert bool(alg.leq[i, j]) == expected

    def test_meet_join_are_pointwise(self):
        inst = _random_instance(random.Random(5))
        res = build_fuzzy_algebra(inst)
        base = inst.base
        alg = res.algebra.base
        for i, phi in enumerate(res.carrier):
            for j, psi in enumerate(res.carrier):
                meet = tuple(int(base.meet[a, b]) for a, b in zip(phi, psi))
                join = tuple(int(base.join[a, b]) for a, b in zip(phi, psi))
                assert res.carrier[int(alg.meet[i, j])] == meet
                assert res.carrier[int(alg.join[i, j])] == join

    def test_operator_tables_delegate_to_fuzzy_op(self):
        inst = dunn2_failure_instance()
        res = build_fuzzy_algebra(inst)
        for kind in ("dia", "box", "bdia", "bbox"):
            table = getattr(res.algebra, kind)
            for i, phi in enumerate(res.carrier):
                assert res.carrier[int(table[i])] == fuzzy_op(inst, kind, phi)

    def test_size_cap(self):
        inst = make_fuzzy_instance(
            chain(5),
            ("x", "y", "z"),
            {(x, y): "0" for x in ("x", "y", "z") for y in ("x", "y", "z")},
        )
        with pytest.raises(CapExceeded):
            build_fuzzy_algebra(inst)

    def test_predicate_names(self):
        inst = dunn2_failure_instance()
        res = build_fuzzy_algebra(inst)
        assert res.algebra.names[res.index_of((0, 0))] == "(0,0)"
        top = res.index_of((inst.base.top,) * 2)
        assert res.algebra.base.top == top


class TestDunn2Failure:
    def test_report(self):
        res = build_fuzzy_algebra(dunn2_failure_instance())
        rep = res.algebra.laws
        assert res.algebra.n == 25
        assert rep.all_green
        assert rep.failures() == ("dunn2_dia", "dunn2_bdia")

    def test_witness_values(self):
        inst = dunn2_failure_instance()
        res = build_fuzzy_algebra(inst)
        rep = res.algebra.laws
        w = rep.witness("dunn2_dia")
        names = res.algebra.names
        assert tuple(names[i] for i in w.args) == ("(0,0)", "(a,b)")
        assert names[w.lhs] == "(1,0)"
        assert names[w.rhs] == "(c,0)"

    def test_formula_level_failure(self):
        # the same gap, read through the evaluator at the x component:
        # box(phi | psi) reaches top while box phi | dia psi stops at c
        inst = dunn2_failure_instance()
        res = build_fuzzy_algebra(inst)
        alg = res.algebra
        base = inst.base
        w = alg.laws.witness("dunn2_dia")
        phi, psi = w.args
        lhs = evaluate(alg, {"p": phi, "q": psi}, "G (p | q)")
        rhs = evaluate(alg, {"p": phi, "q": psi}, "G p | F q")
        assert res.carrier[lhs][0] == base.top
        assert base.names[res.carrier[rhs][0]] == "c"
        assert not alg.base.leq[lhs, rhs]

    def test_backward_failure_is_dual(self):
        # symmetric relation: the bdia/bbox witness mirrors the forward one
        res = build_fuzzy_algebra(dunn2_failure_instance())
        w2 = res.algebra.laws.witness("dunn2_bdia")
        assert w2 is not None
        names = res.algebra.names
        assert names[w2.lhs] == "(1,0)" and names[w2.rhs] == "(c,0)"
