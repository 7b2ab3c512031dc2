"""Groebner bases, syzygies, and staircase numerics, checked against frozen
hand-derived values and an independent dense linear-algebra oracle."""

import random
import warnings

import pytest

from cmwild.errors import InputError
from cmwild.groebner import (
    ModuleOrder,
    TaggedBasis,
    buchberger,
    divide_by_one_minus_t,
    hilbert_polynomial_values,
    module_numerator,
    mono_divides,
    monomial_ideal_numerator,
    staircase_krull_dim,
    standard_terms,
    vec_add,
    vec_degree,
    vec_mono_shift,
)
from cmwild.poly import PolyRing, grevlex_key, monomials_of_degree
from cmwild.rings import QuotientRing


def gauss_rank_mod_p(rows, p):
    """Row-echelon rank over F_p, independent of the package internals."""
    rows = [list(r) for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        piv = None
        for r in range(rank, len(rows)):
            if rows[r][c] % p:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        rows[rank] = [v * inv % p for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][c] % p:
                f = rows[r][c]
                rows[r] = [(v - f * w) % p for v, w in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def ideal_gb(ring: QuotientRing):
    return [str(f) for f in ring.groebner]


class TestBuchbergerIdeals:
    def test_two_quadrics(self):
        # (x^2 - y^2, x^2 + y^2) = (x^2, y^2) since 2 is invertible
        r = QuotientRing.from_strings(["x", "y"], ["x^2-y^2", "x^2+y^2"])
        assert ideal_gb(r) == ["x^2", "y^2"]

    def test_fermat_quartic_plus_squares(self):
        r = QuotientRing.from_strings(
            ["x", "y", "z"], ["x^4+y^4+z^4", "x^2", "y^2"]
        )
        assert ideal_gb(r) == ["x^2", "y^2", "z^4"]

    def test_membership_of_inputs(self):
        r = QuotientRing.from_strings(
            ["x", "y", "z"], ["x^4+y^4+z^4", "x^2", "y^2"]
        )
        for f in r.relations:
            assert r.is_zero_element(f)
        assert not r.is_zero_element(r.parse("z^3"))

    def test_spolys_of_output_reduce_to_zero(self):
        rng = random.Random(3)
        ring = PolyRing(["x", "y", "z"], 101)
        for _ in range(25):
            gens = []
            for _g in range(rng.randrange(1, 4)):
                d = rng.randrange(1, 4)
                f = ring.zero()
                for m in monomials_of_degree(3, d):
                    if rng.random() < 0.4:
                        f = f + ring.monomial(m, rng.randrange(1, 101))
                if not f.is_zero():
                    gens.append(f)
            if not gens:
                continue
            q = QuotientRing(ring, gens)
            gb = q.ideal_basis
            vecs = gb.vectors
            p = 101
            for i in range(len(vecs)):
                for j in range(i):
                    (pi, mi), (pj, mj) = gb.lts[i], gb.lts[j]
                    assert pi == pj == 0
                    lcm = tuple(max(a, b) for a, b in zip(mi, mj))
                    s = vec_add(
                        vec_mono_shift(vecs[i], tuple(l - a for l, a in zip(lcm, mi)), 1, p),
                        vec_mono_shift(vecs[j], tuple(l - a for l, a in zip(lcm, mj)), p - 1, p),
                        p,
                    )
                    assert gb.reduces_to_zero(s)
            for f in gens:
                assert q.is_zero_element(f)

    def test_deterministic_under_permutation(self):
        rels = ["x^4+y^4+z^4", "x^2", "y^2"]
        perms = [
            rels,
            [rels[2], rels[0], rels[1]],
            [rels[1], rels[2], rels[0]],
        ]
        bases = [
            ideal_gb(QuotientRing.from_strings(["x", "y", "z"], pr))
            for pr in perms
        ]
        assert bases[0] == bases[1] == bases[2]


class TestModuleBasesAndSyzygies:
    def test_koszul_syzygy_of_two_squares(self):
        # syzygies of (x^2, y^2) over F_p[x, y]: generated by (y^2, -x^2)
        ring = PolyRing(["x", "y"])
        p = ring.p
        order = ModuleOrder((0,), 2)
        gens = [{(0, (2, 0)): 1}, {(0, (0, 2)): 1}]
        tb = TaggedBasis(gens, order, p)
        syz = tb.syzygy_generators()
        assert syz == [{(0, (0, 2)): 1, (1, (2, 0)): p - 1}]

    def test_product_criterion_not_applied_to_modules(self):
        # u = x*e1 + y*e2, v = y*e1 + x*e2: (y^2 - x^2)*e2 lies in the span
        # and must be detected, which fails if coprime S-pairs are skipped
        ring = PolyRing(["x", "y"], 101)
        order = ModuleOrder((1, 1), 2)
        u = {(0, (1, 0)): 1, (1, (0, 1)): 1}
        v = {(0, (0, 1)): 1, (1, (1, 0)): 1}
        gb = buchberger([u, v], order, 101)
        w = {(1, (0, 2)): 1, (1, (2, 0)): 100}
        assert gb.reduces_to_zero(w)

    def test_tagged_coordinates_solve_membership(self):
        ring = PolyRing(["x", "y"], 101)
        order = ModuleOrder((0,), 2)
        gens = [{(0, (2, 0)): 1}, {(0, (0, 2)): 1}]  # x^2, y^2
        tb = TaggedBasis(gens, order, 101)
        # x^3 + x*y^2 = x * x^2 + x * y^2
        target = {(0, (3, 0)): 1, (0, (1, 2)): 1}
        coords = tb.coordinates(target)
        assert coords is not None
        p = 101
        rebuilt = {}
        for (idx, m), c in coords.items():
            rebuilt = vec_add(rebuilt, vec_mono_shift(gens[idx], m, c, p), p)
        assert rebuilt == target
        assert tb.coordinates({(0, (1, 0)): 1}) is None

    def test_syzygies_are_syzygies_random(self):
        rng = random.Random(4)
        ring = PolyRing(["x", "y", "z"], 101)
        p = 101
        for _ in range(10):
            order = ModuleOrder((0, 0), 3)
            gens = []
            for _g in range(3):
                v = {}
                for pos in range(2):
                    for m in monomials_of_degree(3, 2):
                        if rng.random() < 0.25:
                            v[(pos, m)] = rng.randrange(1, p)
                if v and len({sum(m) for (_q, m) in v}) == 1:
                    gens.append(v)
            if not gens:
                continue
            tb = TaggedBasis(gens, order, p)
            for s in tb.syzygy_generators():
                total = {}
                for (idx, m), c in s.items():
                    total = vec_add(total, vec_mono_shift(gens[idx], m, c, p), p)
                assert total == {}


class TestHilbert:
    def test_frozen_component_basis(self):
        r = QuotientRing.from_strings(["x", "y", "z"], ["x^2", "y^2", "z^4"])
        assert r.hilbert_dim(4) == 3
        assert [str(m) for m in r.component_basis(4)] == [
            "x*y*z^2",
            "x*z^3",
            "y*z^3",
        ]

    def test_frozen_component_basis_two_vars(self):
        r = QuotientRing.from_strings(["x", "y"], ["x^2", "y^4"])
        assert [str(m) for m in r.component_basis(3)] == ["x*y^2", "y^3"]

    def test_corank_oracle_random_artinian(self):
        rng = random.Random(5)
        p = 101
        ring = PolyRing(["x", "y", "z"], p)
        for _ in range(8):
            rels = [
                ring.parse("x^2"), ring.parse("y^3"), ring.parse("z^3"),
            ]
            d = rng.randrange(2, 4)
            f = ring.zero()
            for m in monomials_of_degree(3, d):
                if rng.random() < 0.5:
                    f = f + ring.monomial(m, rng.randrange(1, p))
            if not f.is_zero():
                rels.append(f)
            q = QuotientRing(ring, rels)
            for t in range(7):
                monos = monomials_of_degree(3, t)
                index = {m: i for i, m in enumerate(monos)}
                rows = []
                for g in rels:
                    dg = g.degree()
                    if dg > t:
                        continue
                    for shift in monomials_of_degree(3, t - dg):
                        row = [0] * len(monos)
                        for m, c in g.terms.items():
                            me = tuple(a + b for a, b in zip(m, shift))
                            row[index[me]] = c
                        rows.append(row)
                expected = len(monos) - (gauss_rank_mod_p(rows, p) if rows else 0)
                assert q.hilbert_dim(t) == expected

    def test_pure_power_numerator_product_formula(self):
        r = QuotientRing.from_strings(["x", "y", "z"], ["x^2", "y^2", "z^4"])
        # numerator = (1 - t^2)^2 (1 - t^4)
        expect = {0: 1}
        for a in (2, 2, 4):
            nxt = {}
            for d, c in expect.items():
                nxt[d] = nxt.get(d, 0) + c
                nxt[d + a] = nxt.get(d + a, 0) - c
            expect = {d: c for d, c in nxt.items() if c}
        assert r.hilbert_numerator == expect

    def test_hilbert_function_and_top_degree(self):
        r = QuotientRing.from_strings(["x", "y", "z"], ["x^2", "y^2", "z^4"])
        hf = r.hilbert_function()
        # (1 + t)(1 + t)(1 + t + t^2 + t^3) expanded
        expect = {}
        for i in (0, 1):
            for j in (0, 1):
                for k in (0, 1, 2, 3):
                    expect[i + j + k] = expect.get(i + j + k, 0) + 1
        assert hf == expect
        assert r.top_degree() == 5
        total = sum(hf.values())
        assert total == 16

    def test_numerator_matches_enumeration_random(self):
        rng = random.Random(6)
        ring = PolyRing(["x", "y"], 101)
        for _ in range(10):
            rels = []
            for _g in range(rng.randrange(1, 4)):
                d = rng.randrange(1, 5)
                f = ring.zero()
                for m in monomials_of_degree(2, d):
                    if rng.random() < 0.5:
                        f = f + ring.monomial(m, rng.randrange(1, 101))
                if not f.is_zero():
                    rels.append(f)
            q = QuotientRing(ring, rels)
            hn = q.hilbert_numerator
            # expand hn / (1-t)^2 as a power series up to degree 8
            series = dict(hn)
            for _v in range(2):
                out = {}
                acc = 0
                for dd in range(9):
                    acc += series.get(dd, 0)
                    out[dd] = acc
                series = out
            for t in range(9):
                assert series.get(t, 0) == q.hilbert_dim(t)

    def test_positive_dimension_rejected_for_hilbert_function(self):
        r = QuotientRing.from_strings(["x", "y", "z"], ["x^4+y^4+z^4"])
        with pytest.raises(InputError):
            r.hilbert_function()


class TestKrullDimension:
    def test_frozen_dimensions(self):
        assert QuotientRing.from_strings(
            ["x", "y", "z"], ["x^2", "y^2", "z^4"]
        ).krull_dimension == 0
        assert QuotientRing.from_strings(
            ["x", "y", "z"], ["x^4+y^4+z^4"]
        ).krull_dimension == 2
        assert QuotientRing.polynomial_ring(["x", "y"]).krull_dimension == 2
        assert QuotientRing.from_strings(
            ["x", "y", "z"], ["x*y"]
        ).krull_dimension == 2

    def test_zero_ring_sentinel_with_warning(self):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            dim = staircase_krull_dim([(0, 0)], 2)
        assert dim == -1
        assert any("zero ring" in str(w.message) for w in caught)


class TestSeriesHelpers:
    def test_exact_division(self):
        # (1 - t^2)^2 / (1 - t) = (1 - t)(1 + t)^2
        f = {0: 1, 2: -2, 4: 1}
        q = divide_by_one_minus_t(f)
        assert q == {0: 1, 1: 1, 2: -1, 3: -1}

    def test_inexact_division_raises(self):
        with pytest.raises(ValueError):
            divide_by_one_minus_t({0: 1})

    def test_module_numerator_with_shifts(self):
        # F = R(-1) (+) R over F_p[x]: numerator t + 1
        hn = module_numerator([], (1, 0), 1)
        assert hn == {0: 1, 1: 1}
        vals = hilbert_polynomial_values({0: 1, 1: -1}, 1)
        assert vals == {0: 1}
