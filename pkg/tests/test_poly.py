"""Field scalars, polynomial arithmetic, parser/printer, and the term order."""

import random

import pytest

from cmwild.errors import InputError
from cmwild.field import PrimeField, is_prime
from cmwild.poly import (
    PolyRing,
    compose,
    grevlex_key,
    mono_deg,
    mono_divides,
    mono_lcm,
    mono_mul,
    monomials_of_degree,
)


def xgcd(a, b):
    """Extended Euclid, used as an independent inversion oracle."""
    old_r, r = a, b
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    return old_r, old_s


class TestPrimeField:
    def test_inverse_matches_extended_euclid(self):
        rng = random.Random(0)
        for p in (3, 101, 32003):
            f = PrimeField(p)
            for _ in range(200):
                a = rng.randrange(1, p)
                g, s = xgcd(a, p)
                assert g == 1
                assert f.inv(a) == s % p
                assert f.mul(a, f.inv(a)) == 1

    def test_rejects_composite_and_even(self):
        with pytest.raises(InputError):
            PrimeField(32001)  # 3 * 10667
        with pytest.raises(InputError):
            PrimeField(2)
        PrimeField(2, allow_two=True)
        with pytest.raises(InputError):
            PrimeField(2**31 + 11)

    def test_zero_has_no_inverse(self):
        with pytest.raises(ZeroDivisionError):
            PrimeField(7).inv(0)

    def test_is_prime_small(self):
        primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
        for n in range(2, 50):
            assert is_prime(n) == (n in primes)


class TestGrevlex:
    def test_degree_two_order_in_three_vars(self):
        ring = PolyRing(["x", "y", "z"])
        ms = monomials_of_degree(3, 2)
        names = [str(ring.monomial(m)) for m in ms]
        assert names == ["x^2", "x*y", "y^2", "x*z", "y*z", "z^2"]

    def test_total_order_exhaustive_low_degree(self):
        # all monomials of degree <= 4 in <= 3 variables: the key induces a
        # strict total order refining degree
        for nvars in (1, 2, 3):
            all_monos = []
            for d in range(5):
                all_monos.extend(monomials_of_degree(nvars, d))
            keys = [grevlex_key(m) for m in all_monos]
            assert len(set(keys)) == len(keys)
            for a in all_monos:
                for b in all_monos:
                    if mono_deg(a) > mono_deg(b):
                        assert grevlex_key(a) > grevlex_key(b)

    def test_multiplicative(self):
        rng = random.Random(1)
        for _ in range(500):
            nvars = rng.randrange(1, 4)
            a = tuple(rng.randrange(4) for _ in range(nvars))
            b = tuple(rng.randrange(4) for _ in range(nvars))
            c = tuple(rng.randrange(4) for _ in range(nvars))
            if grevlex_key(a) > grevlex_key(b):
                assert grevlex_key(mono_mul(a, c)) > grevlex_key(mono_mul(b, c))

    def test_divisibility_helpers(self):
        assert mono_divides((1, 0, 2), (2, 0, 2))
        assert not mono_divides((1, 1, 0), (2, 0, 2))
        assert mono_lcm((1, 0, 2), (0, 3, 1)) == (1, 3, 2)


class TestPolyArithmetic:
    def random_poly(self, ring, rng, max_deg=3, terms=4):
        out = ring.zero()
        for _ in range(terms):
            e = tuple(rng.randrange(max_deg + 1) for _ in range(ring.nvars))
            out = out + ring.monomial(e, rng.randrange(ring.p))
        return out

    def test_ring_axioms_random(self):
        ring = PolyRing(["x", "y"], 101)
        rng = random.Random(2)
        for _ in range(1000):
            a = self.random_poly(ring, rng)
            b = self.random_poly(ring, rng)
            c = self.random_poly(ring, rng)
            assert (a + b) + c == a + (b + c)
            assert a + b == b + a
            assert a * (b + c) == a * b + a * c
            assert (a * b) * c == a * (b * c)
            assert a + ring.zero() == a
            assert a * ring.one() == a
            assert a - a == ring.zero()

    def test_leading_term_and_monic(self):
        ring = PolyRing(["x", "y", "z"])
        f = ring.parse("3*x^2*y+5*z^4")
        assert f.lm() == (0, 0, 4)  # degree dominates
        assert f.monic().lc() == 1

    def test_homogeneity(self):
        ring = PolyRing(["x", "y"])
        assert ring.parse("x^2+y^2").is_homogeneous()
        assert not ring.parse("x^2+y").is_homogeneous()
        assert ring.zero().is_homogeneous()
        assert ring.zero().degree() == -1

    def test_compose_linear_change(self):
        ring = PolyRing(["x", "y"], 13)
        f = ring.parse("x^2+y^2")
        x, y = ring.gens()
        g = compose(f, [x + y, x - y])
        assert g == ring.parse("2*x^2+2*y^2")


class TestParsePrint:
    def test_round_trip_canonical(self):
        ring = PolyRing(["x", "y", "z"])
        for text in ["x^2+32002*y^2", "x*y*z^2+2*y*z^3", "z^4", "5"]:
            f = ring.parse(text)
            assert str(f) == text
            assert ring.parse(str(f)) == f

    def test_cancellation_prints_zero(self):
        ring = PolyRing(["x", "y"])
        assert str(ring.parse("x*y-y*x")) == "0"

    def test_grammar_forms(self):
        ring = PolyRing(["x", "y"], 7)
        assert ring.parse("2*x^3*y") == ring.monomial((3, 1), 2)
        assert ring.parse("x-2*y") == ring.parse("x+5*y")
        assert ring.parse("-x+y") == ring.parse("y-x")
        assert ring.parse("x**2") == ring.parse("x^2")

    def test_errors_carry_position(self):
        ring = PolyRing(["x", "y"])
        with pytest.raises(InputError, match="position 4"):
            ring.parse("x^2+@y")
        with pytest.raises(InputError, match="unknown variable 'w'"):
            ring.parse("x+w")
        with pytest.raises(InputError):
            ring.parse("")
        with pytest.raises(InputError):
            ring.parse("x+")
        with pytest.raises(InputError, match="expected a variable"):
            ring.parse("2*3")

    def test_print_sorted_descending(self):
        ring = PolyRing(["x", "y", "z"])
        f = ring.parse("z^2+x^2+y*z+x*y")
        assert str(f) == "x^2+x*y+y*z+z^2"
