"""Groebner machinery for submodules of graded free modules over F_p[x].

A module element is a dict {(position, exponent_tuple): coefficient}.  The
term order is position-over-term: positions carry a fixed priority (ascending
twist, then index), and ties within a position fall back to grevlex on the
monomial.  All inputs are homogeneous, which keeps every intermediate vector
homogeneous and every staircase finite in each degree.

Syzygies are extracted by a tag construction: compute a basis of
[g_i + eps_i] inside F (+) S^k with the tag positions ranked below every real
position; basis elements whose real part vanished are exactly a generating
set of the syzygy module, and full normal forms against the same basis solve
membership with explicit coordinates.

Buchberger's product criterion is applied only in rank one.  It fails for
genuine modules: with u = x*e1 + y*e2 and v = y*e1 + x*e2 the S-vector
(y^2 - x^2)*e2 reduces to neither.  The chain criterion is restricted to
pairs already treated, so no skip can be circular.
"""

from __future__ import annotations

import heapq
import warnings

from .errors import InputError
from .poly import (
    grevlex_key,
    mono_deg,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    monomials_of_degree,
)

Vec = dict  # {(pos, mono): coeff}


class ModuleOrder:
    """POT order data for a free module: generator degrees plus position
    priority ranks (rank 0 compares highest)."""

    __slots__ = ("gen_degrees", "rank_of", "nvars")

    def __init__(self, gen_degrees, nvars, rank_of=None):
        self.gen_degrees = tuple(gen_degrees)
        self.nvars = nvars
        if rank_of is None:
            # ascending twist (= descending degree), then index
            by_priority = sorted(
                range(len(self.gen_degrees)),
                key=lambda i: (-self.gen_degrees[i], i),
            )
            ranks = [0] * len(self.gen_degrees)
            for r, i in enumerate(by_priority):
                ranks[i] = r
            rank_of = ranks
        self.rank_of = tuple(rank_of)

    @property
    def rank(self) -> int:
        return len(self.gen_degrees)

    def key(self, term):
        pos, m = term
        return (-self.rank_of[pos], sum(m), tuple(-e for e in reversed(m)))

    def with_tags(self, tag_degrees) -> "ModuleOrder":
        """Append tag positions ranked strictly below every real position."""
        r = len(self.gen_degrees)
        return ModuleOrder(
            self.gen_degrees + tuple(tag_degrees),
            self.nvars,
            self.rank_of + tuple(range(r, r + len(tag_degrees))),
        )


# ----------------------------------------------------------------- vectors


def vec_degree(v: Vec, gen_degrees) -> int | None:
    """Uniform degree of a homogeneous vector, None for zero."""
    degs = {mono_deg(m) + gen_degrees[pos] for (pos, m) in v}
    if not degs:
        return None
    if len(degs) > 1:
        raise InputError("vector is not homogeneous")
    return degs.pop()


def vec_scale(v: Vec, c: int, p: int) -> Vec:
    c %= p
    if c == 0:
        return {}
    return {t: k * c % p for t, k in v.items()}


def vec_add(u: Vec, v: Vec, p: int) -> Vec:
    out = dict(u)
    for t, c in v.items():
        c2 = (out.get(t, 0) + c) % p
        if c2:
            out[t] = c2
        elif t in out:
            del out[t]
    return out


def vec_mono_shift(v: Vec, shift, c: int, p: int) -> Vec:
    """c * x^shift * v."""
    c %= p
    if c == 0:
        return {}
    return {(pos, mono_mul(m, shift)): k * c % p for (pos, m), k in v.items()}


class GroebnerBasis:
    """A monic basis with cached leading terms and a divisor index."""

    __slots__ = ("vectors", "order", "p", "lts", "_by_pos")

    def __init__(self, vectors, order: ModuleOrder, p: int):
        self.vectors = list(vectors)
        self.order = order
        self.p = p
        keyf = order.key
        self.lts = [max(v, key=keyf) for v in self.vectors]
        by_pos: dict = {}
        for i, (pos, m) in enumerate(self.lts):
            by_pos.setdefault(pos, []).append((m, i))
        self._by_pos = by_pos

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def normal_form(self, v: Vec) -> Vec:
        return _normal_form(v, self.lts, self.vectors, self._by_pos, self.order, self.p)

    def reduces_to_zero(self, v: Vec) -> bool:
        return not self.normal_form(v)

    def leading_terms(self):
        return list(self.lts)


def _normal_form(v, lts, vectors, by_pos, order, p):
    """Full normal form: every term of the result is irreducible."""
    keyf = order.key
    work = dict(v)
    out: Vec = {}
    while work:
        t = max(work, key=keyf)
        c = work.pop(t)
        pos, m = t
        hit = None
        for gm, gi in by_pos.get(pos, ()):
            if mono_divides(gm, m):
                hit = gi
                break
        if hit is None:
            out[t] = c
            continue
        shift = mono_div(m, lts[hit][1])
        g = vectors[hit]
        lt = lts[hit]
        for gt, gc in g.items():
            if gt == lt:
                continue
            t2 = (gt[0], mono_mul(gt[1], shift))
            c2 = (work.get(t2, 0) - c * gc) % p
            if c2:
                work[t2] = c2
            elif t2 in work:
                del work[t2]
    return out


def _make_monic(v: Vec, order: ModuleOrder, p: int) -> Vec:
    lt = max(v, key=order.key)
    c = v[lt]
    if c == 1:
        return v
    inv = pow(c, -1, p)
    return {t: k * inv % p for t, k in v.items()}


def buchberger(gens, order: ModuleOrder, p: int, product_criterion: bool | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the submodule generated by ``gens``.

    Pairs are processed in ascending S-vector degree (normal strategy) with
    deterministic tie-breaks, so the reduced result is canonical for the
    order regardless of generator arrangement.
    """
    if product_criterion is None:
        product_criterion = order.rank == 1
    keyf = order.key
    G: list[Vec] = []
    lts: list = []
    by_pos: dict = {}

    def push(v):
        i = len(G)
        lt = max(v, key=keyf)
        G.append(v)
        lts.append(lt)
        by_pos.setdefault(lt[0], []).append((lt[1], i))
        return i

    heap: list = []
    counter = 0

    def queue_pairs(j):
        nonlocal counter
        pos_j, m_j = lts[j]
        for i in range(j):
            pos_i, m_i = lts[i]
            if pos_i != pos_j:
                continue
            lcm = mono_lcm(m_i, m_j)
            sdeg = mono_deg(lcm) + order.gen_degrees[pos_j]
            counter += 1
            heapq.heappush(
                heap, (sdeg, grevlex_key(lcm), i, j, counter, lcm)
            )

    for g in gens:
        if g:
            j = push(_make_monic(dict(g), order, p))
            queue_pairs(j)

    treated: set = set()
    while heap:
        sdeg, _lk, i, j, _n, lcm = heapq.heappop(heap)
        treated.add((i, j))
        pos = lts[i][0]
        m_i, m_j = lts[i][1], lts[j][1]
        if product_criterion and mono_mul(m_i, m_j) == lcm:
            continue
        chained = False
        for gm, k in by_pos.get(pos, ()):
            if k in (i, j):
                continue
            if mono_divides(gm, lcm):
                a, b = (i, k) if i < k else (k, i)
                c, d = (j, k) if j < k else (k, j)
                if (a, b) in treated and (c, d) in treated:
                    chained = True
                    break
        if chained:
            continue
        s = vec_add(
            vec_mono_shift(G[i], mono_div(lcm, m_i), 1, p),
            vec_mono_shift(G[j], mono_div(lcm, m_j), p - 1, p),
            p,
        )
        r = _normal_form(s, lts, G, by_pos, order, p)
        if r:
            jj = push(_make_monic(r, order, p))
            queue_pairs(jj)

    return _interreduce(G, order, p)


def _interreduce(G, order: ModuleOrder, p: int) -> GroebnerBasis:
    keyf = order.key
    items = sorted(((max(g, key=keyf), g) for g in G if g), key=lambda it: keyf(it[0]))
    kept: list = []
    for lt, g in items:
        pos, m = lt
        if any(kpos == pos and mono_divides(km, m) for (kpos, km), _ in kept):
            continue
        kept.append((lt, g))
    # tail-reduce each element against the others; leading terms are stable
    final = []
    for idx in range(len(kept)):
        others = [kept[k] for k in range(len(kept)) if k != idx]
        olts = [it[0] for it in others]
        ovecs = [it[1] for it in others]
        oby: dict = {}
        for i2, (pos, m) in enumerate(olts):
            oby.setdefault(pos, []).append((m, i2))
        r = _normal_form(kept[idx][1], olts, ovecs, oby, order, p)
        final.append(_make_monic(r, order, p))
    # canonical listing: leading-term degree ascending, position priority,
    # then grevlex descending within a degree
    def list_key(v):
        pos, m = max(v, key=keyf)
        return (
            sum(m) + order.gen_degrees[pos],
            order.rank_of[pos],
            tuple(reversed(m)),
        )

    final.sort(key=list_key)
    return GroebnerBasis(final, order, p)


# ------------------------------------------------------------ tagged bases


class TaggedBasis:
    """Groebner basis of [g_i + eps_i] with elimination tags.

    Provides syzygy generators (pure-tag basis elements) and coordinate
    solves (normal form of (v, 0); a vanishing real part certifies
    membership and the tag residue encodes the coordinates).
    """

    __slots__ = ("p", "real_rank", "count", "order", "gb", "tag_degrees")

    def __init__(self, gens, base_order: ModuleOrder, p: int):
        r = base_order.rank
        gens = [dict(g) for g in gens]
        tag_degrees = []
        zero_mono = (0,) * base_order.nvars
        tagged = []
        for i, g in enumerate(gens):
            d = vec_degree(g, base_order.gen_degrees)
            if d is None:
                d = 0  # zero generator: tag degree is immaterial
            tag_degrees.append(d)
        order = base_order.with_tags(tag_degrees)
        for i, g in enumerate(gens):
            gh = dict(g)
            gh[(r + i, zero_mono)] = 1
            tagged.append(gh)
        self.p = p
        self.real_rank = r
        self.count = len(gens)
        self.order = order
        self.tag_degrees = tuple(tag_degrees)
        self.gb = buchberger(tagged, order, p, product_criterion=False)

    def syzygy_generators(self) -> list:
        """Generators of the syzygy module of the input list, as vectors
        over positions 0..count-1."""
        r = self.real_rank
        out = []
        for v, lt in zip(self.gb.vectors, self.gb.lts):
            if lt[0] >= r:
                out.append({(pos - r, m): c for (pos, m), c in v.items()})
        return out

    def coordinates(self, v: Vec):
        """Coordinates of v over the input generators, or None if v is not
        in their span.  Any valid coordinate vector may be returned."""
        w = self.gb.normal_form(dict(v))
        if any(pos < self.real_rank for (pos, _m) in w):
            return None
        p = self.p
        return {(pos - self.real_rank, m): -c % p for (pos, m), c in w.items()}


def syzygies(gens, base_order: ModuleOrder, p: int) -> list:
    return TaggedBasis(gens, base_order, p).syzygy_generators()


# ------------------------------------------------- staircase combinatorics


def standard_terms(lts, gen_degrees, nvars: int, t: int) -> list:
    """Degree-t (position, monomial) pairs outside the leading-term
    staircase: position ascending, grevlex descending within a position."""
    by_pos: dict = {}
    for pos, m in lts:
        by_pos.setdefault(pos, []).append(m)
    out = []
    for pos, gd in enumerate(gen_degrees):
        d = t - gd
        if d < 0:
            continue
        blockers = by_pos.get(pos, ())
        for m in monomials_of_degree(nvars, d):
            if not any(mono_divides(b, m) for b in blockers):
                out.append((pos, m))
    return out


def minimalize_monomials(monos) -> tuple:
    """Minimal generating set of the monomial ideal, sorted ascending."""
    out: list = []
    for m in sorted(set(monos), key=grevlex_key):
        if not any(mono_divides(o, m) for o in out):
            out.append(m)
    return tuple(out)


def monomial_ideal_numerator(monos, memo: dict | None = None) -> dict:
    """Numerator of the Hilbert series of S/(monos) over (1-t)^nvars, as a
    dict {degree: integer coefficient}.

    Recursion: with pivot q, HN(I' + (q)) = HN(I') - t^deg(q) * HN(I' : q).
    """
    if memo is None:
        memo = {}

    def rec(ms: tuple) -> dict:
        cached = memo.get(ms)
        if cached is not None:
            return cached
        if not ms:
            res = {0: 1}
        elif any(mono_deg(m) == 0 for m in ms):
            res = {}
        elif len(ms) == 1:
            d = mono_deg(ms[0])
            res = {0: 1, d: -1}
        else:
            pivot = ms[-1]
            rest = ms[:-1]
            a = rec(rest)
            colon = minimalize_monomials(
                tuple(max(g - q, 0) for g, q in zip(gm, pivot)) for gm in rest
            )
            b = rec(colon)
            dp = mono_deg(pivot)
            res = dict(a)
            for d, c in b.items():
                c2 = res.get(d + dp, 0) - c
                if c2:
                    res[d + dp] = c2
                elif d + dp in res:
                    del res[d + dp]
        memo[ms] = res
        return res

    return rec(minimalize_monomials(monos))


def module_numerator(lts, gen_degrees, nvars: int) -> dict:
    """Hilbert-series numerator of F/N from the staircase of N, summed with
    generator-degree shifts."""
    by_pos: dict = {}
    for pos, m in lts:
        by_pos.setdefault(pos, []).append(m)
    memo: dict = {}
    total: dict = {}
    for pos, gd in enumerate(gen_degrees):
        hn = monomial_ideal_numerator(tuple(by_pos.get(pos, ())), memo)
        for d, c in hn.items():
            c2 = total.get(d + gd, 0) + c
            if c2:
                total[d + gd] = c2
            elif d + gd in total:
                del total[d + gd]
    return total


def divide_by_one_minus_t(f: dict) -> dict:
    """Exact division by (1 - t) in Z[t]; raises ValueError if inexact."""
    if not f:
        return {}
    top = max(f)
    q: dict = {}
    prev = 0
    for d in range(top + 1):
        prev = f.get(d, 0) + prev
        if prev and d < top:
            q[d] = prev
    if prev != 0:
        raise ValueError("series numerator is not divisible by (1 - t)")
    return q


def hilbert_polynomial_values(hn: dict, nvars: int) -> dict:
    """For an Artinian staircase: the finite Hilbert function as
    {degree: dimension}.  Raises ValueError when the module has positive
    dimension (division by (1-t)^nvars is inexact)."""
    f = dict(hn)
    for _ in range(nvars):
        f = divide_by_one_minus_t(f)
    return f


def staircase_krull_dim(monos, nvars: int) -> int:
    """Krull dimension of S/(monos); -1 for the zero ring."""
    monos = minimalize_monomials(monos)
    if any(mono_deg(m) == 0 for m in monos):
        warnings.warn("zero ring: Krull dimension reported as -1", stacklevel=2)
        return -1
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in monos]
    best = 0
    for mask in range(1 << nvars):
        u = frozenset(i for i in range(nvars) if mask >> i & 1)
        if len(u) > best and all(not s <= u for s in supports):
            best = len(u)
    return best
