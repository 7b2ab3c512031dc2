"""Koszul complexes, minimal graded free resolutions over quotient rings,
Betti tables, and comparison maps.

Resolutions are built stepwise: syzygies of the current differential's
columns (with the ring-relation adjunction) come from a tagged elimination
basis, and unit entries of the new differential are eliminated immediately.
Eliminating a unit at (r, c) of delta_i clears its row by column operations
(a basis change of F_i, invisible to anything already built), clears its
column by row operations whose mirror is a column operation on delta_{i-1},
and then deletes generator c of F_i and generator r of F_{i-1}; the deleted
column of delta_{i-1} must have become zero over the ring, which is checked.
Row/column mirrors never create new unit entries upstream: a degree-zero
entry of a minimal matrix is already zero, and the graded operations cannot
raise it.

One extra syzygy step beyond the requested length is computed and discarded:
a redundant generator in the top differential only becomes visible as a unit
entry one step later, and the elimination cascade is what prunes it.
"""

from __future__ import annotations

from itertools import combinations

from .errors import CmwildError, InputError
from .groebner import (
    TaggedBasis,
    vec_add,
    vec_degree,
    vec_mono_shift,
)
from .modules import FreeMap, FreeModule, ModulePresentation
from .poly import Poly
from .rings import QuotientRing


def ring_reduce_vec(ring: QuotientRing, v: dict) -> dict:
    """Componentwise normal form against the ring's relation ideal."""
    comps: dict = {}
    for (pos, m), c in v.items():
        comps.setdefault(pos, {})[m] = c
    out: dict = {}
    gb = ring.ideal_basis
    for pos, terms in comps.items():
        nf = gb.normal_form({(0, m): c for m, c in terms.items()})
        for (_z, m), c in nf.items():
            out[(pos, m)] = c
    return out


def vec_poly_mul(v: dict, f: Poly, p: int) -> dict:
    out: dict = {}
    for m, c in f.terms.items():
        out = vec_add(out, vec_mono_shift(v, m, c, p), p)
    return out


class Resolution:
    """A chain F_k -> ... -> F_1 -> F_0 (-> M) of graded free modules.

    ``presentation`` is the presentation of M matching F_0 and delta_1 (the
    augmentation data), so Omega^i = Im delta_i is well defined for i >= 1.
    ``terminated`` records that the module ran out of syzygies before the
    requested length (finite projective dimension).
    """

    def __init__(self, ring, frees, maps, minimal, presentation, terminated=False):
        self.ring = ring
        self.frees = list(frees)
        self.maps = dict(maps)  # {i: FreeMap for delta_i}, i >= 1
        self.minimal = minimal
        self.presentation = presentation
        self.terminated = terminated

    @property
    def length(self) -> int:
        return len(self.frees) - 1

    def free(self, i: int) -> FreeModule:
        return self.frees[i]

    def map(self, i: int) -> FreeMap:
        return self.maps[i]

    def betti(self) -> dict:
        """{(homological degree i, internal degree j): rank}."""
        out: dict = {}
        for i, free in enumerate(self.frees):
            for d in free.gen_degrees:
                out[(i, d)] = out.get((i, d), 0) + 1
        return out

    def betti_json(self) -> dict:
        entries = [
            {"i": i, "j": j, "rank": r}
            for (i, j), r in sorted(self.betti().items())
        ]
        return {"betti": entries, "minimal": bool(self.minimal)}

    def syzygy_presentation(self, i: int) -> ModulePresentation:
        """Presentation of Omega^i = Im(delta_i) (for i = 0: of M itself)."""
        if i < 0 or i > self.length:
            raise InputError(f"syzygy index {i} outside computed range")
        if i + 1 in self.maps:
            rels = self.maps[i + 1].columns
        elif self.terminated and i == self.length:
            rels = []
        else:
            raise InputError(
                f"resolution not computed past step {i}; Omega^{i} needs delta_{i + 1}"
            )
        return ModulePresentation(self.ring, self.frees[i].gen_degrees, rels)

    def check_complex(self) -> bool:
        """delta_i o delta_{i+1} = 0 over the ring, for every computed i."""
        for i in range(1, self.length):
            if (i + 1) not in self.maps:
                continue
            comp = self.maps[i].compose(self.maps[i + 1])
            if not comp.is_zero_over_ring():
                return False
        return True

    def __repr__(self):
        ranks = " <- ".join(str(f.rank) for f in self.frees)
        return f"Resolution({ranks}; minimal={self.minimal})"


# ------------------------------------------------------------------ Koszul


def koszul_complex(ring: QuotientRing, elems, copies: int = 1) -> Resolution:
    """The Koszul complex on ``elems`` over ``ring``, n-fold via ``copies``.

    K_i has one generator per i-subset of the elements (lex order) and copy,
    copy-major; the differential contracts with alternating signs.  The
    complex is a resolution of copies * R/(elems) exactly when the elements
    form a regular sequence; this function builds the complex either way.
    """
    elems = list(elems)
    if copies < 1:
        raise InputError("copies must be positive")
    for f in elems:
        if f.is_zero() or not f.is_homogeneous() or f.degree() < 1:
            raise InputError("Koszul elements must be homogeneous of positive degree")
    d = len(elems)
    degs = [f.degree() for f in elems]
    p = ring.p

    subsets = [list(combinations(range(d), i)) for i in range(d + 1)]
    frees = []
    for i in range(d + 1):
        twists = [
            -sum(degs[j] for j in s)
            for _copy in range(copies)
            for s in subsets[i]
        ]
        frees.append(FreeModule(ring, twists))

    maps = {}
    for i in range(1, d + 1):
        index_prev = {s: k for k, s in enumerate(subsets[i - 1])}
        block_rows = len(subsets[i - 1])
        columns = []
        for copy in range(copies):
            for s in subsets[i]:
                col: dict = {}
                for t, elem_idx in enumerate(s):
                    rest = s[:t] + s[t + 1 :]
                    row = copy * block_rows + index_prev[rest]
                    sign = 1 if t % 2 == 0 else p - 1
                    f = elems[elem_idx]
                    for m, c in f.terms.items():
                        c2 = (col.get((row, m), 0) + sign * c) % p
                        if c2:
                            col[(row, m)] = c2
                        elif (row, m) in col:
                            del col[(row, m)]
                columns.append(col)
        maps[i] = FreeMap(frees[i], frees[i - 1], columns)

    presentation = ModulePresentation(
        ring, frees[0].gen_degrees, maps[1].columns if d >= 1 else []
    )
    return Resolution(ring, frees, maps, True, presentation, terminated=(d >= 0))


# ------------------------------------------------- minimal free resolutions


def _columns_to_entries(cols, rank):
    """vec-dict columns -> per-column lists of per-row term dicts."""
    out = []
    for col in cols:
        rows = [dict() for _ in range(rank)]
        for (pos, m), c in col.items():
            rows[pos][m] = c
        out.append(rows)
    return out


def _entries_to_column(rows) -> dict:
    col = {}
    for pos, terms in enumerate(rows):
        for m, c in terms.items():
            col[(pos, m)] = c
    return col


def _dict_scale(terms: dict, c: int, p: int) -> dict:
    c %= p
    if not c:
        return {}
    return {m: k * c % p for m, k in terms.items()}


def _dict_sub_mul(target: dict, alpha: dict, source: dict, p: int) -> dict:
    """target - alpha * source on raw term dicts."""
    out = dict(target)
    for ma, ca in alpha.items():
        for ms, cs in source.items():
            m = tuple(a + b for a, b in zip(ma, ms))
            c = (out.get(m, 0) - ca * cs) % p
            if c:
                out[m] = c
            elif m in out:
                del out[m]
    return out


def _eliminate_units(ring, frees, maps_cols, level, cols):
    """Eliminate unit entries from candidate delta_level columns.

    Mutates frees[level-1] (dropping generators) and, for level >= 2, the
    stored columns of delta_{level-1} in maps_cols[level-2].  Returns the
    cleaned column list.
    """
    p = ring.p
    zero = (0,) * ring.nvars
    target = frees[level - 1]
    rank = target.rank
    D = _columns_to_entries(cols, rank)
    E = maps_cols[level - 2] if level >= 2 else None
    twists = list(target.twists)

    while True:
        unit = None
        for r in range(rank):
            for c in range(len(D)):
                val = D[c][r].get(zero, 0) % p
                if val:
                    unit = (r, c, val)
                    break
            if unit:
                break
        if unit is None:
            break
        r0, c0, u = unit
        uinv = pow(u, -1, p)
        # clear row r0 in the other columns (basis change of F_level)
        for c in range(len(D)):
            if c == c0 or not D[c][r0]:
                continue
            alpha = _dict_scale(D[c][r0], uinv, p)
            for r in range(rank):
                if D[c0][r]:
                    D[c][r] = _dict_sub_mul(D[c][r], alpha, D[c0][r], p)
        # clear column c0 (basis change of F_{level-1}, mirrored on E)
        for r in range(rank):
            if r == r0 or not D[c0][r]:
                continue
            alpha = _dict_scale(D[c0][r], uinv, p)
            D[c0][r] = {}
            if E is not None:
                alpha_poly = Poly(ring.ambient, alpha)
                E[r0] = vec_add(E[r0], vec_poly_mul(E[r], alpha_poly, p), p)
        # the freed column of delta_{level-1} must vanish over the ring
        if E is not None:
            if ring_reduce_vec(ring, E[r0]):
                raise CmwildError("minimization produced a nonzero freed column")
            del E[r0]
        del D[c0]
        for rows in D:
            del rows[r0]
        del twists[r0]
        rank -= 1

    frees[level - 1] = FreeModule(ring, twists)
    out = []
    for rows in D:
        col = ring_reduce_vec(ring, _entries_to_column(rows))
        if col:
            out.append(col)
    return out


def minimal_resolution(pres: ModulePresentation, length: int) -> Resolution:
    """Minimal graded free resolution of coker(pres) to the given length."""
    if length < 0:
        raise InputError("resolution length must be nonnegative")
    ring = pres.ring
    p = ring.p
    frees: list = [FreeModule(ring, pres.free.twists)]
    maps_cols: list = []
    cols = [ring_reduce_vec(ring, dict(c)) for c in pres.relations]
    cols = [c for c in cols if c]
    terminated = False

    for i in range(1, length + 2):
        if not cols:
            terminated = True
            break
        cols = _eliminate_units(ring, frees, maps_cols, i, cols)
        if not cols:
            terminated = True
            break
        if i == length + 1:
            # the extra step exists only to prune the one below it
            break
        src_degrees = [vec_degree(c, frees[i - 1].gen_degrees) for c in cols]
        frees.append(FreeModule(ring, tuple(-d for d in src_degrees)))
        maps_cols.append(cols)
        tagged = TaggedBasis(
            list(cols) + frees[i - 1].ring_adjunction(), frees[i - 1].order, p
        )
        k = len(cols)
        nxt = []
        for s in tagged.syzygy_generators():
            restr = {(pos, m): c for (pos, m), c in s.items() if pos < k}
            restr = ring_reduce_vec(ring, restr)
            if restr:
                nxt.append(restr)
        cols = nxt

    maps = {
        i + 1: FreeMap(frees[i + 1], frees[i], maps_cols[i])
        for i in range(len(maps_cols))
    }
    if maps:
        pres_rels = maps[1].columns
    else:
        # length 0: the pruned relation list never became a stored map
        pres_rels = [] if terminated else cols
    presentation = ModulePresentation(ring, frees[0].gen_degrees, pres_rels)
    res = Resolution(ring, frees, maps, True, presentation, terminated=terminated)
    if not res.check_complex():
        raise CmwildError("resolution differentials do not compose to zero")
    return res


# --------------------------------------------------------- comparison maps


def comparison_map(koszul: Resolution, res: Resolution) -> list[FreeMap]:
    """Chain maps phi_i : K_i -> F_i lifting the identity on degree-zero
    generators, via normal-form division against each differential's tagged
    basis.  Returns [phi_0, ..., phi_min(lengths)]."""
    ring = res.ring
    p = ring.p
    k0, f0 = koszul.frees[0], res.frees[0]
    if k0.gen_degrees != f0.gen_degrees:
        raise InputError("comparison map needs matching degree-zero generators")
    phis = [FreeMap(k0, f0, [f0.gen_vec(i) for i in range(f0.rank)])]
    top = min(koszul.length, res.length)
    for i in range(1, top + 1):
        delta = res.maps[i]
        cols_delta = list(delta.columns)
        tagged = TaggedBasis(
            cols_delta + res.frees[i - 1].ring_adjunction(),
            res.frees[i - 1].order,
            p,
        )
        k = len(cols_delta)
        phi_cols = []
        for w in koszul.maps[i].columns:
            v = phis[i - 1].apply(w)
            coords = tagged.coordinates(v)
            if coords is None:
                raise CmwildError("comparison lift failed: target not in image")
            phi_cols.append(
                {(pos, m): c for (pos, m), c in coords.items() if pos < k}
            )
        phi = FreeMap(koszul.frees[i], res.frees[i], phi_cols)
        # certify the chain-map identity delta_i phi_i = phi_{i-1} d_i
        lhs = delta.compose(phi)
        rhs = phis[i - 1].compose(koszul.maps[i])
        for a, b in zip(lhs.columns, rhs.columns):
            diff = vec_add(a, {t: -c % p for t, c in b.items()}, p)
            if ring_reduce_vec(ring, diff):
                raise CmwildError("comparison map is not a chain map")
        phis.append(phi)
    return phis


def reduce_mod(pres: ModulePresentation, ys) -> ModulePresentation:
    """The presentation of M/(ys)M over R/(ys)."""
    return pres.reduce_mod(ys)
