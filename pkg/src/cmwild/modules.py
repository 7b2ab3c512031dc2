"""Graded free modules over a quotient ring, maps between them, and finite
module presentations.

A free module stores its twists: the module is (+)_i R(twists[i]), so the
i-th generator sits in degree -twists[i].  A map is stored by columns (the
images of the source generators), each column a homogeneous vector in the
target.  A presentation is a cokernel: ambient free module plus a list of
relation vectors; Groebner computations adjoin the ring's relation ideal
times each generator, so everything runs in the ambient polynomial ring.
"""

from __future__ import annotations

from .errors import InputError
from .groebner import (
    GroebnerBasis,
    ModuleOrder,
    TaggedBasis,
    buchberger,
    hilbert_polynomial_values,
    module_numerator,
    standard_terms,
    vec_degree,
    vec_mono_shift,
    vec_add,
)
from .poly import Poly
from .rings import QuotientRing


class FreeModule:
    __slots__ = ("ring", "twists", "order")

    def __init__(self, ring: QuotientRing, twists):
        self.ring = ring
        self.twists = tuple(int(t) for t in twists)
        self.order = ModuleOrder(
            tuple(-t for t in self.twists), ring.nvars
        )

    @property
    def rank(self) -> int:
        return len(self.twists)

    @property
    def gen_degrees(self):
        return self.order.gen_degrees

    def __eq__(self, other):
        return (
            isinstance(other, FreeModule)
            and self.ring == other.ring
            and self.twists == other.twists
        )

    def __hash__(self):
        return hash((self.ring, self.twists))

    def __repr__(self):
        return f"FreeModule(twists={self.twists})"

    # -- vector assembly

    def vec(self, polys) -> dict:
        """Vector from a list of polynomial components."""
        if len(polys) != self.rank:
            raise InputError("component count does not match rank")
        out: dict = {}
        for pos, f in enumerate(polys):
            if f.is_zero():
                continue
            for m, c in f.terms.items():
                out[(pos, m)] = c
        vec_degree(out, self.gen_degrees)  # homogeneity check
        return out

    def gen_vec(self, i: int) -> dict:
        zero = (0,) * self.ring.nvars
        return {(i, zero): 1}

    def component_polys(self, v: dict) -> list[Poly]:
        comps: list[dict] = [{} for _ in range(self.rank)]
        for (pos, m), c in v.items():
            comps[pos][m] = c
        return [Poly(self.ring.ambient, t) for t in comps]

    def ring_adjunction(self) -> list[dict]:
        """Ring relations times each generator: the vectors that make
        ambient-ring Groebner computations compute over R."""
        out = []
        for g in self.ring.ideal_basis.vectors:
            for i in range(self.rank):
                out.append({(i, m): c for (_p, m), c in g.items()})
        return out


def zero_const_mono(nvars: int):
    return (0,) * nvars


class FreeMap:
    """A graded map source -> target, stored by columns."""

    __slots__ = ("source", "target", "columns")

    def __init__(self, source: FreeModule, target: FreeModule, columns):
        if source.ring != target.ring:
            raise InputError("source and target live over different rings")
        columns = [dict(c) for c in columns]
        if len(columns) != source.rank:
            raise InputError("column count does not match source rank")
        for j, col in enumerate(columns):
            d = vec_degree(col, target.gen_degrees)
            if d is not None and d != source.gen_degrees[j]:
                raise InputError(
                    f"column {j} has degree {d}, expected {source.gen_degrees[j]}"
                )
        self.source = source
        self.target = target
        self.columns = columns

    @property
    def ring(self) -> QuotientRing:
        return self.source.ring

    def entry(self, i: int, j: int) -> Poly:
        terms = {m: c for (pos, m), c in self.columns[j].items() if pos == i}
        return Poly(self.ring.ambient, terms)

    def matrix(self) -> list[list[Poly]]:
        return [
            [self.entry(i, j) for j in range(self.source.rank)]
            for i in range(self.target.rank)
        ]

    def apply(self, v: dict) -> dict:
        out: dict = {}
        p = self.ring.p
        for (j, m), c in v.items():
            out = vec_add(out, vec_mono_shift(self.columns[j], m, c, p), p)
        return out

    def compose(self, other: "FreeMap") -> "FreeMap":
        """self o other."""
        if other.target != self.source:
            raise InputError("maps are not composable")
        return FreeMap(
            other.source, self.target, [self.apply(c) for c in other.columns]
        )

    def is_minimal(self) -> bool:
        """True iff no entry has a unit (nonzero constant) coefficient."""
        zero = zero_const_mono(self.ring.nvars)
        return not any(
            m == zero for col in self.columns for (_pos, m) in col
        )

    def is_zero_over_ring(self) -> bool:
        """True iff every column reduces to zero modulo the ring relations."""
        gb = self.ring.ideal_basis
        for col in self.columns:
            comps: dict = {}
            for (pos, m), c in col.items():
                comps.setdefault(pos, {})[m] = c
            for terms in comps.values():
                if gb.normal_form({(0, m): c for m, c in terms.items()}):
                    return False
        return True


def identity_map(free: FreeModule) -> FreeMap:
    return FreeMap(free, free, [free.gen_vec(i) for i in range(free.rank)])


class ModulePresentation:
    """M = coker(relations -> free) over ``ring``."""

    __slots__ = ("ring", "free", "relations", "_gb", "_numerator", "_tagged")

    def __init__(self, ring: QuotientRing, gen_degrees, relations):
        self.ring = ring
        self.free = FreeModule(ring, tuple(-int(d) for d in gen_degrees))
        rels = []
        for v in relations:
            v = {t: c for t, c in dict(v).items() if c % ring.p}
            vec_degree(v, self.free.gen_degrees)  # homogeneity check
            for (pos, _m) in v:
                if not 0 <= pos < self.free.rank:
                    raise InputError("relation position out of range")
            if v:
                rels.append(v)
        self.relations = tuple(rels)
        self._gb: GroebnerBasis | None = None
        self._numerator: dict | None = None
        self._tagged: TaggedBasis | None = None

    @property
    def rank(self) -> int:
        return self.free.rank

    @property
    def gen_degrees(self):
        return self.free.gen_degrees

    def all_generators(self) -> list[dict]:
        """Module relations plus the ring-relation adjunction."""
        return list(self.relations) + self.free.ring_adjunction()

    @property
    def gb(self) -> GroebnerBasis:
        if self._gb is None:
            self._gb = buchberger(
                self.all_generators(), self.free.order, self.ring.p
            )
        return self._gb

    @property
    def tagged(self) -> TaggedBasis:
        """Tagged basis of the relation list (with adjunction) for syzygy
        and coordinate queries against this presentation."""
        if self._tagged is None:
            self._tagged = TaggedBasis(
                self.all_generators(), self.free.order, self.ring.p
            )
        return self._tagged

    # -- Hilbert data

    def hilbert_dim(self, t: int) -> int:
        return len(self.component_terms(t))

    def component_terms(self, t: int) -> list:
        return standard_terms(
            self.gb.lts, self.free.gen_degrees, self.ring.nvars, t
        )

    @property
    def hilbert_numerator(self) -> dict:
        if self._numerator is None:
            self._numerator = module_numerator(
                self.gb.lts, self.free.gen_degrees, self.ring.nvars
            )
        return dict(self._numerator)

    def hilbert_function(self) -> dict:
        """Finite Hilbert function for a finite-length module."""
        try:
            return hilbert_polynomial_values(self.hilbert_numerator, self.ring.nvars)
        except ValueError:
            raise InputError("module has positive dimension") from None

    def top_degree(self) -> int:
        hf = self.hilbert_function()
        return max(hf) if hf else -1

    def is_zero(self) -> bool:
        return not self.hilbert_numerator

    # -- derived presentations

    def quotient(self, extra_relations) -> "ModulePresentation":
        return ModulePresentation(
            self.ring,
            self.free.gen_degrees,
            list(self.relations) + [dict(v) for v in extra_relations],
        )

    def reduce_mod(self, ys) -> "ModulePresentation":
        """The same presentation over R/(ys)."""
        return ModulePresentation(
            self.ring.extend(ys), self.free.gen_degrees, self.relations
        )

    def __repr__(self):
        return (
            f"ModulePresentation(gens={list(self.free.gen_degrees)}, "
            f"relations={len(self.relations)})"
        )


def presentation_from_map(fmap: FreeMap) -> ModulePresentation:
    """coker of a map between free modules."""
    return ModulePresentation(
        fmap.ring, fmap.target.gen_degrees, fmap.columns
    )
