"""Classification of graded quotient rings by the size of their maximal
Cohen-Macaulay module theory.

The procedure: produce (or verify) a homogeneous regular sequence of length
equal to the Krull dimension, pass to the Artinian reduction, and scan the
graded component dimensions of the reduction over a degree window.  Within
the window, a component of dimension at least 2 witnesses a strictly
ascending infinite family of indecomposable maximal Cohen-Macaulay modules;
dimension at least 3 witnesses wild representation type.  A verified
full-length regular sequence also certifies that the ring is
Cohen-Macaulay, so no Cohen-Macaulayness assumption is carried.

Regularity of an element on a module is decided exactly through Hilbert
series numerators: y of degree e is a nonzerodivisor on N iff the numerator
of N/yN equals (1 - t^e) times the numerator of N.  Both directions are
sound because the numerator of the kernel (0 :_N y) is the difference of
the two sides.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import BudgetExhausted, CmwildError, InputError
from .modules import ModulePresentation
from .poly import Poly
from .rings import QuotientRing

VERDICT_WILD = "CMWild"
VERDICT_INFINITE = "StrictlyCMInfinite"
VERDICT_INCONCLUSIVE = "Inconclusive"

# the criterion is one-sided: failing it proves nothing in either direction
INCONCLUSIVE_NOTE = (
    "Inconclusive does not mean not wild: the test is a sufficient"
    " criterion, and a different sequence or a wider degree window may"
    " still certify wildness."
)

SCHEMA = "cmwild/1"


def _one_minus_te(num: dict, e: int) -> dict:
    out = dict(num)
    for d, c in num.items():
        v = (out.get(d + e, 0) - c)
        if v:
            out[d + e] = v
        elif d + e in out:
            del out[d + e]
    return out


def verify_regular_element(target, y: Poly) -> bool:
    """Exact regularity test: y is a nonzerodivisor on the ring or module.

    Compares Hilbert numerators: numerator(N/yN) == (1 - t^deg y) * numerator(N).
    """
    if y.is_zero() or not y.is_homogeneous() or y.degree() < 1:
        raise InputError("regularity candidates must be homogeneous of positive degree")
    e = y.degree()
    if isinstance(target, QuotientRing):
        num = target.hilbert_numerator
        num2 = target.extend([y]).hilbert_numerator
    elif isinstance(target, ModulePresentation):
        num = target.hilbert_numerator
        extra = [
            {(j, m): c for m, c in y.terms.items()}
            for j in range(target.rank)
        ]
        num2 = target.quotient(extra).hilbert_numerator
    else:
        raise InputError("regularity target must be a ring or a module presentation")
    return num2 == _one_minus_te(num, e)


# ------------------------------------------------------- sequence search


def _slot_candidates(ring: QuotientRing, slot: int, rng) -> list:
    """Ordered candidate pool for one slot of the regular sequence.

    The leading entries encode the ring-shape recipe: for a hypersurface the
    sequence starts with the squares of the first two variables; for a
    higher-codimension complete intersection shape with k relations it
    starts with vars[k]^2 and continues with the later variables.  The rest
    of the pool is a fallback ladder.
    """
    amb = ring.ambient
    nv = ring.nvars
    gens = [amb.gen(i) for i in range(nv)]
    k = len(ring.relations)
    pool: list = []
    if k == 1:
        if slot < 2 and slot < nv:
            pool.append(gens[slot] * gens[slot])
        elif slot < nv:
            pool.append(gens[slot])
    elif k >= 2:
        if slot == 0 and k < nv:
            pool.append(gens[k] * gens[k])
        elif 0 < slot and k + slot < nv:
            pool.append(gens[k + slot])
    else:
        if slot < nv:
            pool.append(gens[slot])
    pool.extend(g * g for g in gens)
    pool.extend(gens)
    for _ in range(12):
        f = amb.zero()
        for g in gens:
            f = f + amb.const(rng.randrange(ring.p)) * g
        if not f.is_zero():
            pool.append(f)
    deg2 = []
    for i in range(nv):
        for j in range(i, nv):
            deg2.append(gens[i] * gens[j])
    for _ in range(12):
        f = amb.zero()
        for mono in deg2:
            f = f + amb.const(rng.randrange(ring.p)) * mono
        if not f.is_zero():
            pool.append(f)
    seen = set()
    out = []
    for f in pool:
        key = str(f)
        if key not in seen:
            seen.add(key)
            out.append(f)
    return out


def find_regular_sequence(
    ring: QuotientRing, length: int | None = None, seed: int = 0, budget: int = 50
) -> list[Poly]:
    """A verified homogeneous regular sequence of the requested length
    (default: the Krull dimension), found by recipe plus fallback search."""
    d = ring.krull_dimension if length is None else length
    if d < 0:
        raise InputError("the zero ring admits no regular sequence")
    rng = random.Random(seed)
    seq: list[Poly] = []
    current = ring
    for slot in range(d):
        attempts = 0
        found = None
        for cand in _slot_candidates(ring, slot, rng):
            if current.is_zero_element(cand):
                continue
            attempts += 1
            if attempts > budget:
                break
            if verify_regular_element(current, cand):
                found = cand
                break
        if found is None:
            raise BudgetExhausted(
                f"no regular element found for position {slot} within"
                f" {budget} attempts"
            )
        seq.append(found)
        current = current.extend([found])
    return seq


def artinian_reduction(ring: QuotientRing, seq) -> QuotientRing:
    reduced = ring.extend(list(seq))
    if not reduced.is_artinian:
        raise CmwildError("reduction by the sequence is not zero-dimensional")
    return reduced


# ------------------------------------------------------------- the verdict


@dataclass
class WildnessReport:
    ring: QuotientRing
    seed: int
    dimension: int
    cm_assumed: bool
    sequence: list = field(default_factory=list)
    m: int = 0
    window: tuple = (0, -1)
    scan: list = field(default_factory=list)  # [(c, dim)]
    verdict: str = VERDICT_INCONCLUSIVE
    witness_c: int | None = None
    witness_dim: int | None = None

    def to_json(self) -> dict:
        data = {
            "schema": SCHEMA,
            "p": self.ring.p,
            "seed": self.seed,
            "ring": self.ring.to_json(),
            "dimension": self.dimension,
            "cm_assumed": self.cm_assumed,
            "sequence": [str(y) for y in self.sequence],
            "m": self.m,
            "window": [self.window[0], self.window[1]],
            "scan": [{"c": c, "dim": n} for c, n in self.scan],
            "verdict": self.verdict,
            "witness_c": self.witness_c,
            "witness_dim": self.witness_dim,
        }
        if self.verdict == VERDICT_INCONCLUSIVE:
            data["note"] = INCONCLUSIVE_NOTE
        return data


def wildness_certificate(
    ring: QuotientRing,
    sequence=None,
    c_window=None,
    seed: int = 0,
    budget: int = 50,
    min_start: int | None = None,
) -> WildnessReport:
    """Run the full criterion on a graded quotient ring.

    ``sequence`` (strings or polynomials) overrides the search; every
    element is still verified, and a non-regular element is an input error.
    ``c_window`` overrides the scanned degree range.
    """
    d = ring.krull_dimension
    if d < 0:
        raise InputError("the zero ring has no classification")
    if sequence is not None:
        seq = [ring.parse(s) if isinstance(s, str) else s for s in sequence]
        current = ring
        for i, y in enumerate(seq):
            if not verify_regular_element(current, y):
                raise InputError(
                    f"sequence element {i} ({y}) is not regular at that stage"
                )
            current = current.extend([y])
        if len(seq) != d:
            raise InputError(
                f"sequence has length {len(seq)} but the ring has dimension {d}"
            )
    else:
        seq = find_regular_sequence(ring, d, seed=seed, budget=budget)
    reduced = artinian_reduction(ring, seq)
    m = sum(y.degree() for y in seq)
    top = reduced.top_degree()
    start = max(m - d + 2, 1)
    if min_start is not None:
        start = max(start, min_start)
    if c_window is not None:
        start, end = int(c_window[0]), int(c_window[1])
        end = min(end, top)
    else:
        end = top
    scan = [(c, reduced.hilbert_dim(c)) for c in range(start, end + 1)]
    verdict = VERDICT_INCONCLUSIVE
    witness_c = witness_dim = None
    for c, n in scan:
        if n >= 3:
            verdict, witness_c, witness_dim = VERDICT_WILD, c, n
            break
    if verdict == VERDICT_INCONCLUSIVE:
        for c, n in scan:
            if n >= 2:
                verdict, witness_c, witness_dim = VERDICT_INFINITE, c, n
                break
    return WildnessReport(
        ring=ring,
        seed=seed,
        dimension=d,
        cm_assumed=False,
        sequence=seq,
        m=m,
        window=(start, end),
        scan=scan,
        verdict=verdict,
        witness_c=witness_c,
        witness_dim=witness_dim,
    )


def hypersurface_certificate(
    variables, form: str, p: int, seed: int = 0, c_window=None
) -> WildnessReport:
    ring = QuotientRing.from_strings(variables, [form], p)
    if len(ring.relations) != 1:
        raise InputError("a hypersurface needs exactly one nonzero relation")
    return wildness_certificate(ring, seed=seed, c_window=c_window)


def complete_intersection_certificate(
    variables, forms, p: int, seed: int = 0, c_window=None
) -> WildnessReport:
    """Wildness certificate for S/(forms); the forms are first verified to
    be a regular sequence, anything else is rejected."""
    if not forms:
        raise InputError("need at least one relation")
    amb = QuotientRing.polynomial_ring(variables, p)
    current = amb
    parsed = []
    for i, s in enumerate(forms):
        f = current.parse(s) if isinstance(s, str) else s
        if not verify_regular_element(current, f):
            raise InputError(
                f"not a complete intersection: relation {i} ({f}) is a"
                " zerodivisor at its stage"
            )
        parsed.append(f)
        current = current.extend([f])
    ring = QuotientRing(amb.ambient, parsed)
    return wildness_certificate(ring, seed=seed, c_window=c_window, min_start=3)
