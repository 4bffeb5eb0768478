"""Constructive certificates that a word is not a deep hole.

A witness point is a zero of the top remainder coefficient with nonzero,
pairwise-distinct coordinates: at such a point the full remainder r drops
to degree <= k-1, so the word generated by r is a codeword agreeing with
the received word on at least k+1 positions, forcing the distance below
the covering radius.  Search enumerates strictly-increasing coordinate
tuples only — the polynomial is symmetric, so ordered search is complete
and (k+1)! cheaper — in ascending canonical order, deterministically.

Also here: the product-of-Artin-Schreier-trinomials witness for the pure
monomial in characteristic p > d+1 with p | (k+d), and the exhaustive
rational scans of the singular system (affine and at infinity) used to
validate the dimension statements at desk scale.
"""

import threading
from itertools import combinations, product

import numpy as np

from . import kernels
from .errors import (DegreeTooHigh, FieldMismatch, HypothesisViolated,
                     InsufficientTraceZeroElements, InvalidDimensions,
                     NotAWitness, TooLargeForExhaustive)
from .poly import UPoly, _rep, uni_distinct_roots, uni_rem
from .rscode import Word, is_deep_hole, word_from_poly
from .symmetric import TopPoly, eval_hf

EXHAUSTIVE_CAP = 10 ** 8
SEARCH_BATCH = 4096

FOUND = "found"
NO_WITNESS = "no_witness"
BUDGET_EXCEEDED = "budget_exceeded"


class WitnessCert:
    """A verified not-a-deep-hole certificate.

    point: nonzero pairwise-distinct coordinates with H_f(point) = 0;
    r: the degree <= k-1 remainder, generator of the agreeing codeword;
    agreements >= k+1; distance_bound = n - agreements <= q-k-2.
    """

    __slots__ = ("point", "r", "agreements", "distance_bound")

    def __init__(self, point, r, agreements, distance_bound):
        self.point = tuple(point)
        self.r = r
        self.agreements = agreements
        self.distance_bound = distance_bound

    def verify(self, f, code):
        """Re-check every invariant from scratch; True iff all hold."""
        field = code.field
        xs = self.point
        if len(xs) != f.k + 1 or 0 in xs or len(set(xs)) != len(xs):
            return False
        if eval_hf(f, xs) != 0:
            return False
        qx = _poly_from_roots(field, xs)
        if uni_rem(f.as_upoly(), qx) != self.r or self.r.degree > f.k - 1:
            return False
        wf = word_from_poly(code, f.as_upoly())
        wr = word_from_poly(code, self.r)
        agree = sum(a == b for a, b in zip(wf.symbols, wr.symbols))
        return (agree == self.agreements
                and self.distance_bound == code.n - agree
                and self.agreements >= f.k + 1
                and self.distance_bound <= field.q - f.k - 2)

    def __repr__(self):
        return (f"WitnessCert(point={list(self.point)}, "
                f"agreements={self.agreements}, bound={self.distance_bound})")


class SearchResult:
    """Tri-state search outcome: proven exhaustion is distinct from a
    tripped eval budget."""

    __slots__ = ("status", "cert", "evals")

    def __init__(self, status, cert, evals):
        self.status = status
        self.cert = cert
        self.evals = evals

    def __repr__(self):
        return f"SearchResult({self.status}, evals={self.evals})"


def _poly_from_roots(field, xs):
    q = UPoly(field, (1,))
    for x in xs:
        q = q * UPoly(field, (field.neg(_rep(field, x)), 1))
    return q


def certificate_from_point(f, code, x):
    """Package a witness point into a verified certificate."""
    field = code.field
    if f.field != field:
        raise FieldMismatch(f"{f.field!r} vs {field!r}")
    xs = tuple(_rep(field, v) for v in x)
    if len(xs) != f.k + 1 or 0 in xs or len(set(xs)) != len(xs):
        raise NotAWitness(f"coordinates must be nonzero and pairwise distinct: {xs}")
    if eval_hf(f, xs) != 0:
        raise NotAWitness(f"H_f{xs} != 0")
    qx = _poly_from_roots(field, xs)
    r = uni_rem(f.as_upoly(), qx)
    assert r.degree <= f.k - 1, "remainder must drop degree at a witness point"
    wf = word_from_poly(code, f.as_upoly())
    wr = word_from_poly(code, r)
    agreements = sum(a == b for a, b in zip(wf.symbols, wr.symbols))
    assert agreements >= f.k + 1, "f - r vanishes on the k+1 chosen points"
    return WitnessCert(xs, r, agreements, code.n - agreements)


def _check_search_args(f, code):
    if f.field != code.field:
        raise FieldMismatch(f"{f.field!r} vs {code.field!r}")
    if f.k != code.k:
        raise InvalidDimensions(f"TopPoly k={f.k} vs code k={code.k}")
    if f.k + 1 > code.n:
        raise InvalidDimensions(
            f"no point with {f.k + 1} distinct nonzero coordinates exists in F_{code.field.q}")
    if f.k + f.d > code.n - 1:
        raise InvalidDimensions(
            f"deg f = {f.k + f.d} exceeds n-1 = {code.n - 1}; no word to certify")


def search_good_point(f, code, budget=None, threads=1, batch_size=SEARCH_BATCH):
    """First witness point in ascending lexicographic order of
    strictly-increasing coordinate tuples, or a proven negative.

    ``budget`` caps the number of pointwise evaluations.  With threads > 1
    the tuple space is partitioned on the first coordinate and any found
    witness wins; WHICH witness is only deterministic single-threaded.
    """
    _check_search_args(f, code)
    field = code.field
    units = field.units_reps()
    if threads <= 1 or not kernels.supports(field):
        return _search_block(f, code, units, None, budget, batch_size)
    return _search_threaded(f, code, units, budget, threads, batch_size)


def _batched(it, size):
    block = []
    for item in it:
        block.append(item)
        if len(block) == size:
            yield block
            block = []
    if block:
        yield block


def _search_block(f, code, units, first, budget, batch_size,
                  counter=None, stop_event=None):
    """Scan one enumeration block (all tuples, or those with a fixed first
    coordinate).  Returns a SearchResult for that block."""
    field = code.field
    k = f.k
    if first is None:
        tuples = combinations(units, k + 1)
    else:
        rest = [u for u in units if u > first]
        tuples = ((first,) + t for t in combinations(rest, k))
    use_kernel = kernels.supports(field)
    evals = 0
    for block in _batched(tuples, batch_size):
        if stop_event is not None and stop_event.is_set():
            return SearchResult(NO_WITNESS, None, evals)
        if budget is not None:
            spent = counter.take(len(block)) if counter is not None else evals
            remaining = budget - spent
            if remaining <= 0:
                return SearchResult(BUDGET_EXCEEDED, None, evals)
            if remaining < len(block):
                block = block[:remaining]
        evals += len(block)
        if use_kernel:
            vals = kernels.hf_values(field, k, f.lows, np.array(block, dtype=np.int64))
            hits = np.flatnonzero(vals == 0)
            hit = int(hits[0]) if hits.size else None
        else:
            hit = next((i for i, x in enumerate(block) if eval_hf(f, x) == 0), None)
        if hit is not None:
            cert = certificate_from_point(f, code, block[hit])
            if stop_event is not None:
                stop_event.set()
            return SearchResult(FOUND, cert, evals)
    return SearchResult(NO_WITNESS, None, evals)


class _Counter:
    def __init__(self):
        self.value = 0
        self._lock = threading.Lock()

    def take(self, want):
        with self._lock:
            before = self.value
            self.value += want
            return before


def _search_threaded(f, code, units, budget, threads, batch_size):
    from concurrent.futures import ThreadPoolExecutor
    stop = threading.Event()
    counter = _Counter() if budget is not None else None
    results = []
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(_search_block, f, code, units, first, budget,
                               batch_size, counter, stop)
                   for first in units[:len(units) - f.k]]
        for fut in futures:
            results.append(fut.result())
    total = sum(r.evals for r in results)
    for r in results:
        if r.status == FOUND:
            return SearchResult(FOUND, r.cert, total)
    if any(r.status == BUDGET_EXCEEDED for r in results):
        return SearchResult(BUDGET_EXCEEDED, None, total)
    return SearchResult(NO_WITNESS, None, total)


# ---------------------------------------------------------------------------
# the monomial witness in characteristic p > d+1
# ---------------------------------------------------------------------------

class ASWitness:
    """Product-of-trinomials witness that the monomial word is not deep.

    g = prod (T^p - T - b_i) over l = (k+d)/p distinct nonzero trace-zero
    b_i; g splits into p*l distinct roots in the units, and h = g - T^(k+d)
    has degree <= p(l-1)+1 <= k-1, so -h generates a codeword agreeing
    with the monomial word on all p*l > k roots.
    """

    __slots__ = ("field", "k", "d", "b_list", "g", "h", "root_count",
                 "distance", "covering_radius")

    def __init__(self, field, k, d, b_list, g, h, root_count, distance,
                 covering_radius):
        self.field = field
        self.k = k
        self.d = d
        self.b_list = tuple(b_list)
        self.g = g
        self.h = h
        self.root_count = root_count
        self.distance = distance
        self.covering_radius = covering_radius

    def __repr__(self):
        return (f"ASWitness(b={list(self.b_list)}, roots={self.root_count}, "
                f"distance={self.distance} < {self.covering_radius})")


def artin_schreier_witness(field, k, d):
    """Build and verify the monomial witness; every hypothesis is checked
    and named on failure."""
    p, q = field.p, field.q
    if not p > d + 1:
        raise HypothesisViolated("p>d+1")
    if (k + d) % p != 0:
        raise HypothesisViolated("p|(k+d)")
    if not q > k + d:
        raise HypothesisViolated("q>k+d")
    if not k > d:
        raise HypothesisViolated("k>d")
    l = (k + d) // p
    b_list = []
    for rep in field.units_reps():
        if field.trace(rep) == 0:
            b_list.append(rep)
            if len(b_list) == l:
                break
    if len(b_list) < l:
        raise InsufficientTraceZeroElements(
            f"needed {l} nonzero trace-zero elements, found {len(b_list)}")
    g = UPoly(field, (1,))
    for b in b_list:
        trinomial = [0] * (p + 1)
        trinomial[0] = field.neg(b)
        trinomial[1] = field.neg(1)
        trinomial[p] = 1
        g = g * UPoly(field, trinomial)
    assert g.degree == k + d and g.is_monic
    h = g - UPoly.monomial(field, k + d)
    assert h.degree <= p * (l - 1) + 1 <= k - 1
    roots = uni_distinct_roots(g)
    root_count = len(roots)
    assert root_count == p * l, f"expected {p * l} distinct roots, got {root_count}"
    assert all(r.rep != 0 for r in roots), "roots must avoid zero"
    # agreement count of the monomial word with the codeword of -h
    from .rscode import RSCode
    code = RSCode(field, k)
    w_mono = word_from_poly(code, UPoly.monomial(field, k + d))
    w_code = word_from_poly(code, -h)
    agreements = sum(a == b for a, b in zip(w_mono.symbols, w_code.symbols))
    assert agreements == root_count
    distance = code.n - agreements
    assert distance < code.covering_radius
    return ASWitness(field, k, d, b_list, g, h, root_count, distance,
                     code.covering_radius)


# ---------------------------------------------------------------------------
# exhaustive rational scans of the singular systems
# ---------------------------------------------------------------------------

class ScanReport:
    """Annotated rational solutions of a singular system.

    points: list of (coordinates, number_of_distinct_coordinates);
    full_linear_families: index partitions whose whole rational lattice
    lies inside the solution set (the dimension-(d-1) signature).
    """

    __slots__ = ("points", "d", "full_linear_families")

    def __init__(self, points, d, full_linear_families):
        self.points = points
        self.d = d
        self.full_linear_families = full_linear_families

    @property
    def max_distinct_coords(self):
        return max((m for _, m in self.points), default=0)

    @property
    def within_bound(self):
        """True iff every solution has at most d-1 distinct coordinates."""
        return self.max_distinct_coords <= self.d - 1

    def point_set(self):
        return {x for x, _ in self.points}

    def __repr__(self):
        return (f"ScanReport({len(self.points)} points, "
                f"max_distinct={self.max_distinct_coords}, d={self.d})")


def _guard_exhaustive(f, code):
    if f.field != code.field:
        raise FieldMismatch(f"{f.field!r} vs {code.field!r}")
    if f.k != code.k:
        raise InvalidDimensions(f"TopPoly k={f.k} vs code k={code.k}")
    if code.field.q ** (f.k + 1) > EXHAUSTIVE_CAP:
        raise TooLargeForExhaustive(
            f"q^(k+1) = {code.field.q ** (f.k + 1)} exceeds {EXHAUSTIVE_CAP}")


def _point_chunks(q, kplus1, chunk=1 << 15):
    total = q ** kplus1
    weights = [q ** (kplus1 - 1 - i) for i in range(kplus1)]
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        pts = np.empty((idx.size, kplus1), dtype=np.int64)
        for i, w in enumerate(weights):
            pts[:, i] = (idx // w) % q
        yield pts


def _distinct(xs):
    return len(set(xs))


def scan_rational_singular_points(f, code):
    """All x in F_q^(k+1) where the value and the whole gradient vanish,
    annotated with distinct-coordinate counts; exhaustive and exact."""
    _guard_exhaustive(f, code)
    field = code.field
    k, d = f.k, f.d
    points = []
    for pts in _point_chunks(field.q, k + 1):
        vals, _, grads = kernels.hf_with_gradient(field, k, d, f.lows, pts)
        mask = (vals == 0) & (grads == 0).all(axis=1)
        for row in pts[mask]:
            x = tuple(int(v) for v in row)
            points.append((x, _distinct(x)))
    families = _full_linear_families(points, k + 1, d, field.q)
    return ScanReport(points, d, families)


def scan_infinity_singular(f, code):
    """Rational affine-cone solutions of the singular-at-infinity system:
    top form zero, its gradient zero, and f_{d-1} times the next form zero."""
    _guard_exhaustive(f, code)
    field = code.field
    k, d = f.k, f.d
    zero_lows = (0,) * d
    fd1 = f.lows[d - 1] if d >= 1 else 0
    points = []
    for pts in _point_chunks(field.q, k + 1):
        vals, hstack, grads = kernels.hf_with_gradient(field, k, d, zero_lows, pts)
        mask = (vals == 0) & (grads == 0).all(axis=1)
        if d >= 1 and fd1 != 0:
            mask &= hstack[:, d - 1] == 0
        for row in pts[mask]:
            x = tuple(int(v) for v in row)
            points.append((x, _distinct(x)))
    families = _full_linear_families(points, k + 1, d, field.q)
    return ScanReport(points, d, families)


def _set_partitions(items, blocks):
    """All partitions of ``items`` into exactly ``blocks`` nonempty subsets."""
    if blocks <= 0:
        if not items and blocks == 0:
            yield []
        return
    if len(items) < blocks:
        return
    first, rest = items[0], items[1:]
    if blocks == 1:
        yield [list(items)]
        return
    # first joins an existing block of a (blocks)-partition of rest,
    # or sits alone next to a (blocks-1)-partition of rest
    for part in _set_partitions(rest, blocks):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
    for part in _set_partitions(rest, blocks - 1):
        yield [[first]] + part


def _full_linear_families(points, kplus1, d, q):
    """Partitions I of the coordinate set into d-1 blocks whose whole
    lattice {x : x_i = lambda_{block(i)}} lies inside the solution set."""
    if d < 2 or not points:
        return []
    pset = {x for x, _ in points}
    found = []
    for part in _set_partitions(list(range(kplus1)), d - 1):
        block_of = {}
        for b, block in enumerate(part):
            for i in block:
                block_of[i] = b
        complete = True
        for lam in product(range(q), repeat=d - 1):
            x = tuple(lam[block_of[i]] for i in range(kplus1))
            if x not in pset:
                complete = False
                break
        if complete:
            found.append([sorted(block) for block in part])
    return found


# ---------------------------------------------------------------------------
# brute-force equivalence of the two deep-hole criteria
# ---------------------------------------------------------------------------

class SweepReport:
    __slots__ = ("q", "k", "d", "instances", "deep_holes", "witnesses",
                 "counterexamples")

    def __init__(self, q, k, d):
        self.q = q
        self.k = k
        self.d = d
        self.instances = 0
        self.deep_holes = 0
        self.witnesses = 0
        self.counterexamples = []

    @property
    def equivalence_holds(self):
        return not self.counterexamples

    def __repr__(self):
        return (f"SweepReport(q={self.q}, k={self.k}, d={self.d}, "
                f"instances={self.instances}, deep_holes={self.deep_holes}, "
                f"counterexamples={len(self.counterexamples)})")


def equivalence_sweep(code, d, threads=1):
    """For every one of the q^d top polynomials of the given degree step,
    compare the brute-force deep-hole verdict against exhaustive witness
    search; record any instance where they disagree."""
    field = code.field
    k = code.k
    report = SweepReport(field.q, k, d)
    for lows in product(range(field.q), repeat=d):
        f = TopPoly(field, k, d, lows)
        w = word_from_poly(code, f.as_upoly())
        dh = is_deep_hole(code, w)
        sr = search_good_point(f, code, threads=threads)
        assert sr.status in (FOUND, NO_WITNESS)
        report.instances += 1
        if dh:
            report.deep_holes += 1
        if sr.status == FOUND:
            report.witnesses += 1
        if dh != (sr.status == NO_WITNESS):
            report.counterexamples.append(
                {"lows": list(lows), "is_deep_hole": dh, "search": sr.status})
    return report


def count_variety_points(f, code):
    """Exhaustive exact counts over F_q^(k+1): (points on the hypersurface,
    those with a zero coordinate, those with a repeated coordinate, and the
    useful ones — nonzero pairwise-distinct)."""
    _guard_exhaustive(f, code)
    field = code.field
    k = f.k
    total = n1 = n2 = good = 0
    for pts in _point_chunks(field.q, k + 1):
        vals = kernels.hf_values(field, k, f.lows, pts)
        on_v = vals == 0
        has_zero = (pts == 0).any(axis=1)
        has_equal = np.zeros(pts.shape[0], dtype=bool)
        for i in range(k + 1):
            for j in range(i + 1, k + 1):
                has_equal |= pts[:, i] == pts[:, j]
        total += int(on_v.sum())
        n1 += int((on_v & has_zero).sum())
        n2 += int((on_v & has_equal).sum())
        good += int((on_v & ~has_zero & ~has_equal).sum())
    return total, n1, n2, good
