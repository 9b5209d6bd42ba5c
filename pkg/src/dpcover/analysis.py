"""Certification engine: exhaustive colorability, exact weights, parity checks.

Colorings over a sorted n-vertex universe are the integers 0 .. 2^n - 1 (bit i
colors the i-th vertex).  Each map phi becomes a (mask, pattern) pair so that
"phi is contained in f" is the single test (f & mask) == pattern; exhaustive
scans run chunk-by-chunk through numpy.  All weights are exact dyadics.

Enumeration thresholds are defaults, overridable per call or via environment
variables (DPCOVER_ENUM_LIMIT, DPCOVER_PARITY_LIMIT, DPCOVER_AUDIT_LIMIT).

Parallel mode partitions the coloring space into fixed contiguous chunks and
merges chunk results by index, so reports are identical for any worker count.
"""
from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Sequence

import numpy as np

from .core import (
    Coloring,
    Family,
    PartialMap,
    VertexId,
    classify,
    colors,
    domain_hypergraph,
)
from .dyadic import Dyadic, ZERO, half_power
from .errors import OutOfUniverseError, UniverseTooLargeError

DEFAULT_ENUM_LIMIT = 30
DEFAULT_PARITY_LIMIT = 24
DEFAULT_AUDIT_LIMIT = 20
DEFAULT_CHUNK = 1 << 16


def _limit(explicit: int | None, env_name: str, default: int) -> int:
    if explicit is not None:
        return explicit
    raw = os.environ.get(env_name)
    return int(raw) if raw else default


def _ranks(universe: Sequence[VertexId]) -> dict[VertexId, int]:
    return {v: i for i, v in enumerate(universe)}


def _mask_patterns(
    family: Family, universe: Sequence[VertexId]
) -> tuple[list[int], list[int]]:
    """(mask, pattern) per map: f contains phi iff (f & mask) == pattern."""
    rank = _ranks(universe)
    masks, patterns = [], []
    for m in family.maps:
        mask = pattern = 0
        for v, bit in m.entries:
            if v not in rank:
                raise OutOfUniverseError(f"vertex {v} not in universe")
            mask |= 1 << rank[v]
            pattern |= bit << rank[v]
        masks.append(mask)
        patterns.append(pattern)
    return masks, patterns


def _scan_chunk(args: tuple) -> tuple[int | None, int]:
    """Scan codes [lo, hi): return (first avoiding code or None, avoider count)."""
    lo, hi, masks, patterns = args
    codes = np.arange(lo, hi, dtype=np.uint64)
    covered = np.zeros(hi - lo, dtype=bool)
    for mask, pattern in zip(masks, patterns):
        covered |= (codes & np.uint64(mask)) == np.uint64(pattern)
    uncovered = ~covered
    count = int(uncovered.sum())
    first = lo + int(np.argmax(uncovered)) if count else None
    return first, count


def _chunk_bounds(total: int, chunk_size: int) -> list[tuple[int, int]]:
    return [(lo, min(lo + chunk_size, total)) for lo in range(0, total, chunk_size)]


@dataclass(frozen=True)
class ColorabilityReport:
    """Outcome of an exhaustive scan.

    When no witness exists, enumerated = 2^n (the whole space was certified).
    When a witness is reported outside count mode, enumerated = witness index
    + 1: everything below the witness was certified to contain some map.
    """

    colorable: bool
    witness: Coloring | None
    coloring_count: int | None
    enumerated: int


def find_coloring(
    family: Family,
    *,
    count: bool = False,
    workers: int = 1,
    limit: int | None = None,
    chunk_size: int = DEFAULT_CHUNK,
) -> ColorabilityReport:
    """Exhaustively search for a coloring avoiding every map of the family.

    The witness is the smallest coloring code regardless of worker count or
    scheduling.  Raises UniverseTooLargeError above the enumeration limit.
    """
    universe = family.universe
    n = len(universe)
    cap = _limit(limit, "DPCOVER_ENUM_LIMIT", DEFAULT_ENUM_LIMIT)
    if n > cap:
        raise UniverseTooLargeError(f"universe has {n} vertices, limit is {cap}")
    masks, patterns = _mask_patterns(family, universe)
    total = 1 << n

    bounds = _chunk_bounds(total, chunk_size)
    jobs = [(lo, hi, masks, patterns) for lo, hi in bounds]
    first: int | None = None
    avoiders = 0
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan_chunk, jobs))
        for chunk_first, chunk_count in results:
            avoiders += chunk_count
            if first is None and chunk_first is not None:
                first = chunk_first
                if not count:
                    break
    else:
        for job in jobs:
            chunk_first, chunk_count = _scan_chunk(job)
            avoiders += chunk_count
            if first is None and chunk_first is not None:
                first = chunk_first
                if not count:
                    break

    if first is None:
        report = ColorabilityReport(False, None, (0 if count else None), total)
    else:
        witness = Coloring(universe, first)
        if not colors(witness, family):
            raise RuntimeError("internal error: witness failed re-check")
        enumerated = total if count else first + 1
        report = ColorabilityReport(True, witness, (avoiders if count else None), enumerated)
    return report


def avoiding_codes(
    family: Family,
    *,
    limit: int | None = None,
    chunk_size: int = DEFAULT_CHUNK,
) -> np.ndarray:
    """All coloring codes avoiding every map, ascending."""
    universe = family.universe
    n = len(universe)
    cap = _limit(limit, "DPCOVER_PARITY_LIMIT", DEFAULT_PARITY_LIMIT)
    if n > cap:
        raise UniverseTooLargeError(f"universe has {n} vertices, limit is {cap}")
    masks, patterns = _mask_patterns(family, universe)
    parts = []
    for lo, hi in _chunk_bounds(1 << n, chunk_size):
        codes = np.arange(lo, hi, dtype=np.uint64)
        covered = np.zeros(hi - lo, dtype=bool)
        for mask, pattern in zip(masks, patterns):
            covered |= (codes & np.uint64(mask)) == np.uint64(pattern)
        parts.append(np.flatnonzero(~covered).astype(np.int64) + lo)
    return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)


@dataclass(frozen=True)
class SampleReport:
    trials: int
    seed: int
    counterexamples: int
    first_counterexample: Coloring | None


class _MapIndex:
    """Decision tree over maps for fast "does f contain any map" queries.

    Nodes split on a vertex rank and route maps into value-0, value-1, and
    not-mentioned branches; small map sets stay in leaves.  For pivot-recursive
    families this makes each query O(depth) instead of O(|F| * r).
    """

    _LEAF_SIZE = 4
    _SAMPLE = 32
    _MAX_DEPTH = 200

    def __init__(self, family: Family):
        universe = family.universe
        rank = _ranks(universe)
        maps = [{rank[v]: bit for v, bit in m.entries} for m in family.maps]
        self.root = self._build(maps)

    def _build(self, maps: list[dict[int, int]], depth: int = 0):
        if any(not m for m in maps):
            return True  # empty map: contained in everything
        if len(maps) <= self._LEAF_SIZE or depth >= self._MAX_DEPTH:
            return list(maps) or None
        # Sample across the whole list: sorted families keep structurally
        # shared vertices (recursion pivots) visible only at full stride.
        step = max(1, len(maps) // self._SAMPLE)
        counts: dict[int, int] = {}
        for m in maps[::step][: self._SAMPLE]:
            for r in m:
                counts[r] = counts.get(r, 0) + 1
        split = max(sorted(counts), key=lambda r: counts[r])
        zero, one, absent = [], [], []
        for m in maps:
            bit = m.get(split)
            if bit is None:
                absent.append(m)
            elif bit == 0:
                zero.append({r: b for r, b in m.items() if r != split})
            else:
                one.append({r: b for r, b in m.items() if r != split})
        if not zero and not one:  # split failed to separate; fall back to a leaf
            return list(maps)
        return (
            split,
            self._build(zero, depth + 1),
            self._build(one, depth + 1),
            self._build(absent, depth + 1),
        )

    def contains_any(self, buf: bytes) -> bool:
        stack = [self.root]
        while stack:
            node = stack.pop()
            if node is None:
                continue
            if node is True:
                return True
            if isinstance(node, list):
                for m in node:
                    if all((buf[r >> 3] >> (r & 7)) & 1 == b for r, b in m.items()):
                        return True
                continue
            split, zero, one, absent = node
            stack.append(absent)
            stack.append(one if (buf[split >> 3] >> (split & 7)) & 1 else zero)
        return False


def sample_noncolorability(family: Family, trials: int, seed: int) -> SampleReport:
    """Try `trials` seeded random colorings; count those avoiding every map.

    Zero counterexamples is evidence (not proof) of non-colorability.  The
    report is a pure function of (family, trials, seed); buffers come from a
    counter-based generator so wide universes stay cheap to sample.
    """
    universe = family.universe
    n = len(universe)
    nbytes = (n + 7) // 8
    rng = np.random.Generator(np.random.PCG64(seed))
    index = _MapIndex(family)
    counterexamples = 0
    first: Coloring | None = None
    block_trials = max(1, min(trials, (1 << 21) // max(1, nbytes)))
    done = 0
    while done < trials:
        batch = min(block_trials, trials - done)
        block = memoryview(rng.bytes(batch * nbytes)) if nbytes else b""
        for t in range(batch):
            buf = block[t * nbytes : (t + 1) * nbytes] if nbytes else b""
            if not index.contains_any(buf):
                counterexamples += 1
                if first is None:
                    bits = int.from_bytes(buf, "little") & ((1 << n) - 1)
                    first = Coloring(universe, bits)
        done += batch
    return SampleReport(trials, seed, counterexamples, first)


def map_weight(phi: PartialMap) -> Dyadic:
    """w(phi) = 2^(-|phi|): the fraction of total assignments containing phi."""
    return half_power(len(phi))


def weight(family: Family) -> Dyadic:
    """Sum of member weights, exact."""
    total = ZERO
    for m in family.maps:
        total = total + map_weight(m)
    return total


def weight_lower_bound_certificate(family: Family) -> str:
    """"colorable-guaranteed" when weight < 1 (a coloring must exist), else "inconclusive"."""
    return "colorable-guaranteed" if weight(family) < 1 else "inconclusive"


def sub_family(family: Family, subset: Iterable[VertexId]) -> tuple[Family, Family]:
    """Split the maps whose domain contains `subset` by the parity of their sum on it.

    Returns (even-parity family, odd-parity family).  An empty subset selects
    every map into the even side.
    """
    s = frozenset(subset)
    even, odd = [], []
    for m in family.maps:
        d = m.as_dict()
        if s <= d.keys():
            (odd if sum(d[v] for v in s) & 1 else even).append(m)
    return Family.of(even), Family.of(odd)


class MultiplicityTable:
    """Multiplicity of every coloring: how many maps each coloring contains.

    One enumeration pass shared by the parity identity's right side and the
    weight-one audit.  `ambient` may extend the family's universe.
    """

    def __init__(
        self,
        family: Family,
        ambient: Sequence[VertexId] | None = None,
        *,
        limit: int | None = None,
        chunk_size: int = DEFAULT_CHUNK,
    ):
        universe = family.universe
        amb = tuple(sorted(set(ambient))) if ambient is not None else universe
        if not set(universe) <= set(amb):
            raise OutOfUniverseError("ambient must contain the family universe")
        n = len(amb)
        cap = _limit(limit, "DPCOVER_PARITY_LIMIT", DEFAULT_PARITY_LIMIT)
        if n > cap:
            raise UniverseTooLargeError(f"ambient has {n} vertices, limit is {cap}")
        self.ambient = amb
        self.n = n
        masks, patterns = _mask_patterns(family, amb)
        counts = np.zeros(1 << n, dtype=np.int64)
        self._chunk_size = chunk_size
        for lo, hi in _chunk_bounds(1 << n, chunk_size):
            codes = np.arange(lo, hi, dtype=np.uint64)
            block = counts[lo:hi]
            for mask, pattern in zip(masks, patterns):
                block += (codes & np.uint64(mask)) == np.uint64(pattern)
        self.counts = counts

    def multiplicity(self, bits: int) -> int:
        return int(self.counts[bits])

    def min(self) -> int:
        return int(self.counts.min())

    def max(self) -> int:
        return int(self.counts.max())

    def histogram(self) -> dict[int, int]:
        values, freq = np.unique(self.counts, return_counts=True)
        return {int(v): int(c) for v, c in zip(values, freq)}

    def signed_sum(self, sign_mask: int) -> int:
        """Sum over all colorings f of (-1)^popcount(f & sign_mask) * multiplicity(f)."""
        total = 0
        for lo, hi in _chunk_bounds(1 << self.n, self._chunk_size):
            codes = np.arange(lo, hi, dtype=np.uint64)
            parity = np.bitwise_count(codes & np.uint64(sign_mask)) & np.uint64(1)
            signs = 1 - 2 * parity.astype(np.int64)
            total += int(np.dot(signs, self.counts[lo:hi]))
        return total


@dataclass(frozen=True)
class ParityResidual:
    """Both sides of the signed-weight identity for a vertex set S.

    lhs = w(even side) - w(odd side) of the S-split; rhs is the signed average
    of multiplicities, 2^(-n) * sum_f (-1)^(sum of f on S) * multiplicity(f).
    The two sides are equal for every family and every S inside the ambient.
    """

    subset: tuple[VertexId, ...]
    lhs: Dyadic
    rhs: Dyadic
    ambient: tuple[VertexId, ...]

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def parity_identity(
    family: Family,
    subset: Iterable[VertexId],
    *,
    ambient: Sequence[VertexId] | None = None,
    limit: int | None = None,
    table: MultiplicityTable | None = None,
) -> ParityResidual:
    """Evaluate both sides of the signed-weight identity independently.

    The left side is combinatorial (weights of the S-split); the right side is
    an exhaustive enumeration over the ambient universe.  A prebuilt
    MultiplicityTable on the same ambient may be passed to share the pass.
    """
    s = tuple(sorted(set(subset)))
    if table is None:
        amb = tuple(sorted(set(family.universe) | set(s) | set(ambient or ())))
        table = MultiplicityTable(family, amb, limit=limit)
    else:
        amb = table.ambient
        if not set(s) <= set(amb):
            raise OutOfUniverseError("subset not inside the table's ambient")
    even, odd = sub_family(family, s)
    lhs = weight(even) - weight(odd)
    rank = _ranks(amb)
    sign_mask = 0
    for v in s:
        sign_mask |= 1 << rank[v]
    rhs = Dyadic(table.signed_sum(sign_mask), table.n)
    return ParityResidual(s, lhs, rhs, amb)


def cover_multiplicity(family: Family, coloring: Coloring) -> int:
    """Number of maps contained in the coloring."""
    count = 0
    for m in family.maps:
        if all(coloring.value(v) == bit for v, bit in m.entries):
            count += 1
    return count


@dataclass(frozen=True)
class AuditViolation:
    clause: str
    detail: str


@dataclass(frozen=True)
class WeightOneAudit:
    """Joint consistency check for weight-1 families.

    Clauses, in report order:
      (a) weight-is-one          total weight equals 1
      (b) no-coloring            no coloring avoids every map
      (c) multiplicity-one       every coloring contains exactly one map
      (d) parity-balance         w(even) = w(odd) for the S-split, for every
                                 nonempty S contained in some domain (for any
                                 other S both sides are empty, so the identity
                                 holds vacuously)
    All clauses are evaluated independently; `violations` lists every failure.
    """

    family_weight: Dyadic
    violations: tuple[AuditViolation, ...]

    @property
    def consistent(self) -> bool:
        return not self.violations

    @property
    def first_violation(self) -> AuditViolation | None:
        return self.violations[0] if self.violations else None

    @property
    def verdict(self) -> str:
        return "consistent" if self.consistent else f"violated:{self.violations[0].clause}"


def weight_one_audit(family: Family, *, limit: int | None = None) -> WeightOneAudit:
    """Audit the package of facts forced on non-colorable weight-1 families."""
    n = len(family.universe)
    cap = _limit(limit, "DPCOVER_AUDIT_LIMIT", DEFAULT_AUDIT_LIMIT)
    if n > cap:
        raise UniverseTooLargeError(f"universe has {n} vertices, limit is {cap}")

    violations: list[AuditViolation] = []
    w = weight(family)
    if w != 1:
        violations.append(AuditViolation("weight-is-one", f"weight is {w}"))

    report = find_coloring(family, limit=cap)
    if report.colorable:
        assert report.witness is not None
        violations.append(
            AuditViolation("no-coloring", f"coloring {report.witness.bits} avoids every map")
        )

    table = MultiplicityTable(family, limit=cap)
    bad = np.flatnonzero(table.counts != 1)
    if bad.size:
        first_bad = int(bad[0])
        violations.append(
            AuditViolation(
                "multiplicity-one",
                f"coloring {first_bad} contains {table.multiplicity(first_bad)} maps",
            )
        )

    subsets: set[tuple[VertexId, ...]] = set()
    for m in family.maps:
        d = m.domain
        for k in range(1, len(d) + 1):
            subsets.update(combinations(d, k))
    for s in sorted(subsets, key=lambda t: (len(t), t)):
        even, odd = sub_family(family, s)
        w0, w1 = weight(even), weight(odd)
        if w0 != w1:
            violations.append(
                AuditViolation(
                    "parity-balance",
                    f"S={list(s)}: even side weighs {w0}, odd side weighs {w1}",
                )
            )
            break  # deepest clause: report the first offending S only

    return WeightOneAudit(w, tuple(violations))


def domination_orphans(family: Family) -> tuple[PartialMap, ...]:
    """Maps whose domain is contained in no other map's domain.

    Non-colorable weight-1 families have none: every map's domain sits inside
    another member's domain.
    """
    orphans = []
    for m in family.maps:
        d = set(m.domain)
        if not any(other is not m and d <= set(other.domain) for other in family.maps):
            orphans.append(m)
    return tuple(orphans)


def complement_pair_parity_mismatches(family: Family) -> tuple[tuple[VertexId, ...], ...]:
    """Edges carrying a complementary map pair whose entry sums differ mod 2.

    For even edge sizes there can be none: flipping every bit on an
    even-size domain preserves the sum's parity.
    """
    by_domain: dict[tuple[VertexId, ...], list[PartialMap]] = {}
    for m in family.maps:
        by_domain.setdefault(m.domain, []).append(m)
    bad = []
    for domain in sorted(by_domain, key=lambda d: (len(d), d)):
        group = by_domain[domain]
        if len(group) == 2 and group[0] == group[1].complement():
            s0 = sum(b for _, b in group[0].entries)
            s1 = sum(b for _, b in group[1].entries)
            if (s0 - s1) % 2:
                bad.append(domain)
    return tuple(bad)


# ----------------------------------------------------------------------------
# Claim checking: small machine-checkable descriptors attached to gadgets.
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class ClaimResult:
    kind: str
    ok: bool
    message: str


def _is_constant(codes: np.ndarray, ranks: Sequence[int]) -> np.ndarray:
    if not ranks:
        return np.ones(codes.shape, dtype=bool)
    cols = np.stack([(codes >> r) & 1 for r in ranks])
    return (cols == cols[0]).all(axis=0)


def check_claim(family: Family, claim: dict, *, limit: int | None = None) -> ClaimResult:
    """Verify one claim descriptor against the family by direct computation."""
    kind = claim.get("kind", "")
    profile = classify(family)
    rank = _ranks(family.universe)

    def ranks_of(vertices: Sequence[VertexId]) -> list[int] | None:
        if any(v not in rank for v in vertices):
            return None
        return [rank[v] for v in vertices]

    def fail(msg: str) -> ClaimResult:
        return ClaimResult(kind, False, msg)

    def ok(msg: str = "") -> ClaimResult:
        return ClaimResult(kind, True, msg)

    if kind == "map-count":
        want = claim["value"]
        return ok() if len(family) == want else fail(f"{len(family)} maps, expected {want}")
    if kind == "universe-size":
        want = claim["value"]
        got = len(family.universe)
        return ok() if got == want else fail(f"{got} vertices, expected {want}")
    if kind == "uniform":
        want = claim["r"]
        if profile.uniformity == want:
            return ok()
        return fail(f"uniformity {profile.uniformity}, expected {want}")
    if kind == "unary":
        return ok() if profile.is_unary else fail("a domain carries more than one map")
    if kind == "binary":
        return ok() if profile.is_binary else fail("a domain carries more than two maps")
    if kind == "valid-cover":
        if profile.cover_of is None:
            reason, edge = profile.cover_violation  # type: ignore[misc]
            return fail(f"{reason} at {list(edge)}")
        edges = claim.get("edges")
        if edges is not None and len(profile.cover_of) != edges:
            return fail(f"{len(profile.cover_of)} edges, expected {edges}")
        return ok()
    if kind == "weight":
        got = str(weight(family))
        return ok() if got == claim["value"] else fail(f"weight {got}, expected {claim['value']}")
    if kind == "transversal-domains":
        pairs = [tuple(p) for p in claim["pairs"]]
        want = {tuple(sorted(choice)) for choice in product(*pairs)}
        got = {m.domain for m in family.maps}
        return ok() if got == want else fail("domains differ from the pair transversals")
    if kind == "sampled-no-coloring":
        rep = sample_noncolorability(family, claim["trials"], claim["seed"])
        if rep.counterexamples:
            return fail(f"{rep.counterexamples} avoiding colorings in {rep.trials} trials")
        return ok()
    if kind == "multiplicity-histogram":
        table = MultiplicityTable(family, limit=limit)
        got = {str(k): v for k, v in table.histogram().items()}
        want = dict(claim["histogram"])
        return ok() if got == want else fail(f"histogram {got}, expected {want}")

    # The remaining kinds quantify over the family's avoiding colorings.
    codes = avoiding_codes(family, limit=limit)
    if kind == "no-coloring":
        if codes.size:
            return fail(f"coloring {int(codes[0])} avoids every map")
        return ok()
    if kind == "colorable":
        return ok() if codes.size else fail("no coloring avoids every map")
    if kind == "coloring-count":
        want = claim["value"]
        return ok() if codes.size == want else fail(f"{codes.size} colorings, expected {want}")
    if kind == "forces-equal":
        rs = ranks_of(claim["vertices"])
        if rs is None:
            return fail("claim mentions a vertex outside the universe")
        bad = np.flatnonzero(~_is_constant(codes, rs))
        if bad.size:
            return fail(f"coloring {int(codes[bad[0]])} is not constant there")
        return ok()
    if kind == "forces-distinct":
        rs = ranks_of(claim["vertices"])
        if rs is None:
            return fail("claim mentions a vertex outside the universe")
        a, b = rs
        bad = np.flatnonzero(((codes >> a) & 1) == ((codes >> b) & 1))
        if bad.size:
            return fail(f"coloring {int(codes[bad[0]])} agrees on the pair")
        return ok()
    if kind == "pair-disagreement":
        for pair in claim["pairs"]:
            rs = ranks_of(pair)
            if rs is None:
                return fail("claim mentions a vertex outside the universe")
            a, b = rs
            bad = np.flatnonzero(((codes >> a) & 1) == ((codes >> b) & 1))
            if bad.size:
                return fail(f"coloring {int(codes[bad[0]])} agrees on pair {list(pair)}")
        return ok()
    if kind == "odd-ones":
        rs = ranks_of(claim["vertices"])
        if rs is None:
            return fail("claim mentions a vertex outside the universe")
        parity = np.zeros(codes.shape, dtype=np.int64)
        for r in rs:
            parity ^= (codes >> r) & 1
        bad = np.flatnonzero(parity == 0)
        if bad.size:
            return fail(f"coloring {int(codes[bad[0]])} has an even number of ones there")
        return ok()
    if kind == "constant-implies-constant":
        src, dst = ranks_of(claim["src"]), ranks_of(claim["dst"])
        if src is None or dst is None:
            return fail("claim mentions a vertex outside the universe")
        bad = np.flatnonzero(_is_constant(codes, src) & ~_is_constant(codes, dst))
        if bad.size:
            return fail(f"coloring {int(codes[bad[0]])} is constant on src, not on dst")
        return ok()
    if kind == "never-both-constant":
        left, right = ranks_of(claim["left"]), ranks_of(claim["right"])
        if left is None or right is None:
            return fail("claim mentions a vertex outside the universe")
        bad = np.flatnonzero(_is_constant(codes, left) & _is_constant(codes, right))
        if bad.size:
            return fail(f"coloring {int(codes[bad[0]])} is constant on both sides")
        return ok()
    if kind == "constant-side":
        left, right = ranks_of(claim["left"]), ranks_of(claim["right"])
        if left is None or right is None:
            return fail("claim mentions a vertex outside the universe")
        bad = np.flatnonzero(~(_is_constant(codes, left) | _is_constant(codes, right)))
        if bad.size:
            return fail(f"coloring {int(codes[bad[0]])} is constant on neither side")
        return ok()

    return fail(f"unknown claim kind {kind!r}")


def check_claims(
    family: Family, claims: Sequence[dict], *, limit: int | None = None
) -> tuple[ClaimResult, ...]:
    return tuple(check_claim(family, c, limit=limit) for c in claims)
