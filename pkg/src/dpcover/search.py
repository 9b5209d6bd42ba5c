"""Exhaustive minimality search over small unary uniform families.

The search enumerates unary r-uniform families over a fixed vertex pool in
two phases.  Shallow levels run breadth-first with exact isomorph rejection:
two families get the same canonical key iff one is carried to the other by a
vertex bijection combined with an optional global 0/1 flip.  Deeper levels
extend each shallow representative by ascending-index map subsets, which
visits every completion set exactly once per representative.  Non-colorability
is decided by a survivor bitmask (one bit per coloring of the pool); a family
is non-colorable exactly when its survivor mask is zero, and a branch dies
when the remaining map budget cannot kill the remaining survivors.

Every reported witness is re-verified independently through analysis before
it leaves this module.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, permutations, product
from math import comb

from . import analysis
from .core import Family, PartialMap, VertexId, make_partial_map
from .dyadic import ONE, Dyadic
from .errors import SearchSpaceTooLargeError, UniverseTooLargeError

_KEY_UNIVERSE_LIMIT = 12
_KEY_STATE_CAP = 100_000
_SEARCH_NODE_CAP = 1_000_000_000


# ---------------------------------------------------------------------------
# Canonical keys.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CanonicalKey:
    """Canonical encoding of a family up to vertex relabeling and global flip."""

    data: bytes


def _min_code_sequence(maps: list[tuple[tuple[int, int], ...]]) -> tuple:
    """Lexicographically smallest sorted code list over all dense relabelings.

    A state is a partial relabeling (sigma) plus the set of maps not yet
    emitted.  Each step emits the smallest code any remaining map can still
    reach: labeled vertices keep their labels, unlabeled ones take the next
    dense labels with their values in ascending order.  All states and all
    fresh-label assignments that achieve the minimum are kept, so the greedy
    choice is exact; candidate codes only grow as labels are pinned down.
    """
    n_maps = len(maps)
    states: list[tuple[frozenset[int], tuple[tuple[int, int], ...]]] = [
        (frozenset(range(n_maps)), ())
    ]
    sequence = []
    for _ in range(n_maps):
        best_code = None
        options = []  # (state_index, map_index, zeros, ones) achieving best_code
        for s_idx, (remaining, sigma_items) in enumerate(states):
            sigma = dict(sigma_items)
            k = len(sigma)
            for m_idx in remaining:
                labeled = []
                zeros, ones = [], []
                for v, bit in maps[m_idx]:
                    if v in sigma:
                        labeled.append((sigma[v], bit))
                    elif bit == 0:
                        zeros.append(v)
                    else:
                        ones.append(v)
                labeled.sort()
                fresh_bits = [0] * len(zeros) + [1] * len(ones)
                code = tuple(labeled) + tuple(
                    (k + j, fresh_bits[j]) for j in range(len(fresh_bits))
                )
                if best_code is None or code < best_code:
                    best_code = code
                    options = [(s_idx, m_idx, zeros, ones)]
                elif code == best_code:
                    options.append((s_idx, m_idx, zeros, ones))
        sequence.append(best_code)
        next_states = set()
        for s_idx, m_idx, zeros, ones in options:
            remaining, sigma_items = states[s_idx]
            sigma = dict(sigma_items)
            k = len(sigma)
            for zs in permutations(zeros):
                for os_ in permutations(ones):
                    new_sigma = dict(sigma)
                    for j, v in enumerate(zs + os_):
                        new_sigma[v] = k + j
                    next_states.add(
                        (remaining - {m_idx}, tuple(sorted(new_sigma.items())))
                    )
        if len(next_states) > _KEY_STATE_CAP:
            raise SearchSpaceTooLargeError(
                f"canonical key tie set exceeded {_KEY_STATE_CAP} states"
            )
        states = sorted(next_states)
    return tuple(sequence)


def _encode_sequence(sequence: tuple) -> bytes:
    out = bytearray()
    for code in sequence:
        out.append(len(code))
        for label, bit in code:
            out.append(label)
            out.append(bit)
    return bytes(out)


def canonical_key(family: Family, *, limit: int = _KEY_UNIVERSE_LIMIT) -> CanonicalKey:
    """Exact canonical form under vertex bijections and the global color flip.

    Two families receive equal keys iff they are isomorphic under that group.
    Per-vertex flips are deliberately not in the group.
    """
    universe = family.universe
    if len(universe) > limit:
        raise UniverseTooLargeError(
            f"universe has {len(universe)} vertices, canonical_key limit is {limit}"
        )
    best = None
    for flip in (False, True):
        maps = [
            m.complement().entries if flip else m.entries for m in family.maps
        ]
        seq = _min_code_sequence(list(maps))
        if best is None or seq < best:
            best = seq
    return CanonicalKey(_encode_sequence(best if best is not None else ()))


# ---------------------------------------------------------------------------
# Degree-one reduction helpers.
# ---------------------------------------------------------------------------


def single_domain_vertices(family: Family) -> tuple[VertexId, ...]:
    """Vertices appearing in exactly one map's domain."""
    counts: dict[VertexId, int] = {}
    for m in family.maps:
        for v in m.domain:
            counts[v] = counts.get(v, 0) + 1
    return tuple(sorted(v for v, c in counts.items() if c == 1))


def delete_vertex_constraint(family: Family, vertex: VertexId) -> Family:
    """Drop the (vertex, bit) entry from the unique map constraining vertex.

    Sound one way only: a non-colorable family stays non-colorable, because a
    coloring avoiding the shrunk map also avoids the original.  A colorable
    family may become non-colorable.  Used by the vertex-degree bound: in a
    minimum-size non-colorable family every vertex lies in at least two
    domains, since otherwise dropping the whole map keeps it non-colorable
    (recolor the degree-one vertex last).
    """
    holders = [m for m in family.maps if vertex in m.domain]
    if len(holders) != 1:
        raise ValueError(f"vertex {vertex} lies in {len(holders)} domains, need 1")
    target = holders[0]
    shrunk = make_partial_map([(v, b) for v, b in target.entries if v != vertex])
    rest = [m for m in family.maps if m != target]
    if shrunk in rest:  # the shrunk constraint already exists; drop the copy
        return Family.of(rest)
    return Family.of(rest + [shrunk])


# ---------------------------------------------------------------------------
# The search.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MinimalityReport:
    r: int
    size_bound: int
    vertex_bound: int
    witness: Family | None
    witness_size: int | None
    families_examined: int
    canonical_classes: int

    @property
    def result(self) -> Family | str:
        return self.witness if self.witness is not None else "all-colorable"


class _Pool:
    """All candidate r-maps over vertices 0 .. n-1, in a fixed index order.

    Maps are ordered by (domain, bits).  kill[i] is the bitmask, over the 2^n
    colorings of the pool encoded as integers, of the colorings containing
    map i; domain_id[i] indexes the sorted list of r-subsets.
    """

    def __init__(self, r: int, n: int) -> None:
        self.r = r
        self.n = n
        self.maps: list[tuple[tuple[int, int], ...]] = []
        self.domain_id: list[int] = []
        self.kill: list[int] = []
        space = 1 << n
        for d_id, domain in enumerate(combinations(range(n), r)):
            for bits in product((0, 1), repeat=r):
                entries = tuple(zip(domain, bits))
                mask = 0
                pattern = 0
                for v, b in entries:
                    mask |= 1 << v
                    pattern |= b << v
                killed = 0
                free = [v for v in range(n) if not (mask >> v) & 1]
                for sub in range(1 << len(free)):
                    code = pattern
                    for j, v in enumerate(free):
                        if (sub >> j) & 1:
                            code |= 1 << v
                    killed |= 1 << code
                self.maps.append(entries)
                self.domain_id.append(d_id)
                self.kill.append(killed)
        self.full = (1 << space) - 1
        self.per_map_kill = 1 << (n - r)

    def family(self, indices: tuple[int, ...]) -> Family:
        return Family.of([make_partial_map(self.maps[i]) for i in indices])


def _completion_dfs(
    pool: _Pool, rep: tuple[int, ...], budget: int
) -> tuple[int | None, tuple[int, ...] | None, int]:
    """Depth-first completion of one representative by ascending map indices.

    Returns (best total size, witness indices, nodes visited).  Within this
    representative the first witness found at the running minimum size is
    kept, and once a witness of size s exists only strictly smaller totals
    are explored; the traversal order is fixed, so the outcome does not
    depend on how representatives are distributed over workers.
    """
    surv = pool.full
    used_domains = set()
    for i in rep:
        surv &= ~pool.kill[i]
        used_domains.add(pool.domain_id[i])
    base = len(rep)
    n_maps = len(pool.maps)
    best_size: int | None = None
    best_indices: tuple[int, ...] | None = None
    nodes = 0

    # stack entries: (next candidate index, chosen suffix, survivor mask)
    stack = [(0, (), surv)]
    while stack:
        start, chosen, surv_here = stack.pop()
        cap = (budget if best_size is None else best_size - 1) - base
        if len(chosen) >= cap:
            continue
        for idx in range(start, n_maps):
            d_id = pool.domain_id[idx]
            if d_id in used_domains or any(pool.domain_id[j] == d_id for j in chosen):
                continue
            child_surv = surv_here & ~pool.kill[idx]
            nodes += 1
            size = base + len(chosen) + 1
            if child_surv == 0:
                if best_size is None or size < best_size:
                    best_size = size
                    best_indices = rep + chosen + (idx,)
                break  # siblings tie or lose on order, deeper nodes are larger
            if len(chosen) + 1 >= cap:
                continue
            remaining = cap - len(chosen) - 1
            if child_surv.bit_count() > remaining * pool.per_map_kill:
                continue
            stack.append((idx + 1, chosen + (idx,), child_surv))
    return best_size, best_indices, nodes


def _phase2_chunk(args: tuple) -> tuple[int | None, int, tuple[int, ...] | None, int]:
    """Worker task: best completion over a contiguous run of representatives."""
    r, n, reps, budget = args
    pool = _Pool(r, n)
    best: tuple[int, int] | None = None  # (size, rep position)
    best_indices: tuple[int, ...] | None = None
    nodes = 0
    for pos, rep in enumerate(reps):
        size, indices, visited = _completion_dfs(pool, rep, budget)
        nodes += visited
        if size is not None and (best is None or (size, pos) < best):
            best = (size, pos)
            best_indices = indices
    if best is None:
        return None, -1, None, nodes
    return best[0], best[1], best_indices, nodes


def search_min_unary(
    r: int,
    max_size: int,
    max_vertices: int,
    *,
    workers: int = 1,
    canonical_depth: int = 3,
) -> MinimalityReport:
    """Smallest non-colorable unary r-uniform family within the given bounds.

    Enumerates, up to isomorphism, every unary r-uniform family of at most
    max_size maps over at most max_vertices vertices, in increasing size, and
    returns the first size admitting no avoiding coloring together with a
    witness, or reports that all such families are colorable.  Pruning uses
    exact canonical keys at shallow levels, the survivor-count bound, and the
    weight certificate: a family whose weight cannot reach 1 within the map
    budget is never non-colorable.
    """
    if r < 1 or max_size < 1 or max_vertices < r:
        raise ValueError("need r >= 1, max_size >= 1, max_vertices >= r")
    if max_vertices > _KEY_UNIVERSE_LIMIT:
        raise UniverseTooLargeError(
            f"max_vertices {max_vertices} exceeds canonical key limit"
        )
    n_candidates = comb(max_vertices, r) << r
    estimate = sum(comb(n_candidates, k) for k in range(1, max_size + 1))
    if estimate > _SEARCH_NODE_CAP and max_size > canonical_depth:
        raise SearchSpaceTooLargeError(
            f"worst-case search space {estimate} exceeds {_SEARCH_NODE_CAP}"
        )

    # Weight certificate: every map of an r-uniform family has
    # weight 2^-r, so no family of at most max_size maps can reach weight 1
    # when max_size < 2^r; none of them can be non-colorable.
    if Dyadic(max_size, 0) * Dyadic(1, r) < ONE:
        return MinimalityReport(r, max_size, max_vertices, None, None, 0, 0)

    pool = _Pool(r, max_vertices)
    depth = min(canonical_depth, max_size)

    examined = 0
    classes_seen = 0
    level: list[tuple[tuple[int, ...], int, bytes]] = [((), pool.full, b"")]
    witnesses: list[tuple[bytes, tuple[int, ...]]] = []
    for size in range(1, depth + 1):
        seen: dict[bytes, None] = {}
        next_level: list[tuple[tuple[int, ...], int, bytes]] = []
        for indices, surv, _ in level:
            used = {pool.domain_id[i] for i in indices}
            for idx in range(len(pool.maps)):
                if pool.domain_id[idx] in used:
                    continue
                child = tuple(sorted(indices + (idx,)))
                examined += 1
                key = canonical_key(pool.family(child)).data
                if key in seen:
                    continue
                seen[key] = None
                child_surv = surv & ~pool.kill[idx]
                if child_surv == 0:
                    witnesses.append((key, child))
                    continue
                remaining = max_size - size
                if child_surv.bit_count() > remaining * pool.per_map_kill:
                    continue
                next_level.append((child, child_surv, key))
        classes_seen += len(seen)
        if witnesses:
            witnesses.sort()
            return _finish_report(
                r, max_size, max_vertices, pool, witnesses[0][1], size,
                examined, classes_seen,
            )
        level = next_level

    best: tuple[int, int] | None = None  # (size, global rep position)
    best_indices: tuple[int, ...] | None = None
    if max_size > depth and level:
        reps = [indices for indices, _, _ in sorted(level, key=lambda item: item[2])]
        chunks = _split(reps, workers)
        tasks = [(r, max_vertices, chunk, max_size) for chunk in chunks if chunk]
        if workers > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool_exec:
                results = list(pool_exec.map(_phase2_chunk, tasks))
        else:
            results = [_phase2_chunk(t) for t in tasks]
        offset = 0
        for task, (size, pos, indices, nodes) in zip(tasks, results):
            examined += nodes
            if size is not None and (best is None or (size, offset + pos) < best):
                best = (size, offset + pos)
                best_indices = indices
            offset += len(task[2])
    if best_indices is not None:
        return _finish_report(
            r, max_size, max_vertices, pool, best_indices, best[0],
            examined, classes_seen,
        )
    return MinimalityReport(
        r, max_size, max_vertices, None, None, examined, classes_seen
    )


def _split(items: list, parts: int) -> list[list]:
    parts = max(1, parts)
    base, extra = divmod(len(items), parts)
    out = []
    start = 0
    for i in range(parts):
        width = base + (1 if i < extra else 0)
        out.append(items[start : start + width])
        start += width
    return out


def _finish_report(
    r: int,
    max_size: int,
    max_vertices: int,
    pool: _Pool,
    indices: tuple[int, ...],
    size: int,
    examined: int,
    classes_seen: int,
) -> MinimalityReport:
    witness = pool.family(indices)
    profile = analysis.classify(witness)
    check = analysis.find_coloring(witness)
    if check.colorable or not profile.is_unary or profile.uniformity != r:
        raise RuntimeError("search produced an invalid witness; internal bug")
    if analysis.weight(witness) < ONE:
        raise RuntimeError("non-colorable witness with weight < 1; internal bug")
    return MinimalityReport(
        r, max_size, max_vertices, witness, size, examined, classes_seen
    )


# ---------------------------------------------------------------------------
# Bound bracketing.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BracketReport:
    r: int
    lower_bound: int
    upper_bound: int
    witness_size: int
    witness_source: str
    certification: str
    search_min_size: int | None

    @property
    def consistent(self) -> bool:
        ok = self.lower_bound <= self.witness_size <= self.upper_bound
        if self.search_min_size is not None:
            ok = ok and self.lower_bound <= self.search_min_size <= self.witness_size
        return ok


def verify_bracket(r: int, *, workers: int = 1) -> BracketReport:
    """Bracket the minimum size of a non-colorable unary r-uniform family.

    Lower bound 2^r + 1; upper bound 2^r + 2^ceil(r/2), witnessed by an
    explicit construction whose non-colorability is enumerated at desk scale.
    At r = 2 the exhaustive search pins the exact minimum (a vertex budget of
    6 suffices: every vertex of a minimum witness lies in >= 2 domains, so a
    size-6 family has at most 6 vertices).
    """
    from . import constructions

    if r < 2:
        raise ValueError("bracket needs r >= 2")
    lower = (1 << r) + 1
    upper = (1 << r) + (1 << ((r + 1) // 2))
    if r % 2 == 0:
        gadget = constructions.unary_upper_even(r)
    else:
        gadget = constructions.double_unary_gadget(r)
    family = gadget.family
    if len(family) != upper:
        raise RuntimeError("witness size disagrees with the stated upper bound")
    if len(family.universe) <= analysis.DEFAULT_PARITY_LIMIT:
        report = analysis.find_coloring(family)
        if report.colorable:
            raise RuntimeError("bracket witness unexpectedly colorable")
        certification = "enumerated"
    else:
        sample = analysis.sample_noncolorability(family, trials=2000, seed=0x5EED)
        if sample.counterexamples:
            raise RuntimeError("bracket witness unexpectedly colorable")
        certification = "sampled"
    search_min = None
    if r == 2:
        search = search_min_unary(2, upper, 6, workers=workers)
        search_min = search.witness_size
    return BracketReport(
        r, lower, upper, len(family), gadget.source, certification, search_min
    )
