"""Seeded, pruned searches for extremal properly colored sets and for blocking sets.

Both searches are depth-first over a discretized candidate space. Reports
are deterministic in the configuration: the tree is cut into root subtrees
with fixed budget shares, and subtree results are merged in order, so a
parallel run reports exactly what a serial run does.
"""
from __future__ import annotations

import enum
import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from functools import cmp_to_key
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Optional

from . import _homog as hg
from .blocking import BlockTarget, is_k_color_blocked
from .coloring import color_bitsets, is_properly_colored
from .errors import InvalidInput, VerificationFailed
from .geometry import Point, as_rational, convex_hull, points as _points
from .visibility import ColoredPointSet, max_collinear

_MASK = (1 << 64) - 1


class Mode(str, enum.Enum):
    EXTREMAL = "extremal"
    BLOCKING = "blocking"


def known_mc(ell: int, k: int) -> Optional[int]:
    """Known values of mc_ell(k): the largest set with at most ell collinear
    points whose visibility graph is k-colorable. None when open."""
    if k == 1:
        return 1
    if ell == 2:
        return k
    if k == 2:
        return ell
    if k == 3:
        return 6 if ell in (3, 4) else ell + 2
    if (ell, k) == (3, 4):
        return 12
    return None


DEFAULT_MAX_BLOCKERS = 12
# Duplicate-state memo size; past it, repeated states are simply searched again.
SEEN_LIMIT = 500_000


@dataclass(frozen=True)
class SearchConfig:
    k: int
    ell: int = 3
    grid: tuple[int, int] = (1, 3)  # (resolution, extent): points i/resolution, |coords| <= extent
    budget: int = 100_000
    seed: int = 0
    mode: Mode = Mode.EXTREMAL
    target: Optional[int] = None  # extremal: stop once a set this large is found
    max_blockers: Optional[int] = None  # blocking: None means known mc_ell(k), else 12
    symmetry: bool = True
    intersections: bool = True
    prune: bool = True
    stop_at_first: bool = True  # blocking: stop at the first valid blocking
    initial: tuple[Point, ...] = ()
    workers: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode))
        object.__setattr__(self, "initial", tuple(_points(self.initial)))
        object.__setattr__(self, "grid", (int(self.grid[0]), as_rational(self.grid[1])))
        if self.k < 1:
            raise InvalidInput("k must be at least 1")
        if self.ell < 2:
            raise InvalidInput("ell must be at least 2")
        if self.budget <= 0:
            raise InvalidInput("budget must be positive")
        if not 0 <= self.seed <= _MASK:
            raise InvalidInput("seed must be a 64-bit unsigned integer")
        res, ext = self.grid
        if res < 1 or ext < 0:
            raise InvalidInput("grid has no points")

    def blocker_cap(self) -> int:
        if self.max_blockers is not None:
            return self.max_blockers
        mc = known_mc(self.ell, self.k)
        return mc if mc is not None else DEFAULT_MAX_BLOCKERS


@dataclass
class SearchReport:
    mode: Mode
    k: int
    ell: int
    seed: int
    best: Optional[ColoredPointSet]
    best_size: int
    nodes_expanded: int
    exhausted: bool
    witnesses: int = 0
    target: Optional[BlockTarget] = None
    stop_reason: str = ""

    def to_dict(self) -> dict:
        def pts(P):
            return [[str(p.x), str(p.y)] for p in P]

        return {
            "mode": self.mode.value,
            "k": self.k,
            "ell": self.ell,
            "seed": self.seed,
            "best_size": self.best_size,
            "nodes_expanded": self.nodes_expanded,
            "exhausted": self.exhausted,
            "witnesses": self.witnesses,
            "stop_reason": self.stop_reason,
            "best": None if self.best is None else {
                "points": pts(self.best.points), "colors": list(self.best.colors)},
            "target": None if self.target is None else {
                "points": pts(self.target.U), "color": self.target.u_color},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_dict(cls, d: dict) -> "SearchReport":
        try:
            best = None
            if d.get("best") is not None:
                P = [(Fraction(x), Fraction(y)) for x, y in d["best"]["points"]]
                best = ColoredPointSet(tuple(_points(P)), tuple(int(c) for c in d["best"]["colors"]))
            target = None
            if d.get("target") is not None:
                target = BlockTarget([(Fraction(x), Fraction(y)) for x, y in d["target"]["points"]],
                                     d["target"]["color"])
            return cls(Mode(d["mode"]), int(d["k"]), int(d["ell"]), int(d["seed"]), best,
                       int(d["best_size"]), int(d["nodes_expanded"]), bool(d["exhausted"]),
                       int(d.get("witnesses", 0)), target, d.get("stop_reason", ""))
        except (KeyError, TypeError, ValueError) as exc:
            raise VerificationFailed(f"malformed report: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> "SearchReport":
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise VerificationFailed(f"malformed report: {exc}") from exc


def _key(seed: int, h) -> int:
    """Seeded 64-bit mix of a homogeneous point (splitmix64 finalizer)."""
    z = (seed ^ (h[0] * 0x9E3779B97F4A7C15 + h[1] * 0xBF58476D1CE4E5B9
                 + h[2] * 0x94D049BB133111EB)) & _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class _Stop(Exception):
    pass


@dataclass
class _Partial:
    best: Optional[tuple] = None  # engine-specific witness
    best_size: int = -1
    nodes: int = 0
    exhausted: bool = True
    hit: bool = False  # stopped on target / first witness
    witnesses: int = 0


def _worker_count(cfg: SearchConfig) -> int:
    n = cfg.workers
    if n is None:
        n = os.cpu_count() or 1
    env = os.environ.get("VISGRAB_THREADS")
    if env:
        try:
            n = min(n, max(1, int(env)))
        except ValueError:
            pass
    return max(1, n)


# ---------------------------------------------------------------- extremal

@dataclass
class _XState:
    pts: tuple
    adj: list  # neighborhood bitmasks
    col: Optional[tuple]  # a proper k-coloring, None when there is none
    hull: list
    lines: frozenset
    inter: frozenset
    collinear_ok: bool = True

    @property
    def valid(self) -> bool:
        return self.col is not None and self.collinear_ok


class _Extremal:
    """Insertion search: every new point is a vertex of the enlarged hull.

    A hull vertex never blocks anything, so inserting one only adds edges to
    the visibility graph. Hence both failure conditions (too many collinear
    points, no k-coloring) persist in every descendant and pruning on them
    loses nothing.
    """

    def __init__(self, cfg: SearchConfig):
        self.cfg = cfg
        res, ext = cfg.grid
        R = int(ext * res)
        self.ext = ext
        self.grid = [hg.norm(i, j, res) for i in range(-R, R + 1) for j in range(-R, R + 1)]

    def in_box(self, h) -> bool:
        return abs(h[0]) <= self.ext * h[2] and abs(h[1]) <= self.ext * h[2]

    def symmetric_ok(self, n: int, q) -> bool:
        if not self.cfg.symmetry or self.cfg.initial:
            return True
        if n == 0:
            return q[0] == 0 and q[1] == 0
        if n == 1:
            return q[1] == 0 and q[0] > 0
        if n == 2:
            return q[1] >= 0
        return True

    def build(self, pts) -> _XState:
        """State for an arbitrary starting set (the initial seed)."""
        pts = tuple(pts)
        vis = hg.visible_sets(pts)
        adj = [sum(1 << j for j in s) for s in vis]
        ok = max_collinear([hg.to_point(h) for h in pts]) <= self.cfg.ell if pts else True
        col = color_bitsets(adj, self.cfg.k) if pts else ()
        lines = {hg.line(a, b) for a, b in combinations(pts, 2)}
        inter = set()
        if self.cfg.intersections:
            for L, M in combinations(lines, 2):
                p = hg.meet(L, M)
                if p is not None and self.in_box(p):
                    inter.add(p)
        return _XState(pts, adj, col, hg.hull(pts), frozenset(lines), frozenset(inter), ok)

    def extend(self, s: _XState, q) -> Optional[_XState]:
        n = len(s.pts)
        if not self.symmetric_ok(n, q) or hg.in_closed_hull(s.hull, q):
            return None
        near: dict = {}
        counts: dict = {}
        through: dict = {}
        for j, p in enumerate(s.pts):
            d, t = hg.ray(q, p)
            cur = near.get(d)
            if cur is None or hg.closer(t, cur[0]):
                near[d] = (t, j)
            u = hg.undirected(d)
            counts[u] = counts.get(u, 0) + 1
            through.setdefault(u, p)
        collinear_ok = s.collinear_ok and max(counts.values(), default=0) + 1 <= self.cfg.ell
        if self.cfg.prune and not collinear_ok:
            return None
        mask = 0
        for _, j in near.values():
            mask |= 1 << j
        adj = list(s.adj)
        for j in range(n):
            if mask >> j & 1:
                adj[j] |= 1 << n
        adj.append(mask)
        col = None
        if s.col is not None:
            used = {s.col[j] for j in range(n) if mask >> j & 1}
            free = [c for c in range(self.cfg.k) if c not in used]
            if free:
                col = s.col + (free[0],)
        if col is None:
            col = color_bitsets(adj, self.cfg.k)
        if self.cfg.prune and col is None:
            return None
        new_lines = [L for L in {hg.line(q, p) for p in through.values()} if L not in s.lines]
        inter = s.inter
        if self.cfg.intersections and new_lines:
            extra = set()
            for L in new_lines:
                for M in s.lines:
                    p = hg.meet(L, M)
                    if p is not None and p != q and self.in_box(p):
                        extra.add(p)
            inter = inter | extra
        pts = s.pts + (q,)
        return _XState(pts, adj, col, hg.hull(pts), s.lines | frozenset(new_lines),
                       frozenset(inter), collinear_ok)

    def children(self, s: _XState):
        present = set(s.pts)
        cands = {p for p in self.grid if p not in present}
        cands.update(p for p in s.inter if p not in present)
        seed = self.cfg.seed
        for q in sorted(cands, key=lambda h: (_key(seed, h), h)):
            c = self.extend(s, q)
            if c is not None:
                yield c

    def root(self) -> _XState:
        s = self.build(hg.from_point(p) for p in self.cfg.initial)
        if not s.valid:
            raise InvalidInput("initial set violates the collinearity or coloring bound")
        if not s.pts and self.cfg.symmetry:
            s = self.extend(s, (0, 0, 1))
        return s

    def record(self, part: _Partial, s: _XState):
        if s.valid and len(s.pts) > part.best_size:
            part.best, part.best_size = (s.pts, s.col), len(s.pts)

    def run(self, start: _XState, budget: int) -> _Partial:
        part = _Partial()
        seen = set()
        target = self.cfg.target

        def dfs(s: _XState):
            part.nodes += 1
            self.record(part, s)
            if target is not None and part.best_size >= target:
                part.hit = True
                raise _Stop
            for c in self.children(s):
                key = frozenset(c.pts)
                if key in seen:
                    continue
                if len(seen) < SEEN_LIMIT:
                    seen.add(key)
                if part.nodes >= budget:
                    part.exhausted = False
                    raise _Stop
                dfs(c)

        try:
            dfs(start)
        except _Stop:
            pass
        return part


# ---------------------------------------------------------------- blocking

def _along(a, s, t) -> int:
    """Compare s and t by distance from a (all three on one line)."""
    # distance ratio |s-a|/|t-a| via the coordinate with the larger spread
    ds = (s[0] * a[2] - a[0] * s[2], s[1] * a[2] - a[1] * s[2], s[2])
    dt = (t[0] * a[2] - a[0] * t[2], t[1] * a[2] - a[1] * t[2], t[2])
    i = 0 if abs(ds[0]) + abs(dt[0]) >= abs(ds[1]) + abs(dt[1]) else 1
    lhs, rhs = abs(ds[i]) * dt[2], abs(dt[i]) * ds[2]
    return (lhs > rhs) - (lhs < rhs)


def _midpoint(s, t):
    return hg.norm(s[0] * t[2] + t[0] * s[2], s[1] * t[2] + t[1] * s[2], 2 * s[2] * t[2])


class _Blocking:
    """Grow a blocking set by repeatedly blocking the first still-visible bad pair.

    Bad pairs are visible pairs of the target (for a convex target long
    diagonals, other diagonals, then edges; otherwise pairs reaching inner
    points first) and visible same-colored blocker pairs. A blocker
    of segment ab goes to a crossing point of ab with a line through two
    placed points, or to one generic point of ab avoiding all such lines.
    Blocker colors are 0..k-1 relative to the target's color, a new color
    only ever being the lowest unused one.

    In a state the target's points come first, then the blockers.
    """

    def __init__(self, target: BlockTarget, cfg: SearchConfig):
        self.cfg = cfg
        self.target = target
        self.U = tuple(hg.from_point(p) for p in target.U)
        n = len(self.U)
        self.nU = n
        self.convex = target.convex
        self.cap = cfg.blocker_cap()
        if self.convex:
            def rank(pair):
                gap = pair[1] - pair[0]
                gap = min(gap, n - gap)
                return (0 if 2 * gap == n else 1 if gap > 1 else 2, pair)
            self.upairs = sorted(combinations(range(n), 2), key=rank)
            self.edges = {p for p in self.upairs if min(p[1] - p[0], n - p[1] + p[0]) == 1}
        else:
            # pairs reaching an inner target point first: their blockers are
            # the ones other blockers line up with
            on_hull = set(convex_hull(target.U))
            self.upairs = sorted(combinations(range(n), 2),
                                 key=lambda pr: (pr[0] in on_hull and pr[1] in on_hull, pr))
            self.edges = set()
        self.per_point = max(1, n // 2)

    def root(self):
        vis = hg.visible_sets(self.U)
        adj = tuple(sum(1 << j for j in s) for s in vis)
        lines = frozenset(hg.line(a, b) for a, b in combinations(self.U, 2))
        full = tuple(L for L in lines
                     if sum(1 for p in self.U if L[0] * p[0] + L[1] * p[1] + L[2] * p[2] == 0)
                     >= self.cfg.ell)
        return _BState(self.U, (), adj, full, None, (), lines)

    def add(self, state, p, c):
        """Insert blocker p with color c; None if a line would get too many points."""
        pts = state.pts
        p0, p1, p2 = p
        near: dict = {}
        counts: dict = {}
        rep: dict = {}
        for j, q in enumerate(pts):
            dx = q[0] * p2 - p0 * q[2]
            dy = q[1] * p2 - p1 * q[2]
            g = gcd(dx, dy)
            d = (dx // g, dy // g)
            cur = near.get(d)
            if cur is None or g * cur[1] < cur[0] * q[2]:
                near[d] = (g, q[2], j)
            u = d if d[0] > 0 or (d[0] == 0 and d[1] > 0) else (-d[0], -d[1])
            if u in counts:
                counts[u] += 1
            else:
                counts[u] = 1
                rep[u] = q
        ell = self.cfg.ell
        if max(counts.values()) + 1 > ell:
            return None
        n = len(pts)
        adj = list(state.adj)
        mask = 0
        for d, (_, _, j) in near.items():
            mask |= 1 << j
            adj[j] |= 1 << n
            if d[0] > 0 or (d[0] == 0 and d[1] > 0):
                back = near.get((-d[0], -d[1]))
                if back is not None:  # p now sits between two neighbors on this line
                    a, b = j, back[2]
                    adj[a] &= ~(1 << b)
                    adj[b] &= ~(1 << a)
        adj.append(mask)
        full = state.full
        now_full = [hg.line(p, rep[u]) for u, m in counts.items() if m + 1 == ell]
        if now_full:
            full = full + tuple(now_full)
        return _BState(pts + (p,), state.cols + (c,), adj, full, state, tuple(rep.values()))

    def bad_pairs(self, state):
        """Visible target pairs in branching order, and the first visible
        same-colored blocker pair (or None)."""
        adj, cols = state.adj, state.cols
        nU = self.nU
        U_open = [p for p in self.upairs if adj[p[0]] >> p[1] & 1]
        by_color: dict = {}
        for i, c in enumerate(cols):
            by_color[c] = by_color.get(c, 0) | 1 << (i + nU)
        for i, c in enumerate(cols):
            i += nU
            m = adj[i] & by_color[c] & ~((2 << i) - 1)
            if m:
                return U_open, (i, (m & -m).bit_length() - 1)
        return U_open, None

    def lower_bound(self, U_open, mono) -> int:
        e = sum(1 for p in U_open if p in self.edges)
        d = len(U_open) - e
        need = e + -(-d // self.per_point)
        return max(need, 1 if mono else 0)

    def positions(self, state, a, b):
        """Candidate blockers on the open segment ab that keep every line
        within the collinearity bound: crossings of ab with lines through two
        placed points, and one generic point (the midpoint) of every open
        interval those crossings cut ab into."""
        full = state.full
        seg = hg.line(a, b)
        if seg in full:
            return []
        present = set(state.pts)
        cuts = {a, b}
        for L in state.lines():
            if L == seg:
                continue
            p = hg.meet(seg, L)
            if p is not None and hg.between(a, b, p):
                cuts.add(p)
        order = sorted(cuts, key=cmp_to_key(lambda p, q: _along(a, p, q)))
        mids = [_midpoint(p, q) for p, q in zip(order, order[1:])]
        found = [p for p in order[1:-1]
                 if p not in present and not any(F[0] * p[0] + F[1] * p[1] + F[2] * p[2] == 0 for F in full)]
        seed = self.cfg.seed
        found.sort(key=lambda h: (_key(seed, h), h))
        mids.sort(key=lambda h: (_key(seed, h), h))
        return found + mids

    def moves(self, state, U_open, mono):
        """(position, color) choices for blocking the first bad pair."""
        pts, cols = state.pts, state.cols
        if U_open:
            i, j = U_open[0]
            forbidden = None
        else:
            i, j = mono
            forbidden = cols[i - self.nU]
        top = max(cols, default=-1) + 1
        colors = [c for c in range(min(top + 1, self.cfg.k)) if c != forbidden]
        for p in self.positions(state, pts[i], pts[j]):
            for c in colors:
                yield p, c

    def children(self, state, U_open, mono):
        for p, c in self.moves(state, U_open, mono):
            yield self.add(state, p, c)

    def run(self, start, budget: int) -> _Partial:
        part = _Partial()
        seen = set()
        cap = self.cap
        nU = self.nU

        def dfs(state):
            part.nodes += 1
            U_open, mono = self.bad_pairs(state)
            if not U_open and mono is None:
                part.witnesses += 1
                if part.best is None:
                    part.best, part.best_size = (state.pts, state.cols), len(state.cols)
                if self.cfg.stop_at_first:
                    part.hit = True
                    raise _Stop
                return
            if len(state.cols) + self.lower_bound(U_open, mono) > cap:
                return
            placed = list(zip(state.pts[nU:], state.cols))
            for p, c in self.moves(state, U_open, mono):
                key = frozenset(placed + [(p, c)])
                if key in seen:
                    continue
                if len(seen) < SEEN_LIMIT:
                    seen.add(key)
                if part.nodes >= budget:
                    part.exhausted = False
                    raise _Stop
                dfs(self.add(state, p, c))

        try:
            dfs(start)
        except _Stop:
            pass
        return part

    def root_children(self, state):
        U_open, mono = self.bad_pairs(state)
        if not U_open and mono is None:
            return []
        return list(self.children(state, U_open, mono))


class _BState:
    """Blocking-search node; the set of lines through two points is built on demand."""

    __slots__ = ("pts", "cols", "adj", "full", "parent", "reps", "_lines")

    def __init__(self, pts, cols, adj, full, parent, reps, lines=None):
        self.pts, self.cols, self.adj, self.full = pts, cols, adj, full
        self.parent, self.reps, self._lines = parent, reps, lines

    def lines(self) -> frozenset:
        if self._lines is None:
            p = self.pts[-1]
            self._lines = self.parent.lines().union(hg.line(p, q) for q in self.reps)
            self.parent = None
        return self._lines


# ---------------------------------------------------------------- driver

def _engine(cfg: SearchConfig, target: Optional[BlockTarget]):
    return _Extremal(cfg) if cfg.mode is Mode.EXTREMAL else _Blocking(target, cfg)


def _subtrees(engine):
    start = engine.root()
    if isinstance(engine, _Extremal):
        kids = list(engine.children(start))
    else:
        kids = engine.root_children(start)
    return start, kids


def _run_subtree(cfg: SearchConfig, target, index: int, budget: int) -> _Partial:
    engine = _engine(cfg, target)
    _, kids = _subtrees(engine)
    return engine.run(kids[index], budget)


def _shares(total: int, m: int) -> list[int]:
    return [total // m + (1 if i < total % m else 0) for i in range(m)]


def _search(cfg: SearchConfig, target: Optional[BlockTarget]) -> _Partial:
    engine = _engine(cfg, target)
    start, kids = _subtrees(engine)
    root = _Partial(nodes=1)
    if isinstance(engine, _Extremal):
        engine.record(root, start)
        if cfg.target is not None and root.best_size >= cfg.target:
            root.hit = True
            root.exhausted = not kids
            return root
    else:
        U_open, mono = engine.bad_pairs(start)
        if not U_open and mono is None:  # pragma: no cover - a target always sees itself
            root.best, root.best_size, root.witnesses = start, 0, 1
            return root
        if engine.lower_bound(U_open, mono) > engine.cap:
            return root
    if not kids:
        return root
    if cfg.budget <= 1:
        root.exhausted = False
        return root
    shares = _shares(cfg.budget - 1, len(kids))
    jobs = [(i, b) for i, b in enumerate(shares) if b > 0]
    if len(jobs) < len(kids):
        root.exhausted = False
    workers = min(_worker_count(cfg), len(jobs))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_run_subtree, cfg, target, i, b) for i, b in jobs]
            parts = [f.result() for f in futures]
    else:
        parts = []
        for i, b in jobs:
            part = engine.run(kids[i], b)
            parts.append(part)
            if part.hit:
                break
    total = root
    for part in parts:
        total.nodes += part.nodes
        total.exhausted = total.exhausted and part.exhausted
        total.witnesses += part.witnesses
        if part.best_size > total.best_size:
            total.best, total.best_size = part.best, part.best_size
        if part.hit:
            total.hit = True
            total.exhausted = False
            break
    return total


def _reason(p: _Partial) -> str:
    if p.hit:
        return "target" if p.witnesses == 0 else "first-witness"
    return "exhausted" if p.exhausted else "budget"


def search_extremal(cfg: SearchConfig) -> SearchReport:
    """Largest set found with at most cfg.ell collinear points and a proper
    cfg.k-coloring of its visibility graph."""
    if cfg.mode is not Mode.EXTREMAL:
        raise InvalidInput("configuration is not in extremal mode")
    part = _search(cfg, None)
    best = None
    if part.best is not None:
        pts, col = part.best
        best = ColoredPointSet(tuple(hg.to_point(h) for h in pts), tuple(col), cfg.k)
    return SearchReport(Mode.EXTREMAL, cfg.k, cfg.ell, cfg.seed, best, max(part.best_size, 0),
                        part.nodes, part.exhausted, part.witnesses, None, _reason(part))


def _blocker_color(c: int, u_color: int) -> int:
    return c if c < u_color else c + 1


def search_blocking(U: BlockTarget, k: int, cfg: SearchConfig) -> SearchReport:
    """Look for a k-color blocking of U inside the discretized candidate space.

    ``exhausted`` only ever speaks about that discretization.
    """
    if cfg.mode is not Mode.BLOCKING:
        raise InvalidInput("configuration is not in blocking mode")
    if k != cfg.k:
        raise InvalidInput("k disagrees with the configuration")
    if U.u_color < 0 or U.u_color > k:
        raise InvalidInput(f"target color {U.u_color} leaves fewer than {k} blocker colors")
    if max_collinear(U.U) > cfg.ell:
        raise InvalidInput("target already exceeds the collinearity bound")
    part = _search(cfg, U)
    best = None
    if part.best is not None:
        pts, cols = part.best
        best = ColoredPointSet(tuple(hg.to_point(h) for h in pts[len(U.U):]),
                               tuple(_blocker_color(c, U.u_color) for c in cols), k + 1)
    return SearchReport(Mode.BLOCKING, k, cfg.ell, cfg.seed, best, max(part.best_size, 0),
                        part.nodes, part.exhausted, part.witnesses, U, _reason(part))


def replay(report: SearchReport) -> bool:
    """Re-verify a report's witness with the independent verifiers.

    False when a well-formed witness fails; VerificationFailed when the
    report is internally inconsistent.
    """
    X = report.best
    if X is None:
        return True
    if len(X) != report.best_size:
        raise VerificationFailed("best_size does not match the witness")
    if report.mode is Mode.EXTREMAL:
        if max(X.colors, default=0) >= report.k:
            return False
        return bool(is_properly_colored(X).proper) and max_collinear(X) <= report.ell
    if report.target is None:
        raise VerificationFailed("blocking report without a target")
    try:
        r = is_k_color_blocked(report.target, X, report.k)
    except InvalidInput:
        return False
    if not r.valid:
        return False
    return max_collinear(list(report.target.U) + list(X.points)) <= report.ell


# ---------------------------------------------------------------- random trials

@dataclass(frozen=True)
class TrialsReport:
    trials: int
    valid: int
    seed: int
    first_valid: Optional[ColoredPointSet] = field(default=None, compare=False)

    def to_json(self) -> str:
        return json.dumps({"trials": self.trials, "valid": self.valid, "seed": self.seed},
                          sort_keys=True, indent=2)


def random_blocking_trials(U: BlockTarget, k: int, trials: int, seed: int,
                           max_blockers: int = 12, ell: int = 3) -> TrialsReport:
    """Randomized repair attempts: while some bad pair is visible, drop a
    blocker at a random rational point of it, in a random admissible color.

    An attempt succeeds when nothing is left to block with at most
    ``max_blockers`` blockers; every success is re-checked with
    is_k_color_blocked.
    """
    rng = random.Random(seed)
    Uh = tuple(hg.from_point(p) for p in U.U)
    nU = len(Uh)
    valid, first = 0, None
    for _ in range(trials):
        pts, cols = Uh, ()
        for _step in range(20 * max_blockers):
            vis = hg.visible_sets(pts)
            bad = [(i, j) for i, j in combinations(range(nU), 2) if j in vis[i]]
            bad += [(i, j) for i in range(nU, len(pts)) for j in vis[i]
                    if j > i and cols[i - nU] == cols[j - nU]]
            if not bad or len(cols) >= max_blockers:
                break
            i, j = bad[rng.randrange(len(bad))]
            a, b = hg.to_point(pts[i]), hg.to_point(pts[j])
            den = rng.randint(2, 12)
            t = Fraction(rng.randint(1, den - 1), den)
            p = hg.from_point(Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)))
            if p in pts or hg.max_on_line_through(p, pts) + 1 > ell:
                continue
            options = [c for c in range(k) if i < nU or c != cols[i - nU]]
            pts, cols = pts + (p,), cols + (rng.choice(options),)
        if not bad:
            B = ColoredPointSet(tuple(hg.to_point(h) for h in pts[nU:]),
                                tuple(_blocker_color(c, U.u_color) for c in cols), k + 1)
            if is_k_color_blocked(U, B, k).valid:
                valid += 1
                first = first or B
    return TrialsReport(trials, valid, seed, first)


def config_with(cfg: SearchConfig, **kw) -> SearchConfig:
    return replace(cfg, **kw)
