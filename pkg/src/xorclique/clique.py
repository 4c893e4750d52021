"""Exact maximum clique search.

Bit-parallel branch and bound in the style of Tomita's MCQ and San Segundo's
BBMC: vertices are renumbered by a degeneracy ordering, every node colours
its candidate set greedily, and only vertices whose colour could still beat
the incumbent are branched on (highest colour first).

Candidate sets are Python ints, one bit per renumbered vertex.
"""

from __future__ import annotations

import multiprocessing as mp
import time
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .errors import NotAClique

EXACT = "exact"
LOWER_BOUND_ONLY = "lower-bound-only"


@dataclass
class CliqueResult:
    size: int
    witness: list[int]
    status: str
    nodes: int
    ms: float
    family: Any = field(default=None, repr=False)

    @property
    def exact(self) -> bool:
        return self.status == EXACT

    def to_dict(self) -> dict[str, Any]:
        return {
            "size": self.size,
            "status": self.status,
            "witness": list(self.witness),
            "family": self.family.to_dict() if self.family is not None else None,
            "nodes": self.nodes,
            "ms": round(self.ms, 3),
        }


def _as_matrix(g) -> np.ndarray:
    if isinstance(g, np.ndarray):
        return g.astype(bool)
    return g.matrix()


def degeneracy_order(mat: np.ndarray) -> list[int]:
    """Vertices in branching order: reverse of repeated min-degree removal (ties by index)."""
    n = mat.shape[0]
    deg = mat.sum(axis=1).astype(np.int64)
    alive = np.ones(n, dtype=bool)
    big = np.iinfo(np.int64).max
    removed = []
    for _ in range(n):
        v = int(np.argmin(np.where(alive, deg, big)))
        removed.append(v)
        alive[v] = False
        deg -= mat[v]
    return removed[::-1]


class _Abort(Exception):
    pass


class _Search:
    """One branch-and-bound run over renumbered bitsets."""

    def __init__(self, adj: list[int], best: int, best_clique: list[int],
                 upper: int | None, deadline: float | None, shared=None):
        self.adj = adj
        self.best = best
        self.best_clique = list(best_clique)
        self.upper = upper
        self.deadline = deadline
        self.shared = shared
        self.nodes = 0
        self.timed_out = False

    def _sync(self) -> None:
        if self.shared is not None:
            other = self.shared.value
            if other > self.best:
                # Another worker holds a bigger clique; only its size matters here.
                self.best = other
        if self.deadline is not None and time.monotonic() > self.deadline:
            self.timed_out = True
            raise _Abort
        if self.upper is not None and self.best >= self.upper:
            raise _Abort

    def _improve(self, clique: list[int]) -> None:
        self.best = len(clique)
        self.best_clique = list(clique)
        if self.shared is not None:
            with self.shared.get_lock():
                if self.shared.value < self.best:
                    self.shared.value = self.best
        if self.upper is not None and self.best >= self.upper:
            raise _Abort

    def color_sort(self, P: int, size: int) -> tuple[list[int], list[int]]:
        adj = self.adj
        kmin = max(self.best - size + 1, 1)
        order: list[int] = []
        colors: list[int] = []
        U = P
        color = 0
        while U:
            color += 1
            Q = U
            while Q:
                low = Q & -Q
                v = low.bit_length() - 1
                U ^= low
                Q &= ~adj[v]
                Q &= ~low
                if color >= kmin:
                    order.append(v)
                    colors.append(color)
        return order, colors

    def expand(self, clique: list[int], P: int) -> None:
        self.nodes += 1
        if self.nodes & 1023 == 0:
            self._sync()
        order, colors = self.color_sort(P, len(clique))
        adj = self.adj
        for idx in range(len(order) - 1, -1, -1):
            if len(clique) + colors[idx] <= self.best:
                return
            v = order[idx]
            clique.append(v)
            newP = P & adj[v]
            if newP:
                self.expand(clique, newP)
            elif len(clique) > self.best:
                self._improve(clique)
            clique.pop()
            P &= ~(1 << v)


def _prepare(g, seed_clique):
    mat = _as_matrix(g)
    n = mat.shape[0]
    order = degeneracy_order(mat) if n else []
    perm = np.asarray(order, dtype=np.int64)
    packed = np.packbits(mat[np.ix_(perm, perm)], axis=1, bitorder="little") if n else np.zeros((0, 0), np.uint8)
    adj = [int.from_bytes(row.tobytes(), "little") for row in packed]
    new_of = {old: new for new, old in enumerate(order)}
    seed = [new_of[v] for v in (seed_clique or [])]
    return mat, order, adj, seed


_WORKER: dict[str, Any] = {}


def _worker_init(adj, upper, deadline, shared):
    _WORKER.update(adj=adj, upper=upper, deadline=deadline, shared=shared)


def _worker_run(task):
    v, P, best0 = task
    w = _WORKER
    s = _Search(w["adj"], max(best0, w["shared"].value), [], w["upper"], w["deadline"], w["shared"])
    try:
        s._sync()
        if P:
            s.expand([v], P)
        elif s.best < 1:
            s._improve([v])
    except _Abort:
        pass
    return s.best_clique, s.nodes, s.timed_out


def max_clique(g, time_limit: float | None = None, seed_clique: list[int] | None = None,
               thread_count: int = 1, upper_bound: int | None = None) -> CliqueResult:
    """Maximum clique of ``g`` (a graph with ``matrix()`` or a boolean adjacency matrix).

    ``seed_clique`` primes the incumbent; ``upper_bound`` is a proven bound on the
    clique number that stops the search as soon as it is reached.  On timeout
    the best clique so far is returned with status ``lower-bound-only``.
    With ``thread_count > 1`` the top-level branches are split across worker
    processes; the size is the same, the witness and node count may differ.
    """
    t0 = time.monotonic()
    mat, order, adj, seed = _prepare(g, seed_clique)
    n = len(adj)
    if seed_clique and not _is_clique(mat, seed_clique):
        raise NotAClique("seed is not a clique")
    deadline = t0 + time_limit if time_limit is not None else None

    search = _Search(adj, len(seed), seed, upper_bound, deadline)
    status = EXACT
    if upper_bound is not None and search.best >= upper_bound:
        pass
    elif thread_count <= 1 or n < 64:
        try:
            search.expand([], (1 << n) - 1)
        except _Abort:
            if search.timed_out:
                status = LOWER_BOUND_ONLY
    else:
        status = _parallel(search, n, thread_count, upper_bound, deadline)

    witness = sorted(order[v] for v in search.best_clique)
    if not _is_clique(mat, witness):
        raise AssertionError("solver produced a non-clique witness")
    return CliqueResult(len(witness), witness, status, search.nodes, (time.monotonic() - t0) * 1000)


def _parallel(search: _Search, n: int, threads: int, upper, deadline) -> str:
    order, colors = search.color_sort((1 << n) - 1, 0)
    tasks = []
    P = (1 << n) - 1
    for idx in range(len(order) - 1, -1, -1):
        if colors[idx] <= search.best:
            break
        v = order[idx]
        tasks.append((v, P & search.adj[v], search.best))
        P &= ~(1 << v)
    ctx = mp.get_context("fork")
    shared = ctx.Value("i", search.best)
    timed_out = False
    with ctx.Pool(threads, initializer=_worker_init,
                  initargs=(search.adj, upper, deadline, shared)) as pool:
        for found, nodes, to in pool.imap(_worker_run, tasks):
            search.nodes += nodes
            timed_out |= to
            if len(found) > search.best:
                search.best = len(found)
                search.best_clique = found
    search.nodes += 1
    return LOWER_BOUND_ONLY if timed_out else EXACT


def _is_clique(mat: np.ndarray, vs) -> bool:
    vs = list(vs)
    if len(set(vs)) != len(vs):
        return False
    if not vs:
        return True
    sub = mat[np.ix_(vs, vs)]
    return bool(sub.sum() == len(vs) * (len(vs) - 1))
