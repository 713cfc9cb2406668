"""Hot numeric kernels with two interchangeable backends.

Two inner loops dominate the heavy workloads (isomorphism-reduced catalogue
generation and exact width computations):

* minimum adjacency bitstring over a set of vertex permutations (canonical form),
* subset dynamic programs over elimination orderings (treewidth / pathwidth).

Both exist as numba @njit kernels and as vectorized pure-numpy fallbacks. The
backend is selected by the environment variable ``PRODSTRUCT_KERNELS``
(``numba`` or ``numpy``); default is numba when importable. Outputs are
bit-identical across backends.
"""

from __future__ import annotations

import os

import numpy as np

_BACKEND: str | None = None
_NUMBA_IMPL: dict[str, object] | None = None


def _autodetect() -> str:
    env = os.environ.get("PRODSTRUCT_KERNELS", "").strip().lower()
    if env in ("numba", "numpy"):
        return env
    if env:
        raise ValueError(f"PRODSTRUCT_KERNELS must be 'numba' or 'numpy', got {env!r}")
    try:
        import numba  # noqa: F401

        return "numba"
    except ImportError:  # pragma: no cover - numba is a declared dependency
        return "numpy"


def kernel_backend() -> str:
    global _BACKEND
    if _BACKEND is None:
        _BACKEND = _autodetect()
    return _BACKEND


def set_kernel_backend(name: str) -> None:
    """Override the backend (used by tests and the benchmark)."""
    if name not in ("numba", "numpy"):
        raise ValueError("backend must be 'numba' or 'numpy'")
    global _BACKEND
    _BACKEND = name


# ---------------------------------------------------------------------------
# numba implementations (compiled lazily on first use)
# ---------------------------------------------------------------------------


def _numba_impls() -> dict[str, object]:
    global _NUMBA_IMPL
    if _NUMBA_IMPL is not None:
        return _NUMBA_IMPL
    from numba import njit

    @njit(cache=True)
    def min_bits(adj, perms):  # adj: (n,n) uint8, perms: (P,n) int64
        n = adj.shape[0]
        best = np.int64(0x7FFFFFFFFFFFFFFF)
        for p in range(perms.shape[0]):
            val = np.int64(0)
            for i in range(n):
                pi = perms[p, i]
                for j in range(i + 1, n):
                    val = (val << 1) | adj[pi, perms[p, j]]
            if val < best:
                best = val
        return best

    @njit(cache=True)
    def treewidth_table(masks, n):  # masks: (n,) int64 neighbor bitmasks
        size = 1 << n
        f = np.empty(size, np.int8)
        f[0] = -1
        for s in range(1, size):
            best = np.int8(127)
            t = s
            while t:
                v = 0
                tt = t
                while tt & 1 == 0:
                    tt >>= 1
                    v += 1
                bit = 1 << v
                t ^= bit
                sv = s ^ bit
                # vertices reachable from v through already-eliminated set sv
                comp = bit
                nbrs = masks[v]
                grow = nbrs & sv & ~comp
                while grow:
                    comp |= grow
                    g2 = grow
                    while g2:
                        u = 0
                        gg = g2
                        while gg & 1 == 0:
                            gg >>= 1
                            u += 1
                        g2 ^= 1 << u
                        nbrs |= masks[u]
                    grow = nbrs & sv & ~comp
                ext = nbrs & ~sv & ~bit
                q = 0
                while ext:
                    ext &= ext - 1
                    q += 1
                cand = f[sv] if f[sv] > q else np.int8(q)
                if cand < best:
                    best = cand
            f[s] = best
        return f

    @njit(cache=True)
    def pathwidth_table(masks, n):
        size = 1 << n
        # boundary size of every subset
        b = np.zeros(size, np.int8)
        for s in range(size):
            cnt = 0
            for v in range(n):
                if (s >> v) & 1 and masks[v] & ~s:
                    cnt += 1
            b[s] = cnt
        f = np.empty(size, np.int8)
        f[0] = 0
        for s in range(1, size):
            best = np.int8(127)
            t = s
            while t:
                v = 0
                tt = t
                while tt & 1 == 0:
                    tt >>= 1
                    v += 1
                bit = 1 << v
                t ^= bit
                if f[s ^ bit] < best:
                    best = f[s ^ bit]
            bs = b[s]
            f[s] = best if best > bs else bs
        return f

    _NUMBA_IMPL = {
        "min_bits": min_bits,
        "treewidth_table": treewidth_table,
        "pathwidth_table": pathwidth_table,
    }
    return _NUMBA_IMPL


# ---------------------------------------------------------------------------
# numpy implementations
# ---------------------------------------------------------------------------


def _min_bits_numpy(adj: np.ndarray, perms: np.ndarray) -> np.int64:
    n = adj.shape[0]
    sub = adj[perms[:, :, None], perms[:, None, :]]  # (P, n, n)
    iu, ju = np.triu_indices(n, k=1)
    bits = sub[:, iu, ju].astype(np.int64)  # (P, n*(n-1)/2)
    nb = bits.shape[1]
    weights = np.left_shift(np.int64(1), np.arange(nb - 1, -1, -1, dtype=np.int64))
    return np.int64(bits @ weights).min()


def _or_over_members(masks: np.ndarray, n: int) -> np.ndarray:
    """table[s] = bitwise OR of masks[v] over all v in subset s."""
    size = 1 << n
    idx = np.arange(size, dtype=np.int64)
    table = np.zeros(size, np.int64)
    for v in range(n):
        sel = (idx >> v) & 1 == 1
        table[sel] |= masks[v]
    return table


def _treewidth_table_numpy(masks: np.ndarray, n: int) -> np.ndarray:
    size = 1 << n
    idx = np.arange(size, dtype=np.int64)
    or_table = _or_over_members(masks, n)
    # q[v, s] = outside-neighbor count when v is eliminated after subset s
    q = np.zeros((n, size), np.int8)
    for v in range(n):
        bit = np.int64(1 << v)
        s_eff = idx & ~bit
        comp = np.full(size, bit, np.int64)
        nbrs = np.full(size, masks[v], np.int64)
        for _ in range(n):
            grow = nbrs & s_eff & ~comp
            if not grow.any():
                break
            comp |= grow
            nbrs |= or_table[comp]
        q[v] = np.bitwise_count((nbrs & ~s_eff & ~bit).astype(np.uint64)).astype(np.int8)
    f = np.empty(size, np.int8)
    f[0] = -1
    popc = np.bitwise_count(idx.astype(np.uint64)).astype(np.int64)
    for k in range(1, n + 1):
        sets = idx[popc == k]
        best = np.full(len(sets), 127, np.int8)
        for v in range(n):
            bit = 1 << v
            sel = (sets & bit) != 0
            sv = sets[sel] ^ bit
            cand = np.maximum(f[sv], q[v, sv])
            best[sel] = np.minimum(best[sel], cand)
        f[sets] = best
    return f


def _pathwidth_table_numpy(masks: np.ndarray, n: int) -> np.ndarray:
    size = 1 << n
    idx = np.arange(size, dtype=np.int64)
    b = np.zeros(size, np.int8)
    for v in range(n):
        has_v = ((idx >> v) & 1) == 1
        open_nb = (masks[v] & ~idx) != 0
        b += (has_v & open_nb).astype(np.int8)
    f = np.empty(size, np.int8)
    f[0] = 0
    popc = np.bitwise_count(idx.astype(np.uint64)).astype(np.int64)
    for k in range(1, n + 1):
        sets = idx[popc == k]
        best = np.full(len(sets), 127, np.int8)
        for v in range(n):
            bit = 1 << v
            sel = (sets & bit) != 0
            best[sel] = np.minimum(best[sel], f[sets[sel] ^ bit])
        f[sets] = np.maximum(best, b[sets])
    return f


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------


def min_adjacency_bits(adj: np.ndarray, perms: np.ndarray, backend: str | None = None) -> int:
    """Minimum packed upper-triangle bitstring of adj over the given row permutations."""
    be = backend or kernel_backend()
    if be == "numba":
        return int(_numba_impls()["min_bits"](adj, perms))
    return int(_min_bits_numpy(adj, perms))


def treewidth_dp_table(masks: np.ndarray, n: int, backend: str | None = None) -> np.ndarray:
    """f[S] = best achievable max elimination degree when exactly S is eliminated."""
    be = backend or kernel_backend()
    if be == "numba":
        return _numba_impls()["treewidth_table"](masks, n)
    return _treewidth_table_numpy(masks, n)


def pathwidth_dp_table(masks: np.ndarray, n: int, backend: str | None = None) -> np.ndarray:
    """f[S] = best achievable max boundary over orderings placing S first."""
    be = backend or kernel_backend()
    if be == "numba":
        return _numba_impls()["pathwidth_table"](masks, n)
    return _pathwidth_table_numpy(masks, n)
