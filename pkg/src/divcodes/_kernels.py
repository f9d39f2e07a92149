"""Compiled inner loops for minimum-weight search on packed rows."""

from __future__ import annotations

import numba as nb
import numpy as np
from llvmlite import ir
from numba.extending import intrinsic

nb.config.THREADING_LAYER = "workqueue"

BIG = np.int64(1 << 40)


@intrinsic
def _ctpop(typingctx, x):
    sig = nb.uint64(nb.uint64)

    def codegen(context, builder, signature, args):
        return builder.ctpop(args[0])

    return sig, codegen


@nb.njit(cache=True, inline="always")
def _weight_xor(a, b, nw):
    s = np.int64(0)
    for j in range(nw):
        s += np.int64(_ctpop(a[j] ^ b[j]))
    return s


@nb.njit(cache=True)
def _enumerate_from(rows, parities, use_parity, w, i0):
    """Best (weight, combination) among w-subsets whose smallest index is i0."""
    k, nw = rows.shape
    best = BIG
    best_idx = np.full(w, -1, dtype=np.int64)
    idx = np.empty(w, dtype=np.int64)
    acc = np.empty((w, nw), dtype=np.uint64)
    par = np.zeros(w, dtype=np.uint8)
    zero = np.zeros(nw, dtype=np.uint64)
    idx[0] = i0
    for j in range(nw):
        acc[0, j] = rows[i0, j]
    par[0] = parities[i0]
    if w == 1:
        if (not use_parity) or par[0] == 1:
            best = _weight_xor(acc[0], zero, nw)
            best_idx[0] = i0
        return best, best_idx
    for d in range(1, w - 1):
        idx[d] = idx[d - 1] + 1
        for j in range(nw):
            acc[d, j] = acc[d - 1, j] ^ rows[idx[d], j]
        par[d] = par[d - 1] ^ parities[idx[d]]
    last = w - 1
    while True:
        prev = acc[last - 1]
        pp = par[last - 1]
        for i in range(idx[last - 1] + 1, k):
            if use_parity and (pp ^ parities[i]) != 1:
                continue
            s = _weight_xor(prev, rows[i], nw)
            if s < best:
                best = s
                for t in range(last):
                    best_idx[t] = idx[t]
                best_idx[last] = i
        d = last - 1
        while d >= 1:
            idx[d] += 1
            if idx[d] <= k - w + d:
                break
            d -= 1
        if d == 0:
            break
        for j in range(nw):
            acc[d, j] = acc[d - 1, j] ^ rows[idx[d], j]
        par[d] = par[d - 1] ^ parities[idx[d]]
        for e in range(d + 1, last):
            idx[e] = idx[e - 1] + 1
            for j in range(nw):
                acc[e, j] = acc[e - 1, j] ^ rows[idx[e], j]
            par[e] = par[e - 1] ^ parities[idx[e]]
    return best, best_idx


@nb.njit(cache=True, parallel=True)
def enumerate_level(rows, parities, use_parity, w):
    """Minimum weight over all sums of exactly ``w`` distinct rows.

    Work is split by the smallest row index; each chunk reports its own best
    and the reduction keeps the first chunk attaining the minimum, so the
    result does not depend on scheduling.
    """
    k = rows.shape[0]
    chunks = k - w + 1
    bests = np.full(max(chunks, 1), BIG, dtype=np.int64)
    combos = np.full((max(chunks, 1), w), -1, dtype=np.int64)
    for c in nb.prange(chunks):
        b, ix = _enumerate_from(rows, parities, use_parity, w, c)
        bests[c] = b
        for t in range(w):
            combos[c, t] = ix[t]
    best = BIG
    pick = -1
    for c in range(chunks):
        if bests[c] < best:
            best = bests[c]
            pick = c
    if pick < 0:
        return BIG, np.full(w, -1, dtype=np.int64)
    return best, combos[pick].copy()


@nb.njit(cache=True)
def isd_run(data, ncols, perms, parity_words, use_parity, p):
    """Lee-Brickell sampling: per permutation, reduce to systematic form and try sums of <= p rows."""
    k, nw = data.shape
    work = np.empty_like(data)
    best = BIG
    best_vec = np.zeros(nw, dtype=np.uint64)
    pivoted = np.zeros(k, dtype=np.uint8)
    parities = np.zeros(k, dtype=np.uint8)
    zero = np.zeros(nw, dtype=np.uint64)
    one = np.uint64(1)
    for t in range(perms.shape[0]):
        for i in range(k):
            pivoted[i] = 0
            for j in range(nw):
                work[i, j] = data[i, j]
        found = 0
        for ci in range(ncols):
            if found == k:
                break
            c = perms[t, ci]
            wd = c >> 6
            bt = np.uint64(c & 63)
            pr = -1
            for i in range(k):
                if pivoted[i] == 0 and ((work[i, wd] >> bt) & one) == one:
                    pr = i
                    break
            if pr < 0:
                continue
            pivoted[pr] = 1
            found += 1
            for i in range(k):
                if i != pr and ((work[i, wd] >> bt) & one) == one:
                    for j in range(nw):
                        work[i, j] ^= work[pr, j]
        for i in range(k):
            s = np.int64(0)
            for j in range(nw):
                s += np.int64(_ctpop(work[i, j] & parity_words[j]))
            parities[i] = np.uint8(s & 1)
        for i in range(k):
            if use_parity and parities[i] != 1:
                continue
            s = _weight_xor(work[i], zero, nw)
            if s < best:
                best = s
                for j in range(nw):
                    best_vec[j] = work[i, j]
        if p >= 2:
            for i in range(k):
                for i2 in range(i + 1, k):
                    if use_parity and (parities[i] ^ parities[i2]) != 1:
                        continue
                    s = _weight_xor(work[i], work[i2], nw)
                    if s < best:
                        best = s
                        for j in range(nw):
                            best_vec[j] = work[i, j] ^ work[i2, j]
    return best, best_vec
