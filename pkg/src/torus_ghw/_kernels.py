"""Compiled search kernels for exact weight computations.

Field arithmetic inside the kernels goes through dense ``add``/``mul``
tables, so every kernel works for prime and non-prime fields alike.  The
search kernels count visited nodes and stop once the count passes ``limit``;
the caller then reports the computation as infeasible.  All kernels are
iterative so that numba's on-disk cache can hold them.
"""

from __future__ import annotations

import numpy as np
from numba import njit

# -- helpers ------------------------------------------------------------------------


@njit(cache=True)
def popcount64(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return int((x * np.uint64(0x0101010101010101)) >> np.uint64(56))


@njit(cache=True)
def _support_mask(v):
    m = np.uint64(0)
    for i in range(v.shape[0]):
        if v[i] != 0:
            m |= np.uint64(1) << np.uint64(i)
    return m


# -- maximal flats ------------------------------------------------------------------
#
# A flat is a set of columns closed under linear span.  The search walks the
# columns in order; a column already in the span of the chosen ones is always
# taken, any other column is either taken (raising the rank) or excluded for
# good.  A branch dies as soon as an excluded column falls into the span, so
# every flat is produced exactly once.  R[rho] holds every column reduced
# against the current basis of rank rho.


@njit(cache=True)
def _flat_include(R, rho, i, excl, nexcl, addt, mult, invt, negt, n, k):
    src = R[rho]
    dst = R[rho + 1]
    p = 0
    while src[i, p] == 0:
        p += 1
    inv = invt[src[i, p]]
    v = np.empty(k, np.int64)
    for a in range(k):
        v[a] = mult[src[i, a], inv]
    for j in range(i + 1, n):
        f = src[j, p]
        if f == 0:
            for a in range(k):
                dst[j, a] = src[j, a]
        else:
            nf = negt[f]
            for a in range(k):
                dst[j, a] = addt[src[j, a], mult[nf, v[a]]]
    for e in range(nexcl):
        j = excl[e]
        f = src[j, p]
        nonzero = False
        if f == 0:
            for a in range(k):
                dst[j, a] = src[j, a]
            nonzero = True
        else:
            nf = negt[f]
            for a in range(k):
                x = addt[src[j, a], mult[nf, v[a]]]
                dst[j, a] = x
                if x != 0:
                    nonzero = True
        if not nonzero:
            return False
    return True


@njit(cache=True)
def _col_zero(cur, j, k):
    for a in range(k):
        if cur[j, a] != 0:
            return False
    return True


@njit(cache=True)
def _flat_dfs(i0, rho0, count0, R, cap, excl, n, k, addt, mult, invt, negt,
              best, target_only, limit):
    # explicit-stack depth-first search; a frame is (i, rho, count, nexcl, stage)
    fi = np.empty(n + 2, np.int64)
    fr = np.empty(n + 2, np.int64)
    fc = np.empty(n + 2, np.int64)
    fe = np.empty(n + 2, np.int64)
    st = np.empty(n + 2, np.int64)
    work = 0
    sp = 0
    fi[0] = i0
    fr[0] = rho0
    fc[0] = count0
    fe[0] = 0
    st[0] = 0
    while sp >= 0:
        if st[sp] == 0:
            work += 1
            if work > limit:
                return work
            i = fi[sp]
            rho = fr[sp]
            count = fc[sp]
            cur = R[rho]
            while i < n and _col_zero(cur, i, k):
                count += 1
                i += 1
            if rho == cap or i == n:
                if rho == cap:
                    for j in range(i, n):
                        if _col_zero(cur, j, k):
                            count += 1
                for j in range(rho, cap + 1):
                    if count > best[j]:
                        best[j] = count
                sp -= 1
                continue
            bound = best[cap] if target_only else best[rho]
            if count + (n - i) <= bound:
                sp -= 1
                continue
            fi[sp] = i
            fc[sp] = count
            st[sp] = 1
            if _flat_include(R, rho, i, excl, fe[sp], addt, mult, invt, negt, n, k):
                sp += 1
                fi[sp] = i + 1
                fr[sp] = rho + 1
                fc[sp] = count + 1
                fe[sp] = fe[sp - 1]
                st[sp] = 0
        elif st[sp] == 1:
            st[sp] = 2
            excl[fe[sp]] = fi[sp]
            sp += 1
            fi[sp] = fi[sp - 1] + 1
            fr[sp] = fr[sp - 1]
            fc[sp] = fc[sp - 1]
            fe[sp] = fe[sp - 1] + 1
            st[sp] = 0
        else:
            sp -= 1
    return work


@njit(cache=True)
def max_flat_sizes(G, cap, force_first, addt, mult, invt, negt, best, target_only, limit):
    """Largest column sets of rank ``<= j`` for ``j = 0..cap`` (written into ``best``).

    ``G`` is ``k x n``.  ``best`` may be pre-filled with known lower bounds.
    With ``force_first`` only sets containing column 0 are explored, which is
    exact for ranks ``>= 1`` when the coordinates are permuted transitively by
    automorphisms of the code.  Returns the number of search nodes visited.
    """
    k, n = G.shape
    R = np.zeros((cap + 2, n, k), np.int64)
    for j in range(n):
        for a in range(k):
            R[0, j, a] = G[a, j]
    excl = np.empty(n + 1, np.int64)
    nzero = 0
    for j in range(n):
        zero = True
        for a in range(k):
            if G[a, j] != 0:
                zero = False
                break
        if zero:
            nzero += 1
    if nzero > best[0]:
        best[0] = nzero
    for j in range(1, cap + 1):
        if best[j] < best[j - 1]:
            best[j] = best[j - 1]
    if cap == 0:
        return 0
    if force_first:
        col0_zero = True
        for a in range(k):
            if G[a, 0] != 0:
                col0_zero = False
        if not col0_zero:
            _flat_include(R, 0, 0, excl, 0, addt, mult, invt, negt, n, k)
            return _flat_dfs(1, 1, 1, R, cap, excl, n, k, addt, mult, invt, negt, best, target_only, limit)
    return _flat_dfs(0, 0, 0, R, cap, excl, n, k, addt, mult, invt, negt, best, target_only, limit)


# -- projective codeword enumeration ---------------------------------------------------


@njit(cache=True)
def _scaled_deltas(G, addt, mult, negt, q):
    # D[j, v] = (v+1)*G[j] - v*G[j], with v+1 taken cyclically in 0..q-1
    k, n = G.shape
    D = np.zeros((k, q, n), np.int64)
    for j in range(k):
        for v in range(q):
            w = v + 1 if v + 1 < q else 0
            for i in range(n):
                D[j, v, i] = addt[mult[w, G[j, i]], negt[mult[v, G[j, i]]]]
    return D


@njit(cache=True)
def projective_codewords(G, addt, mult, negt, q, want_masks):
    """Weights (and support masks when ``n <= 64``) of all codewords with a leading 1.

    Messages are enumerated with their first nonzero entry equal to 1, so
    every one-dimensional subcode appears exactly once.
    """
    k, n = G.shape
    total = 0
    for p in range(k):
        total += q ** (k - 1 - p)
    weights = np.empty(total, np.int64)
    masks = np.empty(total if want_masks else 0, np.uint64)
    D = _scaled_deltas(G, addt, mult, negt, q)
    digits = np.zeros(k, np.int64)
    cw = np.zeros(n, np.int64)
    idx = 0
    for p in range(k):
        for i in range(n):
            cw[i] = G[p, i]
        for j in range(k):
            digits[j] = 0
        while True:
            w = 0
            for i in range(n):
                if cw[i] != 0:
                    w += 1
            weights[idx] = w
            if want_masks:
                masks[idx] = _support_mask(cw)
            idx += 1
            j = k - 1
            while j > p:
                v = digits[j]
                for i in range(n):
                    cw[i] = addt[cw[i], D[j, v, i]]
                digits[j] = v + 1 if v + 1 < q else 0
                if digits[j] != 0:
                    break
                j -= 1
            if j == p:
                break
    return weights, masks


@njit(cache=True)
def min_pair_union(masks, weights, order, q, upper):
    """Smallest support of a two-dimensional subcode, from projective codeword masks.

    ``order`` sorts codewords by weight.  Only codewords light enough to be
    the lightest member of a subcode beating ``upper`` are used as the first
    member; ``upper`` is an already-achieved value (or ``n + 1``).
    """
    m = order.shape[0]
    best = upper
    for a in range(m):
        ia = order[a]
        wa = weights[ia]
        if wa * (q + 1) > q * (best - 1):
            break
        ma = masks[ia]
        for b in range(m):
            if b == a:
                continue
            u = popcount64(ma | masks[order[b]])
            if u < best:
                best = u
    return best


# -- Brouwer-Zimmermann enumeration ------------------------------------------------


@njit(cache=True)
def bz_enumerate(Gs, t, addt, mult, q, wmax, list_mode, out, nout, best_w, best_cw, limit):
    """All projective combinations of exactly ``t`` rows of ``Gs``.

    Tracks the lightest codeword in ``best_w``/``best_cw``; in list mode also
    appends every codeword of weight ``<= wmax`` to ``out``.  Returns the new
    number of stored codewords (which may exceed the buffer, signalling
    overflow) and the work spent.
    """
    k, n = Gs.shape
    acc = np.zeros((t + 1, n), np.int64)
    rows = np.empty(t, np.int64)
    coef = np.empty(t, np.int64)
    work = 0
    if t == 0 or t > k:
        return nout, work
    # depth-first over (row, coefficient) choices; the first coefficient is 1
    depth = 0
    rows[0] = 0
    coef[0] = 1
    while depth >= 0:
        r = rows[depth]
        if r > k - (t - depth):
            depth -= 1
            if depth >= 0:
                hi = q - 1 if depth > 0 else 1
                if coef[depth] < hi:
                    coef[depth] += 1
                else:
                    coef[depth] = 1
                    rows[depth] += 1
            continue
        work += 1
        if work > limit:
            return nout, work
        src = acc[depth]
        dst = acc[depth + 1]
        c = coef[depth]
        for i in range(n):
            dst[i] = addt[src[i], mult[c, Gs[r, i]]]
        if depth + 1 == t:
            w = 0
            for i in range(n):
                if dst[i] != 0:
                    w += 1
            if w > 0:
                if w < best_w[0]:
                    best_w[0] = w
                    for i in range(n):
                        best_cw[i] = dst[i]
                if list_mode and w <= wmax:
                    if nout < out.shape[0]:
                        for i in range(n):
                            out[nout, i] = dst[i]
                    nout += 1
            hi = q - 1 if depth > 0 else 1
            if coef[depth] < hi:
                coef[depth] += 1
            else:
                coef[depth] = 1
                rows[depth] += 1
        else:
            depth += 1
            rows[depth] = r + 1
            coef[depth] = 1
    return nout, work


# -- syndrome meet-in-the-middle ---------------------------------------------------


@njit(cache=True)
def _next_combo(idx, size, lo, hi):
    # advance idx[0:size] to the next increasing tuple with entries in [lo, hi)
    j = size - 1
    while j >= 0 and idx[j] == hi - size + j:
        j -= 1
    if j < 0:
        return False
    idx[j] += 1
    for m in range(j + 1, size):
        idx[m] = idx[m - 1] + 1
    return True


@njit(cache=True)
def _next_coefs(c, size, q):
    j = size - 1
    while j >= 0 and c[j] == q - 1:
        c[j] = 1
        j -= 1
    if j < 0:
        return False
    c[j] += 1
    return True


@njit(cache=True)
def _syndrome_key(s, rnd):
    key = np.uint64(0)
    for a in range(s.shape[0]):
        key += np.uint64(s[a]) * rnd[a]
    return key


@njit(cache=True)
def mitm_weight_exact(Hc, w, first_lo, first_hi, addt, mult, negt, q, rnd, out, limit):
    """Codewords of weight exactly ``w`` of the code with parity-check columns ``Hc``.

    ``Hc`` is ``n x m`` (column ``i`` of the parity-check matrix in row ``i``).
    A codeword with support ``s0 < s1 < ... < s_{w-1}`` and ``c[s0] = 1`` is
    split as ``{s0} + A`` (the next ``a`` positions) and ``B`` (the rest), and
    found as a collision ``H(s0 + A) = -H(B)``.  Only supports whose smallest
    position lies in ``[first_lo, first_hi)`` are produced.  Codewords are
    written to ``out`` (normalised to leading coefficient 1); returns the
    number found (possibly more than fit) and a flag for exceeding ``limit``.
    """
    n, m = Hc.shape
    a = (w - 1) // 2
    b = w - 1 - a
    # left side: s0, A with coefficients
    nleft = 0
    idx = np.empty(max(a, 1), np.int64)
    co = np.empty(max(a, 1), np.int64)
    # count left entries
    for s0 in range(first_lo, first_hi):
        if a == 0:
            nleft += 1
            continue
        if n - s0 - 1 < a:
            continue
        cnt = 1
        for j in range(a):
            cnt = cnt * (n - s0 - 1 - j) // (j + 1)
        nleft += cnt * (q - 1) ** a
    if nleft > limit:
        return -1, True
    keys = np.empty(nleft, np.uint64)
    lmax = np.empty(nleft, np.int64)
    lsrc = np.empty((nleft, a + 1), np.int64)
    lcoef = np.empty((nleft, a + 1), np.int64)
    syn = np.empty(m, np.int64)
    pos = 0
    for s0 in range(first_lo, first_hi):
        if a == 0:
            for r in range(m):
                syn[r] = Hc[s0, r]
            keys[pos] = _syndrome_key(syn, rnd)
            lmax[pos] = s0
            lsrc[pos, 0] = s0
            lcoef[pos, 0] = 1
            pos += 1
            continue
        if n - s0 - 1 < a:
            continue
        for j in range(a):
            idx[j] = s0 + 1 + j
        while True:
            for j in range(a):
                co[j] = 1
            while True:
                for r in range(m):
                    x = Hc[s0, r]
                    for j in range(a):
                        x = addt[x, mult[co[j], Hc[idx[j], r]]]
                    syn[r] = x
                keys[pos] = _syndrome_key(syn, rnd)
                lmax[pos] = idx[a - 1]
                lsrc[pos, 0] = s0
                lcoef[pos, 0] = 1
                for j in range(a):
                    lsrc[pos, j + 1] = idx[j]
                    lcoef[pos, j + 1] = co[j]
                pos += 1
                if not _next_coefs(co, a, q):
                    break
            if not _next_combo(idx, a, s0 + 1, n):
                break
    order = np.argsort(keys)
    skeys = keys[order]
    # right side: B with coefficients, key of -sum
    found = 0
    work = 0
    if b == 0:
        # weight-one words: columns equal to zero
        for p in range(nleft):
            if skeys[p] == _syndrome_key(np.zeros(m, np.int64), rnd):
                e = order[p]
                allzero = True
                for r in range(m):
                    if Hc[lsrc[e, 0], r] != 0:
                        allzero = False
                if allzero:
                    if found < out.shape[0]:
                        for i in range(n):
                            out[found, i] = 0
                        out[found, lsrc[e, 0]] = 1
                    found += 1
        return found, False
    lo_b = first_lo + a + 1
    if lo_b > n - b:
        return 0, False
    bidx = np.empty(b, np.int64)
    bco = np.empty(b, np.int64)
    for j in range(b):
        bidx[j] = lo_b + j
    chk = np.empty(m, np.int64)
    while True:
        for j in range(b):
            bco[j] = 1
        while True:
            work += 1
            if work > limit:
                return found, True
            for r in range(m):
                x = 0
                for j in range(b):
                    x = addt[x, mult[bco[j], Hc[bidx[j], r]]]
                syn[r] = negt[x]
            key = _syndrome_key(syn, rnd)
            lo = np.searchsorted(skeys, key)
            p = lo
            while p < nleft and skeys[p] == key:
                e = order[p]
                if lmax[e] < bidx[0]:
                    # verify exactly
                    ok = True
                    for r in range(m):
                        x = 0
                        for j in range(a + 1):
                            x = addt[x, mult[lcoef[e, j], Hc[lsrc[e, j], r]]]
                        chk[r] = x
                        if chk[r] != syn[r]:
                            ok = False
                            break
                    if ok:
                        if found < out.shape[0]:
                            for i in range(n):
                                out[found, i] = 0
                            for j in range(a + 1):
                                out[found, lsrc[e, j]] = lcoef[e, j]
                            for j in range(b):
                                out[found, bidx[j]] = bco[j]
                        found += 1
                p += 1
            if not _next_coefs(bco, b, q):
                break
        if not _next_combo(bidx, b, lo_b, n):
            break
    return found, False
