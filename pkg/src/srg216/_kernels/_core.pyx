# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the enumeration kernels.

Semantics match srg216._kernels.pure exactly; see that module for the
conventions (local indices, packed representatives, mask encoding).
"""

from libc.stdint cimport uint8_t, uint64_t


cdef inline int _popcount(uint64_t x) noexcept:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


def scan_baer_closures(reps, lidx, smul2, smul3, order, int ia_start, int ia_end):
    """Enumerate Baer subgeometries contained in the surface (45-bit masks)."""
    cdef uint8_t creps[64]
    cdef uint8_t clidx[256]
    cdef uint8_t csmul2[256]
    cdef uint8_t csmul3[256]
    cdef uint8_t corder[64]
    cdef int n = len(reps)
    cdef int i
    if n > 64:
        raise ValueError("too many surface points for the compiled kernel")
    for i in range(n):
        creps[i] = reps[i]
        corder[i] = order[i]
    for i in range(256):
        clidx[i] = lidx[i]
        csmul2[i] = smul2[i]
        csmul3[i] = smul3[i]

    cdef int ia, ib, ic, id_, sb, sc, sd
    cdef int a, b, c, d
    cdef int ua, ub, uc, ud, rb, rc, rd
    cdef int uab, uac, ubc, uabc
    cdef int i12, i13, i23, i123
    cdef int i14, i24, i34, i124, i134, i234, i1234
    cdef uint64_t mask_a, mask_ab, m3, m7, m15
    cdef int ubs[3]
    cdef int ucs[3]
    cdef int uds[3]

    found = set()
    for ia in range(ia_start, ia_end):
        a = corder[ia]
        ua = creps[a]
        mask_a = (<uint64_t>1) << a
        for ib in range(ia + 1, n):
            b = corder[ib]
            rb = creps[b]
            mask_ab = mask_a | ((<uint64_t>1) << b)
            ubs[0] = rb
            ubs[1] = csmul2[rb]
            ubs[2] = csmul3[rb]
            for sb in range(3):
                ub = ubs[sb]
                uab = ua ^ ub
                i12 = clidx[uab]
                if i12 == 255:
                    continue
                m3 = mask_ab | ((<uint64_t>1) << i12)
                for ic in range(ib + 1, n):
                    c = corder[ic]
                    if (m3 >> c) & 1:
                        continue
                    rc = creps[c]
                    ucs[0] = rc
                    ucs[1] = csmul2[rc]
                    ucs[2] = csmul3[rc]
                    for sc in range(3):
                        uc = ucs[sc]
                        uac = ua ^ uc
                        i13 = clidx[uac]
                        if i13 == 255:
                            continue
                        ubc = ub ^ uc
                        i23 = clidx[ubc]
                        if i23 == 255:
                            continue
                        uabc = uab ^ uc
                        i123 = clidx[uabc]
                        if i123 == 255:
                            continue
                        m7 = (m3 | ((<uint64_t>1) << c) | ((<uint64_t>1) << i13)
                              | ((<uint64_t>1) << i23) | ((<uint64_t>1) << i123))
                        if _popcount(m7) != 7:
                            continue
                        for id_ in range(ic + 1, n):
                            d = corder[id_]
                            if (m7 >> d) & 1:
                                continue
                            rd = creps[d]
                            uds[0] = rd
                            uds[1] = csmul2[rd]
                            uds[2] = csmul3[rd]
                            for sd in range(3):
                                ud = uds[sd]
                                i14 = clidx[ua ^ ud]
                                if i14 == 255:
                                    continue
                                i24 = clidx[ub ^ ud]
                                if i24 == 255:
                                    continue
                                i34 = clidx[uc ^ ud]
                                if i34 == 255:
                                    continue
                                i124 = clidx[uab ^ ud]
                                if i124 == 255:
                                    continue
                                i134 = clidx[uac ^ ud]
                                if i134 == 255:
                                    continue
                                i234 = clidx[ubc ^ ud]
                                if i234 == 255:
                                    continue
                                i1234 = clidx[uabc ^ ud]
                                if i1234 == 255:
                                    continue
                                m15 = (m7 | ((<uint64_t>1) << d)
                                       | ((<uint64_t>1) << i14)
                                       | ((<uint64_t>1) << i24)
                                       | ((<uint64_t>1) << i34)
                                       | ((<uint64_t>1) << i124)
                                       | ((<uint64_t>1) << i134)
                                       | ((<uint64_t>1) << i234)
                                       | ((<uint64_t>1) << i1234))
                                if _popcount(m15) == 15:
                                    found.add(m15)
    return sorted(found)


def scan_ovoid_masks(gen_masks, comb_masks):
    """5-subsets (as 15-bit masks) hitting every generator mask exactly once."""
    cdef uint64_t cgens[64]
    cdef int ngens = len(gen_masks)
    cdef int i, j, ok
    cdef uint64_t m
    if ngens > 64:
        raise ValueError("too many generator masks for the compiled kernel")
    for i in range(ngens):
        cgens[i] = gen_masks[i]
    out = []
    for cm in comb_masks:
        m = cm
        ok = 1
        for j in range(ngens):
            if _popcount(m & cgens[j]) != 1:
                ok = 0
                break
        if ok:
            out.append(cm)
    return out
