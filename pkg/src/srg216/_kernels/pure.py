"""Pure-Python implementations of the enumeration kernels.

These are the hot inner loops of the whole build.  The compiled extension
``srg216._kernels._core`` implements the same two functions with identical
semantics; either backend must produce bit-identical results.

Conventions shared by both backends:

* surface points carry local indices 0..44;
* ``reps[i]`` is the packed normalised representative of local point i;
* ``lidx[v]`` maps a packed vector to the local index of its projective
  point, or 255 when the point is not on the surface;
* ``smul2``/``smul3`` are the packed scalar-multiplication tables for w, w^2;
* closures are returned as 45-bit masks over local indices, sorted ascending.
"""


def scan_baer_closures(reps, lidx, smul2, smul3, order, ia_start, ia_end):
    """Enumerate Baer subgeometries contained in the surface.

    Scans independent 4-subsets of surface points (in the positions
    ``order[ia_start:ia_end]`` for the first point) and the 27 projective
    scaling classes of their representatives, keeping GF(2)-closures whose
    15 points all lie on the surface.  Partial closures leaving the surface
    are pruned as soon as one combination fails the membership test, and
    degenerate (rank-deficient) candidates are rejected by the distinctness
    popcounts: a rank-3 closure of 15 distinct points cannot lie on the
    surface, because a plane meets it in at most 13 points.
    """
    found = set()
    n = len(reps)
    for ia in range(ia_start, ia_end):
        a = order[ia]
        ua = reps[a]
        mask_a = 1 << a
        for ib in range(ia + 1, n):
            b = order[ib]
            rb = reps[b]
            mask_ab = mask_a | (1 << b)
            for ub in (rb, smul2[rb], smul3[rb]):
                uab = ua ^ ub
                i12 = lidx[uab]
                if i12 == 255:
                    continue
                m3 = mask_ab | (1 << i12)
                for ic in range(ib + 1, n):
                    c = order[ic]
                    if m3 >> c & 1:
                        continue
                    rc = reps[c]
                    for uc in (rc, smul2[rc], smul3[rc]):
                        uac = ua ^ uc
                        i13 = lidx[uac]
                        if i13 == 255:
                            continue
                        ubc = ub ^ uc
                        i23 = lidx[ubc]
                        if i23 == 255:
                            continue
                        uabc = uab ^ uc
                        i123 = lidx[uabc]
                        if i123 == 255:
                            continue
                        m7 = m3 | (1 << c) | (1 << i13) | (1 << i23) | (1 << i123)
                        if m7.bit_count() != 7:
                            continue
                        for id_ in range(ic + 1, n):
                            d = order[id_]
                            if m7 >> d & 1:
                                continue
                            rd = reps[d]
                            for ud in (rd, smul2[rd], smul3[rd]):
                                i14 = lidx[ua ^ ud]
                                if i14 == 255:
                                    continue
                                i24 = lidx[ub ^ ud]
                                if i24 == 255:
                                    continue
                                i34 = lidx[uc ^ ud]
                                if i34 == 255:
                                    continue
                                i124 = lidx[uab ^ ud]
                                if i124 == 255:
                                    continue
                                i134 = lidx[uac ^ ud]
                                if i134 == 255:
                                    continue
                                i234 = lidx[ubc ^ ud]
                                if i234 == 255:
                                    continue
                                i1234 = lidx[uabc ^ ud]
                                if i1234 == 255:
                                    continue
                                m15 = (
                                    m7
                                    | (1 << d)
                                    | (1 << i14)
                                    | (1 << i24)
                                    | (1 << i34)
                                    | (1 << i124)
                                    | (1 << i134)
                                    | (1 << i234)
                                    | (1 << i1234)
                                )
                                if m15.bit_count() == 15:
                                    found.add(m15)
    return sorted(found)


def scan_ovoid_masks(gen_masks, comb_masks):
    """5-subsets (as 15-bit masks) hitting every generator mask exactly once.

    ``comb_masks`` lists the candidate 5-subsets; their order is preserved
    in the output.
    """
    out = []
    gens = tuple(gen_masks)
    for m in comb_masks:
        for g in gens:
            if (m & g).bit_count() != 1:
                break
        else:
            out.append(m)
    return out
