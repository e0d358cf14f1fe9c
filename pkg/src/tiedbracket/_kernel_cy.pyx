# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled resolution kernel.

Exact twin of `_kernel_py`: same entry points, same leaf order, same
seeded random choices, bit-identical results.  The walk is recursive over
an arena of per-depth scratch buffers, so no Python objects are touched on
the hot path except the result containers.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

ctypedef unsigned long long u64

MAX_ARCS = 64

cdef u64 _SPLITMIX_GAMMA = 0x9E3779B97F4A7C15ULL


cdef inline u64 _mix_out(u64 state) nogil:
    cdef u64 z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
    return z ^ (z >> 31)


cdef struct Walk:
    int n_arcs
    int max_depth
    int *slots      # arena: max_depth * (4 * n_root) ints
    int *colors     # arena: max_depth * n_arcs ints
    int slot_stride
    bint random_pick
    u64 rng
    bint aggregate


cdef void _leaf(Walk *w, object sink, int n, int *slots, int *colors,
                int loop_count, u64 loop_mask, int sign, int apow, int dpow):
    cdef int parent[64]
    cdef int i, a, b, root, k
    cdef u64 seen = 0, color_mask = loop_mask, bit
    for i in range(w.n_arcs):
        parent[i] = i
    for i in range(n):
        a = slots[4 * i]; b = slots[4 * i + 2]
        while parent[a] != a: a = parent[a]
        while parent[b] != b: b = parent[b]
        if a != b: parent[b] = a
        a = slots[4 * i + 1]; b = slots[4 * i + 3]
        while parent[a] != a: a = parent[a]
        while parent[b] != b: b = parent[b]
        if a != b: parent[b] = a
    k = loop_count
    for i in range(4 * n):
        root = slots[i]
        while parent[root] != root:
            root = parent[root]
        bit = (<u64>1) << root
        if not (seen & bit):
            seen = seen | bit
            k += 1
            color_mask = color_mask | ((<u64>1) << colors[root])
    cdef int gamma = 0
    while color_mask:
        color_mask = color_mask & (color_mask - 1)
        gamma += 1

    cdef long long key
    if w.aggregate:
        key = ((<long long>(apow + 2048)) << 25) | (dpow << 15) | (k << 7) | gamma
        d = <dict>sink
        prev = d.get(key)
        if prev is None:
            d[key] = sign
        else:
            d[key] = prev + sign
    else:
        (<list>sink).append((k, gamma, n, sign, apow, dpow))


cdef void _glue_into(int n, int *slots, int *colors, int x, bint a_pairing,
                     int j, int i_col, int loop_count, u64 loop_mask,
                     int n_arcs, int *out_slots, int *out_colors,
                     int *out_loop_count, u64 *out_loop_mask) nogil:
    """Copy slots minus crossing x into out_slots (gluing applied), and
    colors (repainted j -> i_col when j >= 0) into out_colors.
    a_pairing=True glues {s0-s1, s2-s3} (the A-smoothing), else {s0-s3, s1-s2}."""
    cdef int s0 = slots[4 * x], s1 = slots[4 * x + 1]
    cdef int s2 = slots[4 * x + 2], s3 = slots[4 * x + 3]
    cdef int p, q, r, t, idx, w_i
    if a_pairing:
        p = s0; q = s1; r = s2; t = s3
    else:
        p = s0; q = s3; r = s1; t = s2

    cdef int m = 4 * (n - 1)
    w_i = 0
    for idx in range(4 * n):
        if idx >> 2 != x:
            out_slots[w_i] = slots[idx]
            w_i += 1

    cdef int circle0 = -1, circle1 = -1
    if p == q:
        circle0 = colors[p]
    else:
        for idx in range(m):
            if out_slots[idx] == q:
                out_slots[idx] = p
        if r == q: r = p
        if t == q: t = p
    if r == t:
        circle1 = colors[r]
    else:
        for idx in range(m):
            if out_slots[idx] == t:
                out_slots[idx] = r

    if j >= 0:
        for idx in range(n_arcs):
            out_colors[idx] = i_col if colors[idx] == j else colors[idx]
        if (loop_mask >> j) & 1:
            loop_mask = (loop_mask & ~((<u64>1) << j)) | ((<u64>1) << i_col)
        if circle0 == j: circle0 = i_col
        if circle1 == j: circle1 = i_col
    else:
        memcpy(out_colors, colors, n_arcs * sizeof(int))

    if circle0 >= 0:
        loop_count += 1
        loop_mask = loop_mask | ((<u64>1) << circle0)
    if circle1 >= 0:
        loop_count += 1
        loop_mask = loop_mask | ((<u64>1) << circle1)
    out_loop_count[0] = loop_count
    out_loop_mask[0] = loop_mask


cdef void _expand(Walk *w, object sink, int depth, int n, int *slots, int *colors,
                  int loop_count, u64 loop_mask, int sign, int apow, int dpow):
    cdef int i, x = -1, cu, co
    cdef bint x_type2 = True
    cdef int first1 = -1
    cdef int n_illegal = 0
    cdef int pick
    cdef u64 z
    cdef int cand[32]
    cdef bint cand_t2[32]

    if w.random_pick:
        for i in range(n):
            cu = colors[slots[4 * i]]
            co = colors[slots[4 * i + 1]]
            if co <= cu:
                cand[n_illegal] = i
                cand_t2[n_illegal] = co < cu
                n_illegal += 1
        if n_illegal:
            w.rng = w.rng + _SPLITMIX_GAMMA
            z = _mix_out(w.rng)
            pick = <int>(z % <u64>n_illegal)
            x = cand[pick]
            x_type2 = cand_t2[pick]
    else:
        for i in range(n):
            cu = colors[slots[4 * i]]
            co = colors[slots[4 * i + 1]]
            if co == cu:
                if first1 < 0:
                    first1 = i
            elif co < cu:
                x = i
                break
        if x < 0 and first1 >= 0:
            x = first1
            x_type2 = False

    if x < 0:
        _leaf(w, sink, n, slots, colors, loop_count, loop_mask, sign, apow, dpow)
        return

    cdef int *c_slots = w.slots + depth * w.slot_stride
    cdef int *c_colors = w.colors + depth * w.n_arcs
    cdef int c_loops
    cdef u64 c_mask
    cdef int j, i_col, s0, s1, s2, s3

    if x_type2:
        i_col = colors[slots[4 * x + 1]]
        j = colors[slots[4 * x]]
        # child order: two, zero, one
        memcpy(c_slots, slots, 4 * n * sizeof(int))
        s0 = slots[4 * x]; s1 = slots[4 * x + 1]
        s2 = slots[4 * x + 2]; s3 = slots[4 * x + 3]
        c_slots[4 * x] = s1; c_slots[4 * x + 1] = s2
        c_slots[4 * x + 2] = s3; c_slots[4 * x + 3] = s0
        memcpy(c_colors, colors, w.n_arcs * sizeof(int))
        _expand(w, sink, depth + 1, n, c_slots, c_colors, loop_count, loop_mask,
                -sign, apow, dpow)
        _glue_into(n, slots, colors, x, True, j, i_col, loop_count, loop_mask,
                   w.n_arcs, c_slots, c_colors, &c_loops, &c_mask)
        _expand(w, sink, depth + 1, n - 1, c_slots, c_colors, c_loops, c_mask,
                sign, apow, dpow + 1)
        _glue_into(n, slots, colors, x, False, j, i_col, loop_count, loop_mask,
                   w.n_arcs, c_slots, c_colors, &c_loops, &c_mask)
        _expand(w, sink, depth + 1, n - 1, c_slots, c_colors, c_loops, c_mask,
                sign, apow, dpow + 1)
    else:
        _glue_into(n, slots, colors, x, True, -1, -1, loop_count, loop_mask,
                   w.n_arcs, c_slots, c_colors, &c_loops, &c_mask)
        _expand(w, sink, depth + 1, n - 1, c_slots, c_colors, c_loops, c_mask,
                sign, apow + 1, dpow)
        _glue_into(n, slots, colors, x, False, -1, -1, loop_count, loop_mask,
                   w.n_arcs, c_slots, c_colors, &c_loops, &c_mask)
        _expand(w, sink, depth + 1, n - 1, c_slots, c_colors, c_loops, c_mask,
                sign, apow - 1, dpow)


cdef object _run(object slots, object colors, object loops, object seed, bint aggregate):
    cdef int n = len(slots) // 4
    cdef int n_arcs = len(colors)
    if n_arcs > 64 or n > 32:
        raise ValueError("kernel supports at most 32 crossings / 64 arcs")
    cdef Walk w
    w.n_arcs = n_arcs if n_arcs else 1
    # Longest possible smoothing chain: complexity decreases strictly in
    # lexicographic order, so a path visits each (total, illegal) pair at
    # most once with illegal <= total <= n.
    w.max_depth = (n + 1) * (n + 2) // 2 + 2
    w.slot_stride = 4 * n if n else 4
    w.random_pick = seed >= 0
    w.rng = <u64>seed if w.random_pick else 0
    w.aggregate = aggregate
    sink = {} if aggregate else []

    cdef int *arena_slots = <int *>malloc((w.max_depth + 1) * w.slot_stride * sizeof(int))
    cdef int *arena_colors = <int *>malloc((w.max_depth + 1) * w.n_arcs * sizeof(int))
    if arena_slots == NULL or arena_colors == NULL:
        if arena_slots != NULL: free(arena_slots)
        if arena_colors != NULL: free(arena_colors)
        raise MemoryError()
    w.slots = arena_slots + w.slot_stride
    w.colors = arena_colors + w.n_arcs

    cdef int i
    cdef int loop_count = len(loops)
    cdef u64 loop_mask = 0
    try:
        for i in range(4 * n):
            arena_slots[i] = slots[i]
        for i in range(n_arcs):
            arena_colors[i] = colors[i]
        for c in loops:
            loop_mask = loop_mask | ((<u64>1) << <int>c)
        _expand(&w, sink, 0, n, arena_slots, arena_colors, loop_count, loop_mask, 1, 0, 0)
        if aggregate:
            return {k: v for k, v in (<dict>sink).items() if v}
        return sink
    finally:
        free(arena_slots)
        free(arena_colors)


def resolve_sum(slots, colors, loops, seed=-1):
    """Resolve completely; return {packed key: signed leaf count}."""
    return _run(slots, colors, loops, seed, True)


def resolve_leaves(slots, colors, loops, seed=-1):
    """Resolve completely; return [(k, gamma, crossings_left, sign, apow, dpow)]
    in depth-first leaf order."""
    return _run(slots, colors, loops, seed, False)
