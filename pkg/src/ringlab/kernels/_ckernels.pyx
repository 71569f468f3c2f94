# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of ringlab.kernels.pure.

Same signatures, same scan order, same results; only faster. Tables come
in as flat row-major int arrays (array('i') buffers).
"""


def ring_axiom_witness(int n, const int[::1] add, const int[::1] mul, int zero, int one):
    cdef int i, j, k, base, jbase, ij, ji, v
    cdef bint found
    for i in range(n):
        base = i * n
        for j in range(n):
            v = add[base + j]
            if v < 0 or v >= n:
                return ("add-closure", (i, j, -1))
            v = mul[base + j]
            if v < 0 or v >= n:
                return ("mul-closure", (i, j, -1))
    for i in range(n):
        base = i * n
        for j in range(i + 1, n):
            if add[base + j] != add[j * n + i]:
                return ("add-commutativity", (i, j, -1))
    base = zero * n
    for i in range(n):
        if add[base + i] != i:
            return ("add-identity", (i, -1, -1))
    for i in range(n):
        base = i * n
        found = False
        for j in range(n):
            if add[base + j] == zero:
                found = True
                break
        if not found:
            return ("add-inverse", (i, -1, -1))
    for i in range(n):
        base = i * n
        for j in range(n):
            ij = add[base + j]
            jbase = j * n
            for k in range(n):
                if add[ij * n + k] != add[base + add[jbase + k]]:
                    return ("add-associativity", (i, j, k))
    base = one * n
    for i in range(n):
        if mul[base + i] != i or mul[i * n + one] != i:
            return ("mul-identity", (i, -1, -1))
    for i in range(n):
        base = i * n
        for j in range(n):
            ij = mul[base + j]
            jbase = j * n
            for k in range(n):
                if mul[ij * n + k] != mul[base + mul[jbase + k]]:
                    return ("mul-associativity", (i, j, k))
    for i in range(n):
        base = i * n
        for j in range(n):
            jbase = j * n
            ij = mul[base + j]
            for k in range(n):
                if mul[base + add[jbase + k]] != add[ij * n + mul[base + k]]:
                    return ("left-distributivity", (i, j, k))
    for i in range(n):
        for j in range(n):
            jbase = j * n
            ji = mul[jbase + i]
            for k in range(n):
                if mul[add[jbase + k] * n + i] != add[ji * n + mul[k * n + i]]:
                    return ("right-distributivity", (i, j, k))
    return None


def inverse_table(int n, const int[::1] mul, int one):
    cdef int a, b, abase
    inv = [-1] * n
    for a in range(n):
        abase = a * n
        for b in range(n):
            if mul[abase + b] == one and mul[b * n + a] == one:
                inv[a] = b
                break
    return inv


def radical_members(int n, const int[::1] add, const int[::1] mul,
                    const int[::1] neg, int one, const unsigned char[::1] is_unit):
    cdef int x, r, obase
    cdef bint ok
    obase = one * n
    out = []
    for x in range(n):
        ok = True
        for r in range(n):
            if not is_unit[add[obase + neg[mul[r * n + x]]]]:
                ok = False
                break
        if ok:
            out.append(x)
    return out


def decomposition_witness(int n, const int[::1] add, const int[::1] mul,
                          const int[::1] neg, int a, const int[::1] nils,
                          const int[::1] projs, const int[::1] units):
    cdef int bi, pi, vi, b, p, v, c, abase, pbase
    abase = a * n
    for bi in range(nils.shape[0]):
        b = nils[bi]
        c = add[abase + neg[b]]
        for pi in range(projs.shape[0]):
            p = projs[pi]
            pbase = p * n
            for vi in range(units.shape[0]):
                v = units[vi]
                if mul[pbase + v] == c and mul[v * n + p] == c:
                    return (b, p, v)
    return None
