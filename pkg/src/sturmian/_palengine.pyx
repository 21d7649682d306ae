# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled palindromic-length kernel.

Same eertree-with-series-links algorithm as _palengine_py, with flat C
arrays instead of Python lists and a dense per-node transition table over
the word's actual alphabet.  See the pure-Python module for the algorithm
notes; the two kernels are interchangeable and tested for equivalence.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

KERNEL = "compiled"


def factorize(word):
    """Minimal palindromic factorization of ``word`` (bytes).

    Returns (pal_len, cuts); see _palengine_py.factorize.
    """
    cdef const unsigned char[::1] s = word
    cdef Py_ssize_t n = s.shape[0]
    if n == 0:
        return 0, [0]

    # dense alphabet of the actual symbols
    cdef int alpha[256]
    cdef int sigma = 0
    cdef Py_ssize_t i
    memset(alpha, 0xFF, sizeof(alpha))
    for i in range(n):
        if alpha[s[i]] < 0:
            alpha[s[i]] = sigma
            sigma += 1

    cdef Py_ssize_t max_nodes = n + 2
    cdef long long inf = n + 1

    cdef int *length = <int *> malloc(max_nodes * sizeof(int))
    cdef int *link = <int *> malloc(max_nodes * sizeof(int))
    cdef int *slink = <int *> malloc(max_nodes * sizeof(int))
    cdef int *diff = <int *> malloc(max_nodes * sizeof(int))
    cdef long long *gans = <long long *> malloc(max_nodes * sizeof(long long))
    cdef long long *garg = <long long *> malloc(max_nodes * sizeof(long long))
    cdef int *trans = <int *> malloc(max_nodes * sigma * sizeof(int))
    cdef long long *pl = <long long *> malloc((n + 1) * sizeof(long long))
    cdef long long *prev = <long long *> malloc((n + 1) * sizeof(long long))

    if (length == NULL or link == NULL or slink == NULL or diff == NULL
            or gans == NULL or garg == NULL or trans == NULL
            or pl == NULL or prev == NULL):
        free(length); free(link); free(slink); free(diff)
        free(gans); free(garg); free(trans); free(pl); free(prev)
        raise MemoryError()

    cdef int nodes = 2
    cdef int last = 1
    cdef int cur, t, u, lk, c, v, lv
    cdef int d
    cdef Py_ssize_t j, ip, p
    cdef long long best, bestj, a, aj, j0

    try:
        length[0] = -1; link[0] = 0; slink[0] = 0; diff[0] = 0
        length[1] = 0; link[1] = 0; slink[1] = 0; diff[1] = 0
        gans[0] = 0; garg[0] = 0; gans[1] = 0; garg[1] = 0
        memset(trans, 0xFF, 2 * sigma * sizeof(int))

        pl[0] = 0
        for i in range(1, n + 1):
            pl[i] = inf
        memset(prev, 0, (n + 1) * sizeof(long long))

        for i in range(n):
            c = alpha[s[i]]
            cur = last
            while True:
                j = i - 1 - length[cur]
                if j >= 0 and alpha[s[j]] == c:
                    break
                cur = link[cur]
            u = trans[cur * sigma + c]
            if u < 0:
                u = nodes
                nodes += 1
                length[u] = length[cur] + 2
                if length[u] == 1:
                    lk = 1
                else:
                    t = link[cur]
                    while True:
                        j = i - 1 - length[t]
                        if j >= 0 and alpha[s[j]] == c:
                            break
                        t = link[t]
                    lk = trans[t * sigma + c]
                link[u] = lk
                d = length[u] - length[lk]
                diff[u] = d
                slink[u] = lk if d != diff[lk] else slink[lk]
                gans[u] = 0
                garg[u] = 0
                memset(trans + u * sigma, 0xFF, sigma * sizeof(int))
                trans[cur * sigma + c] = u
            last = u

            ip = i + 1
            best = inf
            bestj = 0
            v = last
            while length[v] > 0:
                j0 = ip - (length[slink[v]] + diff[v])
                a = pl[j0]
                aj = j0
                lv = link[v]
                if diff[v] == diff[lv] and gans[lv] < a:
                    a = gans[lv]
                    aj = garg[lv]
                gans[v] = a
                garg[v] = aj
                if a + 1 < best:
                    best = a + 1
                    bestj = aj
                v = slink[v]
            pl[ip] = best
            prev[ip] = bestj

        result = pl[n]
        cuts = [n]
        p = n
        while p > 0:
            p = <Py_ssize_t> prev[p]
            cuts.append(p)
        cuts.reverse()
        return result, cuts
    finally:
        free(length); free(link); free(slink); free(diff)
        free(gans); free(garg); free(trans); free(pl); free(prev)
