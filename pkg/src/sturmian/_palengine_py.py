"""Pure-Python palindromic-length kernel.

Builds the palindrome tree (eertree) of the word online.  Suffix links
are grouped into series of equal length-difference, so the factorization
DP visits O(log i) series per position instead of every palindromic
suffix:

    PL[i] = 1 + min over series at i of the best PL at the series'
    member start positions,

where the per-series minimum is the DP value at the shortest member's
start, merged with the value the next node of the same series carried at
position i - diff (whose member start positions are the same).  Start
positions are carried along, so one optimal cut sequence falls out of the
prev[] chain.

The compiled extension (_palengine) implements the identical algorithm;
this module is the import-time fallback and the reference for the
equivalence tests.
"""

from __future__ import annotations

KERNEL = "python"


def factorize(word: bytes) -> tuple[int, list[int]]:
    """Minimal palindromic factorization of ``word``.

    Returns (pal_len, cuts) where cuts = [0, ..., len(word)] and every
    cut-to-cut factor is a nonempty palindrome; pal_len = len(cuts) - 1
    is minimal.
    """
    s = word
    n = len(s)
    if n == 0:
        return 0, [0]
    inf = n + 1
    # node 0: length -1 root, node 1: empty root
    length = [-1, 0]
    link = [0, 0]
    slink = [0, 0]
    diff = [0, 0]
    gans = [0, 0]
    garg = [0, 0]
    trans: list[dict[int, int]] = [{}, {}]
    pl = [inf] * (n + 1)
    pl[0] = 0
    prev = [0] * (n + 1)
    last = 1
    for i in range(n):
        c = s[i]
        cur = last
        while True:
            j = i - 1 - length[cur]
            if j >= 0 and s[j] == c:
                break
            cur = link[cur]
        u = trans[cur].get(c)
        if u is None:
            u = len(length)
            length.append(length[cur] + 2)
            if length[u] == 1:
                lk = 1
            else:
                t = link[cur]
                while True:
                    j = i - 1 - length[t]
                    if j >= 0 and s[j] == c:
                        break
                    t = link[t]
                lk = trans[t][c]
            link.append(lk)
            d = length[u] - length[lk]
            diff.append(d)
            slink.append(lk if d != diff[lk] else slink[lk])
            gans.append(0)
            garg.append(0)
            trans.append({})
            trans[cur][c] = u
        last = u
        ip = i + 1
        best = inf
        bestj = 0
        v = last
        while length[v] > 0:
            # start of the shortest member of v's series at this position
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
    cuts = [n]
    p = n
    while p > 0:
        p = prev[p]
        cuts.append(p)
    cuts.reverse()
    return pl[n], cuts
