# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels (same interface and visiting order as _kernels_py)."""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy, memset

cdef enum:
    UNDEC = 0
    IN = 1
    OUT = 2


cdef extern from *:
    int __builtin_popcount(unsigned int) nogil
    int __builtin_ctz(unsigned int) nogil


cdef inline int popcount(unsigned int x) nogil:
    return __builtin_popcount(x)


cdef class ColouringSearch:
    cdef int n, m, d, regular, started, done
    cdef unsigned int full
    cdef int *eu
    cdef int *ev
    cdef int *inc_start
    cdef int *inc
    cdef int *deg
    cdef int *col
    cdef unsigned int *used
    cdef int *st_edge
    cdef unsigned int *st_mask
    cdef int depth
    cdef int *parent
    cdef int *size
    cdef public long long nodes

    def __cinit__(self, int n, edges, int d, pre=None, regular=True):
        cdef int i, u, v, k
        self.n = n
        self.m = len(edges)
        self.d = d
        if d > 31:
            raise ValueError("at most 31 colours supported")
        self.full = (1u << d) - 1
        self.regular = 1 if regular else 0
        self.nodes = 0
        m = self.m
        self.eu = <int *> malloc(max(m, 1) * sizeof(int))
        self.ev = <int *> malloc(max(m, 1) * sizeof(int))
        self.col = <int *> malloc(max(m, 1) * sizeof(int))
        self.st_edge = <int *> malloc((m + 1) * sizeof(int))
        self.st_mask = <unsigned int *> malloc((m + 1) * sizeof(unsigned int))
        self.used = <unsigned int *> malloc(max(n, 1) * sizeof(unsigned int))
        self.deg = <int *> malloc(max(n, 1) * sizeof(int))
        self.inc_start = <int *> malloc((n + 1) * sizeof(int))
        self.inc = <int *> malloc(max(2 * m, 1) * sizeof(int))
        self.parent = <int *> malloc(max(n, 1) * sizeof(int))
        self.size = <int *> malloc(max(n, 1) * sizeof(int))
        memset(self.deg, 0, max(n, 1) * sizeof(int))
        for i in range(m):
            u, v = edges[i]
            self.eu[i] = u
            self.ev[i] = v
            self.deg[u] += 1
            self.deg[v] += 1
        self.inc_start[0] = 0
        for i in range(n):
            self.inc_start[i + 1] = self.inc_start[i] + self.deg[i]
        cdef int *fill = <int *> malloc(max(n, 1) * sizeof(int))
        for i in range(n):
            fill[i] = self.inc_start[i]
        for i in range(m):
            self.inc[fill[self.eu[i]]] = i
            fill[self.eu[i]] += 1
            self.inc[fill[self.ev[i]]] = i
            fill[self.ev[i]] += 1
        free(fill)
        for i in range(m):
            self.col[i] = 0
        for i in range(n):
            self.used[i] = 0
        self.done = 0
        if pre is not None:
            for i in range(m):
                k = pre[i]
                if k:
                    if (self.used[self.eu[i]] | self.used[self.ev[i]]) & (1u << (k - 1)):
                        self.done = 1
                    self.col[i] = k
                    self.used[self.eu[i]] |= 1u << (k - 1)
                    self.used[self.ev[i]] |= 1u << (k - 1)
        self.depth = 0
        self.started = 0

    def __dealloc__(self):
        free(self.eu); free(self.ev); free(self.col); free(self.st_edge)
        free(self.st_mask); free(self.used); free(self.deg); free(self.inc_start)
        free(self.inc); free(self.parent); free(self.size)

    def __iter__(self):
        return self

    cdef int _find(self, int x) nogil:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    cdef int _parity_ok(self) nogil:
        cdef int c, v, e, a, b, ra, rb
        cdef unsigned int bit
        for c in range(self.d):
            bit = 1u << c
            for v in range(self.n):
                self.parent[v] = v
                self.size[v] = 0 if (self.used[v] & bit) else 1
            for e in range(self.m):
                if self.col[e]:
                    continue
                a = self.eu[e]
                b = self.ev[e]
                if (self.used[a] | self.used[b]) & bit:
                    continue
                ra = self._find(a)
                rb = self._find(b)
                if ra != rb:
                    self.parent[ra] = rb
                    self.size[rb] += self.size[ra]
            for v in range(self.n):
                if self.parent[v] == v and (self.size[v] & 1):
                    return 0
        return 1

    cdef int _select(self) nogil:
        cdef int e, v, k, best = -1, best_cnt = 99, cnt, freec
        cdef unsigned int avail, union_
        for e in range(self.m):
            if self.col[e]:
                continue
            avail = self.full & ~(self.used[self.eu[e]] | self.used[self.ev[e]])
            cnt = popcount(avail)
            if cnt < best_cnt:
                if cnt == 0:
                    return -2
                best = e
                best_cnt = cnt
        if best == -1:
            return -1
        for v in range(self.n):
            union_ = 0
            freec = 0
            for k in range(self.inc_start[v], self.inc_start[v + 1]):
                e = self.inc[k]
                if not self.col[e]:
                    freec += 1
                    union_ |= self.full & ~(self.used[self.eu[e]] | self.used[self.ev[e]])
            if not freec:
                continue
            if self.deg[v] == self.d:
                if (self.full & ~self.used[v]) & ~union_:
                    return -2
            elif popcount(union_) < freec:
                return -2
        if self.regular and not self._parity_ok():
            return -2
        return best

    def __next__(self):
        cdef int e, descend
        cdef unsigned int mask, bit
        if self.done:
            raise StopIteration
        descend = 0 if self.started else 1
        self.started = 1
        while True:
            if descend:
                self.nodes += 1
                e = self._select()
                descend = 0
                if e == -1:
                    return tuple(self.col[i] for i in range(self.m))
                elif e >= 0:
                    self.st_edge[self.depth] = e
                    self.st_mask[self.depth] = self.full & ~(self.used[self.eu[e]] | self.used[self.ev[e]])
                    self.depth += 1
            if self.depth == 0:
                self.done = 1
                raise StopIteration
            e = self.st_edge[self.depth - 1]
            if self.col[e]:
                bit = 1u << (self.col[e] - 1)
                self.used[self.eu[e]] &= ~bit
                self.used[self.ev[e]] &= ~bit
                self.col[e] = 0
            mask = self.st_mask[self.depth - 1]
            if not mask:
                self.depth -= 1
                continue
            bit = mask & (~mask + 1)
            self.st_mask[self.depth - 1] = mask & ~bit
            self.col[e] = __builtin_ctz(bit) + 1
            self.used[self.eu[e]] |= bit
            self.used[self.ev[e]] |= bit
            descend = 1


cdef class CycleCoverSearch:
    cdef int n, m, nact, hamiltonian, L, stride
    cdef int *eu
    cdef int *ev
    cdef int *active
    cdef int *inc_start
    cdef int *inc
    cdef int *lenok
    cdef int *levels
    cdef int *phase
    cdef int *bedge
    cdef int *queue
    cdef int qn
    cdef int *seen
    cdef int *bfs
    cdef public long long nodes

    # level layout: st[m] | indeg[n] | avail[n] | end[n] | plen[n] | nin | closed
    def __cinit__(self, int n, edges, active=None, required=(), hamiltonian=True, lengths=None):
        cdef int i, u, v, k, e
        self.n = n
        self.m = len(edges)
        self.hamiltonian = 1 if hamiltonian else 0
        self.nodes = 0
        m = self.m
        self.eu = <int *> malloc(max(m, 1) * sizeof(int))
        self.ev = <int *> malloc(max(m, 1) * sizeof(int))
        self.active = <int *> malloc(max(n, 1) * sizeof(int))
        self.inc_start = <int *> malloc((n + 1) * sizeof(int))
        self.inc = <int *> malloc(max(2 * m, 1) * sizeof(int))
        self.lenok = <int *> malloc((n + 2) * sizeof(int))
        self.queue = <int *> malloc((2 * m + n + 4) * sizeof(int))
        self.seen = <int *> malloc(max(n, 1) * sizeof(int))
        self.bfs = <int *> malloc(max(n, 1) * sizeof(int))
        for i in range(n):
            self.active[i] = 1 if active is None or active[i] else 0
        self.nact = 0
        for i in range(n):
            self.nact += self.active[i]
        for i in range(n + 2):
            self.lenok[i] = 1 if lengths is None else 0
        if lengths is not None:
            for k in lengths:
                if 0 <= k < n + 2:
                    self.lenok[k] = 1
        cdef int *cnt = <int *> malloc(max(n, 1) * sizeof(int))
        memset(cnt, 0, max(n, 1) * sizeof(int))
        for i in range(m):
            u, v = edges[i]
            self.eu[i] = u
            self.ev[i] = v
            if self.active[u] and self.active[v]:
                cnt[u] += 1
                cnt[v] += 1
        self.inc_start[0] = 0
        for i in range(n):
            self.inc_start[i + 1] = self.inc_start[i] + cnt[i]
            cnt[i] = self.inc_start[i]
        for i in range(m):
            u = self.eu[i]
            v = self.ev[i]
            if self.active[u] and self.active[v]:
                self.inc[cnt[u]] = i
                cnt[u] += 1
                self.inc[cnt[v]] = i
                cnt[v] += 1
        free(cnt)
        self.stride = m + 4 * n + 2
        self.levels = <int *> malloc((m + 2) * self.stride * sizeof(int))
        self.phase = <int *> malloc((m + 2) * sizeof(int))
        self.bedge = <int *> malloc((m + 2) * sizeof(int))
        self.L = -1
        if self.nact < 3:
            return
        cdef int *s = self.levels
        for e in range(m):
            s[e] = OUT
        for v in range(n):
            for k in range(self.inc_start[v], self.inc_start[v + 1]):
                s[self.inc[k]] = UNDEC
        for v in range(n):
            s[m + v] = 0
            s[m + n + v] = self.inc_start[v + 1] - self.inc_start[v]
            s[m + 2 * n + v] = v
            s[m + 3 * n + v] = 0
        s[m + 4 * n] = 0
        s[m + 4 * n + 1] = 0
        for e in required:
            if s[e] != UNDEC:
                return
        self.qn = 0
        for v in range(n):
            if self.active[v]:
                self.queue[self.qn] = v
                self.qn += 1
        for e in required:
            if not self._set(s, e, IN):
                return
        if not self._propagate(s):
            return
        if self.hamiltonian and not self._connected(s):
            return
        self.L = 0
        self.phase[0] = 0

    def __dealloc__(self):
        free(self.eu); free(self.ev); free(self.active); free(self.inc_start)
        free(self.inc); free(self.lenok); free(self.queue); free(self.seen)
        free(self.bfs); free(self.levels); free(self.phase); free(self.bedge)

    def __iter__(self):
        return self

    cdef int _set(self, int *s, int e, int val) nogil:
        cdef int n = self.n, m = self.m
        cdef int a, b, ea, eb, length
        if s[e] == val:
            return 1
        if s[e] != UNDEC:
            return 0
        s[e] = val
        a = self.eu[e]
        b = self.ev[e]
        if val == OUT:
            s[m + n + a] -= 1
            s[m + n + b] -= 1
        else:
            s[m + a] += 1
            s[m + b] += 1
            s[m + 4 * n] += 1
            if s[m + 2 * n + a] == b:
                length = s[m + 3 * n + a] + 1
                if self.hamiltonian and length != self.nact:
                    return 0
                if length > n + 1 or not self.lenok[length]:
                    return 0
                s[m + 4 * n + 1] += length
            else:
                ea = s[m + 2 * n + a]
                eb = s[m + 2 * n + b]
                length = s[m + 3 * n + a] + s[m + 3 * n + b] + 1
                s[m + 2 * n + ea] = eb
                s[m + 2 * n + eb] = ea
                s[m + 3 * n + ea] = length
                s[m + 3 * n + eb] = length
        self.queue[self.qn] = a
        self.queue[self.qn + 1] = b
        self.qn += 2
        return 1

    cdef int _propagate(self, int *s) nogil:
        cdef int n = self.n, m = self.m
        cdef int v, k, e
        while self.qn > 0:
            self.qn -= 1
            v = self.queue[self.qn]
            if s[m + v] > 2 or s[m + n + v] < 2:
                self.qn = 0
                return 0
            if s[m + v] == 2 and s[m + n + v] > 2:
                for k in range(self.inc_start[v], self.inc_start[v + 1]):
                    e = self.inc[k]
                    if s[e] == UNDEC and not self._set(s, e, OUT):
                        self.qn = 0
                        return 0
            elif s[m + n + v] == 2 and s[m + v] < 2:
                for k in range(self.inc_start[v], self.inc_start[v + 1]):
                    e = self.inc[k]
                    if s[e] == UNDEC and not self._set(s, e, IN):
                        self.qn = 0
                        return 0
        return 1

    cdef int _connected(self, int *s) nogil:
        cdef int v, w, k, e, start = -1, top = 0, cnt = 1
        for v in range(self.n):
            self.seen[v] = 0
            if start == -1 and self.active[v]:
                start = v
        if start == -1:
            return 1
        self.seen[start] = 1
        self.bfs[0] = start
        top = 1
        while top > 0:
            top -= 1
            v = self.bfs[top]
            for k in range(self.inc_start[v], self.inc_start[v + 1]):
                e = self.inc[k]
                if s[e] != OUT:
                    w = self.ev[e] if self.eu[e] == v else self.eu[e]
                    if not self.seen[w]:
                        self.seen[w] = 1
                        cnt += 1
                        self.bfs[top] = w
                        top += 1
        return cnt == self.nact

    cdef int _branch_edge(self, int *s) nogil:
        cdef int n = self.n, m = self.m
        cdef int v, k, e, cnt, first, best = -1, best_cnt = 1 << 30
        for v in range(n):
            if not self.active[v] or s[m + v] >= 2:
                continue
            cnt = 0
            first = -1
            for k in range(self.inc_start[v], self.inc_start[v + 1]):
                e = self.inc[k]
                if s[e] == UNDEC:
                    cnt += 1
                    if first == -1 or e < first:
                        first = e
            if 0 < cnt < best_cnt:
                best = first
                best_cnt = cnt
        return best

    cdef int _child(self, int val) nogil:
        cdef int *src = self.levels + self.L * self.stride
        cdef int *dst = src + self.stride
        memcpy(dst, src, self.stride * sizeof(int))
        self.qn = 0
        if not self._set(dst, self.bedge[self.L], val):
            self.qn = 0
            return 0
        if not self._propagate(dst):
            return 0
        if self.hamiltonian and not self._connected(dst):
            return 0
        return 1

    def __next__(self):
        cdef int e, ph
        cdef int *s
        while self.L >= 0:
            ph = self.phase[self.L]
            s = self.levels + self.L * self.stride
            if ph == 0:
                self.nodes += 1
                e = self._branch_edge(s)
                if e == -1:
                    self.phase[self.L] = 3
                    if s[self.m + 4 * self.n] == self.nact and s[self.m + 4 * self.n + 1] == self.nact:
                        return tuple(i for i in range(self.m) if s[i] == IN)
                    continue
                self.bedge[self.L] = e
                self.phase[self.L] = 1
            elif ph == 1:
                self.phase[self.L] = 2
                if self._child(IN):
                    self.L += 1
                    self.phase[self.L] = 0
            elif ph == 2:
                self.phase[self.L] = 3
                if self._child(OUT):
                    self.L += 1
                    self.phase[self.L] = 0
            else:
                self.L -= 1
        raise StopIteration
