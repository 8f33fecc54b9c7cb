"""Pure-Python search kernels.

Same interface and visiting order as the compiled ``_kernels`` module; used
when the extension is unavailable or ``PERFHAM_PURE=1`` is set.
"""

from __future__ import annotations

UNDEC, IN, OUT = 0, 1, 2


class ColouringSearch:
    """Enumerate proper edge colourings with colours ``1..d``.

    ``pre`` fixes colours of some edges (0 means free). Yields colour tuples
    indexed by EdgeId. When ``regular`` is true every vertex must see every
    colour, which enables the per-colour parity cut.
    """

    def __init__(self, n, edges, d, pre=None, regular=True):
        self.n = n
        self.m = len(edges)
        self.d = d
        self.full = (1 << d) - 1
        self.eu = [u for u, _ in edges]
        self.ev = [v for _, v in edges]
        self.inc = [[] for _ in range(n)]
        for i, (u, v) in enumerate(edges):
            self.inc[u].append(i)
            self.inc[v].append(i)
        self.deg = [len(x) for x in self.inc]
        self.regular = regular
        self.pre = list(pre) if pre is not None else [0] * self.m
        self.nodes = 0

    def __iter__(self):
        return self._run()

    def _run(self):
        m, full = self.m, self.full
        col = [0] * m
        used = [0] * self.n
        eu, ev = self.eu, self.ev
        for e, c in enumerate(self.pre):
            if c:
                bit = 1 << (c - 1)
                if used[eu[e]] & bit or used[ev[e]] & bit:
                    return
                col[e] = c
                used[eu[e]] |= bit
                used[ev[e]] |= bit
        # stack of [edge, remaining colour mask]
        stack: list[list[int]] = []
        descend = True
        while True:
            if descend:
                self.nodes += 1
                e = self._select(col, used)
                if e == -1:
                    yield tuple(col)
                elif e >= 0:
                    stack.append([e, full & ~(used[eu[e]] | used[ev[e]])])
                descend = False
            if not stack:
                return
            top = stack[-1]
            e = top[0]
            if col[e]:
                bit = 1 << (col[e] - 1)
                used[eu[e]] &= ~bit
                used[ev[e]] &= ~bit
                col[e] = 0
            mask = top[1]
            if not mask:
                stack.pop()
                continue
            bit = mask & -mask
            top[1] = mask & ~bit
            col[e] = bit.bit_length()
            used[eu[e]] |= bit
            used[ev[e]] |= bit
            descend = True

    def _select(self, col, used):
        """Branch edge, -1 when complete, -2 when the node is infeasible."""
        full, eu, ev = self.full, self.eu, self.ev
        best, best_cnt = -1, 99
        for e in range(self.m):
            if col[e]:
                continue
            avail = full & ~(used[eu[e]] | used[ev[e]])
            cnt = bin(avail).count("1")
            if cnt < best_cnt:
                if cnt == 0:
                    return -2
                best, best_cnt = e, cnt
        if best == -1:
            return -1
        # vertex-side availability
        for v in range(self.n):
            union = 0
            free = 0
            for e in self.inc[v]:
                if not col[e]:
                    free += 1
                    union |= full & ~(used[eu[e]] | used[ev[e]])
            if not free:
                continue
            if self.deg[v] == self.d:
                if (full & ~used[v]) & ~union:
                    return -2
            elif bin(union).count("1") < free:
                return -2
        if self.regular and not self._parity_ok(col, used):
            return -2
        return best

    def _parity_ok(self, col, used):
        eu, ev = self.eu, self.ev
        for c in range(self.d):
            bit = 1 << c
            parent = list(range(self.n))
            size = [0] * self.n
            for v in range(self.n):
                if not used[v] & bit:
                    size[v] = 1

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for e in range(self.m):
                if col[e]:
                    continue
                a, b = eu[e], ev[e]
                if (used[a] | used[b]) & bit:
                    continue
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
                    size[rb] += size[ra]
            for v in range(self.n):
                if parent[v] == v and size[v] & 1:
                    return False
        return True


class CycleCoverSearch:
    """Enumerate spanning 2-regular edge sets of the active vertices.

    With ``hamiltonian`` set only single spanning cycles are produced.
    ``lengths`` optionally restricts which cycle lengths may close.
    Yields sorted tuples of EdgeIds.
    """

    def __init__(self, n, edges, active=None, required=(), hamiltonian=True, lengths=None):
        self.n = n
        self.m = len(edges)
        self.eu = [u for u, _ in edges]
        self.ev = [v for _, v in edges]
        self.active = [True] * n if active is None else [bool(a) for a in active]
        self.inc = [[] for _ in range(n)]
        for i, (u, v) in enumerate(edges):
            if self.active[u] and self.active[v]:
                self.inc[u].append(i)
                self.inc[v].append(i)
        self.required = list(required)
        self.hamiltonian = hamiltonian
        self.lengths = None if lengths is None else set(lengths)
        self.nact = sum(self.active)
        self.nodes = 0

    def __iter__(self):
        return self._run()

    def _initial(self):
        st = [OUT] * self.m
        for v in range(self.n):
            for e in self.inc[v]:
                st[e] = UNDEC
        state = {
            "st": st,
            "indeg": [0] * self.n,
            "avail": [len(self.inc[v]) for v in range(self.n)],
            "end": list(range(self.n)),
            "plen": [0] * self.n,
            "nin": 0,
            "closed": 0,
        }
        for e in self.required:
            if st[e] != UNDEC:
                return None
        return state

    def _copy(self, s):
        return {k: (v[:] if isinstance(v, list) else v) for k, v in s.items()}

    def _set(self, s, e, val, queue):
        st = s["st"]
        if st[e] == val:
            return True
        if st[e] != UNDEC:
            return False
        st[e] = val
        a, b = self.eu[e], self.ev[e]
        if val == OUT:
            s["avail"][a] -= 1
            s["avail"][b] -= 1
        else:
            s["indeg"][a] += 1
            s["indeg"][b] += 1
            s["nin"] += 1
            end, plen = s["end"], s["plen"]
            if end[a] == b:
                length = plen[a] + 1
                if self.hamiltonian and length != self.nact:
                    return False
                if self.lengths is not None and length not in self.lengths:
                    return False
                s["closed"] += length
            else:
                ea, eb = end[a], end[b]
                length = plen[a] + plen[b] + 1
                end[ea], end[eb] = eb, ea
                plen[ea] = plen[eb] = length
        queue.append(a)
        queue.append(b)
        return True

    def _propagate(self, s, queue):
        st, indeg, avail = s["st"], s["indeg"], s["avail"]
        while queue:
            v = queue.pop()
            if indeg[v] > 2 or avail[v] < 2:
                return False
            if indeg[v] == 2 and avail[v] > 2:
                for e in self.inc[v]:
                    if st[e] == UNDEC and not self._set(s, e, OUT, queue):
                        return False
            elif avail[v] == 2 and indeg[v] < 2:
                for e in self.inc[v]:
                    if st[e] == UNDEC and not self._set(s, e, IN, queue):
                        return False
        return True

    def _connected(self, s):
        st = s["st"]
        start = next((v for v in range(self.n) if self.active[v]), None)
        if start is None:
            return True
        seen = [False] * self.n
        seen[start] = True
        stack = [start]
        cnt = 1
        while stack:
            v = stack.pop()
            for e in self.inc[v]:
                if st[e] != OUT:
                    w = self.ev[e] if self.eu[e] == v else self.eu[e]
                    if not seen[w]:
                        seen[w] = True
                        cnt += 1
                        stack.append(w)
        return cnt == self.nact

    def _branch_edge(self, s):
        st, indeg = s["st"], s["indeg"]
        best, best_cnt = -1, 1 << 30
        for v in range(self.n):
            if not self.active[v] or indeg[v] >= 2:
                continue
            cnt = 0
            first = -1
            for e in self.inc[v]:
                if st[e] == UNDEC:
                    cnt += 1
                    if first == -1 or e < first:
                        first = e
            if 0 < cnt < best_cnt:
                best, best_cnt = first, cnt
        return best

    def _run(self):
        if self.nact < 3:
            return
        s = self._initial()
        if s is None:
            return
        queue = list(v for v in range(self.n) if self.active[v])
        for e in self.required:
            if not self._set(s, e, IN, queue):
                return
        # each frame: (state, edge, next value to try)
        stack = [(s, queue)]
        while stack:
            s, queue = stack.pop()
            self.nodes += 1
            if not self._propagate(s, queue):
                continue
            if self.hamiltonian and not self._connected(s):
                continue
            e = self._branch_edge(s)
            if e == -1:
                if s["nin"] == self.nact and s["closed"] == self.nact:
                    yield tuple(i for i, x in enumerate(s["st"]) if x == IN)
                continue
            # push OUT first so IN is explored first
            s_out = self._copy(s)
            q_out: list[int] = []
            ok_out = self._set(s_out, e, OUT, q_out)
            s_in = s
            q_in: list[int] = []
            ok_in = self._set(s_in, e, IN, q_in)
            if ok_out:
                stack.append((s_out, q_out))
            if ok_in:
                stack.append((s_in, q_in))
