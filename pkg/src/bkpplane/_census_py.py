"""Pure-Python plane-partition scan; mirrors ``_census.pyx`` line for line.

``scan`` walks every plane partition of volume <= ``max_volume`` (only the
diagonally strict ones when ``strict_only``) and returns

* ``paths[v][p]``: number of diagonally strict partitions of volume ``v``
  with ``p`` h-paths;
* ``cats[v][2*strict + wide]``: counts split by the two predicates.
"""

MAX_VOLUME = 60


def _record(h, rowlen, rows, vol, paths, cats):
    strict = 1
    for i in range(1, rows):
        hi, hp = h[i], h[i - 1]
        for j in range(1, rowlen[i]):
            if hi[j] == hp[j - 1]:
                strict = 0
                break
        if not strict:
            break

    wide = 0
    for i in range(rows - 1):
        hi, hn = h[i], h[i + 1]
        for j in range(rowlen[i + 1] - 1):
            v = hi[j]
            if v == hi[j + 1] and v == hn[j] and v == hn[j + 1]:
                wide = 1
                break
        if wide:
            break

    if strict:
        # union-find over cells, row-major ids
        offset = [0] * (rows + 1)
        for i in range(rows):
            offset[i + 1] = offset[i] + rowlen[i]
        parent = list(range(offset[rows]))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        comps = offset[rows]
        for i in range(rows):
            hi = h[i]
            for j in range(rowlen[i]):
                a = offset[i] + j
                if j + 1 < rowlen[i] and hi[j + 1] == hi[j]:
                    ra, rb = find(a), find(a + 1)
                    if ra != rb:
                        parent[ra] = rb
                        comps -= 1
                if i + 1 < rows and j < rowlen[i + 1] and h[i + 1][j] == hi[j]:
                    ra, rb = find(a), find(offset[i + 1] + j)
                    if ra != rb:
                        parent[ra] = rb
                        comps -= 1
        paths[vol][comps] += 1
    cats[vol][2 * strict + wide] += 1


def _place(st, i, j, remaining, vol):
    h, rowlen, strict_only = st["h"], st["rowlen"], st["strict_only"]
    ub = remaining
    if i > 0:
        if j >= rowlen[i - 1]:
            ub = 0
        elif h[i - 1][j] < ub:
            ub = h[i - 1][j]
    if j > 0 and h[i][j - 1] < ub:
        ub = h[i][j - 1]
    row = h[i]
    for hgt in range(ub, 0, -1):
        if strict_only and i > 0 and j > 0 and h[i - 1][j - 1] == hgt:
            continue
        row[j] = hgt
        _place(st, i, j + 1, remaining - hgt, vol + hgt)
    if j == 0:
        _record(h, rowlen, i, vol, st["paths"], st["cats"])
    else:
        rowlen[i] = j
        _place(st, i + 1, 0, remaining, vol)


def scan(max_volume, strict_only=True, first_row=None):
    if not 0 <= max_volume <= MAX_VOLUME:
        raise ValueError(f"max_volume must be in [0, {MAX_VOLUME}]")
    n = max_volume
    st = {
        "h": [[0] * (n + 2) for _ in range(n + 2)],
        "rowlen": [0] * (n + 2),
        "strict_only": bool(strict_only),
        "paths": [[0] * (n + 1) for _ in range(n + 1)],
        "cats": [[0] * 4 for _ in range(n + 1)],
    }
    if first_row is None:
        _place(st, 0, 0, n, 0)
    else:
        first_row = [int(x) for x in first_row]
        total = sum(first_row)
        if total > n or any(a < b for a, b in zip(first_row, first_row[1:])):
            raise ValueError(f"bad first row {first_row}")
        if not first_row:
            _record(st["h"], st["rowlen"], 0, 0, st["paths"], st["cats"])
        else:
            st["h"][0][: len(first_row)] = first_row
            st["rowlen"][0] = len(first_row)
            _place(st, 1, 0, n - total, total)
    return st["paths"], st["cats"]
