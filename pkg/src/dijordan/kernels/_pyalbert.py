"""Pure-Python Albert kernel: ``A B + B A`` on integer coordinates.

Coordinates: ``[d1, d2, d3, a12 (8), a13 (8), a23 (8)]`` for the Hermitian
matrix with diagonal ``d`` and upper entries ``a12, a13, a23``.
"""

_TABLE = None  # _TABLE[i][j] = (sign, k): e_i e_j = sign * e_k


def set_table(table) -> None:
    global _TABLE
    _TABLE = [list(row) for row in table]


def _omul(a, b):
    out = [0] * 8
    t = _TABLE
    for i in range(8):
        ai = a[i]
        if not ai:
            continue
        row = t[i]
        for j in range(8):
            bj = b[j]
            if bj:
                s, k = row[j]
                out[k] += s * ai * bj
    return out


def _conj(a):
    return [a[0]] + [-c for c in a[1:]]


def _matrix(v):
    zero = [0] * 8

    def real(c):
        r = list(zero)
        r[0] = c
        return r

    a12, a13, a23 = list(v[3:11]), list(v[11:19]), list(v[19:27])
    return [
        [real(v[0]), a12, a13],
        [_conj(a12), real(v[1]), a23],
        [_conj(a13), _conj(a23), real(v[2])],
    ]


def jordan2(a, b):
    """Coordinates of ``AB + BA`` (twice the Jordan product)."""
    A, B = _matrix(a), _matrix(b)

    def entry(i, j):
        acc = [0] * 8
        for l in range(3):
            for p in (_omul(A[i][l], B[l][j]), _omul(B[i][l], A[l][j])):
                for k in range(8):
                    acc[k] += p[k]
        return acc

    return tuple([entry(0, 0)[0], entry(1, 1)[0], entry(2, 2)[0]]
                 + entry(0, 1) + entry(0, 2) + entry(1, 2))
