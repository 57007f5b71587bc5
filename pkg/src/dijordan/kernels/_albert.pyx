# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Albert kernel; same layout and contract as ``_pyalbert``."""

from libc.stdint cimport int64_t

cdef int _K[8][8]
cdef int _S[8][8]
cdef bint _ready = False


def set_table(table):
    global _ready
    cdef int i, j
    for i in range(8):
        for j in range(8):
            s, k = table[i][j]
            _S[i][j] = s
            _K[i][j] = k
    _ready = True


cdef inline void _omul_add(const int64_t* a, const int64_t* b, int64_t* out) noexcept nogil:
    cdef int i, j
    cdef int64_t ai
    for i in range(8):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(8):
            if b[j] != 0:
                out[_K[i][j]] += _S[i][j] * ai * b[j]


cdef void _fill(object v, int64_t m[3][3][8]):
    cdef int i, j, k
    for i in range(3):
        for j in range(3):
            for k in range(8):
                m[i][j][k] = 0
    m[0][0][0] = v[0]
    m[1][1][0] = v[1]
    m[2][2][0] = v[2]
    for k in range(8):
        m[0][1][k] = v[3 + k]
        m[0][2][k] = v[11 + k]
        m[1][2][k] = v[19 + k]
    for k in range(8):
        m[1][0][k] = m[0][1][k] if k == 0 else -m[0][1][k]
        m[2][0][k] = m[0][2][k] if k == 0 else -m[0][2][k]
        m[2][1][k] = m[1][2][k] if k == 0 else -m[1][2][k]


def jordan2(a, b):
    """Coordinates of ``AB + BA``; caller guarantees no int64 overflow."""
    if not _ready:
        raise RuntimeError("octonion table not installed")
    cdef int64_t A[3][3][8]
    cdef int64_t B[3][3][8]
    cdef int64_t P[3][3][8]
    cdef int i, j, l, k
    _fill(a, A)
    _fill(b, B)
    for i in range(3):
        for j in range(i, 3):
            for k in range(8):
                P[i][j][k] = 0
            for l in range(3):
                _omul_add(&A[i][l][0], &B[l][j][0], &P[i][j][0])
                _omul_add(&B[i][l][0], &A[l][j][0], &P[i][j][0])
    out = [P[0][0][0], P[1][1][0], P[2][2][0]]
    out.extend([P[0][1][k] for k in range(8)])
    out.extend([P[0][2][k] for k in range(8)])
    out.extend([P[1][2][k] for k in range(8)])
    return tuple(out)
