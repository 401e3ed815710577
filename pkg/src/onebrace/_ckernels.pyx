# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled table kernels; same contracts as ``_pykernels``.

Tables are C-contiguous int64 arrays of indices in ``[0, n)``.
"""

ctypedef long long idx_t


def assoc(const idx_t[:, ::1] T):
    cdef Py_ssize_t n = T.shape[0], a, b, c
    cdef idx_t ab
    for a in range(n):
        for b in range(n):
            ab = T[a, b]
            for c in range(n):
                if T[ab, c] != T[a, T[b, c]]:
                    return (a, b, c)
    return None


def comm(const idx_t[:, ::1] T):
    cdef Py_ssize_t n = T.shape[0], a, b
    for a in range(n):
        for b in range(n):
            if T[a, b] != T[b, a]:
                return (a, b)
    return None


def brace_law(const idx_t[:, ::1] A, const idx_t[:, ::1] M, const idx_t[::1] N):
    cdef Py_ssize_t n = A.shape[0], a, b, c
    cdef idx_t mab, na
    for a in range(n):
        na = N[a]
        for b in range(n):
            mab = M[a, b]
            for c in range(n):
                if M[a, A[b, c]] != A[A[mab, M[a, c]], na]:
                    return (a, b, c)
    return None


def star_left_distrib(const idx_t[:, ::1] S, const idx_t[:, ::1] A):
    cdef Py_ssize_t n = S.shape[0], x, y, z
    cdef idx_t sxy
    for x in range(n):
        for y in range(n):
            sxy = S[x, y]
            for z in range(n):
                if S[x, A[y, z]] != A[sxy, S[x, z]]:
                    return (x, y, z)
    return None


def star_of_product(const idx_t[:, ::1] S, const idx_t[:, ::1] M, const idx_t[:, ::1] A):
    cdef Py_ssize_t n = S.shape[0], a, b, c
    cdef idx_t ab, bc
    for a in range(n):
        for b in range(n):
            ab = M[a, b]
            for c in range(n):
                bc = S[b, c]
                if S[ab, c] != A[A[S[a, bc], bc], S[a, c]]:
                    return (a, b, c)
    return None


def star_right_mul(const idx_t[:, ::1] S, const idx_t[:, ::1] M, const idx_t[:, ::1] A):
    cdef Py_ssize_t n = S.shape[0], x, y, z
    cdef idx_t xz
    for x in range(n):
        for z in range(n):
            xz = M[x, z]
            for y in range(n):
                if S[xz, y] != A[S[x, y], S[z, y]]:
                    return (x, z, y)
    return None


def braid(const idx_t[:, ::1] U, const idx_t[:, ::1] V):
    cdef Py_ssize_t n = U.shape[0], x, y, z
    cdef idx_t u1, v1, u2, v2, p, q, s, t
    for x in range(n):
        for y in range(n):
            u1 = U[x, y]
            v1 = V[x, y]
            for z in range(n):
                u2 = U[v1, z]
                v2 = V[v1, z]
                p = U[y, z]
                q = V[y, z]
                s = U[x, p]
                t = V[x, p]
                if (U[u1, u2] != s or V[u1, u2] != U[t, q] or v2 != V[t, q]):
                    return (x, y, z)
    return None


def star_of_sum(const idx_t[:, ::1] S, const idx_t[:, ::1] A, const idx_t[:, ::1] L,
                const idx_t[::1] I):
    cdef Py_ssize_t n = S.shape[0], a, b, c
    cdef idx_t ab, bp, bpc
    for a in range(n):
        for b in range(n):
            ab = A[a, b]
            bp = L[I[a], b]
            for c in range(n):
                bpc = S[bp, c]
                if S[ab, c] != A[A[S[a, bpc], bpc], S[a, c]]:
                    return (a, b, c)
    return None


def lambda_conjugation(const idx_t[:, ::1] S, const idx_t[:, ::1] M, const idx_t[:, ::1] L,
                       const idx_t[::1] I):
    cdef Py_ssize_t n = S.shape[0], y, b, a
    cdef idx_t conj
    for y in range(n):
        for b in range(n):
            conj = M[M[y, b], I[y]]
            for a in range(n):
                if L[y, S[b, a]] != S[conj, L[y, a]]:
                    return (y, b, a)
    return None
