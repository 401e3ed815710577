"""Pure-Python table kernels.

Each kernel scans index tuples in lexicographic order and returns the first
violating tuple, or None.  Tables arrive as nested lists.
"""


def assoc(T):
    n = len(T)
    for a in range(n):
        Ta = T[a]
        for b in range(n):
            ab = Ta[b]
            Tab = T[ab]
            Tb = T[b]
            for c in range(n):
                if Tab[c] != Ta[Tb[c]]:
                    return (a, b, c)
    return None


def comm(T):
    n = len(T)
    for a in range(n):
        for b in range(n):
            if T[a][b] != T[b][a]:
                return (a, b)
    return None


def brace_law(A, M, N):
    n = len(A)
    for a in range(n):
        Ma = M[a]
        na = N[a]
        for b in range(n):
            Ab = A[b]
            Amab = A[Ma[b]]
            for c in range(n):
                if Ma[Ab[c]] != A[Amab[Ma[c]]][na]:
                    return (a, b, c)
    return None


def star_left_distrib(S, A):
    n = len(S)
    for x in range(n):
        Sx = S[x]
        for y in range(n):
            Ay = A[y]
            ASxy = A[Sx[y]]
            for z in range(n):
                if Sx[Ay[z]] != ASxy[Sx[z]]:
                    return (x, y, z)
    return None


def star_of_product(S, M, A):
    n = len(S)
    for a in range(n):
        Sa = S[a]
        Ma = M[a]
        for b in range(n):
            Sab = S[Ma[b]]
            Sb = S[b]
            for c in range(n):
                bc = Sb[c]
                if Sab[c] != A[A[Sa[bc]][bc]][Sa[c]]:
                    return (a, b, c)
    return None


def star_right_mul(S, M, A):
    n = len(S)
    for x in range(n):
        Mx = M[x]
        Sx = S[x]
        for z in range(n):
            Sxz = S[Mx[z]]
            Sz = S[z]
            for y in range(n):
                if Sxz[y] != A[Sx[y]][Sz[y]]:
                    return (x, z, y)
    return None


def braid(U, V):
    """First (x, y, z) where r12 r23 r12 != r23 r12 r23 for r(x, y) = (U[x][y], V[x][y])."""
    n = len(U)
    for x in range(n):
        Ux = U[x]
        Vx = V[x]
        for y in range(n):
            # r12: (x, y, z) -> (u1, v1, z)
            u1 = Ux[y]
            v1 = Vx[y]
            Uv1 = U[v1]
            Vv1 = V[v1]
            Uy = U[y]
            Vy = V[y]
            for z in range(n):
                # left: r12 r23 r12
                u2 = Uv1[z]
                v2 = Vv1[z]
                l1 = U[u1][u2]
                l2 = V[u1][u2]
                l3 = v2
                # right: r23 r12 r23
                p = Uy[z]
                q = Vy[z]
                s = Ux[p]
                t = Vx[p]
                r2 = U[t][q]
                r3 = V[t][q]
                if l1 != s or l2 != r2 or l3 != r3:
                    return (x, y, z)
    return None


def star_of_sum(S, A, L, I):
    """(a + b) * c against a * (b' * c) + b' * c + a * c, b' = L[I[a]][b]."""
    n = len(S)
    for a in range(n):
        Sa = S[a]
        Aa = A[a]
        La_inv = L[I[a]]
        for b in range(n):
            Sab = S[Aa[b]]
            Sbp = S[La_inv[b]]
            for c in range(n):
                bpc = Sbp[c]
                if Sab[c] != A[A[Sa[bpc]][bpc]][Sa[c]]:
                    return (a, b, c)
    return None


def lambda_conjugation(S, M, L, I):
    """L[y][b * a] against (y b y^-1) * L[y][a]."""
    n = len(S)
    for y in range(n):
        Ly = L[y]
        My = M[y]
        yi = I[y]
        for b in range(n):
            Sconj = S[M[My[b]][yi]]
            Sb = S[b]
            for a in range(n):
                if Ly[Sb[a]] != Sconj[Ly[a]]:
                    return (y, b, a)
    return None
