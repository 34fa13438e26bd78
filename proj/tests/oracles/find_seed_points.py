"""Bounded search for one rational point of the cyclic-vector variety Y.

Y lives in M' x Hom(M', M) with M of dim 2n (symplectic) and M' of dim 2n+1
(symmetric). A point (v, A) needs v cyclic for C = A^t A, (v, C^k v) = 0 for
k < 2n and (v, C^{2n} v) = 1. The search fixes v = e_0 (isotropic for the
antidiagonal form), draws small integer A and rescales v by 1/sqrt when the
normalization value is a rational square. The results are frozen into
src/kostant/seed_points.cpp.
"""
import itertools
import math
import random
import sys
from fractions import Fraction


def symplectic_form(n):
    d = 2 * n
    J = [[0] * d for _ in range(d)]
    for i in range(n):
        sign = (-1) ** (n - 1) if i == n - 1 else 1
        J[i][d - 1 - i] = sign
        J[d - 1 - i][i] = -sign
    return J


def symmetric_form(n):
    # Antidiagonal, with the middle entry (-1)^n: the sign for which the
    # normalization (v, C^{2n} v) = 1 has rational solutions.
    d = 2 * n + 1
    S = [[1 if i + j == d - 1 else 0 for j in range(d)] for i in range(d)]
    S[n][n] = (-1) ** n
    return S


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def transpose(a):
    return [list(r) for r in zip(*a)]


def matvec(a, v):
    return [sum(a[i][k] * v[k] for k in range(len(v))) for i in range(len(a))]


def rank(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    rk = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((r for r in range(rk, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        for r in range(len(m)):
            if r != rk and m[r][c] != 0:
                f = m[r][c] / m[rk][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[rk])]
        rk += 1
    return rk


def rational_sqrt(q):
    if q <= 0:
        return None
    p, r = q.numerator, q.denominator
    sp, sr = math.isqrt(p), math.isqrt(r)
    if sp * sp == p and sr * sr == r:
        return Fraction(sp, sr)
    return None


def search(n, seed, tries=200000):
    rng = random.Random(seed)
    J, S = symplectic_form(n), symmetric_form(n)
    d, dp = 2 * n, 2 * n + 1
    # S is its own inverse.
    for _ in range(tries):
        A = [[rng.choice((-1, 0, 0, 1)) for _ in range(dp)] for _ in range(d)]
        At = matmul(matmul(S, transpose(A)), J)
        C = matmul(At, A)
        v = [1] + [0] * (dp - 1)
        krylov = [v]
        for _ in range(2 * n):
            krylov.append(matvec(C, krylov[-1]))
        if rank(krylov[:dp]) < dp:
            continue
        pair = lambda a, b: sum(a[i] * S[i][j] * b[j] for i in range(dp) for j in range(dp))
        if any(pair(v, krylov[k]) != 0 for k in range(2 * n)):
            continue
        root = rational_sqrt(Fraction(pair(v, krylov[2 * n])))
        if root is None:
            continue
        return [Fraction(1) / root] + [Fraction(0)] * (dp - 1), A
    raise RuntimeError("no point found")


if __name__ == "__main__":
    for n in (1, 2):
        v, A = search(n, seed=20240 + n)
        print(f"n={n}")
        print("  v =", [str(x) for x in v])
        print("  A =", A)
