"""Discrete polymatroids and saturated Newton polytopes.

The support of the multidegree of a prime is expected to be the base set
of a discrete polymatroid; exchange_check tests the M-convex exchange
axiom directly and returns a witness on failure.  snp_check compares the
support of a polynomial with the lattice points of its Newton polytope,
using an exact rational feasibility LP for hull membership.
"""

from fractions import Fraction
from itertools import product


def support_points(poly):
    """Support of an IntegerPolynomial as a set of lattice points."""
    return set(poly.terms)


def exchange_check(points):
    """M-convex exchange axiom on a finite set of lattice points.

    All points must share their total degree (a base set).  For every u, v
    and every i with u_i > v_i there must be j with u_j < v_j such that
    u - e_i + e_j stays in the set.  Returns (True, None) or
    (False, (u, v, i)) with a failing triple.
    """
    pts = {tuple(q) for q in points}
    if not pts:
        return True, None
    degs = {sum(q) for q in pts}
    if len(degs) > 1:
        a = next(iter(pts))
        b = next(q for q in pts if sum(q) != sum(a))
        return False, (a, b, -1)
    for u in pts:
        for v in pts:
            for i in range(len(u)):
                if u[i] <= v[i]:
                    continue
                ok = False
                for j in range(len(u)):
                    if u[j] < v[j]:
                        w = list(u)
                        w[i] -= 1
                        w[j] += 1
                        if tuple(w) in pts:
                            ok = True
                            break
                if not ok:
                    return False, (u, v, i)
    return True, None


def rank_from_points(points):
    """Rank function of a polymatroid base set: r(J) = max over the base
    of the coordinate sum on J."""
    pts = [tuple(q) for q in points]
    p = len(pts[0])

    def r(J):
        return max(sum(q[j] for j in J) for q in pts)

    return r, p


def dual_rank(r, multiplicities, p):
    """s(J) = sum_{j in J} m_j + r([p] \\ J) - r([p])."""
    full = list(range(p))

    def s(J):
        J = set(J)
        comp = [j for j in full if j not in J]
        return sum(multiplicities[j] for j in J) + r(comp) - r(full)

    return s


def _simplex_feasible(A, b):
    """Is {x >= 0 : A x = b} nonempty?  Exact phase-1 simplex, Bland's rule.

    A: list of rows (lists of Fractions), b: list of Fractions.
    """
    m = len(A)
    if m == 0:
        return True
    n = len(A[0])
    A = [[Fraction(v) for v in row] for row in A]
    b = [Fraction(v) for v in b]
    for i in range(m):
        if b[i] < 0:
            A[i] = [-v for v in A[i]]
            b[i] = -b[i]
    # tableau with artificial basis; columns 0..n-1 real, n..n+m-1 artificial
    T = [A[i] + [Fraction(int(k == i)) for k in range(m)] + [b[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    # objective: minimize sum of artificials; cost row in terms of nonbasic
    cost = [Fraction(0)] * (n + m + 1)
    for i in range(m):
        for k in range(n + m + 1):
            cost[k] += T[i][k]
    total = n + m
    while True:
        enter = -1
        for k in range(total):
            if k not in basis and cost[k] > 0:
                enter = k
                break
        if enter < 0:
            break
        leave, best = -1, None
        for i in range(m):
            if T[i][enter] > 0:
                ratio = T[i][total] / T[i][enter]
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best, leave = ratio, i
        if leave < 0:
            break  # unbounded cannot happen for phase 1; safety
        piv = T[leave][enter]
        T[leave] = [v / piv for v in T[leave]]
        for i in range(m):
            if i != leave and T[i][enter]:
                c = T[i][enter]
                T[i] = [v - c * w for v, w in zip(T[i], T[leave])]
        c = cost[enter]
        cost = [v - c * w for v, w in zip(cost, T[leave])]
        basis[leave] = enter
    return cost[total] == 0


def in_convex_hull(q, points):
    """Exact test: is q a convex combination of the given lattice points?"""
    pts = [tuple(v) for v in points]
    if not pts:
        return False
    p = len(q)
    A = [[Fraction(v[k]) for v in pts] for k in range(p)]
    A.append([Fraction(1)] * len(pts))
    b = [Fraction(x) for x in q] + [Fraction(1)]
    return _simplex_feasible(A, b)


def newton_polytope_points(support):
    """All lattice points of the convex hull of the support."""
    pts = [tuple(q) for q in support]
    p = len(pts[0])
    lo = [min(q[k] for q in pts) for k in range(p)]
    hi = [max(q[k] for q in pts) for k in range(p)]
    dlo = min(sum(q) for q in pts)
    dhi = max(sum(q) for q in pts)
    out = set()
    for cand in product(*(range(lo[k], hi[k] + 1) for k in range(p))):
        if not dlo <= sum(cand) <= dhi:
            continue
        if in_convex_hull(cand, pts):
            out.add(cand)
    return out


def snp_check(poly_or_support):
    """Saturated Newton polytope: support = lattice points of its hull.

    Accepts an IntegerPolynomial or a plain set of exponent tuples.
    Returns (True, None) or (False, witness) with a missing lattice point.
    """
    if hasattr(poly_or_support, "terms"):
        supp = set(poly_or_support.terms)
    else:
        supp = {tuple(q) for q in poly_or_support}
    if not supp:
        return True, None
    for q in newton_polytope_points(supp):
        if q not in supp:
            return False, q
    return True, None


def polymatroid_from_rank(r, p, total=None):
    """Base set of the polymatroid of a submodular rank function.

    Enumerates the lattice points q >= 0 with sum_J q_j <= r(J) for every
    J and |q| = r([p]).  Intended for small p (test fixtures).
    """
    full = list(range(p))
    rtot = r(full) if total is None else total
    subsets = []
    for mask in range(1, 1 << p):
        J = [k for k in range(p) if mask >> k & 1]
        subsets.append((J, r(J)))
    out = set()

    def rec(k, cur, left):
        if k == p:
            if left == 0:
                q = tuple(cur)
                if all(sum(q[j] for j in J) <= rj for J, rj in subsets):
                    out.add(q)
            return
        cap = min(left, r([k]))
        for e in range(cap + 1):
            cur.append(e)
            rec(k + 1, cur, left - e)
            cur.pop()

    rec(0, [], rtot)
    return out


def minkowski_sum(A, B):
    return {tuple(a + b for a, b in zip(u, v)) for u in A for v in B}
