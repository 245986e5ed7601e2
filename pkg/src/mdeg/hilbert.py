"""K-polynomials, multidegrees and the multiplicity table.

The K-polynomial of S/I is the numerator of the multigraded Hilbert series
over prod(1 - t^deg(x)).  For monomial ideals it is computed by the
variable-splitting recursion; general homogeneous ideals go through their
initial ideal, which has the same Hilbert function.
"""

from .errors import (
    BoundTooLarge,
    EmptyScheme,
    LowerDegreeTermsPresent,
    NotStandardGraded,
)
from .groebner import Ideal, saturate_irrelevant
from .intpoly import IntegerPolynomial, series_expansion
from .monomial import (
    MonomialIdeal,
    codim_of,
    localize_at,
    minimal_primes,
    primary_decomposition,
)


def _pick_pivot(I):
    """Most frequent variable among the non-coprime minimal generators."""
    counts = [0] * I.ring.n
    for g in I.gens:
        for i, e in enumerate(g):
            if e:
                counts[i] += 1
    best = max(range(I.ring.n), key=lambda i: (counts[i], -i))
    return best


def _supports_pairwise_coprime(gens):
    seen = set()
    for g in gens:
        s = {i for i, e in enumerate(g) if e}
        if s & seen:
            return False
        seen |= s
    return True


def k_polynomial_monomial(I, _memo=None):
    """K(S/I; t) for a monomial ideal, by the colon/sum recursion.

    Splits off one variable of a generator: with x the pivot variable,
    K(S/I) = K(S/(I + (x))) + t^deg(x) * K(S/(I : x)).  Generators with
    pairwise disjoint supports form a regular sequence, giving the base
    case prod(1 - t^deg(g)).
    """
    if _memo is None:
        _memo = {}
    ring = I.ring
    p = ring.p
    cached = _memo.get(I.gens)
    if cached is not None:
        return cached
    if I.is_unit():
        out = IntegerPolynomial.zero(p)
    elif _supports_pairwise_coprime(I.gens):
        out = IntegerPolynomial.one(p)
        for g in I.gens:
            out = out * (
                IntegerPolynomial.one(p)
                - IntegerPolynomial.monomial(ring.monomial_degree(g))
            )
    else:
        i = _pick_pivot(I)
        x = tuple(int(j == i) for j in range(ring.n))
        plus = I.add_monomial(x)
        quot = I.colon_monomial(x)
        tdeg = IntegerPolynomial.monomial(ring.degrees[i])
        out = k_polynomial_monomial(plus, _memo) + tdeg * k_polynomial_monomial(
            quot, _memo
        )
    _memo[I.gens] = out
    return out


def k_polynomial(I, order=None):
    """K(S/I; t) for a homogeneous ideal or a MonomialIdeal."""
    if isinstance(I, MonomialIdeal):
        return k_polynomial_monomial(I)
    return k_polynomial_monomial(I.initial_ideal(order))


def codimension(I, order=None):
    if isinstance(I, MonomialIdeal):
        return codim_of(I)
    return codim_of(I.initial_ideal(order))


def multidegree_C(I, order=None):
    """The multidegree: codimension part of K(S/I; 1 - t).

    K(1-t) has no terms below the codimension; if the input data violates
    that (it cannot for a true K-polynomial) LowerDegreeTermsPresent is
    raised rather than silently truncating.
    """
    k = k_polynomial(I, order)
    c = codimension(I, order)
    sub = k.substitute_one_minus_t()
    mind = sub.min_total_degree()
    if mind is not None and mind < c:
        raise LowerDegreeTermsPresent(
            f"terms of total degree {mind} below the codimension {c}"
        )
    return sub.total_degree_part(c)


def multidegree_G(I, order=None):
    """G-multidegree: terms of K(1-t) minimal in the divisibility order."""
    sub = k_polynomial(I, order).substitute_one_minus_t()
    out = {}
    for e, c in sub.terms.items():
        if not any(
            o != e and all(a <= b for a, b in zip(o, e)) for o in sub.terms
        ):
            out[e] = c
    return IntegerPolynomial(sub.p, out)


def cee_of_quotient_prime(ring, prime):
    """C(S/P) for a monomial prime given as a variable index set."""
    J = MonomialIdeal(
        ring,
        [tuple(int(j == i) for j in range(ring.n)) for i in prime],
    )
    return multidegree_C(J)


def arithmetic_multidegree(I):
    """A(S/I) = sum over associated primes of the local H^0 length times
    the multidegree of S/P.  Monomial ideals only; the local length at an
    embedded prime counts the standard monomials of I : m^infinity that are
    missing from I, inside the localized subring.
    """
    if not isinstance(I, MonomialIdeal):
        raise TypeError("arithmetic multidegree requires a monomial ideal")
    ring = I.ring
    p = ring.p
    out = IntegerPolynomial.zero(p)
    for comp in primary_decomposition(I):
        prime = comp.prime
        loc = localize_at(I, prime)
        sat = loc.saturate_max_ideal()
        # H^0 at the prime: monomials of sat not in loc, finitely many
        # since sat/loc is annihilated by a power of every variable
        length = _colength_between(loc, sat)
        if length:
            out = out + length * cee_of_quotient_prime(ring, prime)
    return out


def _colength_between(inner, outer):
    """Number of monomials in outer but not inner (finite by saturation)."""
    n = inner.ring.n
    bounds = [1] * n
    for g in inner.gens:
        for i, e in enumerate(g):
            bounds[i] = max(bounds[i], e)
    count = 0

    def rec(i, cur):
        nonlocal count
        if i == n:
            m = tuple(cur)
            if outer.contains(m) and not inner.contains(m):
                count += 1
            return
        for e in range(bounds[i]):
            cur.append(e)
            rec(i + 1, cur)
            cur.pop()

    rec(0, [])
    return count


def truncation_multidegree(I, i):
    """[C(R^i)]_i where R^i = Q_i/I is the dimension filtration quotient."""
    from .monomial import dimension_filtration

    Qi = dimension_filtration(I, i)
    diff = k_polynomial_monomial(I) - k_polynomial_monomial(Qi)
    return diff.substitute_one_minus_t().total_degree_part(i)


class MultiplicityTable:
    """Mixed multiplicities e(n) of a saturated standard multigraded ideal."""

    def __init__(self, ring, dim, entries, msupp, cee):
        self.ring = ring
        self.dim = dim  # multiprojective dimension
        self.entries = entries  # dict n -> positive int
        self.msupp = msupp  # list of maximal support profiles
        self.cee = cee

    def __repr__(self):
        rows = ", ".join(f"e({n})={v}" for n, v in sorted(self.entries.items()))
        return f"MultiplicityTable(dim={self.dim}, {rows})"


def geometric_multidegrees(I, order=None):
    """Multiplicity table of the scheme cut out by I (always saturates).

    Requires a standard N^p-graded ring.  e(n) is the coefficient of
    t^(m - n) in C of the saturation, m the block dimension vector; the
    support MSupp collects the n with e(n) != 0.
    """
    ring = I.ring
    if not ring.is_standard:
        raise NotStandardGraded("multiplicity table needs a standard grading")
    if isinstance(I, MonomialIdeal):
        sat = I
        for k in range(ring.p):
            blockvars = ring.block_variables(k)
            parts = [sat.saturate_variable(i) for i in blockvars]
            cur = parts[0]
            for s in parts[1:]:
                cur = cur.intersect(s)
            sat = cur
        sat_ideal = sat
        unit = sat.is_unit()
    else:
        sat_ideal = saturate_irrelevant(I)
        unit = sat_ideal.is_unit()
    if unit:
        raise EmptyScheme("the ideal cuts out the empty scheme")
    cee = multidegree_C(sat_ideal, order)
    m = [len(ring.block_variables(k)) - 1 for k in range(ring.p)]
    total_m = sum(m)
    dim = total_m - codimension(sat_ideal, order)
    entries = {}
    for e, c in cee.terms.items():
        n = tuple(mk - ek for mk, ek in zip(m, e))
        if any(v < 0 for v in n):
            continue
        entries[n] = c
    msupp = sorted(n for n in entries if entries[n])
    return MultiplicityTable(ring, dim, entries, msupp, cee)


def hilbert_function_oracle(I, bound, order=None, limit=8):
    """Exact Hilbert function values for all multidegrees <= bound.

    Counts standard monomials of the initial ideal degree by degree; the
    componentwise bound is capped (default 8) because the enumeration is
    exponential in it.  Returns a dict nu -> dim_k (S/I)_nu.
    """
    ring = I.ring
    bound = tuple(bound)
    if len(bound) != ring.p:
        raise ValueError("bound length must equal the number of blocks")
    if any(b < 0 for b in bound):
        raise ValueError("bound must be componentwise non-negative")
    if any(b > limit for b in bound):
        raise BoundTooLarge(f"componentwise bound above {limit}")
    mono = I if isinstance(I, MonomialIdeal) else I.initial_ideal(order)
    counts = {}

    def within(d):
        return all(a <= b for a, b in zip(d, bound))

    def rec(i, exps, deg):
        if i == ring.n:
            counts[deg] = counts.get(deg, 0) + 1
            return
        e = 0
        while True:
            d = tuple(
                a + e * b for a, b in zip(deg, ring.degrees[i])
            ) if e else deg
            if not within(d):
                break
            exps.append(e)
            if not mono.contains(tuple(exps) + (0,) * (ring.n - i - 1)):
                rec(i + 1, exps, d)
            exps.pop()
            e += 1
        return

    rec(0, [], (0,) * ring.p)
    return counts


def hilbert_series_table(I, bound, order=None):
    """Series expansion of K / prod(1 - t^deg x), for cross-checking."""
    k = k_polynomial(I, order)
    return series_expansion(k, list(I.ring.degrees), bound)
