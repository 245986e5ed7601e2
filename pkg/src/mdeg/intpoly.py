"""Integer polynomials in Z[t_1..t_p]: K-polynomials and multidegrees."""


class IntegerPolynomial:
    """Sparse polynomial with integer coefficients over p grading variables."""

    __slots__ = ("p", "terms")

    def __init__(self, p, terms=None):
        self.p = p
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if c:
                    self.terms[tuple(e)] = self.terms.get(tuple(e), 0) + c
            self.terms = {e: c for e, c in self.terms.items() if c}

    @classmethod
    def zero(cls, p):
        return cls(p)

    @classmethod
    def one(cls, p):
        return cls(p, {(0,) * p: 1})

    @classmethod
    def monomial(cls, e, c=1):
        return cls(len(e), {tuple(e): c})

    @classmethod
    def variable(cls, p, i):
        e = [0] * p
        e[i] = 1
        return cls(p, {tuple(e): 1})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return IntegerPolynomial(self.p, out)

    def __neg__(self):
        return IntegerPolynomial(self.p, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntegerPolynomial(self.p, {e: c * other for e, c in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return IntegerPolynomial(self.p, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = IntegerPolynomial.one(self.p)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        return isinstance(other, IntegerPolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coefficient(self, e):
        return self.terms.get(tuple(e), 0)

    def total_degree_part(self, d):
        """Sum of the terms of total degree exactly d."""
        return IntegerPolynomial(self.p, {e: c for e, c in self.terms.items() if sum(e) == d})

    def min_total_degree(self):
        if not self.terms:
            return None
        return min(sum(e) for e in self.terms)

    def max_total_degree(self):
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def support(self):
        return set(self.terms)

    def substitute_one_minus_t(self):
        """Exact substitution t_i -> 1 - t_i, expanded by binomials."""
        # cache (1-t_i)^k powers as they recur across terms
        powers = [{} for _ in range(self.p)]

        def pw(i, k):
            cache = powers[i]
            if k not in cache:
                if k == 0:
                    cache[k] = IntegerPolynomial.one(self.p)
                else:
                    lin = IntegerPolynomial.one(self.p) - IntegerPolynomial.variable(self.p, i)
                    cache[k] = pw(i, k - 1) * lin
            return cache[k]

        out = IntegerPolynomial.zero(self.p)
        for e, c in self.terms.items():
            term = IntegerPolynomial(self.p, {(0,) * self.p: c})
            for i, k in enumerate(e):
                if k:
                    term = term * pw(i, k)
            out = out + term
        return out

    def evaluate(self, values):
        """Evaluate at integer (or Fraction) arguments."""
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(values, e):
                v *= x**k
            total += v
        return total

    def ge_coefficientwise(self, other):
        """self >=_c other: every coefficient dominates."""
        keys = set(self.terms) | set(other.terms)
        return all(self.terms.get(e, 0) >= other.terms.get(e, 0) for e in keys)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: t[0])

    def to_json_obj(self):
        """Canonical JSON form: exponent-sorted list with string coefficients."""
        return [{"exp": list(e), "coeff": str(c)} for e, c in self.sorted_terms()]

    def __str__(self, names=None):
        if not self.terms:
            return "0"
        if names is None:
            names = [f"t{i + 1}" for i in range(self.p)]
        parts = []
        for e, c in sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0])):
            mono = "*".join(
                nm if k == 1 else f"{nm}^{k}" for nm, k in zip(names, e) if k
            )
            ac = abs(c)
            if not mono:
                body = str(ac)
            elif ac == 1:
                body = mono
            else:
                body = f"{ac}*{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"IntPoly({self})"


def linear_form(degree_vector):
    """<d, t> = d_1 t_1 + ... + d_p t_p for a degree vector d."""
    p = len(degree_vector)
    return IntegerPolynomial(p, {tuple(int(i == k) for i in range(p)): degree_vector[k] for k in range(p) if degree_vector[k]})


def series_expansion(numerator, denominators, bound):
    """Expand numerator / prod(1 - t^d) as a table up to a componentwise bound.

    `denominators` is a list of degree vectors d (one per ring variable);
    returns a dict mapping exponent tuples nu <= bound to integers.
    """
    p = numerator.p
    bound = tuple(bound)

    def within(e):
        return all(a <= b for a, b in zip(e, bound))

    table = {e: c for e, c in numerator.terms.items() if within(e) and all(a >= 0 for a in e)}
    for d in denominators:
        # multiply the truncated series by 1/(1 - t^d) = sum_k t^{kd}
        out = dict(table)
        frontier = table
        while frontier:
            nxt = {}
            for e, c in frontier.items():
                e2 = tuple(a + b for a, b in zip(e, d))
                if within(e2):
                    nxt[e2] = nxt.get(e2, 0) + c
            for e, c in nxt.items():
                out[e] = out.get(e, 0) + c
            frontier = nxt
        table = out
    return {e: c for e, c in table.items() if c}
