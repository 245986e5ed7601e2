import random

import pytest

from mdeg.fields import GF32003, QQ
from mdeg.groebner import Ideal, buchberger
from mdeg.monomial import MonomialIdeal
from mdeg.orders import MonomialOrder
from mdeg.ring import GradedRing, Polynomial, make_ring


def three_block_ring(field=QQ):
    """k[x0..x3][y0..y3][z0..z3] with the standard N^3 grading."""
    names = [f"x{i}" for i in range(4)] + [f"y{i}" for i in range(4)] + [
        f"z{i}" for i in range(4)
    ]
    degs = [(1, 0, 0)] * 4 + [(0, 1, 0)] * 4 + [(0, 0, 1)] * 4
    return make_ring(names, degs, field)


def surface_prime(ring):
    """The 14-generator prime ideal of the P^3 x P^3 x P^3 threefold fixture."""
    v = {nm: ring.variable(nm) for nm in ring.names}
    x0, x1, x2, x3 = (v[f"x{i}"] for i in range(4))
    y0, y1, y2, y3 = (v[f"y{i}"] for i in range(4))
    z0, z1, z2, z3 = (v[f"z{i}"] for i in range(4))
    return Ideal(
        ring,
        [
            x1 - x2,
            y3 * z0 - y0 * z1 - y2 * z2,
            y2 * z0 - y0 * z2,
            x2 * z0 - x0 * z1,
            y1 * y1 + y2 * y2 - y0 * y3,
            x3 * y0 - x0 * y1,
            x2 * y0 - x3 * y1,
            x0 * x2 - x3 * x3,
            y0 * y2 * z1 + y2 * y2 * z2 - y0 * y3 * z2,
            x3 * y2 * z1 - x2 * y1 * z2,
            x0 * y2 * z1 - x3 * y1 * z2,
            x3 * y1 * z1 - x0 * y3 * z1 + x2 * y2 * z2,
            x3 * y1 * z0 - x0 * y0 * z1,
            x3 * x3 * z0 - x0 * x0 * z1,
        ],
    )


SURFACE_CEE_TERMS = {
    (3, 3, 0): 2,
    (3, 2, 1): 4,
    (3, 1, 2): 2,
    (2, 3, 1): 2,
    (2, 2, 2): 4,
}


def toric_kernel(target_ring, param_names, images):
    """Kernel of the monomial map x_i -> images[i], certified prime.

    images are exponent dicts over the parameter variables; the kernel of
    a monomial map into a domain is prime by construction.  Computed by
    eliminating the parameters from (x_i - image_i).
    """
    n_par = len(param_names)
    n = target_ring.n
    total = n_par + n
    F = target_ring.field
    raw = []
    for i, img in enumerate(images):
        d = {}
        e = [0] * total
        e[n_par + i] = 1
        d[tuple(e)] = F.one
        pe = [0] * total
        for pname, k in img.items():
            pe[param_names.index(pname)] = k
        d[tuple(pe)] = F.neg(F.one)
        raw.append(d)

    class _Shim:
        pass

    shim = _Shim()
    shim.n = total
    from mdeg.orders import elimination_order

    order = elimination_order(shim, range(n_par))
    gb = buchberger(raw, order, F)
    gens = []
    for d in gb:
        if all(all(e[k] == 0 for k in range(n_par)) for e in d):
            gens.append(Polynomial(target_ring, {e[n_par:]: c for e, c in d.items()}))
    return Ideal(target_ring, gens)


def random_monomial_ideal(rng, ring, max_gens=5, max_exp=3):
    gens = []
    for _ in range(rng.randrange(1, max_gens + 1)):
        e = tuple(rng.randrange(0, max_exp + 1) for _ in range(ring.n))
        if any(e):
            gens.append(e)
    if not gens:
        gens = [tuple(1 if i == 0 else 0 for i in range(ring.n))]
    return MonomialIdeal(ring, gens)


def random_standard_ring(rng, max_vars=8, max_blocks=3):
    p = rng.randrange(1, max_blocks + 1)
    sizes = [rng.randrange(1, 4) for _ in range(p)]
    while sum(sizes) > max_vars:
        sizes[sizes.index(max(sizes))] -= 1
    names, degs = [], []
    for k, s in enumerate(sizes):
        for i in range(s):
            names.append(f"v{k}_{i}")
            degs.append(tuple(int(j == k) for j in range(p)))
    return make_ring(names, degs)
