"""Shared test utilities: random generators and independent oracles."""

import itertools

from nvalue.polyring import Polynomial

XYZ = ("x", "y", "z")


def random_poly(rng, vars=XYZ, max_terms=8, max_exp=6, max_coeff=10 ** 6):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        e = tuple(rng.randint(0, max_exp) for _ in vars)
        c = rng.randint(-max_coeff, max_coeff)
        terms[e] = terms.get(e, 0) + c
    return Polynomial(vars, terms)


def random_symmetric_homogeneous(rng, max_degree=8):
    """Sum of symmetrized random monomials, all of one random degree."""
    d = rng.randint(1, max_degree)
    terms = {}
    for _ in range(rng.randint(1, 4)):
        a = rng.randint(0, d)
        b = rng.randint(0, d - a)
        parts = (a, b, d - a - b)
        c = rng.randint(-50, 50)
        if c == 0:
            c = 1
        for perm in set(itertools.permutations(parts)):
            terms[perm] = terms.get(perm, 0) + c
    return Polynomial(XYZ, terms)


def naive_convolution(a, b):
    """Independent product oracle: plain nested-loop term convolution."""
    out = {}
    for ea, ca in a.sorted_terms():
        for eb, cb in b.sorted_terms():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def terms_dict(p):
    return dict(p.sorted_terms())


# -- exact 2-D hull oracle ------------------------------------------------------

def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _on_segment(p, a, b):
    if _cross(a, b, p) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def _in_triangle(p, a, b, c):
    if _cross(a, b, c) == 0:
        return _on_segment(p, a, b) or _on_segment(p, b, c) or _on_segment(p, a, c)
    d1, d2, d3 = _cross(a, b, p), _cross(b, c, p), _cross(c, a, p)
    has_neg = d1 < 0 or d2 < 0 or d3 < 0
    has_pos = d1 > 0 or d2 > 0 or d3 > 0
    return not (has_neg and has_pos)


def oracle_hull_vertices(points):
    """Extreme points by exhaustion: p is extreme iff not in conv(rest)."""
    pts = sorted(set(tuple(p) for p in points))
    out = set()
    for p in pts:
        others = [q for q in pts if q != p]
        covered = any(_on_segment(p, a, b)
                      for a, b in itertools.combinations(others, 2))
        if not covered:
            covered = any(_in_triangle(p, a, b, c)
                          for a, b, c in itertools.combinations(others, 3))
        if not covered:
            out.add(p)
    return out
