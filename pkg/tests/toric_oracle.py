"""Independent oracle for kernels of monomial maps x_i -> s^a_i t^b_i.

The degree-m piece of S/P has dimension equal to the number of distinct image
monomials of degree-m monomials; binomials between monomials with equal images
span P in each degree.
"""

from itertools import combinations_with_replacement


def degree_monomials(n, m):
    for combo in combinations_with_replacement(range(n), m):
        e = [0] * n
        for i in combo:
            e[i] += 1
        yield tuple(e)


def image(e, weights):
    return tuple(sum(x * w[k] for x, w in zip(e, weights)) for k in range(len(weights[0])))


def hilbert_function(weights, m):
    n = len(weights)
    return len({image(e, weights) for e in degree_monomials(n, m)})


def binomials(weights, max_degree):
    """Pairs (a, b) of monomials with equal images, one chain per fibre."""
    n = len(weights)
    out = []
    for m in range(2, max_degree + 1):
        fibres = {}
        for e in degree_monomials(n, m):
            fibres.setdefault(image(e, weights), []).append(e)
        for fibre in fibres.values():
            out.extend(zip(fibre, fibre[1:]))
    return out
