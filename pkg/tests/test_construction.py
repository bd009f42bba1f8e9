import itertools
import random
from collections import Counter

import pytest

from cccodes.composition import Composition, multinomial
from cccodes.construction import (
    ConstructionParams, InvalidLength, InvalidParams, _Kernel, build_code,
    fiber_counts, guaranteed_distance, mu, pi_image,
)
from cccodes.field import field_new
from cccodes.residue_ring import ResiduePoly, canonical_rep, ring_mul, ring_pow
from cccodes.verify import exact_min_distance

# (p, k, q, d0, composition, largest fiber, winning coset labels)
# fiber sizes frozen from a one-pass bucket count over itertools permutations
CASES = [
    (3, 2, 3, 3, (3, 3, 3), 36, (1, 0, 1)),
    (2, 3, 3, 2, (3, 3, 2), 70, (1, 0)),
    (7, 1, 3, 2, (3, 2, 2), 30, (1, 0)),
    (7, 1, 3, 3, (3, 2, 2), 6, (1, 0, 0)),
]


def params(p, k, q, d0, w):
    return ConstructionParams(field_new(p, k), q, d0, Composition(w))


def bucket_oracle(P):
    base = [s for s, c in enumerate(P.comp.weights) for _ in range(c)]
    return Counter(pi_image(w, P).key for w in set(itertools.permutations(base)))


def test_mu():
    assert mu(3, 3) == 3
    assert mu(3, 2) == 1
    assert mu(5, 4) == 3
    assert mu(2, 4) == 4


def test_pi_image_examples():
    P = params(3, 1, 2, 2, (1, 2))
    assert pi_image((0, 0, 1), P).key == (1, 0)
    assert pi_image((1, 1, 0), P).key == (1, 0)
    assert pi_image((2, 0, 1), P).key == (1, 1)
    with pytest.raises(InvalidLength):
        pi_image((1, 1), P)


def test_guaranteed_distance():
    assert guaranteed_distance(params(3, 2, 3, 3, (3, 3, 3))) == 5
    assert guaranteed_distance(params(2, 3, 3, 2, (4, 4, 0))) == 3
    assert guaranteed_distance(params(2, 3, 3, 2, (3, 3, 2))) is None
    assert guaranteed_distance(params(5, 1, 5, 5, (1, 1, 1, 1, 1))) == 7
    assert guaranteed_distance(params(7, 1, 3, 3, (3, 2, 2))) == 4
    assert guaranteed_distance(params(2, 3, 3, 3, (3, 3, 2))) is None
    assert guaranteed_distance(params(2, 3, 4, 2, (2, 2, 2, 2))) is None


@pytest.mark.parametrize("p,k,q,d0,w", [(3, 2, 3, 3, (3, 3, 3)), (2, 3, 3, 2, (3, 3, 2)), (5, 1, 3, 3, (2, 2, 1))])
def test_kernel_matches_object_path(p, k, q, d0, w):
    P = params(p, k, q, d0, w)
    kernel = _Kernel(P)
    for word, key in kernel.images(P.comp):
        assert key == pi_image(word, P).key
        assert key == kernel.image(word)


@pytest.mark.parametrize("p,k,q,d0,w,size,coset", CASES)
def test_build_code_against_bucket_oracle(p, k, q, d0, w, size, coset):
    P = params(p, k, q, d0, w)
    code = build_code(P)
    oracle = bucket_oracle(P)
    assert fiber_counts(P) == oracle
    assert sum(oracle.values()) == multinomial(P.comp)
    top = max(oracle.values())
    assert code.size == top == size
    assert code.coset.key == coset == min(c for c in oracle if oracle[c] == top)
    assert code.size * P.r ** (d0 - 1) >= multinomial(P.comp)
    assert code.size >= code.pigeonhole_bound
    assert all(pi_image(w_, P) == code.coset for w_ in code.words)
    assert all(P.comp.matches(w_) for w_ in code.words)
    assert list(code.words) == sorted(code.words)
    if code.guaranteed_d is not None:
        assert exact_min_distance(code.words) >= code.guaranteed_d


def test_invalid_params():
    with pytest.raises(InvalidParams, match="d0"):
        build_code(params(3, 1, 3, 2, (1, 1, 1)))
    with pytest.raises(InvalidParams, match="sum"):
        build_code(params(5, 1, 3, 2, (1, 1, 1)))
    with pytest.raises(InvalidParams, match="q <= r"):
        build_code(params(3, 1, 5, 1, (1, 1, 1, 0, 0)))


def test_parallel_counts_equal_serial():
    P = params(3, 2, 3, 3, (3, 3, 3))
    assert fiber_counts(P, workers=3) == fiber_counts(P, workers=1)
    assert build_code(P, workers=3) == build_code(P)


def test_scalar_invariance_of_intermediate_products():
    P = params(3, 2, 3, 3, (3, 3, 3))
    F = P.field
    alphas = F.elements()
    rng = random.Random(7)
    code = build_code(P)
    for word in code.words[:10]:
        prod = ResiduePoly.one(F, 3)
        for i in range(1, P.r):
            prod = ring_mul(prod, ring_pow(ResiduePoly.linear(alphas[i], 3), word[i - 1]))
            prod = prod.scale(F.element(rng.randrange(1, P.r)))
        assert canonical_rep(prod) == code.coset


# every field up to 9 elements, every d0 in range, q = 3 balanced-ish compositions
SWEEP = [
    (p, k, d0, w)
    for p, k in [(5, 1), (7, 1), (2, 3), (3, 2)]
    for d0 in range(1, p ** k - 1)
    for w in [(p ** k - 2 * (p ** k // 3), p ** k // 3, p ** k // 3)]
]


@pytest.mark.parametrize("p,k,d0,w", SWEEP)
def test_distance_guarantee_holds(p, k, d0, w):
    P = params(p, k, 3, d0, w)
    code = build_code(P)
    g = guaranteed_distance(P)
    assert code.size >= code.pigeonhole_bound
    if g is not None and code.size >= 2:
        assert exact_min_distance(code.words) >= g


def test_char2_squares_collapse_mod_x2():
    # (x - a)^2 = x^2 + a^2 in characteristic 2, a scalar modulo x^2
    F = field_new(2, 3)
    for a in F.elements()[1:]:
        sq = ring_pow(ResiduePoly.linear(a, 2), 2)
        assert sq.key == ((a * a).index, 0)


def test_char2_q3_fibers_contain_distance_two_pairs():
    P = params(2, 3, 3, 2, (3, 3, 2))
    u, v = (0, 0, 0, 1, 2, 1, 1, 2), (0, 0, 2, 1, 0, 1, 1, 2)
    assert pi_image(u, P) == pi_image(v, P)
    code = build_code(P)
    assert exact_min_distance(code.words) == 2
    assert guaranteed_distance(P) is None


@pytest.mark.parametrize("k,d0", [(2, 2), (3, 2), (3, 3), (3, 4), (4, 2)])
def test_char2_without_symbol_two(k, d0):
    r = 2 ** k
    P = params(2, k, 3, d0, (r // 2, r - r // 2, 0))
    g = guaranteed_distance(P)
    code = build_code(P)
    if g is not None and code.size >= 2:
        assert exact_min_distance(code.words) >= g
