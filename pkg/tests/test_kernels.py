"""Backend equivalence: compiled kernels vs pure Python vs the generic path."""

import random

import pytest

from recseq import LinRec, Poly, Zmod, charpoly, kernels
from recseq.polymat import Matrix, _charpoly_generic
from recseq import _kernels_py

try:
    from recseq import _kernels_cy
except ImportError:
    _kernels_cy = None

needs_compiled = pytest.mark.skipif(_kernels_cy is None, reason="compiled kernels not built")

MOD = 10007
RING = Zmod(MOD)


def random_case(rng, order=4, count=60):
    hs = [rng.randrange(MOD) for _ in range(order)]
    init = [rng.randrange(MOD) for _ in range(order)]
    xs = [rng.randrange(MOD) for _ in range(count)]
    ys = [rng.randrange(MOD) for _ in range(count)]
    return hs, init, xs, ys


def test_backend_is_reported():
    assert kernels.BACKEND in ("python", "compiled")


@needs_compiled
def test_compiled_matches_python_kernels():
    rng = random.Random(61)
    for _ in range(10):
        hs, init, xs, ys = random_case(rng)
        assert _kernels_cy.lin_terms_mod(hs, init, 200, MOD) == _kernels_py.lin_terms_mod(hs, init, 200, MOD)
        for name in ("conv_sum_mod", "conv_hadamard_mod", "conv_cauchy_mod", "conv_hurwitz_mod", "conv_newton_mod"):
            assert getattr(_kernels_cy, name)(xs, ys, MOD) == getattr(_kernels_py, name)(xs, ys, MOD)
    for n in (1, 2, 5, 9):
        entries = [rng.randrange(MOD) for _ in range(n * n)]
        assert _kernels_cy.berkowitz_mod(entries, n, MOD) == _kernels_py.berkowitz_mod(entries, n, MOD)


@needs_compiled
def test_compiled_handles_composite_and_small_moduli():
    rng = random.Random(67)
    for m in (2, 4, 12, 2 ** 31 - 1):
        xs = [rng.randrange(m) for _ in range(30)]
        ys = [rng.randrange(m) for _ in range(30)]
        assert _kernels_cy.conv_newton_mod(xs, ys, m) == _kernels_py.conv_newton_mod(xs, ys, m)
        entries = [rng.randrange(m) for _ in range(16)]
        assert _kernels_cy.berkowitz_mod(entries, 4, m) == _kernels_py.berkowitz_mod(entries, 4, m)


def test_kernel_berkowitz_matches_generic_charpoly():
    rng = random.Random(71)
    for n in (1, 3, 6):
        entries = [[RING.from_int(rng.randrange(MOD)) for _ in range(n)] for _ in range(n)]
        m = Matrix(RING, entries)
        assert charpoly(m) == _charpoly_generic(m)


def test_kernel_terms_match_generic_terms():
    rng = random.Random(73)
    p = Poly(RING, [RING.from_int(rng.randrange(MOD)) for _ in range(4)] + [RING.one])
    a = LinRec(p, [RING.from_int(rng.randrange(MOD)) for _ in range(4)])
    fast = a.terms(100)
    # the generic path works on any ring; a modulus past the compiled limit
    # exercises it for the same data
    big = Zmod(MOD * (2 ** 40))
    b = LinRec(
        Poly(big, [big.from_int(c.value) for c in p.coeffs]),
        [big.from_int(t.value) for t in a.initial],
    )
    assert [t.value % MOD for t in b.terms(100)] == [t.value for t in fast]


def test_large_modulus_falls_back_to_objects():
    big = Zmod(2 ** 80)
    p = Poly(big, [big.from_int(-1), big.from_int(-1), big.one])
    a = LinRec(p, [big.zero, big.one])
    assert [t.value for t in a.terms(10)] == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34]


def test_python_kernels_accept_any_modulus():
    m = 2 ** 90 + 1
    xs = list(range(10))
    assert _kernels_py.conv_cauchy_mod(xs, xs, m)[3] == 0 * 3 + 1 * 2 + 2 * 1 + 3 * 0
