"""Shared strategies and helpers for the test suite."""

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from recseq import QQ, ZZ, LinRec, Poly, RingElem, RingSpec, Zmod

RINGS = [ZZ, QQ, Zmod(10007), Zmod(12)]
RING_IDS = [str(r) for r in RINGS]


def element_strategy(ring: RingSpec):
    if ring.kind == RingSpec.INTEGERS:
        return st.integers(-30, 30).map(ring.from_int)
    if ring.kind == RingSpec.RATIONALS:
        return st.tuples(st.integers(-12, 12), st.integers(1, 12)).map(
            lambda nd: RingElem(ring, Fraction(nd[0], nd[1]))
        )
    return st.integers(0, ring.modulus - 1).map(ring.from_int)


rings = st.sampled_from(RINGS)


@st.composite
def ring_with_elements(draw, count: int):
    ring = draw(rings)
    elems = [draw(element_strategy(ring)) for _ in range(count)]
    return ring, elems


@st.composite
def monic_polys(draw, ring=None, min_degree=1, max_degree=4):
    if ring is None:
        ring = draw(rings)
    degree = draw(st.integers(min_degree, max_degree))
    coeffs = [draw(element_strategy(ring)) for _ in range(degree)]
    coeffs.append(ring.one)
    return Poly(ring, coeffs)


@st.composite
def linrecs(draw, ring=None, max_degree=3):
    p = draw(monic_polys(ring=ring, max_degree=max_degree))
    init = [draw(element_strategy(p.ring)) for _ in range(len(p.coeffs) - 1)]
    return LinRec(p, init)


def fib(ring: RingSpec) -> LinRec:
    return LinRec(Poly.from_ints(ring, [-1, -1, 1]), [ring.zero, ring.one])


def geometric(ring: RingSpec, base: int) -> LinRec:
    return LinRec(Poly.from_ints(ring, [-base, 1]), [ring.one])


def int_values(terms) -> list[int]:
    return [t.value for t in terms]


@pytest.fixture
def fib_z():
    return fib(ZZ)
