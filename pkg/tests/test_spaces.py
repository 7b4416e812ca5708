"""Vector arithmetic, enumeration order, and scalar orbits."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from addhom.errors import (
    DimensionMismatch,
    FieldMismatch,
    InfiniteFieldError,
    SpecFormatError,
    ZeroVector,
)
from addhom.fields import ExtensionField, PrimeField, Rationals, gf
from addhom.spaces import VectorSpace

Q = Rationals()
Z2 = PrimeField(2)
Z3 = PrimeField(3)
Z5 = PrimeField(5)
GF4 = gf(2, 2)


def frac(n, d=1):
    return Fraction(n, d)


# arithmetic -----------------------------------------------------------------

def test_vector_addition_over_q():
    space = VectorSpace(Q, 2)
    assert space.add((frac(1), frac(0)), (frac(0), frac(1))) == (frac(1), frac(1))


def test_scalar_mul_over_z5():
    space = VectorSpace(Z5, 2)
    assert space.scalar_mul(2, (1, 2)) == (2, 4)


def test_dimension_mismatch():
    space = VectorSpace(Q, 2)
    with pytest.raises(DimensionMismatch):
        space.add((frac(1), frac(0)), (frac(0), frac(1), frac(0)))


def test_field_mismatch():
    space = VectorSpace(Z5, 2)
    with pytest.raises(FieldMismatch):
        space.add((1, 2), (frac(1), frac(2)))
    with pytest.raises(FieldMismatch):
        space.scalar_mul(frac(2), (1, 2))


# enumeration ----------------------------------------------------------------

def test_enumerate_z2_dim2_order():
    space = VectorSpace(Z2, 2)
    assert list(space.vectors()) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_enumerate_z3_dim1():
    assert len(list(VectorSpace(Z3, 1).vectors())) == 3


def test_enumerate_gf4_dim2():
    vecs = list(VectorSpace(GF4, 2).vectors())
    assert len(vecs) == 16
    assert len(set(vecs)) == 16


def test_enumerate_infinite_rejected():
    with pytest.raises(InfiniteFieldError):
        list(VectorSpace(Q, 1).vectors())


def test_rank_roundtrip():
    space = VectorSpace(Z3, 2)
    for r, v in enumerate(space.vectors()):
        assert space.rank(v) == r
        assert space.vector_from_rank(r) == v


# canonical representatives ---------------------------------------------------

def test_canonical_rep_z5():
    space = VectorSpace(Z5, 2)
    # inv(2) = 3 in Z_5: 3*(2,4) = (6,12) = (1,2)
    assert space.canonical_rep((2, 4)) == ((1, 2), 2)
    assert space.canonical_rep((0, 3)) == ((0, 1), 3)
    assert space.canonical_rep((1, 1)) == ((1, 1), 1)


def test_canonical_rep_zero_rejected():
    with pytest.raises(ZeroVector):
        VectorSpace(Z5, 2).canonical_rep((0, 0))


def test_canonical_rep_over_q():
    space = VectorSpace(Q, 2)
    rep, scale = space.canonical_rep((frac(0), frac(3, 2)))
    assert rep == (frac(0), frac(1))
    assert scale == frac(3, 2)


# orbits -----------------------------------------------------------------------

def test_orbits_z2_dim2():
    orbits = VectorSpace(Z2, 2).orbits()
    assert [o.representative for o in orbits] == [(0, 1), (1, 0), (1, 1)]
    assert all(o.size == 1 for o in orbits)


def test_orbits_gf4_dim2_count():
    assert len(VectorSpace(GF4, 2).orbits()) == 5


@pytest.mark.parametrize("field", [Z2, Z3, Z5, GF4], ids=lambda f: f.descriptor())
def test_dim1_single_orbit(field):
    orbits = VectorSpace(field, 1).orbits()
    assert len(orbits) == 1
    assert orbits[0].representative == (field.one,)


ORBIT_SPACES = [
    (Z2, 2), (Z2, 3), (Z2, 4), (Z3, 2), (Z3, 3), (Z5, 2), (GF4, 2), (gf(3, 2), 2),
]


@pytest.mark.parametrize(
    "field,dim", ORBIT_SPACES, ids=lambda a: getattr(a, "descriptor", lambda: a)()
)
def test_orbit_partition_invariants(field, dim):
    space = VectorSpace(field, dim)
    q = field.order
    orbits = space.orbits()
    assert len(orbits) == (q**dim - 1) // (q - 1)
    nonzero_scalars = [s for s in field.elements() if s != field.zero]
    seen = set()
    total = 0
    for orbit in orbits:
        members = {space.scalar_mul(s, orbit.representative) for s in nonzero_scalars}
        assert len(members) == orbit.size == q - 1
        assert not members & seen, "orbits must be pairwise disjoint"
        seen |= members
        total += orbit.size
    assert total == q**dim - 1
    assert seen | {space.zero} == set(space.vectors())


@pytest.mark.parametrize("field,dim", [(Z5, 2), (GF4, 2)],
                         ids=["Fp:5^2", "Fq4^2"])
def test_canonical_rep_constant_on_orbits_exhaustive(field, dim):
    space = VectorSpace(field, dim)
    for v in space.vectors():
        if v == space.zero:
            continue
        rep, scale = space.canonical_rep(v)
        assert space.scalar_mul(scale, rep) == v
        for lam in field.elements():
            if lam == field.zero:
                continue
            rep2, _ = space.canonical_rep(space.scalar_mul(lam, v))
            assert rep2 == rep


@given(
    st.tuples(st.fractions(), st.fractions(), st.fractions()).filter(
        lambda v: any(c != 0 for c in v)
    ),
    st.fractions().filter(lambda lam: lam != 0),
)
def test_canonical_rep_scalar_invariance_over_q(coords, lam):
    space = VectorSpace(Q, 3)
    rep, scale = space.canonical_rep(coords)
    rep2, _ = space.canonical_rep(space.scalar_mul(lam, coords))
    assert rep2 == rep
    assert space.scalar_mul(scale, rep) == coords


# text encoding -----------------------------------------------------------------

def test_vector_encoding_roundtrip_prime():
    space = VectorSpace(Z5, 3)
    v = (1, 0, 4)
    assert space.decode(space.encode(v)) == v


def test_vector_encoding_roundtrip_extension():
    space = VectorSpace(GF4, 2)
    for v in space.vectors():
        text = space.encode(v)
        assert space.decode(text) == v


def test_vector_encoding_roundtrip_q():
    space = VectorSpace(Q, 2)
    v = (frac(-3, 7), frac(5))
    assert space.decode("(-3/7,5)") == v
    assert space.decode(space.encode(v)) == v


def test_vector_decode_errors():
    space = VectorSpace(Z2, 2)
    with pytest.raises(SpecFormatError):
        space.decode("1,0")
    with pytest.raises(SpecFormatError):
        space.decode("(1,0,1)")
