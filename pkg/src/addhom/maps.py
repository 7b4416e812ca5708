"""Maps between vector spaces and the additivity/homogeneity checkers.

Five map representations cover everything we need:

  * TableMap             -- explicit value for every domain vector
  * OrbitTableMap        -- one value per scalar orbit; homogeneous by
                            construction, with phi(0) = 0 forced
  * KLinearExtensionMap  -- the prime-subfield-linear map on an extension
                            field F determined by images of the power basis
                            {1, a, ..., a^(deg-1)}; additive by construction
  * RatioMap             -- (x, y) -> xy/(x+y), 0 on the x+y = 0 branch
                            (characteristic != 2 only)
  * IndicatorMap         -- over Z_2^2: 0 at the origin, 1 elsewhere

Checkers scan ordered pairs in canonical enumeration order and report the
first violation as a witness, so identical inputs always produce identical
reports.  The sampled strategy checks a fixed list of corner pairs first
(origin, standard basis pairs, sign flips, coordinate-sum-zero probes) and
only then the pseudo-random draws; corners are what pin the published
witnesses on infinite fields.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    CharacteristicMismatch,
    CharacteristicTwo,
    DomainMismatch,
    InfiniteDomainExhaustive,
    NotAnExtension,
    SpecFormatError,
    ZeroDenominator,
)
from .fields import ExtensionField, Field, PrimeField, Rationals, parse_field
from .spaces import VectorSpace


@dataclass(frozen=True)
class Witness:
    """A concrete violation: kind is "additivity" (inputs u1, u2) or
    "homogeneity" (inputs lam, u); lhs != rhs by construction."""

    kind: str
    inputs: tuple
    lhs: tuple
    rhs: tuple


@dataclass(frozen=True)
class Sampled:
    """Deterministic sampled checking strategy."""

    seed: int = 24001
    samples: int = 200


EXHAUSTIVE = "exhaustive"


@dataclass
class CheckReport:
    property: str  # additive | homogeneous | linear
    verdict: str  # holds_exhaustive | holds_on_samples | violated
    witness: Witness | None
    pairs_checked: int

    @property
    def holds(self) -> bool:
        return self.witness is None


class VectorMap:
    """Base class: a map from domain to codomain, both spaces over one field."""

    domain: VectorSpace
    codomain: VectorSpace

    def evaluate(self, v):
        raise NotImplementedError

    def _check_domain(self, v):
        if not self.domain.contains(v):
            raise DomainMismatch(f"{v!r} not in {self.domain}")


class TableMap(VectorMap):
    """Explicit lookup table; the domain must be finite and fully covered."""

    def __init__(self, domain: VectorSpace, codomain: VectorSpace, entries: dict):
        if domain.field != codomain.field:
            raise DomainMismatch("domain and codomain must share one field")
        self.domain = domain
        self.codomain = codomain
        self.entries = dict(entries)
        for v in domain.vectors():
            if v not in self.entries:
                raise SpecFormatError(f"table misses domain vector {domain.encode(v)}")
            if not codomain.contains(self.entries[v]):
                raise SpecFormatError(f"table value at {domain.encode(v)} off-space")

    def evaluate(self, v):
        self._check_domain(v)
        return self.entries[v]


class OrbitTableMap(VectorMap):
    """One codomain value per domain orbit; phi(scale*rep) = scale*value."""

    def __init__(self, domain: VectorSpace, codomain: VectorSpace, values):
        if domain.field != codomain.field:
            raise DomainMismatch("domain and codomain must share one field")
        self.domain = domain
        self.codomain = codomain
        self.orbits = domain.orbits()
        values = tuple(values)
        if len(values) != len(self.orbits):
            raise SpecFormatError(
                f"expected {len(self.orbits)} orbit values, got {len(values)}"
            )
        for val in values:
            if not codomain.contains(val):
                raise SpecFormatError(f"orbit value {val!r} off-space")
        self.values = values
        self._index = {o.representative: o.index for o in self.orbits}

    def evaluate(self, v):
        self._check_domain(v)
        if v == self.domain.zero:
            return self.codomain.zero
        rep, scale = self.domain.canonical_rep(v)
        return self.codomain.scalar_mul(scale, self.values[self._index[rep]])


class KLinearExtensionMap(VectorMap):
    """F -> F map, linear over the prime subfield k, fixed by images of the
    power basis of F as a k-space.  Domain and codomain are 1-dimensional."""

    def __init__(self, field: ExtensionField, basis_images):
        if not isinstance(field, ExtensionField):
            raise NotAnExtension("k-linear extension needs F != k")
        basis_images = tuple(basis_images)
        if len(basis_images) != field.degree:
            raise SpecFormatError(
                f"expected {field.degree} basis images, got {len(basis_images)}"
            )
        for img in basis_images:
            if not field.contains(img):
                raise SpecFormatError(f"basis image {img!r} not in {field}")
        self.field = field
        self.domain = VectorSpace(field, 1)
        self.codomain = VectorSpace(field, 1)
        self.basis_images = basis_images

    def evaluate(self, v):
        self._check_domain(v)
        # the k-coordinates of v's single element are its modulus coefficients
        coeffs = v[0]
        base = self.field.base
        acc = self.field.zero
        for c, img in zip(coeffs, self.basis_images):
            scalar = self.field.embed(c, base.characteristic)
            acc = self.field.add(acc, self.field.mul(scalar, img))
        return (acc,)


class RatioMap(VectorMap):
    """(x, y) -> xy/(x+y) with the x+y = 0 branch sent to 0; F^2 -> F."""

    def __init__(self, field: Field):
        if field.characteristic == 2:
            raise CharacteristicTwo(
                "the ratio map's witness collapses in characteristic 2"
            )
        self.field = field
        self.domain = VectorSpace(field, 2)
        self.codomain = VectorSpace(field, 1)

    def evaluate(self, v):
        self._check_domain(v)
        x, y = v
        s = self.field.add(x, y)
        if s == self.field.zero:
            return (self.field.zero,)
        return (self.field.div(self.field.mul(x, y), s),)


class IndicatorMap(VectorMap):
    """Z_2^2 -> Z_2: 0 at the origin, 1 everywhere else."""

    def __init__(self):
        field = PrimeField(2)
        self.field = field
        self.domain = VectorSpace(field, 2)
        self.codomain = VectorSpace(field, 1)

    def evaluate(self, v):
        self._check_domain(v)
        return (0,) if v == self.domain.zero else (1,)


# ---------------------------------------------------------------------------
# builders for the three counterexample constructions
# ---------------------------------------------------------------------------

def build_theorem1_counterexample(field: Field) -> KLinearExtensionMap:
    """Additive-but-not-homogeneous map on F, for F a proper extension of its
    prime subfield: every power-basis vector is sent to the generator."""
    if not isinstance(field, ExtensionField):
        raise NotAnExtension(
            "no additive non-homogeneous map exists over a prime field"
        )
    return KLinearExtensionMap(field, (field.generator,) * field.degree)


def build_ratio_map(field: Field) -> RatioMap:
    return RatioMap(field)


def build_char2_indicator() -> IndicatorMap:
    return IndicatorMap()


# ---------------------------------------------------------------------------
# checkers
# ---------------------------------------------------------------------------

def _resolve_strategy(m: VectorMap, strategy):
    if strategy is None:
        return EXHAUSTIVE if m.domain.is_finite else Sampled()
    if strategy == EXHAUSTIVE and not m.domain.is_finite:
        raise InfiniteDomainExhaustive(
            f"cannot exhaust {m.domain}; use the sampled strategy"
        )
    return strategy


def _basis_vectors(space: VectorSpace):
    f = space.field
    return [
        tuple(f.one if j == i else f.zero for j in range(space.dim))
        for i in range(space.dim)
    ]


def _corner_vectors(space: VectorSpace):
    f = space.field
    out = [space.zero]
    basis = _basis_vectors(space)
    out.extend(basis)
    if space.dim >= 2:
        # probes the coordinate-sum-zero branch of closed-form maps
        g = (f.one, f.neg(f.one)) + (f.zero,) * (space.dim - 2)
        out.append(g)
    return out


def _additivity_corner_pairs(space: VectorSpace):
    z = space.zero
    basis = _basis_vectors(space)
    pairs = [(z, z)]
    pairs += [(z, e) for e in basis]
    pairs += [(e, z) for e in basis]
    pairs += [(e, f) for e in basis for f in basis]
    pairs += [(e, space.neg(e)) for e in basis]
    if space.dim >= 2:
        f = space.field
        g = (f.one, f.neg(f.one)) + (f.zero,) * (space.dim - 2)
        pairs += [(g, g), (g, z), (z, g), (g, space.neg(g))]
        pairs += [(g, e) for e in basis]
    return pairs


def _homogeneity_corner_pairs(m: VectorMap):
    f = m.domain.field
    lams = [f.zero, f.one, f.neg(f.one)]
    if isinstance(f, ExtensionField):
        lams.append(f.generator)
    us = _corner_vectors(m.domain)
    return [(lam, u) for lam in lams for u in us]


def _additivity_pairs(m: VectorMap, strategy):
    if strategy == EXHAUSTIVE:
        vecs = list(m.domain.vectors())
        for u1 in vecs:
            for u2 in vecs:
                yield u1, u2
        return
    yield from _additivity_corner_pairs(m.domain)
    rng = random.Random(strategy.seed)
    for _ in range(strategy.samples):
        yield m.domain.random_vector(rng), m.domain.random_vector(rng)


def _homogeneity_pairs(m: VectorMap, strategy):
    if strategy == EXHAUSTIVE:
        vecs = list(m.domain.vectors())
        for lam in m.domain.field.elements():
            for u in vecs:
                yield lam, u
        return
    yield from _homogeneity_corner_pairs(m)
    rng = random.Random(strategy.seed)
    for _ in range(strategy.samples):
        yield m.domain.field.random_element(rng), m.domain.random_vector(rng)


def check_additive(m: VectorMap, strategy=None) -> CheckReport:
    """Scan pairs (u1, u2) for phi(u1+u2) != phi(u1)+phi(u2)."""
    strategy = _resolve_strategy(m, strategy)
    checked = 0
    for u1, u2 in _additivity_pairs(m, strategy):
        checked += 1
        lhs = m.evaluate(m.domain.add(u1, u2))
        rhs = m.codomain.add(m.evaluate(u1), m.evaluate(u2))
        if lhs != rhs:
            w = Witness("additivity", (u1, u2), lhs, rhs)
            return CheckReport("additive", "violated", w, checked)
    verdict = "holds_exhaustive" if strategy == EXHAUSTIVE else "holds_on_samples"
    return CheckReport("additive", verdict, None, checked)


def check_homogeneous(m: VectorMap, strategy=None) -> CheckReport:
    """Scan pairs (lam, u) for phi(lam*u) != lam*phi(u)."""
    strategy = _resolve_strategy(m, strategy)
    checked = 0
    for lam, u in _homogeneity_pairs(m, strategy):
        checked += 1
        lhs = m.evaluate(m.domain.scalar_mul(lam, u))
        rhs = m.codomain.scalar_mul(lam, m.evaluate(u))
        if lhs != rhs:
            w = Witness("homogeneity", (lam, u), lhs, rhs)
            return CheckReport("homogeneous", "violated", w, checked)
    verdict = "holds_exhaustive" if strategy == EXHAUSTIVE else "holds_on_samples"
    return CheckReport("homogeneous", verdict, None, checked)


def check_linear(m: VectorMap, strategy=None) -> CheckReport:
    """Additivity first, then homogeneity; first witness wins."""
    add = check_additive(m, strategy)
    if add.witness is not None:
        return CheckReport("linear", "violated", add.witness, add.pairs_checked)
    hom = check_homogeneous(m, strategy)
    checked = add.pairs_checked + hom.pairs_checked
    if hom.witness is not None:
        return CheckReport("linear", "violated", hom.witness, checked)
    if add.verdict == "holds_exhaustive" and hom.verdict == "holds_exhaustive":
        return CheckReport("linear", "holds_exhaustive", None, checked)
    return CheckReport("linear", "holds_on_samples", None, checked)


# ---------------------------------------------------------------------------
# executable proof trace for the rational branch
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TraceIdentity:
    label: str
    lhs: tuple
    rhs: tuple

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def rational_proof_trace(m: VectorMap, num: int, den: int, x) -> list[TraceIdentity]:
    """Evaluate the four identity steps that carry an additive map over a
    characteristic-0 field from integer scaling to scaling by num/den.
    For additive maps every step reports equal; for others the values are
    returned without any claim."""
    if den == 0:
        raise ZeroDenominator("n must be nonzero")
    field = m.domain.field
    if field.characteristic != 0:
        raise CharacteristicMismatch("the rational trace needs characteristic 0")
    if not m.domain.contains(x):
        raise DomainMismatch(f"{x!r} not in {m.domain}")
    dom, cod = m.domain, m.codomain
    lam = field.embed(Fraction(num, den), 0)
    inv_n = field.embed(Fraction(1, den), 0)
    m_elt = field.from_int(num)
    n_elt = field.from_int(den)
    x_over_n = dom.scalar_mul(inv_n, x)
    phi_lam_x = m.evaluate(dom.scalar_mul(lam, x))
    phi_x = m.evaluate(x)
    phi_x_over_n = m.evaluate(x_over_n)
    return [
        TraceIdentity(
            "phi((m/n)x) = m*phi((1/n)x)",
            phi_lam_x,
            cod.scalar_mul(m_elt, phi_x_over_n),
        ),
        TraceIdentity(
            "phi(x) = n*phi((1/n)x)",
            phi_x,
            cod.scalar_mul(n_elt, phi_x_over_n),
        ),
        TraceIdentity(
            "phi((1/n)x) = (1/n)*phi(x)",
            phi_x_over_n,
            cod.scalar_mul(inv_n, phi_x),
        ),
        TraceIdentity(
            "phi((m/n)x) = (m/n)*phi(x)",
            phi_lam_x,
            cod.scalar_mul(lam, phi_x),
        ),
    ]


# ---------------------------------------------------------------------------
# JSON map-spec and report serialization
# ---------------------------------------------------------------------------

def map_to_dict(m: VectorMap) -> dict:
    field = m.domain.field
    out = {
        "field": field.descriptor(),
        "domain_dim": m.domain.dim,
        "codomain_dim": m.codomain.dim,
    }
    if isinstance(m, TableMap):
        entries = [
            [m.domain.encode(v), m.codomain.encode(m.entries[v])]
            for v in m.domain.vectors()
        ]
        out["map"] = {"kind": "table", "entries": entries}
    elif isinstance(m, OrbitTableMap):
        values = [
            [m.domain.encode(o.representative), m.codomain.encode(m.values[o.index])]
            for o in m.orbits
        ]
        out["map"] = {"kind": "orbit_table", "values": values}
    elif isinstance(m, KLinearExtensionMap):
        out["map"] = {
            "kind": "klinear_extension",
            "basis_images": [field.encode(img) for img in m.basis_images],
        }
    elif isinstance(m, RatioMap):
        out["map"] = {"kind": "ratio"}
    elif isinstance(m, IndicatorMap):
        out["map"] = {"kind": "indicator"}
    else:
        raise SpecFormatError(f"unserializable map {type(m).__name__}")
    return out


def map_from_dict(d: dict) -> VectorMap:
    try:
        field = parse_field(d["field"])
        du = int(d["domain_dim"])
        dv = int(d["codomain_dim"])
        body = d["map"]
        kind = body["kind"]
    except (KeyError, TypeError, ValueError) as exc:
        raise SpecFormatError(f"malformed map spec: {exc}") from exc
    domain = VectorSpace(field, du)
    codomain = VectorSpace(field, dv)
    if kind == "table":
        entries = {}
        for pair in body["entries"]:
            if len(pair) != 2:
                raise SpecFormatError("table entries must be [input, output] pairs")
            entries[domain.decode(pair[0])] = codomain.decode(pair[1])
        return TableMap(domain, codomain, entries)
    if kind == "orbit_table":
        by_rep = {}
        for pair in body["values"]:
            if len(pair) != 2:
                raise SpecFormatError("orbit values must be [rep, value] pairs")
            by_rep[domain.decode(pair[0])] = codomain.decode(pair[1])
        orbits = domain.orbits()
        missing = [o for o in orbits if o.representative not in by_rep]
        if missing or len(by_rep) != len(orbits):
            raise SpecFormatError("orbit table must cover every orbit exactly once")
        return OrbitTableMap(
            domain, codomain, [by_rep[o.representative] for o in orbits]
        )
    if kind == "klinear_extension":
        if not isinstance(field, ExtensionField):
            raise SpecFormatError("klinear_extension needs an extension field")
        if du != 1 or dv != 1:
            raise SpecFormatError("klinear_extension maps F -> F (dims 1, 1)")
        images = [field.decode(t) for t in body["basis_images"]]
        return KLinearExtensionMap(field, images)
    if kind == "ratio":
        if du != 2 or dv != 1:
            raise SpecFormatError("ratio maps F^2 -> F (dims 2, 1)")
        return RatioMap(field)
    if kind == "indicator":
        if field.descriptor() != "Fp:2" or du != 2 or dv != 1:
            raise SpecFormatError("indicator maps Z_2^2 -> Z_2")
        return IndicatorMap()
    raise SpecFormatError(f"unknown map kind {kind!r}")


def map_to_json(m: VectorMap) -> str:
    return json.dumps(map_to_dict(m), indent=2) + "\n"


def map_from_json(text: str) -> VectorMap:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFormatError(f"bad JSON: {exc}") from exc
    return map_from_dict(d)


def witness_to_dict(m: VectorMap, w: Witness) -> dict:
    field = m.domain.field
    if w.kind == "additivity":
        inputs = [m.domain.encode(w.inputs[0]), m.domain.encode(w.inputs[1])]
    else:
        inputs = [field.encode(w.inputs[0]), m.domain.encode(w.inputs[1])]
    return {
        "kind": w.kind,
        "inputs": inputs,
        "lhs": m.codomain.encode(w.lhs),
        "rhs": m.codomain.encode(w.rhs),
    }


def report_to_dict(m: VectorMap, report: CheckReport) -> dict:
    return {
        "property": report.property,
        "verdict": report.verdict,
        "witness": (
            witness_to_dict(m, report.witness) if report.witness is not None else None
        ),
        "pairs_checked": report.pairs_checked,
    }
