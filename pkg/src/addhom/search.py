"""Exhaustive engines over finite fields.

Two scans:

  * the orbit-table scan enumerates every homogeneous map F^du -> F^dv by
    assigning one codomain vector per scalar orbit (phi(0) = 0 is forced),
    filters by exhaustive additivity, and reports how many homogeneous maps
    are additive and the canonically-first one that is not;

  * the raw table scan enumerates every map F^du -> F^dv, filters by
    exhaustive additivity, and checks each survivor for homogeneity --
    over a prime field no survivor may fail, over a proper extension some
    must.

Both work on integer index tables (vector rank <-> index) so the inner
loops never touch field elements.  Counts are exact Python ints.  The
orbit scan partitions work by the first orbit's value, so parallel runs
merge to the same result as sequential ones.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dataclass_field

from .errors import (
    InfiniteFieldError,
    NotPrimeField,
    SearchSpaceTooLarge,
)
from .fields import Field, PrimeField, parse_field
from .maps import (
    CheckReport,
    OrbitTableMap,
    TableMap,
    VectorMap,
    check_additive,
    check_homogeneous,
    map_to_dict,
    report_to_dict,
)
from .spaces import VectorSpace

DEFAULT_MAX_CANDIDATES = 10**8


def count_homogeneous(field: Field, du: int, dv: int) -> int:
    """q^(dv*N) with N the orbit count (q^du - 1)/(q - 1)."""
    if not field.is_finite:
        raise InfiniteFieldError("homogeneous-map count needs a finite field")
    q = field.order
    n_orbits = (q**du - 1) // (q - 1)
    return q ** (dv * n_orbits)


def count_linear(field: Field, du: int, dv: int) -> int:
    if not field.is_finite:
        raise InfiniteFieldError("linear-map count needs a finite field")
    return field.order ** (du * dv)


# ---------------------------------------------------------------------------
# integer index tables
# ---------------------------------------------------------------------------

class _IndexTables:
    """Vector arithmetic of F^du and F^dv recast as integer index tables."""

    def __init__(self, field: Field, du: int, dv: int):
        self.field = field
        self.domain = VectorSpace(field, du)
        self.codomain = VectorSpace(field, dv)
        self.dvecs = list(self.domain.vectors())
        self.cvecs = list(self.codomain.vectors())
        didx = {v: i for i, v in enumerate(self.dvecs)}
        cidx = {v: i for i, v in enumerate(self.cvecs)}
        self.dadd = [
            [didx[self.domain.add(a, b)] for b in self.dvecs] for a in self.dvecs
        ]
        self.cadd = [
            [cidx[self.codomain.add(a, b)] for b in self.cvecs] for a in self.cvecs
        ]
        self.scalars = list(field.elements())
        self.dact = [
            [didx[self.domain.scalar_mul(s, v)] for v in self.dvecs]
            for s in self.scalars
        ]
        self.cact = [
            [cidx[self.codomain.scalar_mul(s, v)] for v in self.cvecs]
            for s in self.scalars
        ]
        self.orbits = self.domain.orbits()
        # for every nonzero domain vector: (orbit index, scalar rank)
        self.orbit_of = [None] * len(self.dvecs)
        for orb in self.orbits:
            rep_i = didx[orb.representative]
            for s_rank in range(1, len(self.scalars)):
                self.orbit_of[self.dact[s_rank][rep_i]] = (orb.index, s_rank)

    def phi_from_assignment(self, assign):
        """Index table of the orbit map with the given per-orbit value ranks."""
        phi = [0] * len(self.dvecs)  # index 0 is the zero vector on both sides
        for i in range(1, len(self.dvecs)):
            oi, s_rank = self.orbit_of[i]
            phi[i] = self.cact[s_rank][assign[oi]]
        return phi

    def is_additive(self, phi) -> bool:
        dadd, cadd = self.dadd, self.cadd
        n = len(phi)
        for i in range(n):
            pi = phi[i]
            row = dadd[i]
            crow = cadd[pi]
            for j in range(i, n):
                if crow[phi[j]] != phi[row[j]]:
                    return False
        return True

    def is_homogeneous(self, phi) -> bool:
        for s_rank in range(len(self.scalars)):
            act_d = self.dact[s_rank]
            act_c = self.cact[s_rank]
            for i in range(len(phi)):
                if act_c[phi[i]] != phi[act_d[i]]:
                    return False
        return True

    def table_map(self, phi) -> TableMap:
        entries = {v: self.cvecs[phi[i]] for i, v in enumerate(self.dvecs)}
        return TableMap(self.domain, self.codomain, entries)

    def orbit_map(self, assign) -> OrbitTableMap:
        return OrbitTableMap(
            self.domain, self.codomain, [self.cvecs[r] for r in assign]
        )


# ---------------------------------------------------------------------------
# homogeneous-but-not-additive search over orbit tables
# ---------------------------------------------------------------------------

@dataclass
class SearchConfig:
    field: Field
    domain_dim: int
    codomain_dim: int
    mode: str = "first_witness"  # count_only | first_witness | enumerate_all
    max_candidates: int = DEFAULT_MAX_CANDIDATES
    jobs: int = 1


@dataclass
class SearchResult:
    field_descriptor: str
    domain_dim: int
    codomain_dim: int
    mode: str
    homogeneous_count: int
    homogeneous_additive_count: int
    witness_map: OrbitTableMap | None = None
    witness_report: CheckReport | None = None
    witness_maps: list = dataclass_field(default_factory=list)

    @property
    def non_additive_count(self) -> int:
        return self.homogeneous_count - self.homogeneous_additive_count

    def to_dict(self) -> dict:
        return {
            "homogeneous": str(self.homogeneous_count),
            "homogeneous_additive": str(self.homogeneous_additive_count),
            "non_additive": str(self.non_additive_count),
            "witness": (
                map_to_dict(self.witness_map) if self.witness_map else None
            ),
            "witness_report": (
                report_to_dict(self.witness_map, self.witness_report)
                if self.witness_report
                else None
            ),
            "instance": {
                "field": self.field_descriptor,
                "domain_dim": self.domain_dim,
                "codomain_dim": self.codomain_dim,
                "mode": self.mode,
            },
        }


def _scan_partition(field_text: str, du: int, dv: int, first_value: int,
                    collect_all: bool):
    """Scan all orbit assignments whose first orbit value rank is fixed.

    Returns (additive count, canonically-first non-additive assignment or
    None, all non-additive assignments when collect_all).
    """
    tables = _IndexTables(parse_field(field_text), du, dv)
    n_orbits = len(tables.orbits)
    m = len(tables.cvecs)
    additive = 0
    first_bad = None
    all_bad = []
    for rest in itertools.product(range(m), repeat=n_orbits - 1):
        assign = (first_value,) + rest
        if tables.is_additive(tables.phi_from_assignment(assign)):
            additive += 1
        else:
            if first_bad is None:
                first_bad = assign
            if collect_all:
                all_bad.append(assign)
    return additive, first_bad, all_bad


def search_homogeneous_nonadditive(config: SearchConfig) -> SearchResult:
    """Count all homogeneous maps and filter them by exhaustive additivity;
    report the canonically-first homogeneous non-additive map, re-verified
    through the map checkers before it is returned."""
    field = config.field
    if not field.is_finite:
        raise InfiniteFieldError("search needs a finite field")
    total = count_homogeneous(field, config.domain_dim, config.codomain_dim)
    if total > config.max_candidates:
        raise SearchSpaceTooLarge(
            f"{total} candidates exceed the limit {config.max_candidates}"
        )
    m = field.order ** config.codomain_dim
    collect_all = config.mode == "enumerate_all"
    args = [
        (field.descriptor(), config.domain_dim, config.codomain_dim, v0, collect_all)
        for v0 in range(m)
    ]
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            parts = list(pool.map(_scan_partition_star, args))
    else:
        parts = [_scan_partition(*a) for a in args]

    additive_total = sum(p[0] for p in parts)
    first_bad = next((p[1] for p in parts if p[1] is not None), None)
    result = SearchResult(
        field_descriptor=field.descriptor(),
        domain_dim=config.domain_dim,
        codomain_dim=config.codomain_dim,
        mode=config.mode,
        homogeneous_count=total,
        homogeneous_additive_count=additive_total,
    )
    tables = _IndexTables(field, config.domain_dim, config.codomain_dim)
    if collect_all:
        result.witness_maps = [
            tables.orbit_map(a) for p in parts for a in p[2]
        ]
    if config.mode != "count_only" and first_bad is not None:
        witness_map = tables.orbit_map(first_bad)
        hom = check_homogeneous(witness_map, "exhaustive")
        add = check_additive(witness_map, "exhaustive")
        if hom.witness is not None or add.witness is None:
            raise AssertionError("search emitted a map that fails re-verification")
        result.witness_map = witness_map
        result.witness_report = add
    return result


def _scan_partition_star(args):
    return _scan_partition(*args)


# ---------------------------------------------------------------------------
# raw table scan: machine check of the prime-field implication
# ---------------------------------------------------------------------------

@dataclass
class TableScanReport:
    field_descriptor: str
    domain_dim: int
    codomain_dim: int
    tables_total: int
    additive_count: int
    expected_additive: int  # q^(du*dv), the linear-map count
    additive_nonhomogeneous_count: int
    first_nonhomogeneous: TableMap | None = None

    @property
    def additivity_implies_homogeneity(self) -> bool:
        return self.additive_nonhomogeneous_count == 0

    def to_dict(self) -> dict:
        return {
            "field": self.field_descriptor,
            "domain_dim": self.domain_dim,
            "codomain_dim": self.codomain_dim,
            "tables_total": str(self.tables_total),
            "additive": str(self.additive_count),
            "expected_additive": str(self.expected_additive),
            "additive_nonhomogeneous": str(self.additive_nonhomogeneous_count),
            "additivity_implies_homogeneity": self.additivity_implies_homogeneity,
            "counterexample": (
                map_to_dict(self.first_nonhomogeneous)
                if self.first_nonhomogeneous
                else None
            ),
        }


def scan_additive_tables(
    field: Field, du: int, dv: int, max_candidates: int = DEFAULT_MAX_CANDIDATES
) -> TableScanReport:
    """Enumerate every table map F^du -> F^dv, keep the additive ones, and
    test each survivor for exhaustive homogeneity."""
    if not field.is_finite:
        raise InfiniteFieldError("table scan needs a finite field")
    tables = _IndexTables(field, du, dv)
    n = len(tables.dvecs)
    m = len(tables.cvecs)
    total = m**n
    if total > max_candidates:
        raise SearchSpaceTooLarge(
            f"{total} tables exceed the limit {max_candidates}"
        )
    additive = 0
    bad = 0
    first_bad = None
    for phi in itertools.product(range(m), repeat=n):
        if not tables.is_additive(phi):
            continue
        additive += 1
        if not tables.is_homogeneous(phi):
            bad += 1
            if first_bad is None:
                first_bad = tables.table_map(phi)
    return TableScanReport(
        field_descriptor=field.descriptor(),
        domain_dim=du,
        codomain_dim=dv,
        tables_total=total,
        additive_count=additive,
        expected_additive=count_linear(field, du, dv),
        additive_nonhomogeneous_count=bad,
        first_nonhomogeneous=first_bad,
    )


def verify_theorem1_prime(
    field: Field, du: int, dv: int, max_candidates: int = DEFAULT_MAX_CANDIDATES
) -> TableScanReport:
    """Over Z_p, every additive table map must be homogeneous and the
    additive count must equal p^(du*dv)."""
    if not isinstance(field, PrimeField):
        raise NotPrimeField(
            "the prime-case verifier only accepts Z_p; use scan_additive_tables "
            "for extension fields"
        )
    return scan_additive_tables(field, du, dv, max_candidates)
