"""Brauer character, block, and weight labels with center actions and counts.

An admissible symbol pairs finitely many distinct twist orbits with nonempty
partitions, with sizes weighted by orbit degree summing to n; it labels one
irreducible ell-Brauer character of GL_n(eps q).  Replacing each partition by
its size, core, and either nothing (block symbols, labelling ell-blocks) or a
core function on slots (weight symbols, labelling conjugacy classes of
weights) gives the two compressed label families.  The ell'-part of the
center acts on all three by translating orbits; stabilizer orders drive the
SL-level restriction counts.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .arith import InstanceParams, e_gamma, ell_part
from .errors import DomainError, InvariantViolationError, UnsupportedModeError
from .partitions import (
    Partition,
    as_partition,
    core_tower,
    count_with_core,
    delta,
    distinct_cores,
    e_core,
    e_quotient,
    enumerate_partitions,
    enumerate_with_core,
    from_core_quotient,
    is_e_core,
    tower_to_partition,
    transpose,
)
from .semisimple import (
    FrobeniusOrbit,
    IDENTITY,
    RootLabel,
    _acted_rep,
    _orbit_of,
    _twist_step,
    act_on_orbit,
    center_act,
    center_elements,
    enumerate_ellprime_orbits,
    suborbit,
)
from .weights import (
    CoreFunction,
    count_core_functions,
    enumerate_core_functions,
    validate_core_function,
)


class AdmissibleSymbol(NamedTuple):
    """Pairs (orbit, partition); labels one irreducible Brauer character."""

    pairs: tuple[tuple[FrobeniusOrbit, Partition], ...]

    def key(self):
        return tuple((orb.rep, mu) for orb, mu in self.pairs)

    def size(self) -> int:
        return sum(orb.size * sum(mu) for orb, mu in self.pairs)


class BlockSymbol(NamedTuple):
    """Triples (orbit, multiplicity, core); labels one ell-block."""

    triples: tuple[tuple[FrobeniusOrbit, int, Partition], ...]

    def key(self):
        return tuple((orb.rep, m, lam) for orb, m, lam in self.triples)

    def size(self) -> int:
        return sum(orb.size * m for orb, m, _ in self.triples)


class WeightSymbol(NamedTuple):
    """Tuples (orbit, multiplicity, core, core function); a weight class."""

    tuples: tuple[tuple[FrobeniusOrbit, int, Partition, CoreFunction], ...]

    def key(self):
        return tuple(
            (orb.rep, m, lam, func.entries) for orb, m, lam, func in self.tuples
        )

    def size(self) -> int:
        return sum(orb.size * m for orb, m, _, _ in self.tuples)

    def base_triples(self) -> tuple[tuple[FrobeniusOrbit, int, Partition], ...]:
        return tuple((orb, m, lam) for orb, m, lam, _ in self.tuples)


def _validate_orbit(orbit: FrobeniusOrbit, params: InstanceParams) -> None:
    den = orbit.rep.den
    if den % params.p == 0 or math.gcd(den, params.ell) != 1:
        raise DomainError(f"orbit denominator {den} is not prime to p*ell")
    if _orbit_of(orbit.rep, params.eq) != orbit:
        raise DomainError(f"{orbit.rep} does not represent a canonical orbit")


def _check_distinct_sorted(keys) -> None:
    for a, b in zip(keys, keys[1:]):
        if a >= b:
            raise DomainError("orbits in a symbol must be pairwise distinct")


def admissible_symbol(pairs, params: InstanceParams) -> AdmissibleSymbol:
    """Validate, canonicalize, and build an admissible symbol."""
    canon = tuple(
        sorted(
            ((orb, as_partition(mu)) for orb, mu in pairs),
            key=lambda t: t[0].rep,
        )
    )
    _check_distinct_sorted([orb.rep for orb, _ in canon])
    total = 0
    for orb, mu in canon:
        _validate_orbit(orb, params)
        if not mu:
            raise DomainError("pairs with empty partitions are not stored")
        total += orb.size * sum(mu)
    if total != params.n:
        raise DomainError(f"symbol has size {total}, expected n = {params.n}")
    return AdmissibleSymbol(canon)


def block_symbol(triples, params: InstanceParams) -> BlockSymbol:
    """Validate, canonicalize, and build a block symbol."""
    canon = tuple(
        sorted(
            ((orb, int(m), as_partition(lam)) for orb, m, lam in triples),
            key=lambda t: t[0].rep,
        )
    )
    _check_distinct_sorted([orb.rep for orb, _, _ in canon])
    total = 0
    for orb, m, lam in canon:
        _validate_orbit(orb, params)
        if m < 1:
            raise DomainError(f"multiplicity must be positive, got {m}")
        ei = e_gamma(orb.size, params)
        if not is_e_core(lam, ei):
            raise DomainError(f"{lam} is not an {ei}-core")
        if sum(lam) > m or (m - sum(lam)) % ei != 0:
            raise DomainError(
                f"core size {sum(lam)} incompatible with multiplicity {m} mod {ei}"
            )
        total += orb.size * m
    if total != params.n:
        raise DomainError(f"symbol has size {total}, expected n = {params.n}")
    return BlockSymbol(canon)


def weight_symbol(tuples_, params: InstanceParams) -> WeightSymbol:
    """Validate, canonicalize, and build a weight symbol."""
    canon = tuple(
        sorted(
            ((orb, int(m), as_partition(lam), func) for orb, m, lam, func in tuples_),
            key=lambda t: t[0].rep,
        )
    )
    base = block_symbol([(orb, m, lam) for orb, m, lam, _ in canon], params)
    for (orb, m, lam, func), (_, _, _) in zip(canon, base.triples):
        ei = e_gamma(orb.size, params)
        w = (m - sum(lam)) // ei
        validate_core_function(func, ei, w, params.ell)
    return WeightSymbol(canon)


# Center action and stabilizer counts.


def z_act(z: RootLabel, sym, params: InstanceParams):
    """Translate every orbit of a symbol by the central element z."""
    if isinstance(sym, AdmissibleSymbol):
        pairs = tuple(
            sorted(
                ((act_on_orbit(z, orb, params), mu) for orb, mu in sym.pairs),
                key=lambda t: t[0].rep,
            )
        )
        return AdmissibleSymbol(pairs)
    if isinstance(sym, BlockSymbol):
        triples = tuple(
            sorted(
                ((act_on_orbit(z, orb, params), m, lam) for orb, m, lam in sym.triples),
                key=lambda t: t[0].rep,
            )
        )
        return BlockSymbol(triples)
    if isinstance(sym, WeightSymbol):
        tuples_ = tuple(
            sorted(
                (
                    (act_on_orbit(z, orb, params), m, lam, func)
                    for orb, m, lam, func in sym.tuples
                ),
                key=lambda t: t[0].rep,
            )
        )
        return WeightSymbol(tuples_)
    raise DomainError(f"cannot act on {type(sym).__name__}")


def _acted_admissible_key(z: RootLabel, sym: AdmissibleSymbol, eq: int):
    pairs = sym.pairs
    if len(pairs) == 1:
        orb, mu = pairs[0]
        return ((_acted_rep(z, orb.rep, eq), mu),)
    return tuple(
        sorted([(_acted_rep(z, orb.rep, eq), mu) for orb, mu in pairs])
    )


def _acted_block_key(z: RootLabel, sym: BlockSymbol, eq: int):
    triples = sym.triples
    if len(triples) == 1:
        orb, m, lam = triples[0]
        return ((_acted_rep(z, orb.rep, eq), m, lam),)
    return tuple(
        sorted([(_acted_rep(z, orb.rep, eq), m, lam) for orb, m, lam in triples])
    )


def _acted_weight_key(z: RootLabel, sym: WeightSymbol, eq: int):
    tuples_ = sym.tuples
    if len(tuples_) == 1:
        orb, m, lam, func = tuples_[0]
        return ((_acted_rep(z, orb.rep, eq), m, lam, func.entries),)
    return tuple(
        sorted(
            [
                (_acted_rep(z, orb.rep, eq), m, lam, func.entries)
                for orb, m, lam, func in tuples_
            ]
        )
    )


def acted_key(z: RootLabel, sym, params: InstanceParams):
    if isinstance(sym, AdmissibleSymbol):
        return _acted_admissible_key(z, sym, params.eq)
    if isinstance(sym, BlockSymbol):
        return _acted_block_key(z, sym, params.eq)
    if isinstance(sym, WeightSymbol):
        return _acted_weight_key(z, sym, params.eq)
    raise DomainError(f"cannot act on {type(sym).__name__}")


def kappa_ellprime(sym: AdmissibleSymbol, params: InstanceParams) -> int:
    """Order of the stabilizer of the symbol in the ell'-part of the center."""
    own = sym.key()
    eq = params.eq
    return sum(
        1
        for z in center_elements(params).elements
        if _acted_admissible_key(z, sym, eq) == own
    )


def kappa_ell(sym: AdmissibleSymbol, params: InstanceParams) -> int:
    """ell-part of gcd(n, q - eps, and the part gcds of the transposes)."""
    g = math.gcd(params.n, params.q - params.eps)
    for _, mu in sym.pairs:
        g = math.gcd(g, delta(transpose(mu)))
    return ell_part(g, params.ell)


def kappa(sym: AdmissibleSymbol, params: InstanceParams) -> int:
    """Number of irreducible constituents of the restriction to SL_n(eps q)."""
    return kappa_ell(sym, params) * kappa_ellprime(sym, params)


def kappa_weight(sym: WeightSymbol, params: InstanceParams) -> int:
    """Stabilizer order of a weight symbol in the ell'-part of the center."""
    own = sym.key()
    eq = params.eq
    return sum(
        1
        for z in center_elements(params).elements
        if _acted_weight_key(z, sym, eq) == own
    )


def orbit_and_stabilizer(sym, params: InstanceParams):
    """Center orbit (sorted) and stabilizer order of any symbol type."""
    center = center_elements(params)
    images = {}
    for z in center.elements:
        image = z_act(z, sym, params)
        images.setdefault(image.key(), image)
    orbit = tuple(sorted(images.values(), key=lambda t: t.key()))
    stab, rem = divmod(center.order, len(orbit))
    if rem:
        raise InvariantViolationError("orbit size does not divide center order")
    return orbit, stab


# Blocks.


def block_of(sym: AdmissibleSymbol, params: InstanceParams) -> BlockSymbol:
    """The block symbol of an admissible symbol: sizes and cores per orbit."""
    table = params.e_gamma_table
    triples = tuple(
        (orb, sum(mu), e_core(mu, table[orb.size - 1])) for orb, mu in sym.pairs
    )
    return BlockSymbol(triples)


def symbols_in_block(
    block: BlockSymbol, params: InstanceParams
) -> tuple[AdmissibleSymbol, ...]:
    """All admissible symbols with the given block symbol, sorted."""
    table = params.e_gamma_table
    per_slot = []
    for orb, m, lam in block.triples:
        choices = enumerate_with_core(m, table[orb.size - 1], lam)
        if not choices:
            raise InvariantViolationError(f"block slot ({orb.rep},{m},{lam}) is empty")
        per_slot.append(choices)
    out = [
        AdmissibleSymbol(
            tuple((orb, mu) for (orb, _, _), mu in zip(block.triples, combo))
        )
        for combo in itertools.product(*per_slot)
    ]
    out.sort(key=AdmissibleSymbol.key)
    return tuple(out)


def count_symbols_in_block(block: BlockSymbol, params: InstanceParams) -> int:
    table = params.e_gamma_table
    count = 1
    for orb, m, lam in block.triples:
        count *= count_with_core(m, table[orb.size - 1], lam)
    return count


def enumerate_block_symbols(params: InstanceParams) -> tuple[BlockSymbol, ...]:
    """All block symbols of the instance, sorted and duplicate free."""
    orbits = enumerate_ellprime_orbits(params)
    by_deg: dict[int, list[FrobeniusOrbit]] = {}
    for orb in orbits:
        by_deg.setdefault(orb.size, []).append(orb)
    degs = sorted(by_deg)
    results: list[BlockSymbol] = []
    chosen: list[tuple[FrobeniusOrbit, int]] = []

    table = params.e_gamma_table

    def close_out() -> None:
        base = sorted(chosen, key=lambda t: t[0].rep)
        if len(base) == 1:
            orb, m = base[0]
            for lam in distinct_cores(m, table[orb.size - 1]):
                results.append(BlockSymbol(((orb, m, lam),)))
            return
        core_lists = [distinct_cores(m, table[orb.size - 1]) for orb, m in base]
        for combo in itertools.product(*core_lists):
            results.append(
                BlockSymbol(
                    tuple((orb, m, lam) for (orb, m), lam in zip(base, combo))
                )
            )

    def assign(di: int, budget: int) -> None:
        if budget == 0:
            close_out()
            return
        if di == len(degs):
            return
        d = degs[di]
        pool = by_deg[d]
        assign(di + 1, budget)
        for t in range(1, budget // d + 1):
            for shape in enumerate_partitions(t):
                if len(shape) > len(pool):
                    continue
                orderings = sorted(set(itertools.permutations(shape)))
                for orbs in itertools.combinations(pool, len(shape)):
                    for ordering in orderings:
                        chosen.extend(zip(orbs, ordering))
                        assign(di + 1, budget - d * t)
                        del chosen[-len(shape):]

    assign(0, params.n)
    results.sort(key=BlockSymbol.key)
    return tuple(results)


def enumerate_admissible_symbols(
    params: InstanceParams,
) -> tuple[AdmissibleSymbol, ...]:
    """All admissible symbols of the instance, grouped from their blocks."""
    out: list[AdmissibleSymbol] = []
    for block in enumerate_block_symbols(params):
        out.extend(symbols_in_block(block, params))
    out.sort(key=AdmissibleSymbol.key)
    return tuple(out)


def is_unipotent_block(block: BlockSymbol) -> bool:
    """True when every orbit of the block is the identity orbit."""
    return all(orb.rep == IDENTITY for orb, _, _ in block.triples)


# Suborbit constraints and the block stabilizer count.


def _suborbit_step(deg: int, m: int, lam_size: int, params: InstanceParams):
    """Step of the constraint suborbit, or None when the set is empty."""
    if params.ell != 2:
        return None if lam_size == m else params.e
    if (params.q - params.eps) % 4 == 0 or deg % 2 == 0:
        return 1
    if m == 1:
        return None
    return 2


def block_suborbit_set(
    orbit: FrobeniusOrbit, m: int, lam: Partition, params: InstanceParams
) -> tuple[RootLabel, ...]:
    """The constraint suborbit attached to one block entry; may be empty."""
    if m < 1:
        raise DomainError(f"multiplicity must be positive, got {m}")
    ei = e_gamma(orbit.size, params)
    if not is_e_core(lam, ei):
        raise DomainError(f"{lam} is not an {ei}-core")
    if sum(lam) > m or (m - sum(lam)) % ei != 0:
        raise DomainError(f"core {lam} incompatible with multiplicity {m}")
    step = _suborbit_step(orbit.size, m, sum(lam), params)
    if step is None:
        return ()
    sub = suborbit(orbit.rep, step, params)
    expected, rem = divmod(ei * orbit.size, params.e)
    if rem or len(sub) != expected:
        raise InvariantViolationError(
            f"suborbit of {orbit.rep} has {len(sub)} elements, expected {expected}"
        )
    return sub


@lru_cache(maxsize=None)
def _suborbit_elems(rep: RootLabel, step: int, eq: int) -> frozenset[RootLabel]:
    out = [rep]
    x = _twist_step(rep, step, eq)
    while x != rep:
        out.append(x)
        x = _twist_step(x, step, eq)
    return frozenset(out)


@lru_cache(maxsize=None)
def _z_fixes_cycle(z: RootLabel, rep: RootLabel, step: int, eq: int) -> bool:
    elems = _suborbit_elems(rep, step, eq)
    return frozenset(center_act(z, x) for x in elems) == elems


def _block_steps(block: BlockSymbol, params: InstanceParams):
    """(orbit representative, suborbit step) pairs with empty sets dropped."""
    return [
        (orb.rep, step)
        for orb, m, lam in block.triples
        for step in (_suborbit_step(orb.size, m, sum(lam), params),)
        if step is not None
    ]


def block_c1_c2(block: BlockSymbol, params: InstanceParams):
    """Setwise block stabilizer C1 and suborbit condition subgroup C2."""
    center = center_elements(params)
    eq = params.eq
    own = block.key()
    c1 = tuple(
        z for z in center.elements if _acted_block_key(z, block, eq) == own
    )
    steps = _block_steps(block, params)
    c2 = tuple(
        z
        for z in center.elements
        if all(_z_fixes_cycle(z, rep, step, eq) for rep, step in steps)
    )
    return c1, c2


def kappa_block(block: BlockSymbol, params: InstanceParams) -> int:
    """Number of SL-blocks covered by this block: |C1 intersect C2|."""
    eq = params.eq
    own = block.key()
    steps = _block_steps(block, params)
    count = 1
    for z in center_elements(params).elements[1:]:
        if _acted_block_key(z, block, eq) == own and all(
            _z_fixes_cycle(z, rep, step, eq) for rep, step in steps
        ):
            count += 1
    return count


# Weight symbols per block.


def weight_symbols_in_block(
    block: BlockSymbol, params: InstanceParams
) -> tuple[WeightSymbol, ...]:
    """All weight symbols over the given block symbol, sorted."""
    table = params.e_gamma_table
    per_slot = []
    for orb, m, lam in block.triples:
        ei = table[orb.size - 1]
        w = (m - sum(lam)) // ei
        per_slot.append(enumerate_core_functions(ei, w, params.ell))
    out = [
        WeightSymbol(
            tuple(
                (orb, m, lam, func)
                for (orb, m, lam), func in zip(block.triples, combo)
            )
        )
        for combo in itertools.product(*per_slot)
    ]
    out.sort(key=WeightSymbol.key)
    return tuple(out)


def count_weight_symbols_in_block(block: BlockSymbol, params: InstanceParams) -> int:
    table = params.e_gamma_table
    count = 1
    for orb, m, lam in block.triples:
        ei = table[orb.size - 1]
        count *= count_core_functions(ei, (m - sum(lam)) // ei, params.ell)
    return count


# The block preserving relabeling between admissible and weight symbols:
# per pair, the partition is traded for its core together with the core
# towers of its quotient components, spread over slots.


@lru_cache(maxsize=None)
def _weight_data(mu: Partition, e: int, ell: int):
    lam = e_core(mu, e)
    entries: list[tuple[tuple[int, int, int], Partition]] = []
    for k, comp in enumerate(e_quotient(mu, e), start=1):
        for d, level in enumerate(core_tower(comp, ell)):
            for j, core in enumerate(level, start=1):
                if core:
                    entries.append(((d, k, j), core))
    return sum(mu), lam, CoreFunction(tuple(sorted(entries)))


@lru_cache(maxsize=None)
def _brauer_partition(
    m: int,
    lam: Partition,
    entries: tuple[tuple[tuple[int, int, int], Partition], ...],
    e: int,
    ell: int,
) -> Partition:
    comps: list[Partition] = []
    for k in range(1, e + 1):
        sub = [(slot, core) for slot, core in entries if slot[1] == k]
        if not sub:
            comps.append(())
            continue
        depth = max(slot[0] for slot, _ in sub) + 1
        levels = [[()] * (ell**d) for d in range(depth)]
        for (d, _, j), core in sub:
            levels[d][j - 1] = core
        comps.append(
            tower_to_partition(tuple(tuple(level) for level in levels), ell)
        )
    mu = from_core_quotient(lam, tuple(comps), e)
    if sum(mu) != m:
        raise InvariantViolationError("relabeled partition has the wrong size")
    return mu


def to_weight_symbol(sym: AdmissibleSymbol, params: InstanceParams) -> WeightSymbol:
    """Relabel an admissible symbol as the matching weight symbol."""
    table = params.e_gamma_table
    out = []
    for orb, mu in sym.pairs:
        m, lam, func = _weight_data(mu, table[orb.size - 1], params.ell)
        out.append((orb, m, lam, func))
    return WeightSymbol(tuple(out))


def from_weight_symbol(sym: WeightSymbol, params: InstanceParams) -> AdmissibleSymbol:
    """Inverse relabeling: rebuild the partition from core and slot cores."""
    table = params.e_gamma_table
    out = []
    for orb, m, lam, func in sym.tuples:
        ei = table[orb.size - 1]
        validate_core_function(func, ei, (m - sum(lam)) // ei, params.ell)
        mu = _brauer_partition(m, lam, func.entries, ei, params.ell)
        out.append((orb, mu))
    return AdmissibleSymbol(tuple(out))


# SL-level restriction counts per block.


@dataclass(frozen=True)
class SlBlockReport:
    """Counts for the SL-blocks covered by one GL-block."""

    covered: int
    ibr_per_block: int
    weights_per_block: int


def _restriction_sum(items, acted_key_fn, kappa_fn, covered, center) -> int:
    total = 0
    seen: set = set()
    for item in items:
        keys = [acted_key_fn(z, item) for z in center.elements]
        canon = min(keys)
        if canon in seen:
            continue
        seen.add(canon)
        quo, rem = divmod(kappa_fn(item), covered)
        if rem:
            raise InvariantViolationError(
                f"stabilizer count {kappa_fn(item)} not divisible by {covered}"
            )
        total += quo
    return total


def sl_block_report(block: BlockSymbol, params: InstanceParams) -> SlBlockReport:
    """Per block SL-level counts; refuses modes the counts do not cover."""
    if params.ell == 2:
        raise UnsupportedModeError("ell=2 upper bound only")
    if math.gcd(params.n, params.q - params.eps) % params.ell == 0:
        raise UnsupportedModeError("ell divides gcd(n, q-eps)")
    covered = kappa_block(block, params)
    center = center_elements(params)
    eq = params.eq
    ibr = _restriction_sum(
        symbols_in_block(block, params),
        lambda z, s: _acted_admissible_key(z, s, eq),
        lambda s: kappa(s, params),
        covered,
        center,
    )
    wts = _restriction_sum(
        weight_symbols_in_block(block, params),
        lambda z, s: _acted_weight_key(z, s, eq),
        lambda s: kappa_weight(s, params),
        covered,
        center,
    )
    return SlBlockReport(covered, ibr, wts)


# Serialization.


def admissible_to_jsonable(sym: AdmissibleSymbol) -> list[dict]:
    return [
        {"orbit": str(orb.rep), "deg": orb.size, "mu": list(mu)}
        for orb, mu in sym.pairs
    ]


def block_to_jsonable(sym: BlockSymbol) -> list[dict]:
    return [
        {"orbit": str(orb.rep), "deg": orb.size, "m": m, "lambda": list(lam)}
        for orb, m, lam in sym.triples
    ]


def weight_to_jsonable(sym: WeightSymbol) -> list[dict]:
    return [
        {
            "orbit": str(orb.rep),
            "deg": orb.size,
            "m": m,
            "lambda": list(lam),
            "K": [
                {"d": d, "k": k, "j": j, "core": list(core)}
                for (d, k, j), core in func.entries
            ],
        }
        for orb, m, lam, func in sym.tuples
    ]


def clear_symbol_caches() -> None:
    """Drop per-regime caches; used between grid regimes to bound memory."""
    _suborbit_elems.cache_clear()
    _z_fixes_cycle.cache_clear()
