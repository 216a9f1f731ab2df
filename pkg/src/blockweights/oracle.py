"""Brute force matrix group oracle for desk scale cross checks.

Enumerates GL/SL/GU/SU over tiny fields as explicit matrices, partitions
them into conjugacy classes, and counts classes of elements whose order is
prime to ell.  Modular representation theory predicts that this count equals
the number of irreducible ell-Brauer characters, which the engine computes
symbolically; cross_check compares both sides on one instance.

Field sizes are capped at p and p^2 for p <= 7 with fixed quadratic moduli,
so results cannot drift with the choice of an irreducible polynomial.  Group
enumeration is capped by ORACLE_CAP elements of the ambient GL/GU.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

from .arith import InstanceParams, make_params
from .errors import InvariantViolationError, UnsupportedModeError
from .semisimple import center_elements
from .symbols import _acted_admissible_key, enumerate_admissible_symbols, kappa

ORACLE_CAP = 300_000
_MAX_N = 3

# x^2 + c1*x + c0, irreducible over the prime field.
_MODULI = {4: (2, 1, 1), 9: (3, 0, 1), 25: (5, 0, 3), 49: (7, 0, 1)}

_PRIMES = (2, 3, 5, 7)


class TinyField:
    """Table driven arithmetic for F_q, q in {2,3,5,7,4,9,25,49}.

    Elements are integers 0..q-1; for q = p^2 the value a + b*p encodes
    a + b*x with x a fixed root of the recorded quadratic modulus.
    """

    def __init__(self, q: int):
        if q in _PRIMES:
            p = q
            mul = [(a * b) % q for a in range(q) for b in range(q)]
        elif q in _MODULI:
            p, c1, c0 = _MODULI[q]
            mul = []
            for a in range(q):
                a1, b1 = a % p, a // p
                for b in range(q):
                    a2, b2 = b % p, b // p
                    hi = b1 * b2
                    lo = (a1 * a2 - hi * c0) % p
                    mid = (a1 * b2 + b1 * a2 - hi * c1) % p
                    mul.append(lo + mid * p)
        else:
            raise UnsupportedModeError(f"no tiny field of size {q}")
        self.q = q
        self.p = p
        self.mul = mul
        self.add = [
            (a % p + b % p) % p + ((a // p + b // p) % p) * p
            for a in range(q)
            for b in range(q)
        ]
        self.neg = [(-a % p) + ((-(a // p)) % p) * p for a in range(q)]
        inv = [0] * q
        for a in range(1, q):
            inv[a] = next(b for b in range(1, q) if mul[a * q + b] == 1)
        self.inv = inv
        self.frob = [self.power(a, p) for a in range(q)]
        self._spot_check()

    def power(self, a: int, k: int) -> int:
        out = 1
        base = a
        while k:
            if k & 1:
                out = self.mul[out * self.q + base]
            base = self.mul[base * self.q + base]
            k >>= 1
        return out

    def _spot_check(self) -> None:
        q, mul, add = self.q, self.mul, self.add
        sample = range(q) if q <= 9 else list(range(9)) + [q - 1]
        for a in sample:
            for b in sample:
                if mul[a * q + b] != mul[b * q + a] or add[a * q + b] != add[b * q + a]:
                    raise InvariantViolationError("field tables not commutative")
                for c in sample:
                    ab_c = mul[mul[a * q + b] * q + c]
                    a_bc = mul[a * q + mul[b * q + c]]
                    dist = mul[a * q + add[b * q + c]]
                    dist2 = add[mul[a * q + b] * q + mul[a * q + c]]
                    if ab_c != a_bc or dist != dist2:
                        raise InvariantViolationError("field tables not a ring")
        for a in range(1, q):
            if mul[a * q + self.inv[a]] != 1:
                raise InvariantViolationError("field inverse table wrong")
        for a in range(q):
            for b in range(q):
                if self.frob[mul[a * q + b]] != mul[self.frob[a] * q + self.frob[b]]:
                    raise InvariantViolationError("frobenius not multiplicative")
                if self.frob[add[a * q + b]] != add[self.frob[a] * q + self.frob[b]]:
                    raise InvariantViolationError("frobenius not additive")


@lru_cache(maxsize=None)
def tiny_field(q: int) -> TinyField:
    return TinyField(q)


# Matrices are flat tuples of length n*n, row major.


def mat_identity(n: int) -> tuple[int, ...]:
    return tuple(1 if i == j else 0 for i in range(n) for j in range(n))


def mat_mul(F: TinyField, a, b, n: int) -> tuple[int, ...]:
    q, mul, add = F.q, F.mul, F.add
    out = []
    for i in range(n):
        row = a[i * n : i * n + n]
        for j in range(n):
            acc = 0
            for k in range(n):
                acc = add[acc * q + mul[row[k] * q + b[k * n + j]]]
            out.append(acc)
    return tuple(out)


def mat_det(F: TinyField, a, n: int) -> int:
    q, mul, add, neg = F.q, F.mul, F.add, F.neg
    if n == 1:
        return a[0]
    if n == 2:
        return add[mul[a[0] * q + a[3]] * q + neg[mul[a[1] * q + a[2]]]]
    if n == 3:
        total = 0
        for j, sign in ((0, 1), (1, -1), (2, 1)):
            cols = [c for c in range(3) if c != j]
            minor = add[
                mul[a[3 + cols[0]] * q + a[6 + cols[1]]] * q
                + neg[mul[a[3 + cols[1]] * q + a[6 + cols[0]]]]
            ]
            term = mul[a[j] * q + minor]
            total = add[total * q + (term if sign == 1 else neg[term])]
        return total
    raise UnsupportedModeError(f"determinant for n={n} not supported")


def mat_inv(F: TinyField, a, n: int) -> tuple[int, ...]:
    q, mul, neg, inv = F.q, F.mul, F.neg, F.inv
    d = mat_det(F, a, n)
    if d == 0:
        raise InvariantViolationError("cannot invert a singular matrix")
    di = inv[d]
    if n == 1:
        return (di,)
    if n == 2:
        adj = (a[3], neg[a[1]], neg[a[2]], a[0])
        return tuple(mul[di * q + x] for x in adj)
    if n == 3:
        add = F.add
        adj = []
        for j in range(3):
            for i in range(3):
                rows = [r for r in range(3) if r != i]
                cols = [c for c in range(3) if c != j]
                minor = add[
                    mul[a[rows[0] * 3 + cols[0]] * q + a[rows[1] * 3 + cols[1]]] * q
                    + neg[mul[a[rows[0] * 3 + cols[1]] * q + a[rows[1] * 3 + cols[0]]]]
                ]
                adj.append(minor if (i + j) % 2 == 0 else neg[minor])
        return tuple(mul[di * q + x] for x in adj)
    raise UnsupportedModeError(f"inverse for n={n} not supported")


def group_order(kind: str, n: int, q: int) -> int:
    if kind in ("GL", "SL"):
        order = 1
        for i in range(n):
            order *= q**n - q**i
        return order // (q - 1) if kind == "SL" else order
    if kind in ("GU", "SU"):
        order = q ** (n * (n - 1) // 2)
        for i in range(1, n + 1):
            order *= q**i - (-1) ** i
        return order // (q + 1) if kind == "SU" else order
    raise UnsupportedModeError(f"unknown group kind {kind!r}")


def _enumerate_gl(F: TinyField, n: int) -> list[tuple[int, ...]]:
    q, add, mul = F.q, F.add, F.mul
    vectors = list(itertools.product(range(q), repeat=n))
    out: list[tuple[int, ...]] = []
    rows: list[tuple[int, ...]] = []

    def extend(span: frozenset) -> None:
        if len(rows) == n:
            out.append(tuple(x for row in rows for x in row))
            return
        for v in vectors:
            if v in span:
                continue
            rows.append(v)
            scaled = [
                [mul[c * q + x] for x in v] for c in range(q)
            ]
            bigger = set(span)
            for s in span:
                for cv in scaled:
                    bigger.add(tuple(add[a * q + b] for a, b in zip(s, cv)))
            extend(frozenset(bigger))
            rows.pop()

    extend(frozenset({(0,) * n}))
    return out


def _herm(F: TinyField, u, v, n: int) -> int:
    q, add, mul, frob = F.q, F.add, F.mul, F.frob
    acc = 0
    for i in range(n):
        acc = add[acc * q + mul[frob[u[i]] * q + v[i]]]
    return acc


def _enumerate_gu(F: TinyField, n: int) -> list[tuple[int, ...]]:
    vectors = itertools.product(range(F.q), repeat=n)
    unit = [v for v in vectors if _herm(F, v, v, n) == 1]
    out: list[tuple[int, ...]] = []
    cols: list[tuple[int, ...]] = []

    def extend() -> None:
        if len(cols) == n:
            out.append(tuple(cols[j][i] for i in range(n) for j in range(n)))
            return
        for v in unit:
            if all(_herm(F, c, v, n) == 0 for c in cols):
                cols.append(v)
                extend()
                cols.pop()

    extend()
    return out


def enumerate_matrix_group(kind: str, n: int, q: int) -> tuple[TinyField, list]:
    """Enumerate the group as flat matrices; refuses beyond the caps."""
    if n < 1 or n > _MAX_N:
        raise UnsupportedModeError(f"oracle supports 1 <= n <= {_MAX_N}, got {n}")
    ambient = "GL" if kind in ("GL", "SL") else "GU"
    if group_order(ambient, n, q) > ORACLE_CAP:
        raise UnsupportedModeError(
            f"{ambient}_{n}({q}) exceeds the oracle cap of {ORACLE_CAP}"
        )
    if kind in ("GL", "SL"):
        F = tiny_field(q)
        elements = _enumerate_gl(F, n)
    elif kind in ("GU", "SU"):
        F = tiny_field(q * q)
        elements = _enumerate_gu(F, n)
    else:
        raise UnsupportedModeError(f"unknown group kind {kind!r}")
    if kind in ("SL", "SU"):
        elements = [a for a in elements if mat_det(F, a, n) == 1]
    if len(elements) != group_order(kind, n, q):
        raise InvariantViolationError(
            f"enumerated {len(elements)} elements of {kind}_{n}({q}), "
            f"expected {group_order(kind, n, q)}"
        )
    return F, elements


def _closure(F: TinyField, n: int, gens) -> set:
    ident = mat_identity(n)
    seen = {ident}
    frontier = [ident]
    while frontier:
        fresh = []
        for x in frontier:
            for g in gens:
                y = mat_mul(F, x, g, n)
                if y not in seen:
                    seen.add(y)
                    fresh.append(y)
        frontier = fresh
    return seen

def generating_set(F: TinyField, n: int, elements) -> list:
    """Small deterministic generating set found greedily."""
    gens: list = []
    closure = {mat_identity(n)}
    for x in elements:
        if len(closure) == len(elements):
            break
        if x not in closure:
            gens.append(x)
            closure = _closure(F, n, gens)
    if len(closure) != len(elements):
        raise InvariantViolationError("generating set closure mismatch")
    return gens


def conjugacy_class_reps(F: TinyField, n: int, elements, gens) -> list:
    """One representative per conjugacy class, in enumeration order."""
    gen_pairs = [(g, mat_inv(F, g, n)) for g in gens]
    unseen = set(elements)
    reps = []
    for x in elements:
        if x not in unseen:
            continue
        reps.append(x)
        unseen.discard(x)
        frontier = [x]
        while frontier:
            fresh = []
            for y in frontier:
                for g, gi in gen_pairs:
                    z = mat_mul(F, mat_mul(F, g, y, n), gi, n)
                    if z in unseen:
                        unseen.discard(z)
                        fresh.append(z)
            frontier = fresh
    return reps


def element_order(F: TinyField, n: int, x) -> int:
    ident = mat_identity(n)
    y = x
    k = 1
    while y != ident:
        y = mat_mul(F, y, x, n)
        k += 1
    return k


def ell_regular_class_count(F: TinyField, n: int, elements, ell: int) -> tuple[int, int]:
    """(total class count, count of classes with order prime to ell)."""
    gens = generating_set(F, n, elements)
    reps = conjugacy_class_reps(F, n, elements, gens)
    regular = sum(1 for r in reps if element_order(F, n, r) % ell != 0)
    return len(reps), regular


def _engine_count(kind: str, params: InstanceParams) -> int:
    symbols = enumerate_admissible_symbols(params)
    if kind in ("GL", "GU"):
        return len(symbols)
    if params.ell == 2:
        raise UnsupportedModeError("ell=2 upper bound only")
    if math.gcd(params.n, params.q - params.eps) % params.ell == 0:
        raise UnsupportedModeError("ell divides gcd(n, q-eps)")
    center = center_elements(params)
    eq = params.eq
    seen: set = set()
    total = 0
    for s in symbols:
        canon = min(_acted_admissible_key(z, s, eq) for z in center.elements)
        if canon in seen:
            continue
        seen.add(canon)
        total += kappa(s, params)
    return total


def cross_check(kind: str, n: int, q: int, ell: int) -> dict:
    """Compare the symbolic Brauer character count with the matrix oracle."""
    eps = 1 if kind in ("GL", "SL") else -1
    params = make_params(n, q, eps, ell)
    engine = _engine_count(kind, params)
    F, elements = enumerate_matrix_group(kind, n, q)
    classes, regular = ell_regular_class_count(F, n, elements, ell)
    return {
        "group": f"{kind}_{n}({q})",
        "ell": ell,
        "order": len(elements),
        "classes": classes,
        "ell_regular": regular,
        "engine_count": engine,
        "pass": engine == regular,
    }
