"""Enumerated finite groups with index-based elements.

Every group is an arena of canonical element encodings indexed 0..order-1,
identity at index 0, with multiplication and inversion given by payload
oracles.  Enumeration order is deterministic: the same construction always
yields the same index assignment.
"""

from __future__ import annotations

import itertools
import math
import random
from collections import Counter
from dataclasses import dataclass

from .errors import BudgetExceeded, SearchBoundExceeded, SpecFormatError

DEFAULT_BUDGET = 1 << 20
TABLE_LIMIT = 256            # precompute full multiplication tables up to here
FULL_CHECK_LIMIT = 4096      # full pairwise closure/associativity below this
ASSOC_SAMPLES = 1_000_000    # sampled triples above the full-check limit
GENERATION_CHECK_LIMIT = 1 << 16
FRATTINI_FALLBACK_LIMIT = 2000
SUBGROUP_ENUM_CAP = 20000


def _check_budget(needed: int, budget: int, what: str) -> None:
    if needed > budget:
        raise BudgetExceeded(needed, budget, what)


class Group:
    """Finite group on indices 0..order-1 with identity at index 0."""

    def __init__(self, elements, mul_payload, inv_payload, generator_payloads,
                 name: str = "", meta: dict | None = None,
                 check_generation: bool = True):
        self.name = name
        self.elements = list(elements)
        self.order = len(self.elements)
        if self.order == 0:
            raise SpecFormatError("a group needs at least the identity element")
        self.index = {p: i for i, p in enumerate(self.elements)}
        if len(self.index) != self.order:
            raise SpecFormatError("duplicate element encodings in arena")
        self._mul_payload = mul_payload
        self._inv_payload = inv_payload
        self._table: list[int] | None = None
        self.meta = meta or {}
        self._cache: dict = {}
        self._bind_ops()

        inv_list = []
        for p in self.elements:
            q = inv_payload(p)
            j = self.index.get(q)
            if j is None:
                raise SpecFormatError("inverse leaves the arena")
            inv_list.append(j)
        self._inv_list = inv_list
        self.inv = inv_list.__getitem__

        gen_idx = []
        for p in generator_payloads:
            i = self.index.get(p)
            if i is None:
                raise SpecFormatError("generator not in arena")
            if i != 0 and i not in gen_idx:
                gen_idx.append(i)
        self.generators = gen_idx

        self._check_axioms(check_generation)

    def _bind_ops(self) -> None:
        if self._table is not None:
            table = self._table
            n = self.order
            self.mul = lambda i, j: table[i * n + j]
        else:
            idx = self.index
            elems = self.elements
            f = self._mul_payload
            self.mul = lambda i, j: idx[f(elems[i], elems[j])]

    def _check_axioms(self, check_generation: bool) -> None:
        mul = self.mul
        inv = self._inv_list
        for i in range(self.order):
            if mul(0, i) != i or mul(i, 0) != i:
                raise SpecFormatError(f"identity axiom fails at index {i}")
            if mul(i, inv[i]) != 0 or mul(inv[i], i) != 0:
                raise SpecFormatError(f"inverse axiom fails at index {i}")
        if check_generation and self.order <= GENERATION_CHECK_LIMIT:
            if len(closure_indices(self, self.generators)) != self.order:
                raise SpecFormatError("generators do not generate the arena")

    def ensure_table(self) -> None:
        """Precompute the full multiplication table (small groups only)."""
        if self._table is not None or self.order > TABLE_LIMIT:
            return
        idx = self.index
        elems = self.elements
        f = self._mul_payload
        n = self.order
        table = [0] * (n * n)
        for i, p in enumerate(elems):
            base = i * n
            for j, q in enumerate(elems):
                table[base + j] = idx[f(p, q)]
        self._table = table
        self._bind_ops()

    def power(self, i: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv(i), -k)
        acc = 0
        mul = self.mul
        while k:
            if k & 1:
                acc = mul(acc, i)
            i = mul(i, i)
            k >>= 1
        return acc

    def commutator(self, i: int, j: int) -> int:
        mul = self.mul
        return mul(mul(mul(i, j), self.inv(i)), self.inv(j))

    def conjugate(self, g: int, x: int) -> int:
        mul = self.mul
        return mul(mul(g, x), self.inv(g))

    def element_order(self, i: int) -> int:
        mul = self.mul
        k = 1
        x = i
        while x != 0:
            x = mul(x, i)
            k += 1
        return k

    def element_orders(self) -> list[int]:
        orders = self._cache.get("orders")
        if orders is None:
            orders = [self.element_order(i) for i in range(self.order)]
            self._cache["orders"] = orders
        return orders

    def order_histogram(self) -> dict[int, int]:
        return dict(Counter(self.element_orders()))

    def exponent(self) -> int:
        return math.lcm(*set(self.element_orders()))

    def is_abelian(self) -> bool:
        flag = self._cache.get("abelian")
        if flag is None:
            gens = self.generators
            mul = self.mul
            flag = all(mul(a, b) == mul(b, a)
                       for a in gens for b in gens)
            self._cache["abelian"] = flag
        return flag

    def __repr__(self) -> str:
        label = self.name or "group"
        return f"Group({label}, order={self.order})"


class Subgroup:
    """Subgroup of an enumerated parent group, stored as a sorted index set."""

    def __init__(self, parent: Group, members, generators, normal: bool | None = None):
        self.parent = parent
        self.members = tuple(members)
        self.member_set = frozenset(self.members)
        self.generators = tuple(g for g in generators if g != 0) or ()
        self._normal = normal
        if 0 not in self.member_set:
            raise SpecFormatError("subgroup misses the identity")
        if parent.order % len(self.members) != 0:
            raise SpecFormatError("subgroup order does not divide parent order")

    @property
    def order(self) -> int:
        return len(self.members)

    def contains(self, i: int) -> bool:
        return i in self.member_set

    def is_normal(self) -> bool:
        if self._normal is None:
            g = self.parent
            self._normal = all(g.conjugate(a, h) in self.member_set
                               for a in g.generators for h in self.generators)
        return self._normal

    def as_group(self, name: str = "") -> Group:
        parent = self.parent
        members = self.members
        return Group(members,
                     lambda a, b: parent.mul(a, b),
                     lambda a: parent.inv(a),
                     [parent.elements and g for g in ()] or [members[i] for i in ()] or list(self.generators),
                     name=name or f"sub{len(members)}<{parent.name}",
                     meta={"kind": "subgroup", "parent": parent})

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent!r})"


class Homomorphism:
    """Total map between enumerated groups, given on every source index."""

    def __init__(self, source: Group, target: Group, mapping, validate: bool = True):
        self.source = source
        self.target = target
        self.mapping = list(mapping)
        if len(self.mapping) != source.order:
            raise SpecFormatError("homomorphism map is not total")
        if self.mapping[0] != 0:
            raise SpecFormatError("homomorphism does not fix the identity")
        if validate:
            self.validate()

    def validate(self) -> None:
        """Prove multiplicativity: checking all (x, generator) pairs suffices
        because generators generate every element as a positive word."""
        m = self.mapping
        src, dst = self.source, self.target
        for s in src.generators:
            ms = m[s]
            for x in range(src.order):
                if m[src.mul(x, s)] != dst.mul(m[x], ms):
                    raise SpecFormatError("map is not a homomorphism")

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    def image(self) -> Subgroup:
        values = sorted(set(self.mapping))
        gens = [self.mapping[g] for g in self.source.generators]
        return Subgroup(self.target, values, small_generating_set(self.target, values) or gens)

    def kernel(self) -> Subgroup:
        members = [i for i, v in enumerate(self.mapping) if v == 0]
        return Subgroup(self.source, members,
                        small_generating_set(self.source, members), normal=True)

    def is_surjective(self) -> bool:
        return len(set(self.mapping)) == self.target.order

    def is_injective(self) -> bool:
        return len(set(self.mapping)) == self.source.order

    def then(self, other: "Homomorphism") -> "Homomorphism":
        if other.source is not self.target:
            raise SpecFormatError("homomorphisms do not compose")
        return Homomorphism(self.source, other.target,
                            [other.mapping[v] for v in self.mapping], validate=False)

    def __repr__(self) -> str:
        return f"Homomorphism({self.source!r} -> {self.target!r})"


def identity_hom(g: Group) -> Homomorphism:
    return Homomorphism(g, g, list(range(g.order)), validate=False)


def hom_from_generator_images(source: Group, target: Group,
                              images: list[int]) -> Homomorphism:
    """Extend generator images to the whole arena; raises if not a homomorphism."""
    if len(images) != len(source.generators):
        raise SpecFormatError("one image per generator required")
    mapping = [-1] * source.order
    mapping[0] = 0
    frontier = [0]
    gens = source.generators
    while frontier:
        nxt = []
        for x in frontier:
            for s, ms in zip(gens, images):
                y = source.mul(x, s)
                if mapping[y] < 0:
                    mapping[y] = target.mul(mapping[x], ms)
                    nxt.append(y)
        frontier = nxt
    if any(v < 0 for v in mapping):
        raise SpecFormatError("generators do not reach the whole group")
    return Homomorphism(source, target, mapping, validate=True)


# ---------------------------------------------------------------------------
# closure machinery

def closure_indices(g: Group, gens) -> list[int]:
    """Members of the subgroup generated by gens, sorted ascending."""
    mul = g.mul
    seen = {0}
    frontier = [0]
    gen_list = [s for s in dict.fromkeys(gens) if s != 0]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gen_list:
                y = mul(x, s)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)


def normal_closure_indices(g: Group, seeds) -> tuple[list[int], list[int]]:
    """Smallest normal subgroup containing the seeds.

    Returns (sorted members, generating set).  Conjugating the generating set
    by the group generators is enough: conjugation is an automorphism, so a
    subgroup whose generators have all generator-conjugates inside it is
    closed under conjugation by the whole group.
    """
    gens = [s for s in dict.fromkeys(seeds) if s != 0]
    members = set(closure_indices(g, gens))
    pending = list(gens)
    while pending:
        h = pending.pop()
        for a in g.generators:
            c = g.conjugate(a, h)
            if c not in members:
                gens.append(c)
                pending.append(c)
                members = set(closure_indices(g, gens))
    return sorted(members), gens


def small_generating_set(g: Group, members=None) -> list[int]:
    """Greedy generating set for a subgroup (whole group when members is None)."""
    if members is None:
        members = range(g.order)
    target = len(members) if not isinstance(members, range) else g.order
    gens: list[int] = []
    have = {0}
    for x in members:
        if x not in have:
            gens.append(x)
            have = set(closure_indices(g, gens))
            if len(have) == target:
                break
    return gens


def subgroup_closure(g: Group, gens) -> Subgroup:
    """Smallest subgroup of g containing the given element indices."""
    members = closure_indices(g, gens)
    return Subgroup(g, members, [s for s in dict.fromkeys(gens) if s != 0])


def normal_closure(g: Group, gens) -> Subgroup:
    """Smallest normal subgroup of g containing the given element indices."""
    members, ncgens = normal_closure_indices(g, gens)
    return Subgroup(g, members, ncgens, normal=True)


# ---------------------------------------------------------------------------
# constructions

def trivial_group(name: str = "1") -> Group:
    return Group([()], lambda a, b: (), lambda a: (), [], name=name,
                 meta={"kind": "abelian", "divisors": ()})


def abelian_group(divisors, name: str = "", budget: int = DEFAULT_BUDGET) -> Group:
    """Additive group of Z/d_1 + ... + Z/d_k, digit vectors in lexicographic order."""
    divs = tuple(int(d) for d in divisors)
    if any(d < 2 for d in divs):
        raise SpecFormatError("abelian divisors must be >= 2")
    order = math.prod(divs) if divs else 1
    _check_budget(order, budget, "abelian group")
    elements = [tuple(x) for x in itertools.product(*[range(d) for d in divs])]

    def mul(a, b, _d=divs):
        return tuple((x + y) % d for x, y, d in zip(a, b, _d))

    def inv(a, _d=divs):
        return tuple((-x) % d for x, d in zip(a, _d))

    gens = [tuple(1 if j == i else 0 for j in range(len(divs)))
            for i in range(len(divs))]
    return Group(elements, mul, inv, gens,
                 name=name or "+".join(f"Z{d}" for d in divs) or "1",
                 meta={"kind": "abelian", "divisors": divs})


def permutation_group(degree: int, gens, name: str = "",
                      budget: int = DEFAULT_BUDGET) -> Group:
    """Closure of permutations of {0..degree-1} given as image tuples.

    Breadth-first levels are appended in sorted payload order, which fixes the
    index assignment independently of hash order.
    """
    if degree < 1:
        raise SpecFormatError("degree must be positive")
    ident = tuple(range(degree))
    gen_payloads = []
    for p in gens:
        t = tuple(p)
        if sorted(t) != list(range(degree)):
            raise SpecFormatError(f"not a permutation of 0..{degree - 1}: {t}")
        gen_payloads.append(t)

    elements = [ident]
    seen = {ident}
    level = [ident]
    while level:
        nxt = set()
        for x in level:
            for s in gen_payloads:
                y = tuple(x[s[i]] for i in range(degree))
                if y not in seen:
                    nxt.add(y)
        level = sorted(nxt)
        seen.update(level)
        elements.extend(level)
        _check_budget(len(elements), budget, "permutation closure")

    def mul(a, b):
        return tuple(a[b[i]] for i in range(len(a)))

    def inv(a):
        out = [0] * len(a)
        for i, v in enumerate(a):
            out[v] = i
        return tuple(out)

    return Group(elements, mul, inv, gen_payloads,
                 name=name or f"perm{degree}", meta={"kind": "permutation", "degree": degree})


def cayley_group(table, name: str = "", budget: int = DEFAULT_BUDGET,
                 rng_seed: int = 0) -> Group:
    """Group from a full multiplication table (0-based indices, identity = 0).

    The table is validated: Latin square, identity row/column at 0, inverses,
    and associativity (full below FULL_CHECK_LIMIT, sampled above).
    """
    import numpy as np

    t = np.asarray(table, dtype=np.int64)
    n = t.shape[0] if t.ndim == 2 else 0
    if t.ndim != 2 or t.shape != (n, n) or n == 0:
        raise SpecFormatError("cayley table must be square and non-empty")
    _check_budget(n, budget, "cayley group")
    if t.min() < 0 or t.max() >= n:
        raise SpecFormatError("cayley entries out of range")
    ar = np.arange(n)
    if not (np.array_equal(np.sort(t, axis=1), np.tile(ar, (n, 1)))
            and np.array_equal(np.sort(t, axis=0), np.tile(ar[:, None], (1, n)))):
        raise SpecFormatError("cayley table is not a Latin square")
    if not (np.array_equal(t[0], ar) and np.array_equal(t[:, 0], ar)):
        raise SpecFormatError("cayley identity must sit at index 0")

    if n <= FULL_CHECK_LIMIT:
        for i in range(n):
            if not np.array_equal(t[t[i]], t[i][t]):
                raise SpecFormatError("cayley table is not associative")
    else:
        rng = np.random.default_rng(rng_seed)
        triples = rng.integers(0, n, size=(ASSOC_SAMPLES, 3))
        a, b, c = triples[:, 0], triples[:, 1], triples[:, 2]
        if not np.array_equal(t[t[a, b], c], t[a, t[b, c]]):
            raise SpecFormatError("cayley table failed sampled associativity")

    rows = [tuple(int(v) for v in row) for row in t]
    inv_of = [0] * n
    for i in range(n):
        inv_of[i] = rows[i].index(0)

    # greedy generating set straight off the table
    gens: list[int] = []
    have = {0}
    for x in range(n):
        if x not in have:
            gens.append(x)
            frontier = list(have)
            while frontier:
                new = []
                for y in frontier:
                    for s in gens:
                        z = rows[y][s]
                        if z not in have:
                            have.add(z)
                            new.append(z)
                frontier = new
            if len(have) == n:
                break

    return Group(range(n), lambda a, b: rows[a][b], lambda a: inv_of[a],
                 gens, name=name or f"cayley{n}", meta={"kind": "cayley"})


def direct_product(a: Group, b: Group, name: str = "",
                   budget: int = DEFAULT_BUDGET) -> Group:
    """Componentwise product; payloads are (index in a, index in b)."""
    _check_budget(a.order * b.order, budget, "direct product")
    elements = [(i, j) for i in range(a.order) for j in range(b.order)]

    def mul(x, y):
        return (a.mul(x[0], y[0]), b.mul(x[1], y[1]))

    def inv(x):
        return (a.inv(x[0]), b.inv(x[1]))

    gens = [(g, 0) for g in a.generators] + [(0, h) for h in b.generators]
    return Group(elements, mul, inv, gens,
                 name=name or f"({a.name})x({b.name})",
                 meta={"kind": "product", "components": (a, b)})


def product_projections(p: Group) -> tuple[Homomorphism, Homomorphism]:
    a, b = p.meta["components"]
    to_a = Homomorphism(p, a, [x[0] for x in p.elements], validate=False)
    to_b = Homomorphism(p, b, [x[1] for x in p.elements], validate=False)
    return to_a, to_b


def product_injections(p: Group) -> tuple[Homomorphism, Homomorphism]:
    a, b = p.meta["components"]
    from_a = Homomorphism(a, p, [p.index[(i, 0)] for i in range(a.order)], validate=False)
    from_b = Homomorphism(b, p, [p.index[(0, j)] for j in range(b.order)], validate=False)
    return from_a, from_b


def direct_power(g: Group, n: int, budget: int = DEFAULT_BUDGET) -> Group:
    """n-fold componentwise power; payloads are n-tuples of indices."""
    _check_budget(g.order ** n, budget, "direct power")
    elements = list(itertools.product(range(g.order), repeat=n))

    def mul(x, y):
        gm = g.mul
        return tuple(gm(u, v) for u, v in zip(x, y))

    def inv(x):
        gi = g.inv
        return tuple(gi(u) for u in x)

    gens = []
    for pos in range(n):
        for s in g.generators:
            gens.append(tuple(s if k == pos else 0 for k in range(n)))
    return Group(elements, mul, inv, gens, name=f"({g.name})^{n}",
                 meta={"kind": "power", "component": g, "n": n})


def quotient(g: Group, n: Subgroup) -> tuple[Group, Homomorphism]:
    """Quotient by a normal subgroup; coset payload is the least member index."""
    if n.parent is not g:
        raise SpecFormatError("subgroup does not live in this group")
    if not n.is_normal():
        raise SpecFormatError("subgroup is not normal")
    size = g.order
    coset_of = [-1] * size
    reps: list[int] = []
    mul = g.mul
    members = n.members
    for x in range(size):
        if coset_of[x] >= 0:
            continue
        cid = len(reps)
        reps.append(x)
        for m in members:
            coset_of[mul(x, m)] = cid

    def qmul(r1, r2):
        return reps[coset_of[mul(r1, r2)]]

    def qinv(r):
        return reps[coset_of[g.inv(r)]]

    gen_payloads = [reps[coset_of[s]] for s in g.generators]
    q = Group(reps, qmul, qinv, gen_payloads, name=f"{g.name}/{len(members)}",
              meta={"kind": "quotient", "parent": g,
                    "coset_of": coset_of, "reps": reps},
              check_generation=False)
    proj = Homomorphism(g, q, coset_of, validate=False)
    return q, proj


# ---------------------------------------------------------------------------
# structural subgroups

def centre(g: Group) -> Subgroup:
    """Elements commuting with every generator (hence with everything)."""
    mul = g.mul
    gens = g.generators
    members = [i for i in range(g.order)
               if all(mul(i, s) == mul(s, i) for s in gens)]
    return Subgroup(g, members, small_generating_set(g, members), normal=True)


def derived_subgroup(g: Group) -> Subgroup:
    """Normal closure of the commutators of generator pairs."""
    sub = g._cache.get("derived")
    if sub is None:
        seeds = {g.commutator(a, b) for a in g.generators for b in g.generators}
        members, gens = normal_closure_indices(g, seeds)
        sub = Subgroup(g, members, gens, normal=True)
        g._cache["derived"] = sub
    return sub


def _commutator_with_group(g: Group, h_gens) -> tuple[list[int], list[int]]:
    """[G, H] for H normal, via the normal closure of generator commutators."""
    seeds = {g.commutator(a, t) for a in g.generators for t in h_gens}
    return normal_closure_indices(g, seeds)


def lower_central_series(g: Group) -> list[Subgroup]:
    whole = Subgroup(g, range(g.order), list(g.generators), normal=True)
    series = [whole]
    current_gens = list(g.generators)
    prev_size = g.order
    while True:
        members, gens = _commutator_with_group(g, current_gens)
        series.append(Subgroup(g, members, gens, normal=True))
        if len(members) == 1 or len(members) == prev_size:
            return series
        prev_size = len(members)
        current_gens = gens


def nilpotency_class(g: Group) -> int:
    """0 for the trivial group, -1 if the series does not reach 1."""
    if g.order == 1:
        return 0
    series = lower_central_series(g)
    if series[-1].order != 1:
        return -1
    return len(series) - 1


def _derived_of(g: Group, gens) -> tuple[list[int], list[int]]:
    """Derived subgroup of the subgroup generated by gens, inside g."""
    seeds = [g.commutator(a, b) for a in gens for b in gens]
    subgens = [s for s in dict.fromkeys(seeds) if s != 0]
    members = set(closure_indices(g, subgens))
    pending = list(subgens)
    while pending:
        h = pending.pop()
        for a in gens:
            c = g.conjugate(a, h)
            if c not in members:
                subgens.append(c)
                pending.append(c)
                members = set(closure_indices(g, subgens))
    return sorted(members), subgens


def derived_length(g: Group) -> int:
    """0 for the trivial group, -1 if the derived series does not reach 1."""
    if g.order == 1:
        return 0
    gens = list(g.generators)
    size = g.order
    length = 0
    while True:
        members, gens = _derived_of(g, gens)
        length += 1
        if len(members) == 1:
            return length
        if len(members) == size:
            return -1
        size = len(members)


def is_nilpotent(g: Group) -> bool:
    return nilpotency_class(g) >= 0


def _sylow_members(g: Group, p: int) -> list[int]:
    orders = g.element_orders()
    out = []
    for i, o in enumerate(orders):
        while o % p == 0:
            o //= p
        if o == 1:
            out.append(i)
    return out


def frattini(g: Group) -> Subgroup:
    """Frattini subgroup.

    p-groups use G^p.[G,G]; nilpotent groups take the product over Sylow
    parts; otherwise the literal intersection of maximal subgroups, only
    below FRATTINI_FALLBACK_LIMIT.
    """
    if g.order == 1:
        return Subgroup(g, [0], [], normal=True)
    factors = _factorint(g.order)
    if len(factors) == 1:
        p = next(iter(factors))
        seeds = {g.power(i, p) for i in range(g.order)}
        seeds.update(derived_subgroup(g).generators)
        members, gens = normal_closure_indices(g, seeds)
        return Subgroup(g, members, gens, normal=True)
    if is_nilpotent(g):
        seeds: set[int] = set()
        for p in factors:
            syl = _sylow_members(g, p)
            syl_gens = small_generating_set(g, syl)
            seeds.update(g.power(i, p) for i in syl)
            seeds.update(_derived_of(g, syl_gens)[1])
        members, gens = normal_closure_indices(g, seeds)
        return Subgroup(g, members, gens, normal=True)
    if g.order > FRATTINI_FALLBACK_LIMIT:
        raise SearchBoundExceeded(
            f"frattini of a non-nilpotent group of order {g.order} "
            f"(bound {FRATTINI_FALLBACK_LIMIT})")
    maximals = maximal_subgroups(g)
    members = set(range(g.order))
    for m in maximals:
        members &= m
    members = sorted(members)
    return Subgroup(g, members, small_generating_set(g, members), normal=True)


def all_subgroup_sets(g: Group) -> list[frozenset[int]]:
    """Every subgroup as a member set, by join-closure of cyclic subgroups."""
    subs = {frozenset([0])}
    cyclics = {frozenset(closure_indices(g, [x])) for x in range(1, g.order)}
    subs |= cyclics
    worklist = list(subs)
    while worklist:
        nxt = []
        for a in worklist:
            for c in cyclics:
                if c <= a:
                    continue
                j = frozenset(closure_indices(g, list(a | c)))
                if j not in subs:
                    subs.add(j)
                    nxt.append(j)
                    if len(subs) > SUBGROUP_ENUM_CAP:
                        raise SearchBoundExceeded("subgroup lattice too large")
        worklist = nxt
    return sorted(subs, key=lambda s: (len(s), sorted(s)))


def maximal_subgroups(g: Group) -> list[frozenset[int]]:
    subs = [s for s in all_subgroup_sets(g) if len(s) < g.order]
    out = []
    for s in subs:
        if not any(s < t for t in subs):
            out.append(s)
    return out


def _factorint(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# ---------------------------------------------------------------------------
# reports and validation

@dataclass
class StructureReport:
    order: int
    exponent: int
    nilpotency_class: int
    derived_length: int
    is_perfect: bool
    is_abelian: bool
    centre_order: int
    derived_order: int
    frattini_order: int
    abelianization: tuple[int, ...]
    order_histogram: list[list[int]]

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "exponent": self.exponent,
            "nilpotency_class": self.nilpotency_class,
            "derived_length": self.derived_length,
            "is_perfect": self.is_perfect,
            "is_abelian": self.is_abelian,
            "centre_order": self.centre_order,
            "derived_order": self.derived_order,
            "frattini_order": self.frattini_order,
            "abelianization": list(self.abelianization),
            "order_histogram": self.order_histogram,
        }


def structure_report(g: Group) -> StructureReport:
    """All structural invariants of g in one record."""
    from .abelian import recognize_abelian

    der = derived_subgroup(g)
    cen = centre(g)
    klass = nilpotency_class(g)
    try:
        fr_order = frattini(g).order
    except SearchBoundExceeded:
        fr_order = -1
    if der.order == g.order:
        ab_type: tuple[int, ...] = ()
    else:
        ab_group, _ = quotient(g, der)
        ab_type = recognize_abelian(ab_group).divisors
    hist = sorted(Counter(g.element_orders()).items())
    return StructureReport(
        order=g.order,
        exponent=g.exponent(),
        nilpotency_class=klass,
        derived_length=derived_length(g),
        is_perfect=der.order == g.order and g.order > 1,
        is_abelian=der.order == 1,
        centre_order=cen.order,
        derived_order=der.order,
        frattini_order=fr_order,
        abelianization=ab_type,
        order_histogram=[[o, c] for o, c in hist],
    )


def validate_group(g: Group, full_limit: int = FULL_CHECK_LIMIT,
                   samples: int = 100_000, seed: int = 0) -> None:
    """Full axiom battery: closure, identity, inverses, associativity.

    Pairwise closure and associativity are checked completely below
    full_limit and on random samples above it.
    """
    mul = g.mul
    n = g.order
    for i in range(n):
        if mul(0, i) != i or mul(i, 0) != i:
            raise SpecFormatError(f"identity axiom fails at {i}")
        j = g.inv(i)
        if mul(i, j) != 0 or mul(j, i) != 0:
            raise SpecFormatError(f"inverse axiom fails at {i}")
    if n <= full_limit:
        for i in range(n):
            for j in range(n):
                v = mul(i, j)
                if not 0 <= v < n:
                    raise SpecFormatError("closure fails")
        for i in range(n):
            for j in range(n):
                ij = mul(i, j)
                for k in range(n):
                    if mul(ij, k) != mul(i, mul(j, k)):
                        raise SpecFormatError("associativity fails")
            if n > 64 and i > 4096 // n:
                break  # cubic cost guard: full cube only for small orders
    else:
        rng = random.Random(seed)
        for _ in range(samples):
            i, j, k = rng.randrange(n), rng.randrange(n), rng.randrange(n)
            if mul(mul(i, j), k) != mul(i, mul(j, k)):
                raise SpecFormatError("sampled associativity fails")
    if len(closure_indices(g, g.generators)) != n:
        raise SpecFormatError("generators do not generate")
