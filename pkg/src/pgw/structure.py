"""Subgroup-level computations: closures, centers, centralizers, central
series, Frattini subgroup, maximal subgroups, omega_1, ranks.

Subgroups are fully enumerated element sets at desk scale.  Comparisons are
always by element set, never by generating list (recorded generating sets are
a convenience for reports and for generator-based tests).  All functions take
a validated presentation and are pure; per-presentation results are memoized.

Fast paths use the cached multiplication tables; every operation also has a
pure-collection fallback so nothing here silently requires the full Cayley
table.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import presentation as pc
from .errors import NotAbelian, NotNormal
from .tables import get_tables


class Subgroup:
    """An explicitly enumerated subgroup with a recorded generating set."""

    def __init__(self, parent, elements, gens):
        self.parent = parent
        self.elements = tuple(sorted(elements))
        self.element_set = frozenset(self.elements)
        self.gens = tuple(gens)

    @property
    def order(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, e):
        return e in self.element_set

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and self.element_set == other.element_set

    def __le__(self, other):
        return self.element_set <= other.element_set

    def __hash__(self):
        return hash(self.element_set)

    def __repr__(self):
        gens = ", ".join(word_str(self.parent, g) for g in self.gens) or "1"
        return f"<subgroup of {self.parent.name} order {self.order} = <{gens}>>"

    def indices(self):
        t = get_tables(self.parent)
        return np.fromiter((t.index[e] for e in self.elements), dtype=np.int32, count=self.order)

    def mask(self):
        t = get_tables(self.parent)
        m = np.zeros(t.N, dtype=bool)
        m[self.indices()] = True
        return m


def word_str(P, e):
    """Render a normal form in the group-file word syntax."""
    parts = [f"g{i + 1}^{x}" for i, x in enumerate(e) if x]
    return " ".join(parts) if parts else "1"


def _from_mask(P, mask, gens=None):
    t = get_tables(P)
    idxs = np.flatnonzero(mask)
    elements = [t.elements[int(i)] for i in idxs]
    if gens is None:
        gens = _greedy_gens(P, idxs)
    return Subgroup(P, elements, gens)


def _greedy_gens(P, sorted_indices):
    """Lex-greedy generating set: add each element not yet generated."""
    t = get_tables(P)
    gens = []
    cur = np.zeros(t.N, dtype=bool)
    cur[0] = True
    for i in sorted_indices:
        i = int(i)
        if not cur[i]:
            gens.append(i)
            cur = t.closure_mask(gens)
    return [t.elements[i] for i in gens]


def closure(P, S):
    """Smallest subgroup containing the elements of S (empty S gives 1)."""
    t = get_tables(P)
    seeds = [t.index[tuple(e)] for e in S]
    mask = t.closure_mask(seeds)
    gens = _greedy_gens(P, [s for s in sorted(set(seeds)) if s != 0])
    return _from_mask(P, mask, gens)


@lru_cache(maxsize=None)
def whole_group(P):
    t = get_tables(P)
    return Subgroup(P, t.elements, P.generators())


def trivial_subgroup(P):
    return Subgroup(P, [pc.identity(P)], [])


def _centralizer_mask(P, targets):
    """Mask of {x : [x, s] = 1 for every s in targets (element tuples)}."""
    t = get_tables(P)
    if t.full is not None:
        mask = np.ones(t.N, dtype=bool)
        for s in targets:
            mask &= t.comm_col(t.index[s]) == 0
        return mask
    one = pc.identity(P)
    mask = np.ones(t.N, dtype=bool)
    for x in range(t.N):
        e = t.elements[x]
        mask[x] = all(pc.comm(P, e, s) == one for s in targets)
    return mask


def centralizer(P, S):
    """C_G(S); S may be a Subgroup (generator test) or a single Element."""
    targets = S.gens if isinstance(S, Subgroup) else (tuple(S),)
    return _from_mask(P, _centralizer_mask(P, targets))


@lru_cache(maxsize=None)
def center(P):
    return _from_mask(P, _centralizer_mask(P, P.generators()))


def center_of(P, H):
    """Z(H): the center of H as a group, embedded back in G."""
    mask = _centralizer_mask(P, H.gens) & H.mask()
    return _from_mask(P, mask)


def is_abelian(P, H=None):
    gens = P.generators() if H is None else H.gens
    one = pc.identity(P)
    return all(
        pc.comm(P, a, b) == one for i, a in enumerate(gens) for b in gens[i + 1 :]
    )


def commutator_subgroup(P, A, B):
    """<[a, b] : a in A, b in B>, over all element pairs."""
    t = get_tables(P)
    ai = A.indices()
    if t.full is not None:
        T, inv = t.full, t.inv
        seen = np.zeros(t.N, dtype=bool)
        a_inv = inv[ai]
        for b in B.indices():
            left = T[a_inv, inv[b]]
            right = T[ai, b]
            seen[T[left, right]] = True
        seeds = np.flatnonzero(seen)
    else:
        seeds_set = {t.index[pc.comm(P, a, b)] for a in A.elements for b in B.elements}
        seeds = sorted(seeds_set)
    mask = t.closure_mask(seeds)
    return _from_mask(P, mask)


@lru_cache(maxsize=None)
def derived(P):
    G = whole_group(P)
    return commutator_subgroup(P, G, G)


@lru_cache(maxsize=None)
def agemo(P):
    """G^p = <g^p : g in G>."""
    t = get_tables(P)
    seeds = np.unique(t.pth_power())
    mask = t.closure_mask(seeds)
    return _from_mask(P, mask)


@lru_cache(maxsize=None)
def frattini(P):
    """Phi(G) = G^p G' for p-groups."""
    t = get_tables(P)
    mask = t.closure_mask(np.flatnonzero(agemo(P).mask() | derived(P).mask()))
    return _from_mask(P, mask)


@dataclass(frozen=True)
class CentralSeries:
    kind: str  # "upper" or "lower"
    terms: tuple  # Subgroups; upper: 1 = Z_0 <= Z_1 <= ... = G; lower: G = g_1 >= ... >= 1


@lru_cache(maxsize=None)
def upper_central_series(P):
    t = get_tables(P)
    terms = [trivial_subgroup(P)]
    cur = terms[0].mask()
    gens = [t.index[g] for g in P.generators()]
    while cur.sum() < t.N:
        if t.full is not None:
            nxt = np.ones(t.N, dtype=bool)
            for g in gens:
                nxt &= cur[t.comm_col(g)]
        else:
            nxt = np.zeros(t.N, dtype=bool)
            for x in range(t.N):
                e = t.elements[x]
                nxt[x] = all(
                    cur[t.index[pc.comm(P, e, gg)]] for gg in P.generators()
                )
        if nxt.sum() == cur.sum():
            raise AssertionError("upper central series stalled below G")  # p-groups are nilpotent
        terms.append(_from_mask(P, nxt))
        cur = nxt
    return CentralSeries("upper", tuple(terms))


@lru_cache(maxsize=None)
def lower_central_series(P):
    G = whole_group(P)
    terms = [G]
    while terms[-1].order > 1:
        nxt = commutator_subgroup(P, terms[-1], G)
        if nxt.order == terms[-1].order:
            raise AssertionError("lower central series stalled above 1")
        terms.append(nxt)
    return CentralSeries("lower", tuple(terms))


def nilpotency_class(P):
    lower = lower_central_series(P)
    upper = upper_central_series(P)
    c = len(lower.terms) - 1
    assert len(upper.terms) - 1 == c, "upper and lower series disagree on class"
    return c


def second_center(P):
    """Z_2(G), the preimage of Z(G/Z(G))."""
    terms = upper_central_series(P).terms
    return terms[min(2, len(terms) - 1)]


@lru_cache(maxsize=None)
def frattini_coordinates(P):
    """(basis, coords): a lex-least lift of a basis of G/Phi(G), plus the
    coordinate vector of every element's Phi-coset with respect to it."""
    t = get_tables(P)
    p = P.p
    F = frattini(P)
    fidx = F.indices()

    # lift a basis: lex-least element outside the span, repeatedly
    basis = []
    span = F.mask().copy()
    while span.sum() < t.N:
        nxt = int(np.flatnonzero(~span)[0])
        basis.append(nxt)
        span = t.closure_mask(list(fidx) + basis)
    d = len(basis)
    assert p**d * F.order == t.N

    coords = np.full((t.N, d), -1, dtype=np.int32)
    for combo in np.ndindex(*([p] * d)):
        rep = 0
        for b, c in zip(basis, combo):
            r = int(rep)
            for _ in range(c):
                r = int(t.mul_idx(r, b))
            rep = r
        if t.full is not None:
            coset = t.full[rep, fidx]
        else:
            coset = np.fromiter(
                (t.mul_idx(rep, int(i)) for i in fidx), dtype=np.int32, count=F.order
            )
        assert np.all(coords[coset, 0] == -1), "cosets overlap; arithmetic bug"
        coords[coset] = combo

    return tuple(t.elements[b] for b in basis), coords


@lru_cache(maxsize=None)
def maximal_subgroups(P):
    """All index-p subgroups: preimages of hyperplanes of G/Phi(G)."""
    t = get_tables(P)
    p = P.p
    basis, coords = frattini_coordinates(P)
    d = len(basis)

    out = []
    for phi in _dual_vectors(p, d):
        dot = coords @ np.array(phi, dtype=np.int32)
        mask = (dot % p) == 0
        M = _from_mask(P, mask)
        assert M.order * p == t.N
        out.append(M)
    return tuple(out)


def _dual_vectors(p, d):
    """Nonzero vectors of F_p^d up to scalar, first nonzero entry 1, lex order."""
    vecs = []
    for v in np.ndindex(*([p] * d)):
        nz = [c for c in v if c]
        if nz and nz[0] == 1:
            vecs.append(v)
    assert len(vecs) == (p**d - 1) // (p - 1)
    return vecs


def omega1(P, A):
    """{a in A : a^p = 1}, for abelian A."""
    gens = A.gens
    one = pc.identity(P)
    if any(
        pc.comm(P, a, b) != one for i, a in enumerate(gens) for b in gens[i + 1 :]
    ):
        raise NotAbelian(f"omega1 needs an abelian subgroup, got order {A.order} non-abelian")
    t = get_tables(P)
    pth = t.pth_power()
    mask = A.mask() & (pth == 0)
    return _from_mask(P, mask)


def exponent(P, H=None):
    """exp(H): largest element order (H defaults to G)."""
    t = get_tables(P)
    idxs = np.arange(t.N, dtype=np.int32) if H is None else H.indices()
    pth = t.pth_power()
    e = 1
    cur = idxs.astype(np.int32)
    while np.any(cur != 0):
        cur = pth[cur]
        e *= P.p
    return e


def rank(P, H=None):
    """d(H) = log_p |H / Phi(H)|, with Phi(H) computed inside H."""
    if H is None:
        H = whole_group(P)
    if H.order == 1:
        return 0
    t = get_tables(P)
    hidx = H.indices()
    pth = t.pth_power()
    seeds = set(int(i) for i in pth[hidx])
    if t.full is not None:
        T, inv = t.full, t.inv
        h_inv = inv[hidx]
        for b in hidx:
            left = T[h_inv, inv[b]]
            right = T[hidx, b]
            seeds.update(int(i) for i in T[left, right])
    else:
        seeds.update(
            t.index[pc.comm(P, a, b)] for a in H.elements for b in H.elements
        )
    phi_h = t.closure_mask(sorted(seeds))
    quot = H.order // int(phi_h.sum())
    d = round(np.log(quot) / np.log(P.p))
    assert P.p**d == quot
    return d


def quotient_facts(P, A, B):
    """Order, elementary-abelianness and rank of A/B, at coset level."""
    if not B.element_set <= A.element_set:
        raise NotNormal("B is not contained in A")
    for a in A.gens:
        for b in B.gens:
            if pc.conj(P, b, a) not in B:
                raise NotNormal(f"conjugate of {b} by {a} leaves B")
    order = A.order // B.order
    t = get_tables(P)
    aidx = A.indices()
    bmask = B.mask()
    pth = t.pth_power()
    powers_ok = bool(np.all(bmask[pth[aidx]]))
    if t.full is not None:
        T, inv = t.full, t.inv
        a_inv = inv[aidx]
        comms_ok = True
        for b in aidx:
            left = T[a_inv, inv[b]]
            right = T[aidx, b]
            if not np.all(bmask[T[left, right]]):
                comms_ok = False
                break
    else:
        comms_ok = all(
            pc.comm(P, x, y) in B for x in A.elements for y in A.elements
        )
    ea = powers_ok and comms_ok
    r = None
    if ea:
        r = round(np.log(order) / np.log(P.p)) if order > 1 else 0
        assert P.p**r == order or order == 1
    return {"order": order, "elementary_abelian": ea, "rank": r}
