"""Finite p-groups given by consistent power-commutator presentations.

A presentation has generators f_1 .. f_n, each of relative order p, with
relations

    f_i^p     = power_rel[i]      (word over generators with index > i)
    [f_i,f_j] = comm_rel[(i,j)]   (i > j, word over generators with index > i)

where an omitted relation means a trivial right-hand side.  Commutators are
[x,y] = x^-1 y^-1 x y and conjugation is x^t = t^-1 x t.  Once `validate` has
run the local consistency battery, |G| = p^n and every element has a unique
normal form f_1^e1 ... f_n^en with 0 <= e_k < p.

Elements are plain exponent tuples of length n.  Words are sequences of
(generator index, exponent) pairs with 1-based indices and arbitrary integer
exponents; `collect` normalizes them.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field

from .errors import BadDefinition, BadWeight, ConsistencyViolation, SizeCap

MAX_P = 97
MAX_N = 16

Element = tuple
Word = tuple  # of (gen index, exponent) pairs


@dataclass(frozen=True, eq=False)  # eq=False: identity hash, lets lru_cache key on P
class PcPresentation:
    name: str
    p: int
    n: int
    power_rel: tuple = ()  # length n, power_rel[i-1] = word for f_i^p, () = identity
    comm_rel: dict = field(default_factory=dict)  # (i,j) i>j -> word for [f_i,f_j]
    defn: dict = field(default_factory=dict)  # i -> ("pow", j) or ("comm", j, k)
    minimal_count: int = 0
    validated: bool = False

    @property
    def order(self):
        return self.p**self.n

    def generator(self, i):
        """f_i as an element, 1-based."""
        e = [0] * self.n
        e[i - 1] = 1
        return tuple(e)

    def generators(self):
        return [self.generator(i) for i in range(1, self.n + 1)]


def identity(P):
    return (0,) * P.n


def word_of(e):
    """Normal-form word of an exponent vector."""
    return tuple((i + 1, ei) for i, ei in enumerate(e) if ei)


def inverse_word(w):
    return tuple((g, -m) for (g, m) in reversed(w))


def collect(P, w):
    """Collection from the left: normal form of the group element spelled by w."""
    e = [0] * P.n
    return _collect_into(P, e, w)


def _collect_into(P, e, w):
    # invariant: value = normalform(e) * product(stack, top first)
    p = P.p
    n = P.n
    power_rel = P.power_rel
    comm_rel = P.comm_rel
    stack = [(g, m) for (g, m) in reversed(tuple(w)) if m]
    while stack:
        j, m = stack.pop()
        if not (0 < m < p):
            r = m % p
            q = (m - r) // p
            # f_j^m = f_j^r * (f_j^p)^q, powers of f_j commute with each other
            wj = power_rel[j - 1]
            rep = wj if q > 0 else inverse_word(wj)
            for _ in range(abs(q)):
                if rep:
                    stack.extend(reversed(rep))
            if r:
                stack.append((j, r))
            continue
        jj = j - 1
        tail = [(k + 1, e[k]) for k in range(jj + 1, n) if e[k]]
        if not tail:
            s = e[jj] + m
            if s < p:
                e[jj] = s
            else:
                e[jj] = s - p
                wj = power_rel[jj]
                if wj:
                    stack.extend(reversed(wj))
            continue
        # move one f_j across the tail T:  NF(e)*T*f_j^m = NF(e)*f_j*T^{f_j}*f_j^{m-1}
        for k, _ in tail:
            e[k - 1] = 0
        overflow = None
        if e[jj] + 1 < p:
            e[jj] += 1
        else:
            e[jj] = 0
            overflow = power_rel[jj]
        # push in reverse processing order: f_j^{m-1} deepest, then T^{f_j}, then f_j^p word
        if m > 1:
            stack.append((j, m - 1))
        for gk, ek in reversed(tail):
            c = comm_rel.get((gk, j))
            if not c:
                stack.append((gk, ek))
            else:
                # f_k^{f_j} = f_k * [f_k,f_j]; (f_k c)^ek pushed as ek copies
                unit = ((gk, 1),) + tuple(c)
                for _ in range(ek):
                    stack.extend(reversed(unit))
        if overflow:
            stack.extend(reversed(overflow))
    return tuple(e)


def mul(P, a, b):
    return _collect_into(P, list(a), word_of(b))


def inv(P, a):
    return collect(P, inverse_word(word_of(a)))


def pow_(P, a, k):
    if k < 0:
        a = inv(P, a)
        k = -k
    result = identity(P)
    base = a
    while k:
        if k & 1:
            result = mul(P, result, base)
        base = mul(P, base, base)
        k >>= 1
    return result


def comm(P, a, b):
    return mul(P, mul(P, inv(P, a), inv(P, b)), mul(P, a, b))


def conj(P, a, t):
    return mul(P, mul(P, inv(P, t), a), t)


def element_order(P, a):
    """Least k >= 1 with a^k = 1; always a power of p in a p-group."""
    order = 1
    x = a
    e = identity(P)
    while x != e:
        x = pow_(P, x, P.p)
        order *= P.p
        if order > P.order:
            raise SizeCap(f"element order exceeded group order, arithmetic bug: {a}")
    return order


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _check_word(P, w, min_index, context):
    last = 0
    for g, m in w:
        if not (1 <= g <= P.n):
            raise BadWeight(f"{context}: generator index {g} out of range 1..{P.n}")
        if g <= min_index:
            raise BadWeight(f"{context}: index {g} <= {min_index} violates weighted form")
        if g <= last:
            raise ValueError(f"{context}: indices must be strictly increasing, got {g} after {last}")
        last = g
        if not (1 <= m < P.p):
            raise ValueError(f"{context}: exponent {m} not in 1..{P.p - 1}")


def validate(P):
    """Run the local consistency battery; return the presentation marked validated.

    Checks, for the collector defined above:
      - f_k (f_j f_i) = (f_k f_j) f_i for all k > j > i
      - f_j^p f_i = f_j^{p-1} (f_j f_i)  and  f_j (f_i^p) = (f_j f_i) f_i^{p-1} for j > i
      - f_i f_i^p = f_i^p f_i for all i (the power rule's overlap with itself)
      - every defn[i] collects to f_i
    Together these are the standard consistency conditions for a weighted pc
    presentation, so passing them guarantees |G| = p^n and unique normal forms.
    """
    if not _is_prime(P.p):
        raise ValueError(f"p = {P.p} is not prime")
    if P.p > MAX_P or P.n > MAX_N:
        raise SizeCap(f"p <= {MAX_P} and n <= {MAX_N} required, got p={P.p}, n={P.n}")
    if P.n < 1:
        raise ValueError("need at least one generator")
    if len(P.power_rel) != P.n:
        raise ValueError(f"power_rel must have length n={P.n}")
    for i in range(1, P.n + 1):
        _check_word(P, P.power_rel[i - 1], i, f"power_rel[{i}]")
    for (i, j), w in P.comm_rel.items():
        if not (1 <= j < i <= P.n):
            raise ValueError(f"comm_rel key ({i},{j}) needs 1 <= j < i <= n")
        _check_word(P, w, i, f"comm_rel[{i},{j}]")
    d = P.minimal_count
    if not (1 <= d <= P.n):
        raise ValueError(f"minimal_count {d} out of range 1..{P.n}")
    for i, tag in P.defn.items():
        if not (d < i <= P.n):
            raise ValueError(f"defn[{i}]: only non-minimal generators ({d + 1}..{P.n}) take definitions")
        if tag[0] == "pow":
            if not (1 <= tag[1] < i):
                raise ValueError(f"defn[{i}] = pow({tag[1]}): index must be < {i}")
        elif tag[0] == "comm":
            if not (1 <= tag[1] < i and 1 <= tag[2] < i):
                raise ValueError(f"defn[{i}] = comm{tag[1:]}: indices must be < {i}")
        else:
            raise ValueError(f"defn[{i}]: unknown tag {tag[0]!r}")

    p = P.p
    for i in range(1, P.n + 1):
        lhs = collect(P, ((i, p + 1),))  # = f_i * (f_i^p word)
        rhs = mul(P, collect(P, ((i, p),)), P.generator(i))
        if lhs != rhs:
            raise ConsistencyViolation("power/power", (i,), lhs, rhs)
    for j in range(2, P.n + 1):
        for i in range(1, j):
            fji = collect(P, ((j, 1), (i, 1)))
            lhs = mul(P, collect(P, ((j, p),)), P.generator(i))
            rhs = _collect_into(P, [0] * P.n, ((j, p - 1),) + word_of(fji))
            if lhs != rhs:
                raise ConsistencyViolation("power/swap", (j, i), lhs, rhs)
            lhs = collect(P, ((j, 1),) + word_of(collect(P, ((i, p),))))
            rhs = mul(P, fji, collect(P, ((i, p - 1),)))
            if lhs != rhs:
                raise ConsistencyViolation("swap/power", (j, i), lhs, rhs)
    for k in range(3, P.n + 1):
        fk = P.generator(k)
        for j in range(2, k):
            fkj = collect(P, ((k, 1), (j, 1)))
            for i in range(1, j):
                lhs = mul(P, fk, collect(P, ((j, 1), (i, 1))))
                rhs = mul(P, fkj, P.generator(i))
                if lhs != rhs:
                    raise ConsistencyViolation("associativity", (k, j, i), lhs, rhs)

    for i, tag in sorted(P.defn.items()):
        if tag[0] == "pow":
            value = collect(P, ((tag[1], p),))
        else:
            value = comm(P, P.generator(tag[1]), P.generator(tag[2]))
        if value != P.generator(i):
            raise BadDefinition(f"defn[{i}] = {tag} collects to {value}, not f_{i}")

    return dataclasses.replace(P, validated=True)
