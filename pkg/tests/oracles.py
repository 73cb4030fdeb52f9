"""Independent brute-force oracles the tests check library results against.

Everything here works by literal definition (nested loops over members,
per-round full recomputation) and deliberately shares no code with the
library's convolution/bitmask machinery.
"""

from collections import Counter


def pair_counts_brute(elems):
    """Unordered pair counts r[m] by direct double loop."""
    r = Counter()
    es = sorted(elems)
    for i, p in enumerate(es):
        for q in es[i:]:
            r[p + q] += 1
    return r


def strict_pair_counts_brute(elems):
    """Strict pair counts r'[m] (p < q only)."""
    r = Counter()
    es = sorted(elems)
    for i, p in enumerate(es):
        for q in es[i + 1 :]:
            r[p + q] += 1
    return r


def sums_brute(elems):
    return {p + q for p in elems for q in elems}


def multisums_quadruple(elems):
    """Literal quadruple definition: s+t = u+v, all distinct except possibly u = v."""
    out = set()
    members = list(elems)
    for s in members:
        for t in members:
            for u in members:
                for v in members:
                    if (
                        s + t == u + v
                        and s != t
                        and s != u
                        and s != v
                        and t != u
                        and t != v
                    ):
                        out.add(s + t)
    return out


def strict_multisums_quadruple(elems):
    """Quadruple definition with all four members pairwise distinct."""
    out = set()
    members = list(elems)
    for s in members:
        for t in members:
            for u in members:
                for v in members:
                    if s + t == u + v and len({s, t, u, v}) == 4:
                        out.add(s + t)
    return out


def closure_brute(seed, B, need):
    """Fixpoint by full per-round recomputation of the pair counts."""
    cur = set(seed)
    while True:
        r = pair_counts_brute(cur)
        new = {m for m, c in r.items() if c >= need and m <= B} - cur
        if not new:
            return cur
        cur |= new


def family_member_brute(family, elems, B):
    """Family predicates from the quadruple/pair definitions, judged at horizon B."""
    members = set(elems)
    if family == "sum_free":
        return not (sums_brute(elems) & members)
    if family == "sum_closed":
        return all(m in members for m in sums_brute(elems) if m <= B)
    if family == "multisum_free":
        return not (multisums_quadruple(elems) & members)
    if family == "multisum_set":
        return all(m in members for m in multisums_quadruple(elems) if m <= B)
    raise ValueError(family)


def linear_tail_holds(member_values, B, k, N):
    """Direct scan of the biconditional: n in S <=> k | n for n in (N, B]."""
    members = set(member_values)
    return all((n in members) == (n % k == 0) for n in range(N + 1, B + 1))
