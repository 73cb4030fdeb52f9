"""Constructive certification that a qualifying set is eventually linear.

The pipeline works on a strictly increasing prefix a_1 < ... < a_L of a set
A, with a cutoff index n, and mirrors the constructive argument stage by
stage:

  * ``check_conditions``: the two hypotheses.  C1: every a_m with m > n has
    two nested representations a_m = a_i + a_j = a_r + a_s with
    i < r <= s < j.  C2: every value above a_n with two representations over
    four pairwise-distinct members occurs in the sequence beyond index n.
  * ``WitnessQuintuple``: five distinct members d, a, b, a+d, b+d with
    k = a + b + d above the cutoff value; such a quintuple forces every
    multiple of k into A, and ``confirm_multiples`` replays that induction
    against a concrete set, certifying each derived value with two
    representations whose four members are pairwise distinct.
  * ``resolve_ladder_pair``: turns two overlapping arithmetic ladders
    {d, 2d, x, x+d, x+2d} into a verified quintuple, by the four-way case
    split on how {x, x+d1} meets {y, y+d2}.
  * ``derive_witness``: the counting construction over the window
    M = 6n - 4: representation triples T_t for each t in the upper window J,
    the set D of values lying in at least three of them, the six-alternative
    case split per d (three of which short-circuit straight into a
    quintuple), and otherwise the pigeonhole collision of the S_d pairs that
    feeds the ladder resolution.
  * ``minimize_modulus``: gcd descent; any member x off-residue mod k that
    recurs at x + s*k drags k down to gcd(x mod k, k); iterate to the least
    modulus supported by the tail.

Every membership claim along the way is verified against the concrete
input, never re-derived from the hypotheses: a failure pinpoints where the
input stops satisfying them, which makes the pipeline usable as a
falsification tool.  All operations are pure functions of their inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ConditionError, ParameterError, WitnessError
from .intset import IntSet, _pair_counts

__all__ = [
    "SequencePrefix",
    "ConditionReport",
    "check_conditions",
    "WitnessQuintuple",
    "MultisumCertificate",
    "MultiplesTrace",
    "search_quintuples",
    "confirm_multiples",
    "LadderPair",
    "LadderResolution",
    "resolve_ladder_pair",
    "DerivationTrace",
    "derive_witness",
    "PeriodStep",
    "MinimalPeriodTrace",
    "minimize_modulus",
    "ModulusResult",
    "extract_modulus",
]


@dataclass(frozen=True)
class SequencePrefix:
    """Initial segment a_1 < ... < a_L of a set, with the cutoff index n.

    The counting construction needs at least 6n - 4 terms.
    """

    a: tuple[int, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(v) for v in self.a))
        if self.n < 1:
            raise ParameterError("n must be >= 1")
        if not self.a or self.a[0] < 1:
            raise ParameterError("prefix terms must be positive integers")
        if any(q <= p for p, q in zip(self.a, self.a[1:])):
            raise ParameterError("prefix terms must be strictly increasing")
        if len(self.a) < 6 * self.n - 4:
            raise ParameterError(
                f"prefix supplies {len(self.a)} terms but the construction needs 6n-4 = {6 * self.n - 4}"
            )

    @property
    def window_length(self) -> int:
        """M = 6n - 4, the number of leading terms the construction uses."""
        return 6 * self.n - 4

    @property
    def cutoff_value(self) -> int:
        """a_n, the value below which nothing is claimed."""
        return self.a[self.n - 1]


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of checking C1 and C2 over a prefix, horizon-exact.

    C1 is checked for every index in (n, L]; C2 for every value up to a_L
    (values beyond a_L are unchecked, never violations).
    """

    n: int
    c1_checked_range: tuple[int, int]
    c1_violations: tuple[int, ...]
    c2_checked_max: int
    c2_violations: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return not self.c1_violations and not self.c2_violations

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "n": self.n,
            "c1_checked_range": list(self.c1_checked_range),
            "c1_violations": list(self.c1_violations),
            "c2_checked_max": self.c2_checked_max,
            "c2_violations": list(self.c2_violations),
        }


def check_conditions(prefix: SequencePrefix) -> ConditionReport:
    """Verify C1 and C2 on the prefix.

    Representations of any value v <= a_L involve members strictly below v,
    so the prefix decides them exactly.  C1 at index m reduces to the value
    a_m having at least two unordered representations (two distinct pairs
    with a common sum nest automatically as i < r <= s < j); C2 to every
    strict multisum value in (a_n, a_L] being a member.
    """
    values = prefix.a
    n, L = prefix.n, len(values)
    arr = np.array(values, dtype=np.int64)
    r, r_strict = _pair_counts(arr)

    c1_violations = tuple(m for m in range(n + 1, L + 1) if r[values[m - 1]] < 2)

    a_n, a_L = values[n - 1], values[-1]
    member = np.zeros(a_L + 1, dtype=bool)
    member[arr] = True
    hi = min(a_L, len(r_strict) - 1)
    vals = np.arange(a_n + 1, hi + 1)
    strict_here = vals[(r_strict[vals] >= 2) & ~member[vals]]
    c2_violations = tuple(int(v) for v in strict_here)

    return ConditionReport(
        n=n,
        c1_checked_range=(n, L),
        c1_violations=c1_violations,
        c2_checked_max=a_L,
        c2_violations=c2_violations,
    )


def _membership(ambient: "IntSet | frozenset[int] | set[int]") -> frozenset[int]:
    if isinstance(ambient, IntSet):
        return ambient.member_set()
    return frozenset(ambient)


@dataclass(frozen=True)
class WitnessQuintuple:
    """d, a, b with d, a, b, a+d, b+d distinct members; generates multiples of k = a+b+d."""

    d: int
    a: int
    b: int

    @property
    def k(self) -> int:
        return self.a + self.b + self.d

    def parts(self) -> tuple[int, int, int, int, int]:
        return (self.d, self.a, self.b, self.a + self.d, self.b + self.d)

    def validate(self, ambient: "IntSet | frozenset[int] | set[int]", floor: int) -> None:
        """Raise WitnessError naming the first failing membership or coincidence."""
        members = _membership(ambient)
        parts = self.parts()
        names = ("d", "a", "b", "a+d", "b+d")
        if min(self.d, self.a, self.b) < 1:
            raise WitnessError(f"witness values must be positive: {self}")
        for name, value in zip(names, parts):
            if value not in members:
                raise WitnessError(f"witness member {name} = {value} is not in the ambient set")
        for i in range(5):
            for j in range(i + 1, 5):
                if parts[i] == parts[j]:
                    raise WitnessError(
                        f"witness values {names[i]} and {names[j]} coincide at {parts[i]}"
                    )
        if self.k <= floor:
            raise WitnessError(f"witness modulus k = {self.k} does not exceed the cutoff {floor}")


def search_quintuples(
    A: IntSet, floor: int, limit: int | None = None
) -> list[WitnessQuintuple]:
    """All witness quintuples over A with k > floor, in lexicographic (d, a, b) order.

    The unordered roles of a and b are canonicalized as a < b.  Exhaustive
    over member triples; intended for desk-scale sets.
    """
    members = A.member_set()
    elems = A.elements
    out: list[WitnessQuintuple] = []
    for d in elems:
        for a in elems:
            if a == d or (a + d) not in members:
                continue
            for b in elems:
                if b <= a:
                    continue
                if b == d or b == a + d or a == b + d:
                    continue
                if (b + d) not in members:
                    continue
                if a + b + d <= floor:
                    continue
                out.append(WitnessQuintuple(d=d, a=a, b=b))
                if limit is not None and len(out) >= limit:
                    return out
    return out


@dataclass(frozen=True)
class MultisumCertificate:
    """A value with two concrete representations, four members pairwise distinct."""

    value: int
    pair_a: tuple[int, int]
    pair_b: tuple[int, int]

    def to_json(self) -> list:
        return [self.value, list(self.pair_a), list(self.pair_b)]


@dataclass(frozen=True)
class MultiplesTrace:
    """Replay of the multiple-generating induction for one witness.

    ``confirmed`` lists every multiple m*k with m*k + max(a, b) + d <= B whose
    whole derivation chain checked out; each derived value carries a
    certificate.  On the first membership failure the offending identity is
    recorded and the replay stops.
    """

    witness: WitnessQuintuple
    k: int
    m_max: int
    confirmed: tuple[int, ...]
    certificates: tuple[MultisumCertificate, ...]
    failure: dict | None
    ok: bool

    def to_json(self) -> dict:
        return {
            "witness": [self.witness.d, self.witness.a, self.witness.b, self.k],
            "m_max": self.m_max,
            "confirmed": list(self.confirmed),
            "certificates": [c.to_json() for c in self.certificates],
            "failure": self.failure,
            "ok": self.ok,
        }


def confirm_multiples(A: IntSet, w: WitnessQuintuple, floor: int = 0) -> MultiplesTrace:
    """Verify, multiple by multiple, that A contains m*k for the witness w.

    The step from m to m+1 passes through m*k + d, m*k + a + d and
    m*k + b + d, so a multiple counts as confirmed only while
    m*k + max(a, b) + d fits under the horizon.  At m = 1 the displayed
    induction identity for k + d degenerates to a single pair; the valid
    disjoint pair {k, d} versus {a+d, b+d} is used instead.
    """
    w.validate(A, floor)
    d, a, b = w.d, w.a, w.b
    k = w.k
    B = A.horizon
    members = A.member_set()
    headroom = max(a, b) + d
    m_max = (B - headroom) // k

    confirmed: list[int] = []
    certificates: list[MultisumCertificate] = []
    failure: dict | None = None

    def check(value: int, pair_a: tuple[int, int], pair_b: tuple[int, int]) -> bool:
        nonlocal failure
        assert pair_a[0] + pair_a[1] == value and pair_b[0] + pair_b[1] == value
        assert len({pair_a[0], pair_a[1], pair_b[0], pair_b[1]}) == 4
        if value not in members:
            failure = {
                "value": value,
                "identity": f"{value} = {pair_a[0]}+{pair_a[1]} = {pair_b[0]}+{pair_b[1]}",
                "pair_a": list(pair_a),
                "pair_b": list(pair_b),
            }
            return False
        certificates.append(MultisumCertificate(value, pair_a, pair_b))
        return True

    for m in range(1, m_max + 1):
        mk = m * k
        prev = (m - 1) * k
        if m == 1:
            mult_cert = ((a + d, b), (b + d, a))
        else:
            mult_cert = ((prev + a + d, b), (prev + b + d, a))
        if not check(mk, *mult_cert):
            break
        confirmed.append(mk)
        if m == 1:
            step_d = ((k, d), (a + d, b + d))
        else:
            step_d = ((prev + b + d, a + d), (prev + a + d, b + d))
        if not check(mk + d, *step_d):
            break
        if not check(mk + a + d, (mk + d, a), (mk, a + d)):
            break
        if not check(mk + b + d, (mk + d, b), (mk, b + d)):
            break

    return MultiplesTrace(
        witness=w,
        k=k,
        m_max=m_max,
        confirmed=tuple(confirmed),
        certificates=tuple(certificates),
        failure=failure,
        ok=failure is None,
    )


@dataclass(frozen=True)
class LadderPair:
    """Two arithmetic ladders {d, 2d, x, x+d, x+2d} whose middles overlap.

    Hypotheses: x != d1, d1 != d2, d2 != y; all ten ladder members lie in the
    ambient set; {x, x+d1} meets {y, y+d2}; and d1 + d2 exceeds the cutoff.
    """

    d1: int
    d2: int
    x: int
    y: int

    def members(self) -> tuple[int, ...]:
        d1, d2, x, y = self.d1, self.d2, self.x, self.y
        return (d1, 2 * d1, x, x + d1, x + 2 * d1, d2, 2 * d2, y, y + d2, y + 2 * d2)

    def validate(self, ambient: "IntSet | frozenset[int] | set[int]", floor: int) -> None:
        if min(self.d1, self.d2, self.x, self.y) < 1:
            raise WitnessError(f"ladder values must be positive: {self}")
        if self.x == self.d1 or self.d1 == self.d2 or self.d2 == self.y:
            raise WitnessError(f"ladder hypothesis needs x != d1 != d2 != y: {self}")
        members = _membership(ambient)
        for value in self.members():
            if value not in members:
                raise WitnessError(f"ladder member {value} is not in the ambient set")
        if not ({self.x, self.x + self.d1} & {self.y, self.y + self.d2}):
            raise WitnessError(f"ladder middles {self} do not overlap")
        if self.d1 + self.d2 <= floor:
            raise WitnessError(
                f"ladder needs d1 + d2 > cutoff, got {self.d1 + self.d2} <= {floor}"
            )


@dataclass(frozen=True)
class LadderResolution:
    """Which overlap case fired and the verified quintuple it produced."""

    case: str  # "i" | "ii" | "iii" | "iv"
    b_doubled: bool
    witness: WitnessQuintuple

    def to_json(self) -> dict:
        w = self.witness
        return {
            "case": self.case,
            "b_doubled": self.b_doubled,
            "witness": [w.d, w.a, w.b, w.k],
        }


def resolve_ladder_pair(
    pair: LadderPair, ambient: "IntSet | frozenset[int] | set[int]", floor: int
) -> LadderResolution:
    """Resolve an overlapping ladder pair into a verified witness quintuple.

    After swapping so that d1 < d2, the first matching case in the fixed
    order (i) x+d1 = y+d2, (ii) x+d1 = y, (iii) x = y+d2, (iv) x = y decides
    d, a, b.  In cases (ii) and (iv), b doubles to 2*d2 exactly when the
    stated coincidence (d2 = x+2*d1, resp. d2 = d1+x) would collide b with
    a+d.  The resulting quintuple is verified numerically; a failure reports
    which member or distinctness broke, signalling that the ambient set does
    not satisfy the hypothesis.
    """
    pair.validate(ambient, floor)
    d1, d2, x, y = pair.d1, pair.d2, pair.x, pair.y
    if d1 > d2:
        d1, d2, x, y = d2, d1, y, x

    b_doubled = False
    if x + d1 == y + d2:
        case, d, a, b = "i", x + d1, d1, d2
    elif x + d1 == y:
        b_doubled = d2 == x + 2 * d1
        case, d, a = "ii", y, d1
        b = 2 * d2 if b_doubled else d2
    elif x == y + d2:
        case, d, a, b = "iii", x, d1, d2
    elif x == y:
        b_doubled = d2 == d1 + x
        case, d, a = "iv", x, d1
        b = 2 * d2 if b_doubled else d2
    else:  # unreachable: validate() demands an overlap
        raise WitnessError(f"no overlap case applies to {pair}")

    witness = WitnessQuintuple(d=d, a=a, b=b)
    witness.validate(ambient, floor)
    return LadderResolution(case=case, b_doubled=b_doubled, witness=witness)


@dataclass(frozen=True, eq=False)
class DerivationTrace:
    """Full record of the counting construction over the window M = 6n - 4.

    T maps each t in the upper window J to its canonical representation
    quadruple (x, y, w, z) with x < y <= w < z and t = x+z = y+w; D collects
    the values lying in at least three T-sets; alt records, per d in D, the
    first matching alternative (1-6) for its three smallest witnesses.
    Alternatives 4-6 short-circuit into a direct quintuple; otherwise the
    S_d = {x, x+d} pairs must collide, and the ladder resolution finishes
    the job.  k is the modulus of whichever witness emerged.
    """

    M: int
    I: tuple[int, ...]
    J: tuple[int, ...]
    T: dict[int, tuple[int, int, int, int]]
    D: tuple[int, ...]
    alt: dict[int, tuple[int, tuple[int, int, int]]]
    S: dict[int, tuple[int, int]]
    direct_witness: WitnessQuintuple | None
    collision: tuple[int, int] | None
    ladder: LadderResolution | None
    k: int

    @property
    def witness(self) -> WitnessQuintuple:
        if self.direct_witness is not None:
            return self.direct_witness
        assert self.ladder is not None
        return self.ladder.witness

    def to_json(self) -> dict:
        w = self.witness
        return {
            "M": self.M,
            "T": [[t, *quad] for t, quad in sorted(self.T.items())],
            "D": list(self.D),
            "alt": [[d, tag, *rst] for d, (tag, rst) in sorted(self.alt.items())],
            "S": [[d, pair[0]] for d, pair in sorted(self.S.items())],
            "collision": list(self.collision) if self.collision else None,
            "lemma2_case": self.ladder.case if self.ladder else None,
            "witness": [w.d, w.a, w.b, w.k],
        }


def _first_alternative(d: int, r: int, s: int, t: int) -> int:
    """First of the six alternatives holding for d with witnesses r < s < t.

    Exactly one of (1)-(3) can hold, and whenever all three fail at least one
    of (4)-(6) holds, so this never falls through for valid inputs.
    """
    if r == 2 * d and t == s + d:
        return 1
    if s == 2 * d and t == r + d:
        return 2
    if t == 2 * d and s == r + d:
        return 3
    if r != 2 * d and s != 2 * d and s != r + d:
        return 4
    if r != 2 * d and t != 2 * d and t != r + d:
        return 5
    if s != 2 * d and t != 2 * d and t != s + d:
        return 6
    raise ConditionError(
        "no_alternative",
        f"no alternative applies to d={d} with witnesses {(r, s, t)}",
        details={"d": d, "witnesses": [r, s, t]},
    )


def _representation_quadruple(
    t: int, window_sorted: Sequence[int], window_set: frozenset[int]
) -> tuple[int, int, int, int] | None:
    """Canonical (x, y, w, z): the two representations of t with least (x, y)."""
    pairs = []
    for lo in window_sorted:
        if 2 * lo > t:
            break
        if (t - lo) in window_set:
            pairs.append((lo, t - lo))
            if len(pairs) == 2:
                break
    if len(pairs) < 2:
        return None
    (x, z), (y, w) = pairs
    assert x < y <= w < z
    return (x, y, w, z)


def derive_witness(prefix: SequencePrefix) -> DerivationTrace:
    """Run the counting construction on the first M = 6n - 4 terms.

    Requires check_conditions(prefix) to pass.  Returns the trace, whose
    witness quintuple has been verified against the prefix window.  The
    named ConditionError kinds (missing_representation, too_few_common,
    excess_overlap, window_membership, no_collision) flag situations the
    hypotheses rule out; hitting one means the input does not satisfy them.
    """
    report = check_conditions(prefix)
    if not report.passed:
        raise ConditionError(
            "conditions_failed",
            "the prefix fails the hypothesis conditions",
            details=report.to_json(),
        )

    n = prefix.n
    M = prefix.window_length
    window = prefix.a[:M]
    I_values = window[: M - 1]
    I_set = frozenset(I_values)
    J_values = window[n:M]
    J_set = frozenset(J_values)
    a_M = window[-1]
    full_window = frozenset(window)
    a_n = prefix.cutoff_value

    T: dict[int, tuple[int, int, int, int]] = {}
    for t in J_values:
        quad = _representation_quadruple(t, I_values, I_set)
        if quad is None:
            raise ConditionError(
                "missing_representation",
                f"no nested representation pair for {t} inside the window",
                details={"t": t},
            )
        T[t] = quad

    containing: dict[int, list[int]] = {}
    for t in J_values:  # ascending, so witness lists stay sorted
        x, y, _, z = T[t]
        for d in {x, y, z}:
            containing.setdefault(d, []).append(t)
    D = tuple(sorted(d for d, ts in containing.items() if len(ts) >= 3))

    alt: dict[int, tuple[int, tuple[int, int, int]]] = {}
    S: dict[int, tuple[int, int]] = {}

    for d in D:
        r, s, t = containing[d][:3]
        tag = _first_alternative(d, r, s, t)
        alt[d] = (tag, (r, s, t))
        if tag in (4, 5, 6):
            a, b = {
                4: (r - d, s - d),
                5: (r - d, t - d),
                6: (s - d, t - d),
            }[tag]
            witness = WitnessQuintuple(d=d, a=a, b=b)
            witness.validate(full_window, a_n)
            return DerivationTrace(
                M=M, I=I_values, J=J_values, T=T, D=D, alt=alt, S=S,
                direct_witness=witness, collision=None, ladder=None, k=witness.k,
            )
        x = (s - d) if tag in (1, 3) else (r - d)
        assert x != d
        ladder_steps = (2 * d, x, x + d, x + 2 * d)
        missing = [v for v in ladder_steps if v not in full_window]
        if missing:
            raise ConditionError(
                "window_membership",
                f"ladder values {missing} for d={d} fall outside the window",
                details={"d": d, "missing": missing},
            )
        assert x in I_set and x + d in I_set
        S[d] = (x, x + d)

    if len(D) < 3 * n - 2:
        raise ConditionError(
            "too_few_common",
            f"|D| = {len(D)} is below the guaranteed 3n-2 = {3 * n - 2}",
            details={"D": list(D), "required": 3 * n - 2},
        )
    overloaded = [d for d in D if len(containing[d]) >= 4]
    if overloaded:
        raise ConditionError(
            "excess_overlap",
            f"values {overloaded} lie in four or more T-sets",
            details={"overloaded": overloaded},
        )

    collision: tuple[int, int] | None = None
    for i in range(len(D)):
        for j in range(i + 1, len(D)):
            if set(S[D[i]]) & set(S[D[j]]):
                collision = (D[i], D[j])
                break
        if collision:
            break
    if collision is None:
        raise ConditionError(
            "no_collision",
            "no two S_d pairs intersect despite the counting bound",
            details={"S": {d: list(p) for d, p in S.items()}},
        )

    d1, d2 = collision
    x, y = S[d1][0], S[d2][0]
    # both 2*d1 and 2*d2 sit in J here, which is what pushes d1+d2 past a_n
    assert 2 * d1 in J_set and 2 * d2 in J_set and d1 + d2 > a_n
    resolution = resolve_ladder_pair(LadderPair(d1=d1, d2=d2, x=x, y=y), full_window, a_n)
    return DerivationTrace(
        M=M, I=I_values, J=J_values, T=T, D=D, alt=alt, S=S,
        direct_witness=None, collision=collision, ladder=resolution,
        k=resolution.witness.k,
    )


@dataclass(frozen=True)
class PeriodStep:
    """One gcd-descent step: member x with residue r recurs at x + s*k."""

    r: int
    x: int
    s: int
    c: int  # c*r == gcd(r, k) (mod k), from the extended gcd
    k_next: int

    def to_json(self) -> list[int]:
        return [self.r, self.x, self.s, self.c, self.k_next]


@dataclass(frozen=True)
class MinimalPeriodTrace:
    """gcd descent from k0 to the least modulus supported by the tail."""

    k0: int
    steps: tuple[PeriodStep, ...]
    k_final: int

    def to_json(self) -> dict:
        return {
            "steps": [s.to_json() for s in self.steps],
            "k_final": self.k_final,
        }


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, u, v) with u*a + v*b = g = gcd(a, b)."""
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    return old_r, old_u, old_v


def minimize_modulus(
    A: IntSet, k0: int, n0: int = 0, min_window: int = 10
) -> MinimalPeriodTrace:
    """Descend from k0 to the least k whose multiples fill the tail of A.

    Precondition (verified): every multiple of k0 in (n0, B] is a member.
    Each pass scans all members in (n0, B - k*min_window] in ascending order,
    exhaustive rather than existential so the trace is deterministic,
    for an x with nonzero residue r = x mod k that recurs at some x + s*k.
    Such an x forces all large values congruent to r, hence to every c*r,
    hence all large multiples of gcd(r, k): k drops to gcd(r, k).  The loop
    stops when every sampled member is congruent to 0.
    """
    if k0 < 1:
        raise ParameterError("k0 must be >= 1")
    if n0 < 0:
        raise ParameterError("n0 must be >= 0")
    B = A.horizon
    member = A.member_mask()
    first = (n0 // k0 + 1) * k0
    mults = np.arange(first, B + 1, k0)
    bad = mults[~member[mults]]
    if bad.size:
        raise ConditionError(
            "multiples_missing",
            f"multiple {int(bad[0])} of k0 = {k0} in ({n0}, {B}] is not a member",
            details={"k0": k0, "first_missing": int(bad[0])},
        )

    elems = A._arr
    k = k0
    steps: list[PeriodStep] = []
    while k > 1:
        hi = B - k * min_window
        pool = elems[(elems > n0) & (elems <= hi)]
        found = None
        for x in pool.tolist():
            r = x % k
            if r == 0:
                continue
            ahead = np.arange(x + k, B + 1, k)
            hits = np.flatnonzero(member[ahead])
            if hits.size == 0:
                continue
            found = (x, r, int(hits[0]) + 1)
            break
        if found is None:
            break
        x, r, s = found
        g, u, _ = _ext_gcd(r, k)
        c = u % k
        assert c >= 1 and (c * r - g) % k == 0
        steps.append(PeriodStep(r=r, x=x, s=s, c=c, k_next=g))
        k = g
    return MinimalPeriodTrace(k0=k0, steps=tuple(steps), k_final=k)


@dataclass(frozen=True, eq=False)
class ModulusResult:
    """Everything the pipeline produced: reports, traces, and the final modulus."""

    k: int
    conditions: ConditionReport
    derivation: DerivationTrace
    minimization: MinimalPeriodTrace

    def to_json(self) -> dict:
        return {
            "conditions": self.conditions.to_json(),
            "part_one": self.derivation.to_json(),
            "part_two": self.minimization.to_json(),
        }


def extract_modulus(
    prefix: SequencePrefix, A: IntSet, min_window: int = 10
) -> ModulusResult:
    """Full pipeline: conditions, counting construction, gcd minimization.

    The prefix must be an initial segment of A.  The construction yields a
    modulus whose multiples all lie in A; the descent then minimizes it
    against the whole horizon (from n0 = 0, since the quintuple argument
    forces every multiple, not only large ones).
    """
    if A.elements[: len(prefix.a)] != prefix.a:
        raise ParameterError("prefix is not an initial segment of the ambient set")
    conditions = check_conditions(prefix)
    if not conditions.passed:
        raise ConditionError(
            "conditions_failed",
            "the prefix fails the hypothesis conditions",
            details=conditions.to_json(),
        )
    derivation = derive_witness(prefix)
    minimization = minimize_modulus(A, derivation.k, n0=0, min_window=min_window)
    return ModulusResult(
        k=minimization.k_final,
        conditions=conditions,
        derivation=derivation,
        minimization=minimization,
    )
