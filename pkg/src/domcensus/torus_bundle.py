"""Sol torus bundles: Anosov monodromies in SL(2,Z), entry-bounded
conjugacy reduction, and bounded-trace conjugacy classes.

The homeomorphism type of a torus bundle over the circle with Anosov
monodromy is the SL(2,Z)-conjugacy class of its gluing matrix, so
everything here is exact integer matrix work.  States in the search code
are 4-tuples (a, b, c, d), row-major.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import ConjugacyInstabilityError, DomainError

Mat2 = tuple[tuple[int, int], tuple[int, int]]

_MAX_DOUBLINGS = 12


@dataclass(frozen=True, order=True)
class AnosovMatrix:
    """Element of SL(2,Z) with |trace| > 2 (real eigenvalues off the unit
    circle).  Both off-diagonal entries are then automatically nonzero."""

    a: int
    b: int
    c: int
    d: int

    @property
    def trace(self) -> int:
        return self.a + self.d

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)


def validate_anosov(a: int, b: int, c: int, d: int) -> AnosovMatrix:
    det = a * d - b * c
    if det != 1:
        raise DomainError(f"determinant is {det}, not 1")
    if abs(a + d) <= 2:
        raise DomainError(f"not Anosov: |trace| = {abs(a + d)}")
    return AnosovMatrix(a, b, c, d)


def bundle_torsion_order(matrix: AnosovMatrix) -> int:
    """|Tor H_1| of the bundle: |det(I - A)| = |2 - trace|."""
    return abs(2 - matrix.trace)


# --- exact 2x2 helpers on 4-tuples -----------------------------------------


def _mul(x, y):
    return (
        x[0] * y[0] + x[1] * y[2],
        x[0] * y[1] + x[1] * y[3],
        x[2] * y[0] + x[3] * y[2],
        x[2] * y[1] + x[3] * y[3],
    )


def _inv(m):
    # valid for determinant 1
    return (m[3], -m[1], -m[2], m[0])


def _conj_lower(w, m):
    # [[1,0],[w,1]] m [[1,0],[-w,1]]
    a, b, c, d = m
    return (a - w * b, b, c + w * (a - d) - w * w * b, d + w * b)


def _conj_upper(w, m):
    # [[1,w],[0,1]] m [[1,-w],[0,1]]
    a, b, c, d = m
    return (a + w * c, b + w * (d - a) - w * w * c, c, d - w * c)


_MOVES = (
    ((1, 0, 1, 1), lambda m: _conj_lower(1, m)),
    ((1, 0, -1, 1), lambda m: _conj_lower(-1, m)),
    ((1, 1, 0, 1), lambda m: _conj_upper(1, m)),
    ((1, -1, 0, 1), lambda m: _conj_upper(-1, m)),
)


def _to_mat2(m) -> Mat2:
    return ((m[0], m[1]), (m[2], m[3]))


def _from_mat2(m: Mat2):
    return (m[0][0], m[0][1], m[1][0], m[1][1])


# --- trace-bounded reduction ------------------------------------------------


@dataclass(frozen=True)
class ReductionCertificate:
    """Conjugation witness: conjugator * original * conjugator^-1 equals
    the representative, exactly."""

    representative: AnosovMatrix
    conjugator: Mat2

    def verifies(self, original: AnosovMatrix) -> bool:
        p = _from_mat2(self.conjugator)
        lhs = _mul(_mul(p, original.as_tuple()), _inv(p))
        return lhs == self.representative.as_tuple()


def reduce_trace_bounded(matrix: AnosovMatrix, k: int) -> ReductionCertificate:
    """Conjugate ``matrix`` to a representative with every entry bounded by
    2k^2 + 1 in absolute value, given |trace| <= k.

    Descent: while |a| > k, one of b^2 <= 2a^2 or c^2 <= 2a^2 holds (from
    |d| < 2|a| and ad - bc = 1), and conjugating by the corresponding
    elementary matrix shrinks |a| strictly.  The elementary move is applied
    as a generator power with the nearest-integer quotient, so |a| drops to
    a symmetric remainder (at most half the off-diagonal entry) instead of
    by single increments.  Once |a| <= k, the trace bound forces |d| <= 2k,
    |ad| <= 2k^2, and hence |b|, |c| <= |bc| = |ad - 1| <= 2k^2 + 1.

    Ties (both moves available) go to the b-move for determinism.
    """
    if k < 1:
        raise DomainError(f"trace bound must be positive, got {k}")
    if abs(matrix.trace) > k:
        raise DomainError(f"|trace| = {abs(matrix.trace)} exceeds the bound {k}")
    cur = matrix.as_tuple()
    conj = (1, 0, 0, 1)
    while abs(cur[0]) > k:
        a, b, c, d = cur
        if b * b <= 2 * a * a:
            s = 1 if a * b > 0 else -1
            q = (2 * abs(a) + abs(b)) // (2 * abs(b))
            w = s * q
            step = (1, 0, w, 1)
            nxt = _conj_lower(w, cur)
        else:
            assert c * c <= 2 * a * a
            s = -1 if a * c > 0 else 1
            q = (2 * abs(a) + abs(c)) // (2 * abs(c))
            w = s * q
            step = (1, w, 0, 1)
            nxt = _conj_upper(w, cur)
        assert abs(nxt[0]) < abs(a)
        conj = _mul(step, conj)
        cur = nxt
    cert = ReductionCertificate(AnosovMatrix(*cur), _to_mat2(conj))
    assert cert.verifies(matrix)
    bound = 2 * k * k + 1
    assert all(abs(x) <= bound for x in cur)
    return cert


# --- capped conjugation search ----------------------------------------------


def _orbit(start, cap):
    """Closure of ``start`` under the four elementary conjugations, pruning
    any state with an entry beyond ``cap``.  Returns the visited set."""
    seen = {start}
    frontier = deque((start,))
    while frontier:
        state = frontier.popleft()
        for _, move in _MOVES:
            nxt = move(state)
            if nxt in seen:
                continue
            if abs(nxt[0]) > cap or abs(nxt[1]) > cap or abs(nxt[2]) > cap or abs(nxt[3]) > cap:
                continue
            seen.add(nxt)
            frontier.append(nxt)
    return seen


def _partition(seeds, cap, rep_box):
    """Partition ``seeds`` (sorted 4-tuples) by conjugation-closure within
    ``cap``.  Returns (classes, reps): for each class the sorted tuple of
    member seeds, and the lexicographically least visited state whose
    entries fit in ``rep_box``."""
    seed_set = set(seeds)
    assigned = set()
    classes = []
    reps = []
    for seed in seeds:
        if seed in assigned:
            continue
        visited = _orbit(seed, cap)
        members = tuple(sorted(visited & seed_set))
        assigned.update(members)
        classes.append(members)
        reps.append(min(s for s in visited if all(abs(x) <= rep_box for x in s)))
    return classes, reps


def _stable_partition(seeds, initial_cap, rep_box):
    """Cap-doubling driver: return the partition once it is unchanged under
    doubling the working cap, along with its representatives and the cap it
    stabilized at."""
    cap = initial_cap
    classes, reps = _partition(seeds, cap, rep_box)
    for _ in range(_MAX_DOUBLINGS):
        classes2, reps2 = _partition(seeds, 2 * cap, rep_box)
        if classes2 == classes:
            return classes, reps, cap
        cap *= 2
        classes, reps = classes2, reps2
    raise ConjugacyInstabilityError(
        f"partition did not stabilize below cap {2 * cap}"
    )


def _divisor_pairs(value, bound):
    """All (b, c) with b * c == value and |b|, |c| <= bound; value != 0."""
    n = abs(value)
    out = []
    p = 1
    while p * p <= n:
        if n % p == 0:
            q = n // p
            for x, y in ((p, q), (q, p)):
                if x <= bound and y <= bound:
                    if value > 0:
                        out.append((x, y))
                        out.append((-x, -y))
                    else:
                        out.append((x, -y))
                        out.append((-x, y))
        p += 1
    return sorted(set(out))


def enumerate_bounded(k: int, entry_bound: int):
    """All Anosov 4-tuples with |trace| <= k and entries bounded by
    ``entry_bound``, sorted."""
    out = []
    for t in range(-k, k + 1):
        if abs(t) <= 2:
            continue
        for a in range(-entry_bound, entry_bound + 1):
            d = t - a
            if abs(d) > entry_bound:
                continue
            bc = a * d - 1
            if bc == 0:
                continue
            for b, c in _divisor_pairs(bc, entry_bound):
                out.append((a, b, c, d))
    return sorted(out)


def conjugacy_classes_bounded(k: int, entry_cap: int | None = None) -> list[AnosovMatrix]:
    """Representatives of the conjugacy classes among all Anosov matrices
    with |trace| <= k and entries at most 2k^2 + 1.

    The matrices are partitioned by breadth-first closure under conjugation
    by the elementary generators and their inverses, discarding states with
    entries beyond the working cap; the cap starts at 2k^2 + 1 (or
    ``entry_cap``) and doubles until the partition is unchanged.  The
    representative of a class is its lexicographically least member.
    """
    if k < 3:
        raise DomainError(f"need k >= 3 for any Anosov trace, got {k}")
    box = 2 * k * k + 1
    seeds = enumerate_bounded(k, box)
    _, reps, _ = _stable_partition(seeds, entry_cap or box, box)
    return sorted(AnosovMatrix(*r) for r in reps)


def bounded_partition(k: int, cap: int) -> list[tuple]:
    """Single-cap partition of the bounded Anosov matrices (no doubling):
    building block for stability checks.  Classes are sorted member tuples."""
    if k < 3:
        raise DomainError(f"need k >= 3 for any Anosov trace, got {k}")
    box = 2 * k * k + 1
    seeds = enumerate_bounded(k, box)
    classes, _ = _partition(seeds, cap, box)
    return sorted(classes)


def trace_conjugacy_classes(t: int) -> list[AnosovMatrix]:
    """Conjugacy class representatives of the Anosov matrices with trace
    exactly ``t``.

    Every class has a member with |a| <= |t| and entries at most 2t^2 + 1
    (by the trace-bounded reduction), so those members seed the capped
    closure; the partition is stabilized by cap doubling as usual.
    Conjugation preserves the trace, so working one trace at a time is
    exact.
    """
    if abs(t) <= 2:
        raise DomainError(f"not an Anosov trace: |{t}| <= 2")
    k = abs(t)
    box = 2 * k * k + 1
    seeds = []
    for a in range(-k, k + 1):
        d = t - a
        bc = a * d - 1
        if bc == 0:
            continue
        for b, c in _divisor_pairs(bc, box):
            seeds.append((a, b, c, d))
    seeds.sort()
    _, reps, _ = _stable_partition(seeds, box, box)
    return sorted(AnosovMatrix(*r) for r in reps)


# --- conjugacy decision with witness ----------------------------------------


def _bfs_witness(start, goal, cap):
    """Search ``goal`` in the capped closure of ``start``; on success return
    the conjugator Q with Q * start * Q^-1 == goal, else the reachable set."""
    parents = {start: None}
    frontier = deque((start,))
    while frontier:
        state = frontier.popleft()
        for gen, move in _MOVES:
            nxt = move(state)
            if nxt in parents:
                continue
            if abs(nxt[0]) > cap or abs(nxt[1]) > cap or abs(nxt[2]) > cap or abs(nxt[3]) > cap:
                continue
            parents[nxt] = (state, gen)
            if nxt == goal:
                q = (1, 0, 0, 1)
                back = nxt
                while parents[back] is not None:
                    prev, g = parents[back]
                    q = _mul(q, g)
                    back = prev
                return q, None
            frontier.append(nxt)
    return None, set(parents)


def same_bundle(
    first: AnosovMatrix, second: AnosovMatrix
) -> tuple[bool, Mat2 | None]:
    """Decide whether two Anosov monodromies present homeomorphic torus
    bundles, i.e. are SL(2,Z)-conjugate; on success also return a witness
    C with C * first * C^-1 == second.

    Both matrices are first reduced into the entry box 2k^2 + 1 for
    k = |trace|; the reduced pair is then connected by capped
    breadth-first search, doubling the cap until either a path is found or
    the box-restricted reachable set is unchanged across two consecutive
    doublings (the matrices are then reported non-conjugate).
    """
    if first.trace != second.trace:
        return False, None
    k = abs(first.trace)
    box = 2 * k * k + 1
    ra = reduce_trace_bounded(first, k)
    rb = reduce_trace_bounded(second, k)
    pa = _from_mat2(ra.conjugator)
    pb = _from_mat2(rb.conjugator)
    start = ra.representative.as_tuple()
    goal = rb.representative.as_tuple()

    def finish(q):
        witness = _mul(_inv(pb), _mul(q, pa))
        lhs = _mul(_mul(witness, first.as_tuple()), _inv(witness))
        assert lhs == second.as_tuple()
        return True, _to_mat2(witness)

    if start == goal:
        return finish((1, 0, 0, 1))

    cap = box
    stable_streak = 0
    prev_restricted = None
    for _ in range(_MAX_DOUBLINGS):
        q, reached = _bfs_witness(start, goal, cap)
        if q is not None:
            return finish(q)
        restricted = frozenset(
            s for s in reached if all(abs(x) <= box for x in s)
        )
        if restricted == prev_restricted:
            stable_streak += 1
            if stable_streak >= 2:
                return False, None
        else:
            stable_streak = 0
        prev_restricted = restricted
        cap *= 2
    raise ConjugacyInstabilityError(
        f"reachable set did not stabilize below cap {cap}"
    )
