"""Direct operator oracle on the weakly monotone and monotone Fock spaces.

Basis tensors e_{i_k} (x) ... (x) e_{i_1} are stored as tuples ``(i_k, ...,
i_1)`` with the most recently created index first; the empty tuple is the
vacuum.  Vectors are sparse dicts from basis tuples to coefficients, where a
coefficient is anything that adds and multiplies: a :class:`LambdaPoly` for
exact symbolic work, or an int/Fraction/float.

Computing <T^n vacuum, vacuum> only ever visits tensors of length <= n, so the
result is exact; there is no truncation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from wmfock.algebra import LambdaPoly

WM = "wm"
MONO = "mono"

EXACT_N_CAP = 12
NUMERIC_N_CAP = 16
M_CAP = 6

State = tuple


class CapError(ValueError):
    pass


def _check_space(space):
    if space not in (WM, MONO):
        raise ValueError(f"space must be 'wm' or 'mono', got {space!r}")


def is_basis_state(s: State, space: str) -> bool:
    if any(i < 1 for i in s):
        return False
    if space == WM:
        return all(a >= b for a, b in zip(s, s[1:]))
    return all(a > b for a, b in zip(s, s[1:]))


def create(i: int, s: State, space: str = WM):
    """Creation operator on a basis tensor; None stands for the zero vector."""
    if i < 1:
        raise ValueError("index must be >= 1")
    if not s:
        return (i,)
    top = s[0]
    ok = i >= top if space == WM else i > top
    return (i,) + s if ok else None


def annihilate(i: int, s: State, space: str = WM):
    if i < 1:
        raise ValueError("index must be >= 1")
    if s and s[0] == i:
        return s[1:]
    return None


def preserve(i: int, s: State, space: str = WM):
    """Projection onto tensors whose leading index is i (kills the vacuum)."""
    if i < 1:
        raise ValueError("index must be >= 1")
    if s and s[0] == i:
        return s
    return None


OPS: dict[str, Callable] = {"+": create, "-": annihilate, "0": preserve}


# -- sparse vectors -------------------------------------------------------------


@dataclass(frozen=True)
class FockVector:
    terms: dict
    space: str = WM

    @classmethod
    def vacuum(cls, space: str = WM, one=None) -> "FockVector":
        return cls({(): LambdaPoly.one() if one is None else one}, space)

    def coefficient(self, s: State):
        return self.terms.get(s, 0)

    def inner_vacuum(self):
        return self.terms.get((), 0)

    def __len__(self):
        return len(self.terms)


def _accumulate(out: dict, s: State, c):
    prev = out.get(s)
    v = c if prev is None else prev + c
    if v == 0 or (isinstance(v, LambdaPoly) and v.is_zero()):
        out.pop(s, None)
    else:
        out[s] = v


def apply_T(
    m: int,
    lam,
    v: FockVector,
    variant: str = "a0",
    max_len: int | None = None,
) -> FockVector:
    """Apply sum_{k<=m} (A_k + A_k^dag + lam*A0_k) to ``v``.

    ``variant="identity"`` replaces the preservation part by lam times the
    identity.  ``lam`` may be a LambdaPoly (use ``LambdaPoly.var()`` for the
    symbolic intensity) or a number.  Tensors longer than ``max_len`` are
    dropped, which is harmless when they can no longer return to the vacuum.
    """
    if variant not in ("a0", "identity"):
        raise ValueError("variant must be 'a0' or 'identity'")
    space = v.space
    out: dict = {}
    for s, c in v.terms.items():
        for i in range(1, m + 1):
            t = create(i, s, space)
            if t is not None and (max_len is None or len(t) <= max_len):
                _accumulate(out, t, c)
            t = annihilate(i, s, space)
            if t is not None:
                _accumulate(out, t, c)
            if variant == "a0":
                t = preserve(i, s, space)
                if t is not None:
                    _accumulate(out, t, c * lam)
        if variant == "identity":
            _accumulate(out, s, c * lam)
    return FockVector(out, space)


def vacuum_moments(
    space: str,
    m: int,
    lam,
    n_max: int,
    variant: str = "a0",
    enforce_caps: bool = True,
) -> list:
    """<T^n vacuum, vacuum> for n = 0..n_max.  ``lam=None`` means symbolic."""
    _check_space(space)
    if m < 1:
        raise ValueError("m must be >= 1")
    symbolic = lam is None or isinstance(lam, LambdaPoly)
    if enforce_caps:
        cap = EXACT_N_CAP if symbolic else NUMERIC_N_CAP
        if n_max > cap:
            raise CapError(f"n = {n_max} exceeds the oracle cap {cap}")
        if m > M_CAP:
            raise CapError(f"m = {m} exceeds the oracle cap {M_CAP}")
    if lam is None:
        lam = LambdaPoly.var()
    one = LambdaPoly.one() if isinstance(lam, LambdaPoly) else type(lam)(1)
    zero = one * 0
    v = FockVector.vacuum(space, one)
    out = [one]
    for step in range(1, n_max + 1):
        # a tensor longer than the remaining number of steps never comes back
        v = apply_T(m, lam, v, variant, max_len=n_max - step)
        out.append(v.terms.get((), zero))
    return out


def vacuum_moment(space: str, m: int, lam, n: int, variant: str = "a0", enforce_caps: bool = True):
    return vacuum_moments(space, m, lam, n, variant, enforce_caps)[n]


# -- relation checks --------------------------------------------------------------


def basis_states(space: str, m: int, max_len: int) -> list[State]:
    out: list[State] = [()]
    frontier: list[State] = [()]
    for _ in range(max_len):
        nxt = []
        for s in frontier:
            for i in range(1, m + 1):
                t = create(i, s, space)
                if t is not None:
                    nxt.append(t)
        out.extend(nxt)
        frontier = nxt
    return out


def apply_word(word: Iterable[tuple], s: State, space: str):
    """Apply operators right to left, as in the written product.

    ``word`` is a sequence of (kind, index) with kind in "+", "-", "0".
    """
    cur = s
    for kind, i in reversed(list(word)):
        if cur is None:
            return None
        cur = OPS[kind](i, cur, space)
    return cur


@dataclass
class RelationResult:
    name: str
    ok: bool
    checked: int
    witness: tuple | None = None


def _identities(space: str, m: int):
    """Yield (name, lhs_word, rhs_word_or_None) for every index choice.

    ``None`` on the right means the zero operator.
    """
    rng = range(1, m + 1)
    if space == WM:
        for i in rng:
            for j in rng:
                if i < j:
                    yield "A+_i A+_j = 0 (i<j)", [("+", i), ("+", j)], None
                    yield "A_j A_i = 0 (i<j)", [("-", j), ("-", i)], None
                if i != j:
                    yield "A_i A+_j = 0 (i!=j)", [("-", i), ("+", j)], None
                    yield "A0_i A+_j = 0 (i!=j)", [("0", i), ("+", j)], None
                    yield "A_j A0_i = 0 (i!=j)", [("-", j), ("0", i)], None
                    yield "A0_i A0_j = 0 (i!=j)", [("0", i), ("0", j)], None
                if i > j:
                    yield "A0_i A_j = 0 (i>j)", [("0", i), ("-", j)], None
                    yield "A+_j A0_i = 0 (i>j)", [("+", j), ("0", i)], None
        for k in rng:
            for j in rng:
                a = j >= k
                yield "A_k A_j A+_j = alpha(j,k) A_k", [("-", k), ("-", j), ("+", j)], [("-", k)] if a else None
                yield "A_j A+_j A+_k = alpha(j,k) A+_k", [("-", j), ("+", j), ("+", k)], [("+", k)] if a else None
                if j >= k:
                    yield "A_j A+_j A_k = A_k (j>=k)", [("-", j), ("+", j), ("-", k)], [("-", k)]
                    yield "A+_k A_j A+_j = A+_k (j>=k)", [("+", k), ("-", j), ("+", j)], [("+", k)]
    else:
        for i in rng:
            for j in rng:
                if i <= j:
                    yield "a+_i a+_j = 0 (i<=j)", [("+", i), ("+", j)], None
                    yield "a_j a_i = 0 (i<=j)", [("-", j), ("-", i)], None
                if i != j:
                    yield "a_i a+_j = 0 (i!=j)", [("-", i), ("+", j)], None
        for k in rng:
            for j in rng:
                d = j > k
                yield "a_k a_j a+_j = [j>k] a_k", [("-", k), ("-", j), ("+", j)], [("-", k)] if d else None
                yield "a_j a+_j a+_k = [j>k] a+_k", [("-", j), ("+", j), ("+", k)], [("+", k)] if d else None
                if j >= k:
                    yield "a_j a+_j a_k = a_k (j>=k)", [("-", j), ("+", j), ("-", k)], [("-", k)]
                    yield "a+_k a_j a+_j = a+_k (j>=k)", [("+", k), ("-", j), ("+", j)], [("+", k)]


def check_relations(m: int, depth: int, space: str = WM, identities=None) -> list[RelationResult]:
    """Verify operator identities on every basis tensor of length <= depth - 1.

    All operators here map basis tensors to basis tensors or zero, so checking
    the identities on basis tensors checks them as operators.
    """
    _check_space(space)
    if depth > 6:
        raise CapError("depth is limited to 6")
    states = basis_states(space, m, depth - 1)
    results: dict[str, RelationResult] = {}
    source = identities if identities is not None else _identities(space, m)
    for name, lhs, rhs in source:
        res = results.setdefault(name, RelationResult(name, True, 0))
        for s in states:
            left = apply_word(lhs, s, space)
            right = None if rhs is None else apply_word(rhs, s, space)
            res.checked += 1
            if left != right and res.ok:
                res.ok = False
                res.witness = (tuple(lhs), s, left, right)
    return list(results.values())


def printed_monotone_identities(m: int):
    """The monotone three-operator identities with the index condition as
    typeset (delta = 1 iff j < k, and j <= k for the absorption rules)."""
    rng = range(1, m + 1)
    for k in rng:
        for j in rng:
            d = j < k
            yield "a_k a_j a+_j = [j<k] a_k (as printed)", [("-", k), ("-", j), ("+", j)], [("-", k)] if d else None
            if j <= k:
                yield "a_j a+_j a_k = a_k (j<=k, as printed)", [("-", j), ("+", j), ("-", k)], [("-", k)]
                yield "a+_k a_j a+_j = a+_k (j<=k, as printed)", [("+", k), ("-", j), ("+", j)], [("+", k)]


def inner_product(u: dict, v: dict):
    return sum(c * v[s] for s, c in u.items() if s in v)
