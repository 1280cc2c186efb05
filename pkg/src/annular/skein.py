"""The annular web evaluation algorithm and the skein algebra of circles.

Any crossing-free closed ladder word reduces to an exact Z[q,q^-1]-linear
combination of labeled essential circles.  The rewriting engine uses three
kinds of moves, all valid in the n-bounded annular web module:

* merge: two adjacent same-direction rungs on the same index combine into
  one, contributing a quantum binomial coefficient;
* slide: adjacent rungs commute when their uprights are disjoint, or when
  they share one upright and both deposit into it or both withdraw from
  it; rotating the word around the annulus is always allowed;
* switch: an F-rung directly below an E-rung on the same index expands
  into a sum of E-below-F configurations whose coefficients are quantum
  binomials (signed, via the negative-upper-argument identity, when the
  local weight inequality fails).  Terms whose weights leave 0..n vanish.

Rungless uprights are emitted as circles (label 0 uprights are deleted
silently).  The default strategy reduces at the innermost available
upright; randomized strategies exist for the confluence test suite.
"""

from __future__ import annotations

import os
from collections import deque

from .errors import InvalidEntryError, NonTerminatingError
from .ladder import DiagramWord, Rung, apply_letter
from .qpoly import LaurentPoly, quantum_binomial

# Step budget: STEP_BUDGET_FACTOR * total rung thickness * (n*m)^2 committed
# rewrites. Generous; the fuse firing on valid input means a bug, not a big
# example.
STEP_BUDGET_FACTOR = 256
_SLIDE_SEARCH_CAP = 400_000


class SkeinElement:
    """A finitely supported map from circle-label multisets to LaurentPoly.

    Keys are sorted tuples of labels in 1..n.  The empty tuple is the unit
    of the (commutative) nesting product.
    """

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for key, poly in terms.items():
                if poly:
                    self.terms[tuple(sorted(key))] = poly

    @staticmethod
    def unit(n: int) -> "SkeinElement":
        return SkeinElement(n, {(): LaurentPoly.one()})

    def __eq__(self, other):
        if not isinstance(other, SkeinElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError("cannot add skein elements with different n")
        out = dict(self.terms)
        for key, poly in other.terms.items():
            s = out.get(key, LaurentPoly.zero()) + poly
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return SkeinElement(self.n, out)

    def __sub__(self, other):
        return self + other.scale(LaurentPoly.monomial(0, -1))

    def scale(self, poly) -> "SkeinElement":
        if isinstance(poly, int):
            poly = LaurentPoly.monomial(0, poly)
        return SkeinElement(self.n, {k: p * poly for k, p in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def strip_n_circles(self) -> "SkeinElement":
        """Delete all n-labels from circle multisets (the n-circle is a unit)."""
        out = SkeinElement(self.n)
        for key, poly in self.terms.items():
            stripped = tuple(a for a in key if a != self.n)
            out = out + SkeinElement(self.n, {stripped: poly})
        return out

    def to_json_obj(self):
        return [
            {"circles": list(key), "coeff": poly.to_json_obj()}
            for key, poly in sorted(self.terms.items())
        ]

    @staticmethod
    def from_json_obj(n, obj) -> "SkeinElement":
        terms = {}
        for entry in obj:
            key = tuple(sorted(int(a) for a in entry["circles"]))
            terms[key] = LaurentPoly.from_json_obj(entry["coeff"])
        return SkeinElement(n, terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = [f"{{{','.join(map(str, k))}}}: {p!r}" for k, p in sorted(self.terms.items())]
        return " + ".join(bits)


def multiply(x: SkeinElement, y: SkeinElement) -> SkeinElement:
    """Annular nesting product: multiset union of keys, product of coefficients."""
    if x.n != y.n:
        raise ValueError("cannot multiply skein elements with different n")
    out = {}
    for k1, p1 in x.terms.items():
        for k2, p2 in y.terms.items():
            key = tuple(sorted(k1 + k2))
            s = out.get(key, LaurentPoly.zero()) + p1 * p2
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return SkeinElement(x.n, out)


class RepClass:
    """A Z[q,q^-1]-linear combination of irreducible classes.

    Keys are partitions (weakly decreasing tuples of positive ints) with at
    most n rows; the empty partition is the trivial class.
    """

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for key, poly in terms.items():
                if poly:
                    self.terms[tuple(key)] = poly

    def __eq__(self, other):
        if not isinstance(other, RepClass):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError("cannot add rep classes with different n")
        out = dict(self.terms)
        for key, poly in other.terms.items():
            s = out.get(key, LaurentPoly.zero()) + poly
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return RepClass(self.n, out)

    def scale(self, poly) -> "RepClass":
        if isinstance(poly, int):
            poly = LaurentPoly.monomial(0, poly)
        return RepClass(self.n, {k: p * poly for k, p in self.terms.items()})

    def at_q1(self):
        """Specialize q = 1: dict partition -> int."""
        return {k: sum(p.coeffs.values()) for k, p in self.terms.items()}

    def to_json_obj(self):
        return [
            {"partition": list(key), "coeff": poly.to_json_obj()}
            for key, poly in sorted(self.terms.items())
        ]

    @staticmethod
    def from_json_obj(n, obj) -> "RepClass":
        terms = {}
        for entry in obj:
            key = tuple(int(a) for a in entry["partition"])
            terms[key] = LaurentPoly.from_json_obj(entry["coeff"])
        return RepClass(n, terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = [f"{k}: {p!r}" for k, p in sorted(self.terms.items())]
        return " + ".join(bits)


# ---------------------------------------------------------------------------
# the evaluation engine


def _rung_deposits_into(rung: Rung, upright: int) -> bool:
    return upright == (rung.i if rung.dir == "E" else rung.i + 1)


def _can_swap(lower: Rung, upper: Rung) -> bool:
    """Whether two vertically adjacent rungs may slide past each other."""
    d = abs(lower.i - upper.i)
    if d >= 2:
        return True
    if d == 0:
        return False
    shared = max(lower.i, upper.i)
    return _rung_deposits_into(lower, shared) == _rung_deposits_into(upper, shared)


def _cleanup(n, base, letters, circles):
    """Emit every upright no rung touches; drop 0-labeled ones silently."""
    base = list(base)
    letters = list(letters)
    circles = list(circles)
    changed = True
    while changed and base:
        changed = False
        touched = set()
        for let in letters:
            touched.add(let.i)
            touched.add(let.i + 1)
        for u in range(len(base), 0, -1):
            if u in touched:
                continue
            label = base[u - 1]
            if label > 0:
                circles.append(label)
            del base[u - 1]
            letters = [
                Rung(l.dir, l.i - 1, l.k) if l.i > u else l for l in letters
            ]
            changed = True
            break
    return tuple(base), tuple(letters), tuple(circles)


def _rotated(base, letters):
    return apply_letter(base, letters[0]), letters[1:] + letters[:1]


def _candidates(letters):
    """Productive adjacent pairs: (priority, index, position, kind)."""
    found = []
    for t in range(len(letters) - 1):
        lo, hi = letters[t], letters[t + 1]
        if lo.i != hi.i:
            continue
        if lo.dir == hi.dir:
            found.append((0, lo.i, t, "merge"))
        elif lo.dir == "F" and hi.dir == "E":
            found.append((1, lo.i, t, "switch"))
    return found


def _find_productive(n, base, letters, rng):
    """Slide/rotate until some adjacent pair merges or switches.

    Breadth-first search over arrangements reachable by legal slides and
    rotations; slides preserve the skein class exactly, so only the found
    arrangement matters.  Returns (base, letters, position, kind).
    """
    start = (tuple(base), tuple(letters))
    queue = deque([start])
    seen = {start}
    while queue:
        b, ls = queue.popleft()
        cands = _candidates(ls)
        if cands:
            if rng is None:
                cands.sort()
                _, _, t, kind = cands[0]
            else:
                _, _, t, kind = cands[rng.randrange(len(cands))]
            return b, ls, t, kind
        if len(seen) > _SLIDE_SEARCH_CAP:
            raise NonTerminatingError("slide search exceeded its cap")
        neighbors = []
        if len(ls) > 1:
            neighbors.append(_rotated(b, ls))
        for t in range(len(ls) - 1):
            if _can_swap(ls[t], ls[t + 1]):
                swapped = ls[:t] + (ls[t + 1], ls[t]) + ls[t + 2 :]
                neighbors.append((b, swapped))
        if rng is not None:
            rng.shuffle(neighbors)
        for nb in neighbors:
            if nb not in seen:
                seen.add(nb)
                queue.append(nb)
    raise NonTerminatingError("no productive rewrite found; word cannot be stuck")


def _word_is_valid(n, base, letters):
    w = base
    for let in letters:
        w = apply_letter(w, let)
        i = let.i - 1
        if not (0 <= w[i] <= n and 0 <= w[i + 1] <= n):
            return False
    return True


def _apply_merge(coeff, base, letters, t):
    lo, hi = letters[t], letters[t + 1]
    merged = Rung(lo.dir, lo.i, lo.k + hi.k)
    new_letters = letters[:t] + (merged,) + letters[t + 2 :]
    return [(coeff * quantum_binomial(lo.k + hi.k, lo.k), base, new_letters)]


def _apply_switch(n, coeff, base, letters, t):
    """Expand an (F below, E above) pair on one index into E-below-F terms."""
    lo, hi = letters[t], letters[t + 1]
    j1, j2 = lo.k, hi.k
    w = base
    for let in letters[:t]:
        w = apply_letter(w, let)
    k, l = w[lo.i - 1], w[lo.i]
    children = []
    for jp in range(min(j1, j2) + 1):
        c = quantum_binomial(k - j1 - l + j2, jp)
        if c.is_zero():
            continue
        repl = []
        if j2 - jp > 0:
            repl.append(Rung("E", lo.i, j2 - jp))
        if j1 - jp > 0:
            repl.append(Rung("F", lo.i, j1 - jp))
        new_letters = letters[:t] + tuple(repl) + letters[t + 2 :]
        if _word_is_valid(n, base, new_letters):
            children.append((coeff * c, base, new_letters))
    return children


def evaluate(word: DiagramWord, rng=None, step_budget=None) -> SkeinElement:
    """Evaluate a crossing-free closed ladder word to a sum of circles.

    Deterministic for rng=None (innermost-first strategy, canonical slide
    search); passing a random.Random instance randomizes the reduction
    order, which must not change the result (confluence).
    """
    if not word.is_crossing_free():
        raise ValueError("evaluate needs a crossing-free word")
    word.validate()
    n = word.n
    if step_budget is None:
        env = os.environ.get("ANNULAR_STEP_BUDGET")
        if env is not None:
            step_budget = int(env)
        else:
            thickness = sum(let.k for let in word.letters)
            step_budget = STEP_BUDGET_FACTOR * max(1, thickness) * (n * word.m) ** 2
    result = {}
    stack = [(LaurentPoly.one(), word.base, word.letters, ())]
    steps = 0
    while stack:
        coeff, base, letters, circles = stack.pop()
        base, letters, circles = _cleanup(n, base, letters, circles)
        if not letters:
            key = tuple(sorted(circles))
            s = result.get(key, LaurentPoly.zero()) + coeff
            if s:
                result[key] = s
            else:
                result.pop(key, None)
            continue
        steps += 1
        if steps > step_budget:
            raise NonTerminatingError(
                f"rewrite budget {step_budget} exceeded; implementation bug"
            )
        b, ls, t, kind = _find_productive(n, base, letters, rng)
        if kind == "merge":
            children = _apply_merge(coeff, b, ls, t)
        else:
            children = _apply_switch(n, coeff, b, ls, t)
        for child_coeff, child_base, child_letters in children:
            stack.append((child_coeff, child_base, child_letters, circles))
    return SkeinElement(n, result)


# ---------------------------------------------------------------------------
# expansion in the irreducible basis


def _vertical_strips(lam, a, max_rows):
    """Partitions obtained from lam by adding a vertical strip of size a."""
    padded = list(lam) + [0] * (max_rows - len(lam))
    out = []

    def rec(row, remaining, acc):
        if remaining > max_rows - row:
            return
        if row == max_rows:
            if remaining == 0:
                out.append(tuple(x for x in acc if x > 0))
            return
        for add in (0, 1):
            if add > remaining:
                continue
            val = padded[row] + add
            if acc and val > acc[-1]:
                continue
            rec(row + 1, remaining - add, acc + [val])

    rec(0, a, [])
    return out


def sln_normalize_partition(lam, n):
    """Delete full height-n columns: subtract the n-th row from every row."""
    lam = tuple(lam)
    if len(lam) < n:
        return lam
    c = lam[n - 1]
    return tuple(x - c for x in lam if x - c > 0)


def to_irreducible(x: SkeinElement, sln_normalize: bool = False) -> RepClass:
    """Expand circle multisets into the irreducible (Schur) basis.

    Each circle label a is the class of the a-th exterior power, so a
    multiset expands by the iterated vertical-strip Pieri rule, with
    partitions capped at n rows.  With sln_normalize, full height-n
    columns are removed.
    """
    n = x.n
    out = RepClass(n)
    for circles, coeff in x.terms.items():
        parts = {(): LaurentPoly.one()}
        for a in circles:
            new = {}
            for lam, c in parts.items():
                for mu in _vertical_strips(lam, a, n):
                    s = new.get(mu, LaurentPoly.zero()) + c
                    if s:
                        new[mu] = s
                    else:
                        new.pop(mu, None)
            parts = new
        contrib = {}
        for lam, c in parts.items():
            key = sln_normalize_partition(lam, n) if sln_normalize else lam
            s = contrib.get(key, LaurentPoly.zero()) + c
            if s:
                contrib[key] = s
            else:
                contrib.pop(key, None)
        out = out + RepClass(n, contrib).scale(coeff)
    return out


def evaluate_in_s3(x: SkeinElement) -> LaurentPoly:
    """Embed the annulus in S^3: each a-circle becomes its quantum dimension."""
    total = LaurentPoly.zero()
    for circles, coeff in x.terms.items():
        value = coeff
        for a in circles:
            value = value * quantum_binomial(x.n, a)
        total = total + value
    return total
