"""Annular ladder diagrams: weights, rungs, crossings, and closed words.

A diagram is a base gl_m weight (entries in 0..n, one per upright) and a
bottom-to-top word of letters.  An E-rung of thickness k at index i moves
k units from upright i+1 to upright i; an F-rung the opposite; a crossing
swaps the two adjacent entries.  Uprights are numbered 1 (innermost in
the annular picture) to m, and the closure glues the final weight back
onto the base.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ColorMismatchError, InvalidEntryError, NotClosedError


@dataclass(frozen=True)
class Rung:
    dir: str  # "E" or "F"
    i: int  # index in 1..m-1
    k: int = 1  # thickness >= 1

    def __post_init__(self):
        if self.dir not in ("E", "F"):
            raise ValueError(f"rung direction must be E or F, got {self.dir!r}")
        if self.k < 1:
            raise ValueError("zero-thickness rungs are not allowed")
        if self.i < 1:
            raise ValueError("rung index must be >= 1")

    def to_json_obj(self):
        return {"t": self.dir, "i": self.i, "k": self.k}


@dataclass(frozen=True)
class Crossing:
    i: int  # index in 1..m-1
    sign: int  # +1 or -1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("crossing sign must be +1 or -1")
        if self.i < 1:
            raise ValueError("crossing index must be >= 1")

    def to_json_obj(self):
        return {"t": "X", "i": self.i, "s": self.sign}


def letter_from_json_obj(obj):
    if not isinstance(obj, dict) or "t" not in obj:
        raise ValueError("letter JSON must be an object with a 't' field")
    t = obj["t"]
    if t in ("E", "F"):
        return Rung(t, int(obj["i"]), int(obj.get("k", 1)))
    if t == "X":
        return Crossing(int(obj["i"]), int(obj.get("s", 1)))
    raise ValueError(f"unknown letter type {t!r}")


def apply_letter(weight, letter):
    """The weight above `letter` given the weight `weight` below it."""
    w = list(weight)
    i = letter.i - 1
    if isinstance(letter, Rung):
        if letter.dir == "E":
            w[i] += letter.k
            w[i + 1] -= letter.k
        else:
            w[i] -= letter.k
            w[i + 1] += letter.k
    else:
        w[i], w[i + 1] = w[i + 1], w[i]
    return tuple(w)


@dataclass(frozen=True)
class DiagramWord:
    n: int
    m: int
    base: tuple
    letters: tuple

    def __post_init__(self):
        object.__setattr__(self, "base", tuple(int(x) for x in self.base))
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.m < 1:
            raise ValueError("m must be >= 1")
        if len(self.base) != self.m:
            raise ValueError("base weight length must equal m")
        for let in self.letters:
            if let.i > self.m - 1:
                raise ValueError(f"letter index {let.i} out of range for m={self.m}")

    def validate(self):
        """Return the list of intermediate weights (base first, top last).

        Raises InvalidEntryError if an entry leaves 0..n and NotClosedError
        if the final weight differs from the base.
        """
        weights = [self.base]
        for t, ent in enumerate(self.base):
            if not 0 <= ent <= self.n:
                raise InvalidEntryError(-1, t + 1, ent, self.n)
        w = self.base
        for pos, let in enumerate(self.letters):
            w = apply_letter(w, let)
            i = let.i - 1
            for off in (0, 1):
                if not 0 <= w[i + off] <= self.n:
                    raise InvalidEntryError(pos, i + off + 1, w[i + off], self.n)
            weights.append(w)
        if w != self.base:
            raise NotClosedError(self.base, w)
        return weights

    def is_valid(self) -> bool:
        try:
            self.validate()
        except (InvalidEntryError, NotClosedError):
            return False
        return True

    def is_crossing_free(self) -> bool:
        return all(isinstance(let, Rung) for let in self.letters)

    def crossings(self):
        return [let for let in self.letters if isinstance(let, Crossing)]

    def to_json_obj(self):
        return {
            "n": self.n,
            "m": self.m,
            "base": list(self.base),
            "letters": [let.to_json_obj() for let in self.letters],
        }

    @staticmethod
    def from_json_obj(obj) -> "DiagramWord":
        if not isinstance(obj, dict):
            raise ValueError("DiagramWord JSON must be an object")
        for key in ("n", "m", "base", "letters"):
            if key not in obj:
                raise ValueError(f"DiagramWord JSON is missing {key!r}")
        return DiagramWord(
            int(obj["n"]),
            int(obj["m"]),
            tuple(int(x) for x in obj["base"]),
            tuple(letter_from_json_obj(o) for o in obj["letters"]),
        )


def braid_closure(n: int, colors, braid) -> DiagramWord:
    """The annular closure of a colored braid word.

    `colors` lists the strand colors (1..n) at the base, innermost first;
    `braid` is a list of (index, sign) pairs read bottom to top.  The
    permutation induced by the braid must send the coloring to itself.
    """
    colors = tuple(int(c) for c in colors)
    m = len(colors)
    for c in colors:
        if not 1 <= c <= n:
            raise ColorMismatchError(f"strand color {c} outside 1..{n}")
    letters = []
    current = list(colors)
    for i, sign in braid:
        if not 1 <= i <= m - 1:
            raise ValueError(f"braid index {i} out of range for {m} strands")
        letters.append(Crossing(int(i), int(sign)))
        current[i - 1], current[i] = current[i], current[i - 1]
    if tuple(current) != colors:
        raise ColorMismatchError(
            f"braid closure mismatches colors: {colors} vs {tuple(current)}"
        )
    return DiagramWord(n, m, colors, tuple(letters))


def colored_unknot(n: int, a: int, essential: bool) -> DiagramWord:
    """The a-colored unknot, either essential (winding 1) or trivial.

    The trivial circle is encoded through the cap/cup conversion: an
    n-labeled upright sheds and reabsorbs a units.
    """
    if not 1 <= a <= n:
        raise ValueError(f"color {a} outside 1..{n}")
    if essential:
        return DiagramWord(n, 1, (a,), ())
    return DiagramWord(n, 2, (n, 0), (Rung("F", 1, a), Rung("E", 1, a)))


def kinked_unknot(n: int, a: int, sign: int, essential: bool) -> DiagramWord:
    """An a-colored unknot with one Reidemeister-I kink of the given sign.

    The trivial version crosses the two arcs of the cap/cup circle once.
    The essential version threads the kink loop through an auxiliary
    n-labeled upright, which winds around the annulus once; its class is
    expected to pick up an essential n-circle factor.  Needs a < n (an
    n-colored kink degenerates: the loop arc carries color 0).
    """
    if not 1 <= a < n:
        raise ValueError(f"kink color must satisfy 1 <= a < n, got a={a}, n={n}")
    if essential:
        return with_outer_kink(colored_unknot(n, a, essential=True), sign)
    return DiagramWord(
        n,
        2,
        (n, 0),
        (Rung("F", 1, a), Crossing(1, sign), Rung("E", 1, n - a)),
    )


def with_outer_kink(word: DiagramWord, sign: int) -> DiagramWord:
    """Append a Reidemeister-I kink on the outermost strand of a closure.

    Two auxiliary uprights are added outside the diagram: one carrying an
    n-labeled edge that winds once around the annulus (the cap/cup
    conversion of the kink loop) and one empty lane.  The outer strand's
    color c must satisfy c < n.
    """
    m = word.m
    c = word.base[m - 1]
    n = word.n
    if not 1 <= c < n:
        raise ValueError(f"outer strand color must satisfy 1 <= c < n, got {c}")
    base = word.base + (n, 0)
    gadget = (Rung("F", m + 1, n - c), Crossing(m, sign), Rung("E", m + 1, n - c))
    return DiagramWord(n, m + 2, base, word.letters + gadget)
