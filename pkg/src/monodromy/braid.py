"""Braid words and the Artin action on free groups.

Words are tuples of signed 1-based generator indices: ``2`` is s2 and
``-2`` is s2^-1.  Braid equality is decided through the Artin
representation B_n -> Aut(F_n), which is faithful.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

DEFAULT_LENGTH_BUDGET = 1_000_000


class WordLengthExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("braid needs at least one strand")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for x in self.letters:
            if x == 0 or abs(x) >= self.n:
                raise ValueError(f"generator index {x} invalid for B_{self.n}")

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.n != other.n:
            raise ValueError("strand counts differ")
        return BraidWord(self.n, self.letters + other.letters)

    def __pow__(self, k: int) -> "BraidWord":
        if k < 0:
            return self.inverse() ** (-k)
        return BraidWord(self.n, self.letters * k)

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple(-x for x in reversed(self.letters)))

    def permutation(self) -> tuple[int, ...]:
        """Induced permutation of strand positions (0-based), images of 0..n-1."""
        perm = list(range(self.n))
        for x in reversed(self.letters):
            i = abs(x) - 1
            perm = [i + 1 if v == i else i if v == i + 1 else v for v in perm]
        return tuple(perm)

    def __str__(self) -> str:
        return format_braid(self.letters)

    @classmethod
    def parse(cls, text: str, n: int) -> "BraidWord":
        return cls(n, parse_word(text))


@dataclass(frozen=True)
class FreeWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(free_reduce_letters(self.letters)))
        for x in self.letters:
            if x == 0 or abs(x) > self.n:
                raise ValueError(f"letter {x} invalid for F_{self.n}")

    @classmethod
    def generator(cls, i: int, n: int) -> "FreeWord":
        return cls(n, (i,))

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(self.n, self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(self.n, tuple(-x for x in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"x{x}" if x > 0 else f"x{-x}^-1" for x in self.letters)


_TOKEN = re.compile(r"^[sSxX]?(\d+)(?:\^(-?\d+))?$")


def parse_word(text: str) -> tuple[int, ...]:
    """Parse ``"s1 s2^-1 s1^3"`` into signed letters."""
    letters: list[int] = []
    for tok in text.replace("*", " ").split():
        m = _TOKEN.match(tok)
        if not m:
            raise ValueError(f"cannot parse token {tok!r}")
        i = int(m.group(1))
        e = int(m.group(2)) if m.group(2) is not None else 1
        if i == 0:
            raise ValueError("generator indices start at 1")
        letters.extend([i if e > 0 else -i] * abs(e))
    return tuple(letters)


def format_braid(letters, prefix: str = "s") -> str:
    """Inverse of :func:`parse_word`, collapsing runs into powers."""
    out = []
    k = 0
    while k < len(letters):
        x = letters[k]
        run = 1
        while k + run < len(letters) and letters[k + run] == x:
            run += 1
        e = run if x > 0 else -run
        out.append(f"{prefix}{abs(x)}" + ("" if e == 1 else f"^{e}"))
        k += run
    return " ".join(out)


def free_reduce_letters(letters) -> list[int]:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def free_reduce(w: FreeWord) -> FreeWord:
    # FreeWord reduces on construction
    return FreeWord(w.n, w.letters)


def _invert(letters):
    return [-x for x in reversed(letters)]


def generator_images(b: BraidWord, budget: int = DEFAULT_LENGTH_BUDGET) -> list[list[int]]:
    """Images of x_1..x_n under the automorphism of ``b``.

    Letters of ``b`` act rightmost-first, so the automorphism of s_a1...s_am
    is phi_a1 o ... o phi_am.  Scanning left to right, composing on the
    right with phi_i only touches the images of x_i and x_{i+1}.
    """
    imgs = [[j] for j in range(1, b.n + 1)]
    for x in b.letters:
        i = abs(x) - 1
        u, v = imgs[i], imgs[i + 1]
        if x > 0:
            # x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
            imgs[i] = free_reduce_letters(u + v + _invert(u))
            imgs[i + 1] = u
        else:
            # x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
            imgs[i] = v
            imgs[i + 1] = free_reduce_letters(_invert(v) + u + v)
        if len(imgs[i]) > budget or len(imgs[i + 1]) > budget:
            raise WordLengthExceeded(
                f"Artin image exceeded {budget} letters after {len(b)}-letter braid prefix"
            )
    return imgs


def _substitute(w, imgs) -> list[int]:
    out: list[int] = []
    for x in w:
        out.extend(imgs[x - 1] if x > 0 else _invert(imgs[-x - 1]))
    return free_reduce_letters(out)


def artin_act(b: BraidWord, w: FreeWord, budget: int = DEFAULT_LENGTH_BUDGET) -> FreeWord:
    if b.n != w.n:
        raise ValueError(f"rank mismatch: braid on {b.n} strands, word in F_{w.n}")
    return FreeWord(w.n, tuple(_substitute(w.letters, generator_images(b, budget))))


def braid_equal(b1: BraidWord, b2: BraidWord, budget: int = DEFAULT_LENGTH_BUDGET) -> bool:
    if b1.n != b2.n:
        raise ValueError("strand counts differ")
    # b1 = b2 iff b1 b2^-1 acts trivially; cheaper than comparing two images
    return all(
        img == [j + 1]
        for j, img in enumerate(generator_images(b1 * b2.inverse(), budget))
    )


def _check_pair(i: int, j: int, n: int):
    if not (1 <= i < j <= n):
        raise ValueError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")


def halftwist_word(i: int, j: int, n: int) -> BraidWord:
    """Half-twist s_ij exchanging punctures i and j.

    s_ij = C s_i C^-1 with C = s_{j-1} ... s_{i+1}; s_{i,i+1} = s_i.
    """
    _check_pair(i, j, n)
    conj = tuple(range(j - 1, i, -1))
    return BraidWord(n, conj + (i,) + tuple(-x for x in reversed(conj)))


def pure_braid_generator(i: int, j: int, n: int) -> BraidWord:
    _check_pair(i, j, n)
    conj = tuple(range(j - 1, i, -1))
    # C s_i^2 C^-1: the square of s_ij with the middle C^-1 C cancelled
    return BraidWord(n, conj + (i, i) + tuple(-x for x in reversed(conj)))


def pure_braid_generators(n: int) -> list[BraidWord]:
    return [pure_braid_generator(i, j, n) for i in range(1, n) for j in range(i + 1, n + 1)]
