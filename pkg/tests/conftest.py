import random

from hypothesis import strategies as st

from monodromy.hurwitz import DISK, Factorization
from monodromy.sl2 import IDENTITY, IntMatrix2, TorusCurve, TwistPower, mat_mul

TA = IntMatrix2(1, -1, 0, 1)
TB = IntMatrix2(1, 0, 1, 1)
GENS = [TA, TB, IntMatrix2(1, 1, 0, 1), IntMatrix2(1, 0, -1, 1), IntMatrix2(0, -1, 1, 0)]


def random_sl2(rng: random.Random, length: int = 12) -> IntMatrix2:
    A = IDENTITY
    for _ in range(rng.randint(0, length)):
        A = mat_mul(A, rng.choice(GENS))
    return A


def random_curve(rng: random.Random, length: int = 8) -> TorusCurve:
    A = random_sl2(rng, length)
    return TorusCurve.of(A.a, A.c)


def random_twist(rng: random.Random, lefschetz: bool = False) -> TwistPower:
    k = 1 if lefschetz else rng.choice([-3, -2, -1, 1, 2, 3])
    return TwistPower(random_curve(rng), k)


def random_disk(rng: random.Random, n: int | None = None, lefschetz: bool = False) -> Factorization:
    n = rng.randint(2, 7) if n is None else n
    return Factorization(DISK, [random_twist(rng, lefschetz) for _ in range(n)])


def random_sphere(rng: random.Random) -> Factorization:
    """A conjugated and Hurwitz-scrambled E(1)-type tuple, product I."""
    from monodromy.hurwitz import apply_letters, builtin

    f = builtin("E:1").conjugate(random_sl2(rng))
    word = [rng.choice([1, -1]) * rng.randint(1, f.n - 1) for _ in range(rng.randint(0, 6))]
    return apply_letters(f, word)


@st.composite
def sl2_matrices(draw, max_len: int = 12):
    word = draw(st.lists(st.sampled_from(range(len(GENS))), max_size=max_len))
    A = IDENTITY
    for w in word:
        A = mat_mul(A, GENS[w])
    return A


@st.composite
def curves(draw):
    A = draw(sl2_matrices(8))
    return TorusCurve.of(A.a, A.c)


@st.composite
def twists(draw):
    return TwistPower(draw(curves()), draw(st.integers(-5, 5).filter(bool)))


@st.composite
def braid_words(draw, n: int, max_len: int = 10):
    idx = st.integers(1, n - 1)
    letters = draw(st.lists(st.tuples(idx, st.sampled_from([1, -1])), max_size=max_len))
    return tuple(i * s for i, s in letters)



def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(results, key=lambda s: int(s.split()[1])):
        terminalreporter.write_line(results[label])
