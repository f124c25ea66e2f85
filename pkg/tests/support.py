"""Stream generators shared by the test modules."""
import random
from itertools import count

from padic.digits import PadicInt

PRIMES = (2, 3, 5, 7, 13, 65537)


def random_stream(p, rng):
    """A dense stream with independent uniform digits, seeded from ``rng``."""
    local = random.Random(rng.getrandbits(64))
    return PadicInt(p, (local.randrange(p) for _ in count()))


def perturb(a, k, rng):
    """A stream equal to ``a`` below index ``k`` and different at index ``k``."""
    local = random.Random(rng.getrandbits(64))
    p = a.p

    def digits():
        for i in count():
            if i < k:
                yield a.digit(i)
            elif i == k:
                yield (a.digit(i) + local.randrange(1, p)) % p
            else:
                yield local.randrange(p)

    return PadicInt(p, digits())


class Probe:
    """Digit source that records the highest index anyone asked it for."""

    def __init__(self, p, digits):
        self.p = p
        self.highest = -1
        self._digits = digits

    def stream(self):
        def gen():
            for i in count():
                self.highest = i
                yield self._digits(i)

        return PadicInt(self.p, gen())


CRITERIA = {
    1: "oracle equivalence",
    2: "finality squares",
    3: "nonexpansion",
    4: "unfold of phi is identity",
    5: "tilde steps vs add/mul",
    6: "ring laws",
    7: "ultrametric suite",
    8: "productivity",
    9: "CLI corpus",
}

ACCEPTANCE = {}


def verdict(criterion, label, passed, info=""):
    ACCEPTANCE.setdefault(criterion, []).append((label, bool(passed), info))
    print(f"criterion {criterion} [{label}]: {'PASS' if passed else 'FAIL'} {info}")
