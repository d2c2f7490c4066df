"""Class-level data for Sym(n) and Alt(n) from cycle types alone.

Nothing here enumerates permutations, so the alternating group surveys run
up to n = 22 in well under a second per group.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache, reduce

from .errors import JNotCoprime, NOutOfRange

MAX_N = 22

WHOLE, PLUS, MINUS = "Whole", "Plus", "Minus"


def partitions(n, largest=None):
    """Partitions of n as descending tuples, in reverse-lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def is_even_type(parts):
    return sum(p - 1 for p in parts) % 2 == 0


def an_class_splits(parts):
    """True iff the Sym(n)-class of this cycle type breaks into two Alt(n)-classes."""
    parts = tuple(parts)
    if sum(parts) <= 1:
        # Alt(1) and Sym(1) coincide; the lone identity class cannot split
        return False
    return all(p % 2 for p in parts) and len(set(parts)) == len(parts)


def element_order(parts):
    return reduce(math.lcm, parts, 1)


def centralizer_order(parts):
    """z_lambda = prod_i i^{m_i} m_i!, the centralizer order in Sym(n)."""
    z = 1
    for part, mult in Counter(parts).items():
        z *= part ** mult * math.factorial(mult)
    return z


def canonical_cycles(parts):
    """Cycles of the canonical representative: consecutive points, largest part first."""
    cycles = []
    start = 0
    for p in sorted(parts, reverse=True):
        cycles.append(list(range(start, start + p)))
        start += p
    return cycles


def _perm_parity(img):
    seen = [False] * len(img)
    odd = 0
    for i in range(len(img)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = img[j]
            length += 1
        odd += length - 1
    return odd % 2


def power_conjugator(parts, j):
    """Permutation s with s^-1 x s = x^j for the canonical x, cycles mapped in order.

    On a cycle (c_0 ... c_{L-1}) of x, x^j sends c_i to c_{i+j}, so the map
    c_i -> c_{i*j mod L} conjugates x to x^j (with our right-action product).
    """
    n = sum(parts)
    img = list(range(n))
    for cyc in canonical_cycles(parts):
        L = len(cyc)
        for i, c in enumerate(cyc):
            img[c] = cyc[(i * j) % L]
    return img


def conjugator_is_odd(parts, j):
    return _perm_parity(power_conjugator(parts, j)) == 1


def jacobi(a, n):
    """Jacobi symbol (a|n) for odd positive n."""
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


@dataclass(frozen=True, order=True)
class AltClassLabel:
    parts: tuple
    tag: str = WHOLE

    def __post_init__(self):
        if self.tag != WHOLE and not an_class_splits(self.parts):
            raise ValueError(f"cycle type {self.parts} does not split")

    @property
    def order(self):
        return element_order(self.parts)

    def __str__(self):
        body = ",".join(map(str, self.parts))
        return f"[{body}]" + ("" if self.tag == WHOLE else ("+" if self.tag == PLUS else "-"))


def alt_power_class(label, j):
    """Alt(n)-class of x^j for x in the class ``label``; j must be coprime to |x|."""
    o = label.order
    if math.gcd(j, o) != 1:
        raise JNotCoprime(f"j={j} is not coprime to the element order {o}")
    if label.tag == WHOLE:
        return label
    if not conjugator_is_odd(label.parts, j % o):
        return label
    return AltClassLabel(label.parts, MINUS if label.tag == PLUS else PLUS)


def _tag_order(tag):
    return {WHOLE: 0, PLUS: 0, MINUS: 1}[tag]


class VirtualClassTable:
    """Class table for Sym(n) or Alt(n) built from cycle types.

    Exposes the same surface the classifiers use on an enumerated ClassTable:
    ``num_classes``, ``sizes``, ``orders``, ``power_class``, ``inverse_class``,
    ``group_order`` and ``exponent``.  Classes are ordered by cycle type
    ascending (the identity first), Plus before Minus.
    """

    def __init__(self, n, alternating):
        if not 1 <= n <= MAX_N:
            raise NOutOfRange(f"n={n} outside 1..{MAX_N}")
        self.n = n
        self.alternating = alternating
        labels = []
        for parts in sorted(partitions(n)):
            parts = tuple(sorted(parts, reverse=True))
            if alternating and not is_even_type(parts):
                continue
            if alternating and an_class_splits(parts):
                labels += [AltClassLabel(parts, PLUS), AltClassLabel(parts, MINUS)]
            else:
                labels.append(AltClassLabel(parts))
        labels.sort(key=lambda lab: (sorted(lab.parts), _tag_order(lab.tag)))
        self.labels = tuple(labels)
        self._index = {lab: k for k, lab in enumerate(labels)}
        fact = math.factorial(n)
        self.sizes = tuple(
            fact // centralizer_order(lab.parts) // (2 if lab.tag != WHOLE else 1) for lab in labels
        )
        self.orders = tuple(lab.order for lab in labels)
        self.group_order = fact // 2 if alternating and n > 1 else fact
        self.label = f"{'Alt' if alternating else 'Sym'}({n})"

    @property
    def num_classes(self):
        return len(self.labels)

    @cached_property
    def exponent(self):
        return reduce(math.lcm, self.orders, 1)

    def index(self, label):
        return self._index[label]

    def power_class(self, k, j):
        lab = self.labels[k]
        o = lab.order
        j %= o
        if math.gcd(j, o) == 1:
            return self._index[alt_power_class(lab, j)]
        # non-coprime powers change the cycle type and never land in split types
        # except for the identity, which is never split
        return self._index[AltClassLabel(_power_type(lab.parts, j))]

    def inverse_class(self, k):
        return self.power_class(k, -1)


@lru_cache(maxsize=None)
def _power_type(parts, j):
    out = []
    for p in parts:
        g = math.gcd(p, j)
        out += [p // g] * g
    return tuple(sorted(out, reverse=True))


def alt_class_table(n):
    return VirtualClassTable(n, alternating=True)


def sym_class_table(n):
    return VirtualClassTable(n, alternating=False)
