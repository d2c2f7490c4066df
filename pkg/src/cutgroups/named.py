"""The table of named groups and their concrete expansions.

=============  ==============================================================
identifier     expansion
=============  ==============================================================
``G1``         AbelianByCyclic([8, 2], (i, j) -> (3i + 4j, j), t=2), order 32
``G2``         AbelianByCyclic([8, 2], (i, j) -> (3i, i + j), t=2), order 32
``D<k>``       dihedral of order k (k even): Metacyclic(k/2, 2, k/2, k/2 - 1)
``Q<k>``       dicyclic of order k (4 | k): Metacyclic(k/2, 2, k/4, k/2 - 1)
``C<k>``       cyclic of order k: Abelian([k])
``Sym(n)``     Permutation on n points generated by (1 2) and (1 2 ... n)
``Alt(n)``     Permutation generated by (1 2 3) and (1 2 ... n) for odd n,
               (2 3 ... n) for even n
=============  ==============================================================

In G1 the normal subgroup is A = <c> x <b> = C8 x C2 with coordinates (i, j)
meaning c^i b^j, and the generator a acts by conjugation.  The relations
b^c = b, b^a = b c^4, c^a = c^3 give c -> c^3 and b -> c^4 b, which is the
matrix [[3, 4], [0, 1]] acting on column coordinates (i, j).  G2 is read the
same way from c^a = c^3 b, b^a = b.

Sym(n) and Alt(n) are only expanded for n <= 9; larger ones are handled
class-wise by :mod:`cutgroups.symfast`.
"""

from __future__ import annotations

import re

from .errors import InvalidSpec, OrderCapExceeded

MAX_REALIZED_DEGREE = 9

G1_SPEC = ("G1", (8, 2), ((3, 4), (0, 1)), 2)
G2_SPEC = ("G2", (8, 2), ((3, 0), (1, 1)), 2)

_PATTERN = re.compile(r"^(?:(G1|G2)|([DQC])(\d+)|(Sym|Alt)\((\d+)\))$")


def cycle_perm(n, cycles):
    """Image tuple of a product of disjoint 0-based cycles on n points."""
    img = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a] = b
    return tuple(img)


def sym_generators(n):
    gens = []
    if n >= 2:
        gens.append(cycle_perm(n, [[0, 1]]))
    if n >= 3:
        gens.append(cycle_perm(n, [list(range(n))]))
    return tuple(gens)


def alt_generators(n):
    if n < 3:
        return ()
    gens = [cycle_perm(n, [[0, 1, 2]])]
    if n >= 4:
        long = list(range(n)) if n % 2 else list(range(1, n))
        gens.append(cycle_perm(n, [long]))
    return tuple(gens)


def parse_identifier(identifier):
    """Split a named identifier into (kind, parameter)."""
    m = _PATTERN.match(identifier.strip())
    if not m:
        raise InvalidSpec(f"unknown named group {identifier!r}")
    if m.group(1):
        return m.group(1), None
    if m.group(2):
        return m.group(2), int(m.group(3))
    return m.group(4), int(m.group(5))


def expand(identifier, cap=None):
    """Concrete GroupSpec for a named identifier."""
    from .engine import Abelian, AbelianByCyclic, Metacyclic, Permutation

    kind, k = parse_identifier(identifier)
    if kind == "G1":
        return AbelianByCyclic(*G1_SPEC[1:])
    if kind == "G2":
        return AbelianByCyclic(*G2_SPEC[1:])
    if kind == "C":
        if k < 1:
            raise InvalidSpec("C<k> needs k >= 1")
        return Abelian((k,))
    if kind == "D":
        if k < 2 or k % 2:
            raise InvalidSpec("D<k> needs an even order k >= 2")
        n = k // 2
        return Metacyclic(n, 2, n, n - 1 if n > 1 else 1)
    if kind == "Q":
        if k < 4 or k % 4:
            raise InvalidSpec("Q<k> needs an order k divisible by 4")
        n = k // 2
        return Metacyclic(n, 2, k // 4, n - 1 if n > 1 else 1)
    if k < 1:
        raise InvalidSpec(f"{kind}(n) needs n >= 1")
    if k > MAX_REALIZED_DEGREE:
        import math
        order = math.factorial(k) // (2 if kind == "Alt" and k > 1 else 1)
        raise OrderCapExceeded(order, cap if cap is not None else MAX_REALIZED_DEGREE,
                               what=f"{kind}({k}) (class-level only)")
    gens = sym_generators(k) if kind == "Sym" else alt_generators(k)
    return Permutation(k, gens)
