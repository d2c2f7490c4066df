"""Text syntax for group specifications.

Grammar (whitespace between tokens is ignored)::

    spec     := perm | metacyclic | abelian | abc | product | sym | alt | literal
    perm     := "perm" "(" INT ";" gen ("," gen)* ")"      gen := ("(" INT* ")")+
    metacyclic := "metacyclic" "(" INT "," INT "," INT "," INT ")"
    abelian  := "abelian" "(" INT ("," INT)* ")"
    abc      := "abc" "(" ints ";" matrix ";" INT ")"       matrix := "[" row ("," row)* "]"
    product  := "product" "(" spec ("," spec)* ")"
    sym/alt  := ("sym" | "alt") "(" INT ")"
    literal  := "G1" | "G2" | "D"INT | "Q"INT | "C"INT | "Sym(" INT ")" | "Alt(" INT ")"

Permutation points are 1-based in text and 0-based in the parsed spec.
"""

from __future__ import annotations

from .engine import Abelian, AbelianByCyclic, DirectProduct, Metacyclic, Named, Permutation
from .errors import InvalidSpec, ParseError

_KEYWORDS = ("perm", "metacyclic", "abelian", "abc", "product", "sym", "alt")


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, expected):
        raise ParseError(len(self.text[: self.pos].encode("utf-8")), expected, self.text)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.error([repr(ch)])
        self.pos += 1

    def accept(self, ch):
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def integer(self):
        self.skip()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        digits = self.text[start:self.pos]
        if digits in ("", "-"):
            self.pos = start
            self.error(["integer"])
        return int(digits)

    def word(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalnum():
            self.pos += 1
        return self.text[start:self.pos], start

    def int_list(self, closer):
        vals = [self.integer()]
        while self.accept(","):
            vals.append(self.integer())
        if self.peek() != closer:
            self.error(["','", repr(closer)])
        return vals

    # -- productions -----------------------------------------------------------

    def spec(self):
        word, start = self.word()
        if not word:
            self.error(list(_KEYWORDS) + ["G1", "G2", "D<k>", "Q<k>", "C<k>"])
        low = word.lower()
        if low == "perm":
            return self.perm()
        if low == "metacyclic":
            self.expect("(")
            vals = self.int_list(")")
            self.expect(")")
            if len(vals) != 4:
                raise InvalidSpec("metacyclic takes exactly four parameters n, t, l, r")
            return Metacyclic(*vals)
        if low == "abelian":
            self.expect("(")
            vals = self.int_list(")")
            self.expect(")")
            return Abelian(tuple(vals))
        if low == "abc":
            return self.abc()
        if low == "product":
            self.expect("(")
            parts = [self.spec()]
            while self.accept(","):
                parts.append(self.spec())
            if self.peek() != ")":
                self.error(["','", "')'"])
            self.pos += 1
            return DirectProduct(tuple(parts))
        if low in ("sym", "alt"):
            self.expect("(")
            n = self.integer()
            self.expect(")")
            return Named(f"{low.capitalize()}({n})")
        if word in ("G1", "G2"):
            return Named(word)
        if word[0] in "DQC" and word[1:].isdigit():
            k = int(word[1:])
            return Abelian((k,)) if word[0] == "C" else Named(word)
        self.pos = start
        self.error(list(_KEYWORDS) + ["G1", "G2", "D<k>", "Q<k>", "C<k>"])

    def perm(self):
        self.expect("(")
        n = self.integer()
        if n < 1:
            raise InvalidSpec("degree must be positive")
        self.expect(";")
        gens = [self.generator(n)]
        while self.accept(","):
            gens.append(self.generator(n))
        self.expect(")")
        return Permutation(n, tuple(gens))

    def generator(self, n):
        img = list(range(n))
        if self.peek() != "(":
            self.error(["'('"])
        while self.peek() == "(":
            self.pos += 1
            cycle = []
            while self.peek() not in (")", ""):
                pt = self.integer()
                if not 1 <= pt <= n:
                    raise InvalidSpec(f"point {pt} outside 1..{n}")
                cycle.append(pt - 1)
            self.expect(")")
            if len(set(cycle)) != len(cycle):
                raise InvalidSpec("repeated point in a cycle")
            step = list(range(n))
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                step[a] = b
            img = [step[i] for i in img]      # earlier cycles act first
        return tuple(img)

    def abc(self):
        self.expect("(")
        inv = self.int_list(";")
        self.expect(";")
        self.expect("[")
        rows = [self.row()]
        while self.accept(","):
            rows.append(self.row())
        self.expect("]")
        self.expect(";")
        t = self.integer()
        self.expect(")")
        return AbelianByCyclic(tuple(inv), tuple(rows), t)

    def row(self):
        self.expect("[")
        vals = self.int_list("]")
        self.expect("]")
        return tuple(vals)


def parse_spec(text):
    """Parse spec text into a GroupSpec; raises ParseError with a byte offset."""
    p = _Parser(text)
    spec = p.spec()
    if p.peek() != "":
        p.error(["end of input"])
    return spec


def _cycles(img):
    seen = set()
    out = []
    for start in range(len(img)):
        if start in seen or img[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        j = img[start]
        while j != start:
            cyc.append(j)
            seen.add(j)
            j = img[j]
        out.append(cyc)
    return out


def render(spec):
    """Canonical text for a spec; parse_spec(render(s)) == s."""
    if isinstance(spec, Permutation):
        gens = []
        for img in spec.generators:
            cyc = _cycles(img)
            gens.append("".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cyc) or "()")
        return f"perm({spec.degree}; {', '.join(gens)})"
    if isinstance(spec, Metacyclic):
        return f"metacyclic({spec.n},{spec.t},{spec.l},{spec.r})"
    if isinstance(spec, Abelian):
        return "abelian(" + ",".join(map(str, spec.invariants)) + ")"
    if isinstance(spec, AbelianByCyclic):
        rows = ",".join("[" + ",".join(map(str, r)) + "]" for r in spec.action)
        return f"abc({','.join(map(str, spec.invariants))}; [{rows}]; {spec.t})"
    if isinstance(spec, DirectProduct):
        return "product(" + ", ".join(render(f) for f in spec.factors) + ")"
    if isinstance(spec, Named):
        ident = spec.identifier
        if ident.startswith(("Sym(", "Alt(")):
            return ident[:3].lower() + ident[3:]
        return ident
    raise InvalidSpec(f"cannot render {spec!r}")
