"""Group presentations: parsing, printing, and coset enumeration.

Concrete syntax (whitespace between tokens is ignored)::

    presentation := '<' gen_list '|' rel_list '>'
    gen_list     := IDENT (',' IDENT)*
    rel_list     := relation (',' relation)*
    relation     := word ('=' word)?
    word         := '1' | factor ('*' factor)*
    factor       := base ('^' INT)?
    base         := IDENT | '(' word ')'

A relation ``u = v`` is stored as the relator ``u*v^-1``.  Relators are freely
reduced; relators that reduce to the empty word are dropped.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import (
    CosetLimitExceeded,
    EmptyGeneratorList,
    ParseError,
    UnknownGenerator,
)
from .group import GroupTable, Permutation, cayley_from_elements, closure_from_generators

DEFAULT_MAX_COSETS = 100_000

# a letter is (generator index, +1 or -1)
Letter = tuple[int, int]
Word = tuple[Letter, ...]


def free_reduce(letters) -> Word:
    out: list[Letter] = []
    for g, e in letters:
        if out and out[-1] == (g, -e):
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def invert(word) -> Word:
    return tuple((g, -e) for g, e in reversed(word))


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens:
            raise EmptyGeneratorList("a presentation needs at least one generator")
        if len(set(gens)) != len(gens):
            raise ParseError(f"duplicate generator names in {gens}")
        rels = []
        for rel in self.relators:
            for g, e in rel:
                if not 0 <= g < len(gens) or e not in (1, -1):
                    raise UnknownGenerator(f"bad letter {(g, e)}")
            red = free_reduce(rel)
            if red:
                rels.append(red)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", tuple(rels))

    def format_word(self, word: Word) -> str:
        if not word:
            return "1"
        parts = []
        i = 0
        while i < len(word):
            g, e = word[i]
            j = i
            while j < len(word) and word[j] == (g, e):
                j += 1
            k = (j - i) * e
            name = self.generators[g]
            parts.append(name if k == 1 else f"{name}^{k}")
            i = j
        return "*".join(parts)

    def __str__(self):
        rels = ", ".join(self.format_word(r) for r in self.relators) or "1"
        return f"< {', '.join(self.generators)} | {rels} >"


_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<int>-?\d+)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<punct>[<>|,=*^()])"
)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = self._lex(text)
        self.pos = 0
        self.names: dict[str, int] = {}

    def _where(self, offset):
        line = self.text.count("\n", 0, offset) + 1
        col = offset - (self.text.rfind("\n", 0, offset) + 1) + 1
        return line, col

    def _lex(self, text):
        tokens = []
        i = 0
        while i < len(text):
            m = _TOKEN.match(text, i)
            if m is None:
                raise ParseError(f"unexpected character {text[i]!r}", *self._where(i))
            kind = m.lastgroup
            if kind != "ws":
                value = m.group()
                tokens.append((value if kind == "punct" else kind, value, i))
            i = m.end()
        tokens.append(("end", "", len(text)))
        return tokens

    def peek(self):
        return self.tokens[self.pos]

    def error(self, expected, tok=None):
        tok = tok or self.peek()
        found = "end of input" if tok[0] == "end" else repr(tok[1])
        return ParseError(f"expected {expected}, found {found}", *self._where(tok[2]))

    def expect(self, kind, expected=None):
        tok = self.peek()
        if tok[0] != kind:
            raise self.error(expected or repr(kind))
        self.pos += 1
        return tok

    def parse(self) -> Presentation:
        self.expect("<")
        if self.peek()[0] == "|":
            raise EmptyGeneratorList("generator list is empty", *self._where(self.peek()[2]))
        gens = [self._ident()]
        while self.peek()[0] == ",":
            self.pos += 1
            gens.append(self._ident())
        self.expect("|")
        rels = [self.relation()]
        while self.peek()[0] == ",":
            self.pos += 1
            rels.append(self.relation())
        self.expect(">")
        self.expect("end", "end of input")
        return Presentation(tuple(gens), tuple(rels))

    def _ident(self):
        tok = self.expect("ident", "generator name")
        if tok[1] in self.names:
            raise ParseError(f"duplicate generator {tok[1]!r}", *self._where(tok[2]))
        self.names[tok[1]] = len(self.names)
        return tok[1]

    def relation(self) -> Word:
        lhs = self.word()
        if self.peek()[0] == "=":
            self.pos += 1
            rhs = self.word()
            return free_reduce(lhs + invert(rhs))
        return free_reduce(lhs)

    def word(self) -> Word:
        tok = self.peek()
        if tok[0] == "int" and tok[1] == "1":
            self.pos += 1
            return ()
        letters = list(self.factor())
        while self.peek()[0] == "*":
            self.pos += 1
            letters.extend(self.factor())
        return free_reduce(letters)

    def factor(self) -> Word:
        tok = self.peek()
        if tok[0] == "ident":
            self.pos += 1
            if tok[1] not in self.names:
                raise UnknownGenerator(f"undeclared generator {tok[1]!r}", *self._where(tok[2]))
            base: Word = ((self.names[tok[1]], 1),)
        elif tok[0] == "(":
            self.pos += 1
            base = self.word()
            self.expect(")")
        else:
            raise self.error("generator, '(' or '1'")
        if self.peek()[0] == "^":
            self.pos += 1
            k = int(self.expect("int", "integer exponent")[1])
            if k < 0:
                base, k = invert(base), -k
            return free_reduce(base * k)
        return base


def parse_presentation(text: str) -> Presentation:
    return _Parser(text).parse()


class CosetTable:
    """Working state of an HLT coset enumeration over the trivial subgroup.

    Column ``2*i`` holds the action of generator ``i`` and column ``2*i + 1``
    the action of its inverse.  ``parent`` is the union-find forest used for
    coincidences; a coset is live iff it is its own parent.
    """

    def __init__(self, presentation: Presentation, max_cosets: int):
        self.presentation = presentation
        self.max_cosets = max_cosets
        self.ncols = 2 * len(presentation.generators)
        self.rows: list[list[int | None]] = [[None] * self.ncols]
        self.parent = [0]
        self.live_count = 1
        self.relators = [
            [2 * g + (e < 0) for g, e in rel] for rel in presentation.relators
        ]

    def is_live(self, c: int) -> bool:
        return self.parent[c] == c

    def rep(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def define(self, c: int, x: int) -> int:
        if len(self.rows) >= self.max_cosets:
            raise CosetLimitExceeded(self.max_cosets)
        d = len(self.rows)
        self.rows.append([None] * self.ncols)
        self.parent.append(d)
        self.live_count += 1
        self.rows[c][x] = d
        self.rows[d][x ^ 1] = c
        return d

    def scan_and_fill(self, c: int, word: list[int]) -> None:
        rows = self.rows
        f, b = c, c
        i, j = 0, len(word) - 1
        while True:
            while i <= j and rows[f][word[i]] is not None:
                f = rows[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and rows[b][word[j] ^ 1] is not None:
                b = rows[b][word[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                rows[f][word[i]] = b
                rows[b][word[i] ^ 1] = f
                return
            self.define(f, word[i])

    def _merge(self, k: int, l: int, queue: list[int]) -> None:
        k, l = self.rep(k), self.rep(l)
        if k == l:
            return
        k, l = min(k, l), max(k, l)
        self.parent[l] = k
        self.live_count -= 1
        queue.append(l)

    def coincidence(self, a: int, b: int) -> None:
        rows = self.rows
        queue: list[int] = []
        self._merge(a, b, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            for x in range(self.ncols):
                f = rows[e][x]
                if f is None:
                    continue
                rows[f][x ^ 1] = None
                e1, f1 = self.rep(e), self.rep(f)
                if rows[e1][x] is not None:
                    self._merge(f1, rows[e1][x], queue)
                elif rows[f1][x ^ 1] is not None:
                    self._merge(e1, rows[f1][x ^ 1], queue)
                else:
                    rows[e1][x] = f1
                    rows[f1][x ^ 1] = e1

    def run(self) -> None:
        while True:
            c = 0
            while c < len(self.rows):
                for rel in self.relators:
                    if not self.is_live(c):
                        break
                    self.scan_and_fill(c, rel)
                if self.is_live(c):
                    for x in range(self.ncols):
                        if self.rows[c][x] is None:
                            self.define(c, x)
                c += 1
            if self.is_complete():
                return

    def live(self) -> list[int]:
        return [c for c in range(len(self.rows)) if self.is_live(c)]

    def is_complete(self) -> bool:
        rows = self.rows
        for c in self.live():
            for x in range(self.ncols):
                d = rows[c][x]
                if d is None or not self.is_live(d) or rows[d][x ^ 1] != c:
                    return False
            for rel in self.relators:
                d = c
                for x in rel:
                    d = rows[d][x]
                if d != c:
                    return False
        return True

    def generator_permutations(self) -> list[Permutation]:
        """Actions of the generators on live cosets, renumbered 0..live-1."""
        live = self.live()
        renumber = {c: i for i, c in enumerate(live)}
        return [
            Permutation(tuple(renumber[self.rows[c][2 * g]] for c in live))
            for g in range(len(self.presentation.generators))
        ]


def todd_coxeter(
    P: Presentation, max_cosets: int = DEFAULT_MAX_COSETS, name: str | None = None
) -> GroupTable:
    """Enumerate the cosets of the trivial subgroup and return the group.

    Raises ``CosetLimitExceeded`` when more than ``max_cosets`` cosets would be
    needed; no partial result is ever returned.
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be at least 1")
    table = CosetTable(P, max_cosets)
    table.run()
    perms = table.generator_permutations()
    elems = closure_from_generators(perms, degree=table.live_count)
    if len(elems) != table.live_count:
        raise AssertionError(
            f"closure has {len(elems)} elements but {table.live_count} cosets are live"
        )
    return cayley_from_elements(
        elems, name=name or str(P), generators=dict(zip(P.generators, perms))
    )


def evaluate_word(G: GroupTable, P: Presentation, word: Word) -> int:
    """Evaluate a word in ``G`` using the named generators stored on ``G``."""
    x = G.identity
    for g, e in word:
        y = G.generators[P.generators[g]]
        x = G.product[x][y if e > 0 else G.inverse[y]]
    return x
