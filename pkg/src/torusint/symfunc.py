"""Symmetric polynomials in the residue variables, and the class parser.

Schur polynomials come from the Jacobi-Trudi determinant in the complete
homogeneous basis, s_lambda = det(h_{lambda_i - i + j}); the h_k themselves
are produced by exact truncated expansion of prod_i 1/(1 - z_i u).  This
avoids any division by Vandermonde determinants.
"""

from __future__ import annotations

import re
from itertools import combinations, permutations

from .algebra import Polynomial
from .errors import ParseError
from .rational import ONE, Q


def _active_z_indices(table, zcount=None):
    zs = list(table.z_indices())
    if zcount is None:
        return zs
    if zcount > len(zs):
        raise ValueError(f"table has only {len(zs)} z variables")
    return zs[:zcount]


def validate_partition(lam):
    lam = tuple(int(x) for x in lam)
    if any(x <= 0 for x in lam):
        raise ValueError("partition parts must be positive")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError("partition parts must be weakly decreasing")
    return lam


def elementary(k, table, zcount=None):
    """e_k in the active z variables; e_0 = 1, e_k = 0 for k > #variables."""
    zs = _active_z_indices(table, zcount)
    if k < 0 or k > len(zs):
        return Polynomial.zero(table) if k != 0 else Polynomial.const(table, 1)
    if k == 0:
        return Polynomial.const(table, 1)
    terms = {}
    for subset in combinations(zs, k):
        key = 0
        for i in subset:
            key += table.var_key(i)
        terms[key] = ONE
    return Polynomial(table, terms, _trust=True)


def complete_homogeneous(k, table, zcount=None):
    """h_k via the Newton-style recurrence h_k = sum (-1)^(i-1) e_i h_{k-i},
    i.e. exact power-series division of 1 by prod (1 - z_i u)."""
    return _h_list(k, table, zcount)[k]


def _h_list(k, table, zcount=None):
    zs = _active_z_indices(table, zcount)
    m = len(zs)
    es = [elementary(i, table, zcount) for i in range(m + 1)]
    hs = [Polynomial.const(table, 1)]
    for j in range(1, k + 1):
        s = Polynomial.zero(table)
        for i in range(1, min(j, m) + 1):
            term = es[i] * hs[j - i]
            s = s + term if i % 2 == 1 else s - term
        hs.append(s)
    return hs


def power_sum(k, table, zcount=None):
    if k < 1:
        raise ValueError("power sums need k >= 1")
    zs = _active_z_indices(table, zcount)
    terms = {}
    for i in zs:
        key = table.pack(tuple(k if j == i else 0 for j in range(table.nvars)))
        terms[key] = ONE
    return Polynomial(table, terms, _trust=True)


def schur(lam, table, zcount=None):
    """Schur polynomial s_lambda(z_1..z_m) by Jacobi-Trudi in the h basis."""
    lam = validate_partition(lam)
    zs = _active_z_indices(table, zcount)
    m = len(zs)
    if len(lam) > m:
        raise ValueError(f"partition {lam} longer than {m} variables")
    ell = len(lam)
    if ell == 0:
        return Polynomial.const(table, 1)
    hs = _h_list(lam[0] + ell, table, zcount)

    def h(k):
        if k < 0:
            return Polynomial.zero(table)
        return hs[k]

    # det(h_{lam_i - i + j}) over the symmetric group; ell <= m stays tiny
    result = Polynomial.zero(table)
    for sigma in permutations(range(ell)):
        inversions = sum(
            1 for a in range(ell) for b in range(a + 1, ell) if sigma[a] > sigma[b]
        )
        term = Polynomial.const(table, 1)
        for i in range(ell):
            term = term * h(lam[i] - i + sigma[i])
            if term.is_zero():
                break
        result = result + term if inversions % 2 == 0 else result - term
    return result


def check_symmetric(p, zcount=None):
    """True iff p is invariant under all adjacent transpositions of the
    active z variables (t variables held fixed)."""
    zs = _active_z_indices(p.table, zcount)
    for a, b in zip(zs, zs[1:]):
        if p.permute_vars({a: b, b: a}) != p:
            return False
    return True


def symmetrize(p, zcount=None):
    """Average over all permutations of the active z variables."""
    zs = _active_z_indices(p.table, zcount)
    if len(zs) <= 1:
        return p
    total = Polynomial.zero(p.table)
    count = 0
    for sigma in permutations(zs):
        total = total + p.permute_vars(dict(zip(zs, sigma)))
        count += 1
    return total * Q(1, count)


# -- class expression parser --------------------------------------------------
#
# expr   := term (('+'|'-') term)*
# term   := factor ('*' factor)*
# factor := ('-')* atom ('^' INT)*
# atom   := RATIONAL | INT | VAR | BUILTIN | '(' expr ')'
# BUILTIN: s[l1,l2,...], e[k], h[k], p[k]; VAR: t<i> or z<i>.

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<rational>\d+\s*/\s*\d+)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z][A-Za-z0-9]*)
  | (?P<op>[][,+\-*^()])
""",
    re.VERBOSE,
)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = match.lastgroup
        if kind != "ws":
            tokens.append((kind, match.group(), pos))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, table, zcount):
        self.text = text
        self.table = table
        self.zcount = zcount
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, value):
        kind, text, pos = self.next()
        if text != value:
            raise ParseError(f"expected {value!r}, found {text or 'end of input'!r}", pos)

    def parse(self):
        result = self.expr()
        kind, text, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {text!r}", pos)
        return result

    def expr(self):
        result = self.term()
        while True:
            kind, text, _ = self.peek()
            if text == "+":
                self.next()
                result = result + self.term()
            elif text == "-":
                self.next()
                result = result - self.term()
            else:
                return result

    def term(self):
        result = self.factor()
        while self.peek()[1] == "*":
            self.next()
            result = result * self.factor()
        return result

    def factor(self):
        negate = False
        while self.peek()[1] == "-":
            self.next()
            negate = not negate
        result = self.atom()
        while self.peek()[1] == "^":
            self.next()
            kind, text, pos = self.next()
            if kind != "int":
                raise ParseError("exponent must be a non-negative integer", pos)
            result = result ** int(text)
        return -result if negate else result

    def atom(self):
        kind, text, pos = self.next()
        if kind == "rational":
            num, den = (part.strip() for part in text.split("/"))
            return Polynomial.const(self.table, Q(int(num), int(den)))
        if kind == "int":
            return Polynomial.const(self.table, int(text))
        if text == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "name":
            if text in ("s", "e", "h", "p"):
                return self.builtin(text, pos)
            return self.variable(text, pos)
        raise ParseError(f"unexpected {text or 'end of input'!r}", pos)

    def variable(self, name, pos):
        if name in self.table.names:
            idx = self.table.index(name)
            if self.table.is_z(idx):
                active = set(_active_z_indices(self.table, self.zcount))
                if idx not in active:
                    raise ParseError(f"unknown identifier {name!r}", pos)
            return Polynomial.variable(self.table, name)
        raise ParseError(f"unknown identifier {name!r}", pos)

    def builtin(self, which, pos):
        self.expect("[")
        args = [self.int_arg()]
        while self.peek()[1] == ",":
            self.next()
            args.append(self.int_arg())
        self.expect("]")
        if which == "s":
            try:
                lam = validate_partition(args)
                return schur(lam, self.table, self.zcount)
            except ValueError as exc:
                raise ParseError(str(exc), pos) from None
        if len(args) != 1:
            raise ParseError(f"{which}[...] takes a single index", pos)
        k = args[0]
        if which == "e":
            return elementary(k, self.table, self.zcount)
        if which == "h":
            return complete_homogeneous(k, self.table, self.zcount)
        if k < 1:
            raise ParseError("p[k] needs k >= 1", pos)
        return power_sum(k, self.table, self.zcount)

    def int_arg(self):
        kind, text, pos = self.next()
        if kind != "int":
            raise ParseError("expected an integer", pos)
        return int(text)


def parse_class(expr, table, zcount=None):
    """Parse a class expression to an expanded Polynomial.

    Builtins s[...], e[k], h[k], p[k] expand over the active z variables
    (the first ``zcount`` of them, all by default); t variables may appear
    as coefficients.
    """
    return _Parser(expr, table, zcount).parse()
