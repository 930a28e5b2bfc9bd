"""Input grammar for twisted 1-forms, with a canonical printer.

A form file is a sequence of header lines followed by the form itself::

    # one-parameter family, bound at t = 1
    n = 3
    e = 3
    vars x y z u
    t = 1
    w = (x + (1+t)*y)*z*dx - x*z*dy - x*(x + t*y)*dz

Header lines set the ambient dimension ``n``, the twist ``e``, the variable
names, and bind parameters (any other ``name = rational`` line).  The ``w =``
expression is a sum of terms, each a polynomial times one differential
``d<var>``.  Comments run from ``#`` to the end of the line.  Parse errors
carry line and column positions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .foliation import ProjectiveForm, validate
from .groebner import Budget
from .qalgebra import Polynomial, poly_str


class FormSyntaxError(Exception):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col
        self.code = "syntax-error"


class UnboundParameter(FormSyntaxError):
    def __init__(self, name: str, line: int, col: int):
        super().__init__(f"unbound parameter '{name}'", line, col)
        self.code = "unbound-parameter"


@dataclass
class FormFile:
    n: int
    e: int
    names: list
    params: dict
    coefficients: list  # one Polynomial per variable

    def build(self, budget: Budget | None = None) -> ProjectiveForm:
        return validate(self.n, self.e, self.coefficients, self.names, budget)

    def to_text(self) -> str:
        lines = [f"n = {self.n}", f"e = {self.e}", "vars " + " ".join(self.names)]
        pieces = []
        for i, c in enumerate(self.coefficients):
            if c.is_zero():
                continue
            pieces.append(f"({poly_str(c, self.names)})*d{self.names[i]}")
        lines.append("w = " + (" + ".join(pieces) if pieces else "0"))
        return "\n".join(lines) + "\n"


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
                    r"|(?P<pow>\*\*|\^)|(?P<op>[+\-*()]))")


def _tokenize(text: str, line_no: int, col0: int = 0):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise FormSyntaxError(f"unexpected character {text[pos]!r}",
                                  line_no, col0 + pos + 1)
        col = col0 + m.start(m.lastgroup) + 1
        tokens.append((m.lastgroup, m.group(m.lastgroup), line_no, col))
        pos = m.end()
    return tokens


class _ExprParser:
    """Recursive descent over +, -, *, ^ with rational literals."""

    def __init__(self, tokens, env: dict, nvars: int):
        self.tokens = tokens
        self.pos = 0
        self.env = env
        self.nvars = nvars

    def _peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _next(self):
        t = self._peek()
        if t is None:
            last = self.tokens[-1] if self.tokens else ("", "", 1, 1)
            raise FormSyntaxError("unexpected end of expression", last[2], last[3])
        self.pos += 1
        return t

    def parse(self) -> Polynomial:
        out = self.expr()
        t = self._peek()
        if t is not None:
            raise FormSyntaxError(f"trailing input {t[1]!r}", t[2], t[3])
        return out

    def expr(self) -> Polynomial:
        t = self._peek()
        if t and t[0] == "op" and t[1] in "+-":
            self._next()
            first = self.term()
            if t[1] == "-":
                first = -first
        else:
            first = self.term()
        while True:
            t = self._peek()
            if t and t[0] == "op" and t[1] in "+-":
                self._next()
                rhs = self.term()
                first = first + rhs if t[1] == "+" else first - rhs
            else:
                return first

    def term(self) -> Polynomial:
        out = self.power()
        while True:
            t = self._peek()
            if t and t[0] == "op" and t[1] == "*":
                self._next()
                out = out * self.power()
            else:
                return out

    def power(self) -> Polynomial:
        base = self.atom()
        t = self._peek()
        if t and t[0] == "pow":
            self._next()
            ex = self._next()
            if ex[0] != "num" or "/" in ex[1]:
                raise FormSyntaxError("exponent must be a nonnegative integer",
                                      ex[2], ex[3])
            return base ** int(ex[1])
        return base

    def atom(self) -> Polynomial:
        t = self._next()
        kind, val, line, col = t
        if kind == "num":
            if "/" in val:
                a, b = val.split("/")
                return Polynomial.const(self.nvars, Fraction(int(a), int(b)))
            return Polynomial.const(self.nvars, int(val))
        if kind == "name":
            if val not in self.env:
                raise UnboundParameter(val, line, col)
            return self.env[val]
        if kind == "op" and val == "(":
            inner = self.expr()
            t2 = self._next()
            if t2[0] != "op" or t2[1] != ")":
                raise FormSyntaxError("expected ')'", t2[2], t2[3])
            return inner
        if kind == "op" and val == "-":
            return -self.atom()
        raise FormSyntaxError(f"unexpected token {val!r}", line, col)


def parse_form(text: str) -> FormFile:
    """Parse a form file; exact rational coefficients, deterministic."""
    n = None
    e = None
    names = None
    params: dict[str, Fraction] = {}
    w_tokens = None
    w_line = None
    lines = text.splitlines()
    i = 0
    while i < len(lines):
        raw = lines[i]
        line_no = i + 1
        body = raw.split("#", 1)[0]
        i += 1
        if not body.strip():
            continue
        stripped = body.strip()
        if stripped.startswith("vars"):
            names = stripped[4:].split()
            if not names:
                raise FormSyntaxError("vars line needs at least one name", line_no, 1)
            for nm in names:
                if nm == "w" or nm.startswith("d"):
                    raise FormSyntaxError(
                        f"variable name {nm!r} is reserved", line_no, 1)
            continue
        if "=" not in stripped:
            raise FormSyntaxError("expected 'name = value'", line_no, 1)
        key, rhs = stripped.split("=", 1)
        key = key.strip()
        if key == "w":
            col0 = body.index("=") + 1
            w_tokens = _tokenize(rhs, line_no, col0)
            w_line = line_no
            # the remaining non-comment lines continue the expression
            while i < len(lines):
                cont = lines[i].split("#", 1)[0]
                if cont.strip():
                    w_tokens += _tokenize(cont, i + 1)
                i += 1
            break
        if key == "n":
            n = int(rhs.strip())
        elif key == "e":
            e = int(rhs.strip())
        else:
            val = rhs.strip()
            m = re.fullmatch(r"(-?\d+)(?:/(\d+))?", val)
            if m is None:
                raise FormSyntaxError(f"parameter {key!r} needs a rational value",
                                      line_no, 1)
            params[key] = Fraction(int(m.group(1)), int(m.group(2) or 1))
    if n is None or e is None or names is None:
        raise FormSyntaxError("missing n=, e= or vars header", len(lines), 1)
    if len(names) != n + 1:
        raise FormSyntaxError(f"expected {n + 1} variable names, got {len(names)}",
                              1, 1)
    if w_tokens is None:
        raise FormSyntaxError("missing 'w =' line", len(lines), 1)

    nvars = n + 1
    scratch = 2 * nvars  # variables plus one differential slot per variable
    env = {}
    for j, nm in enumerate(names):
        env[nm] = Polynomial.variable(j, scratch)
        env["d" + nm] = Polynomial.variable(nvars + j, scratch)
    for nm, v in params.items():
        env[nm] = Polynomial.const(scratch, v)

    expr = _ExprParser(w_tokens, env, scratch).parse()
    coefficients = [Polynomial.zero(nvars) for _ in range(nvars)]
    for mono, c in expr.terms.items():
        dpart = mono[nvars:]
        if sum(dpart) != 1:
            raise FormSyntaxError(
                "every term needs exactly one differential factor",
                w_line or 1, 1)
        j = next(k for k, ex in enumerate(dpart) if ex)
        base = mono[:nvars]
        coefficients[j] = coefficients[j] + Polynomial.monomial(base, c)
    for j, c in enumerate(coefficients):
        if not c.is_zero() and not c.is_homogeneous():
            err = FormSyntaxError(
                f"coefficient of d{names[j]} is inhomogeneous", w_line or 1, 1)
            err.code = "inhomogeneous-coefficient"
            raise err
    return FormFile(n, e, names, params, coefficients)
