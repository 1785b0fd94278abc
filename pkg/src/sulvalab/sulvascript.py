"""A small construction-script language over the exact kernel.

Scripts are straight-line: single-assignment ``let`` bindings, exact
``assert`` relations and ``emit`` directives, with no control flow, so
every run is total and every failure points at a source position::

    # circle the unit square and check the surplus
    let s = square(point(0, 0), 1/2);
    let out = baudhayana(s);
    assert claimed(out) < actual(out);
    emit out;

Grammar (LL(1), parsed by recursive descent)::

    program  := stmt*
    stmt     := "let" IDENT "=" expr ";"
              | "assert" expr ("==" | "<" | ">") expr ";"
              | "emit" IDENT ("," IDENT)* ";"
    expr     := "-" expr | literal | IDENT | NAME "(" args ")"
    args     := (expr ("," expr)*)?
    literal  := NUMBER ("/" NUMBER)?      # "17/12", "3", "0.25" (= 1/4)

Comments run from ``#`` to end of line.  All numeric literals are exact
rationals; a decimal literal denotes its exact finite value, never a
float.  Catalog rules are callable by id (a figure argument recenters the
construction on that figure), so scripts double as executable notes on
each rule.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from . import catalog
from .exactreal import (
    CapacityError,
    ConstructibleReal,
    DomainError,
    Quantity,
    UnsupportedQuantityError,
    constructible,
    sqrt,
    to_decimal,
)
from .geom import (
    Circle,
    Figure,
    Point,
    Segment,
    Square,
    circle_area,
    circle_circumference_true,
    circumscribed_circle,
    distance_squared,
    divide_segment,
    square_area,
    trisector_lines,
    vertical_line_circle_intersection,
)

__all__ = [
    "Diagnostic",
    "EvalResult",
    "ParseResult",
    "Script",
    "evaluate",
    "extract_figures",
    "format_script",
    "parse",
    "render_report",
]

Value = Union[
    ConstructibleReal,
    Quantity,
    Point,
    Segment,
    Square,
    Circle,
    catalog.RuleOutput,
    list,
]


@dataclass(frozen=True)
class Diagnostic:
    severity: str  # "error" or "warning"
    message: str
    line: int
    column: int

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.severity}: {self.message}"


# -- syntax tree (positions excluded from equality) ---------------------------


@dataclass
class Literal:
    value: Fraction
    line: int = field(compare=False, default=0)
    column: int = field(compare=False, default=0)


@dataclass
class Name:
    ident: str
    line: int = field(compare=False, default=0)
    column: int = field(compare=False, default=0)


@dataclass
class Call:
    name: str
    args: list
    line: int = field(compare=False, default=0)
    column: int = field(compare=False, default=0)


Expr = Union[Literal, Name, Call]


@dataclass
class Let:
    ident: str
    expr: Expr
    line: int = field(compare=False, default=0)
    column: int = field(compare=False, default=0)


@dataclass
class Assert:
    left: Expr
    op: str  # "==", "<", ">"
    right: Expr
    line: int = field(compare=False, default=0)
    column: int = field(compare=False, default=0)


@dataclass
class Emit:
    names: list[Name]
    line: int = field(compare=False, default=0)
    column: int = field(compare=False, default=0)


Stmt = Union[Let, Assert, Emit]


@dataclass
class Script:
    statements: list[Stmt]


@dataclass(frozen=True)
class ParseResult:
    script: Optional[Script]
    diagnostics: list[Diagnostic]

    @property
    def ok(self) -> bool:
        return self.script is not None and not any(
            d.severity == "error" for d in self.diagnostics
        )


# -- lexer ---------------------------------------------------------------------

_KEYWORDS = ("let", "assert", "emit")
_SYMBOLS = ("==", "=", ";", ",", "(", ")", "/", "<", ">", "-")


@dataclass(frozen=True)
class _Token:
    kind: str  # "ident", "number", "symbol", "eof"
    text: str
    value: Optional[Fraction]
    line: int
    column: int


class _Lexer:
    def __init__(self, source: str):
        self.source = source
        self.pos = 0
        self.line = 1
        self.column = 1
        self.diagnostics: list[Diagnostic] = []

    def error(self, message: str, line: int, column: int) -> None:
        self.diagnostics.append(Diagnostic("error", message, line, column))

    def _advance(self, n: int = 1) -> None:
        for _ in range(n):
            if self.pos < len(self.source) and self.source[self.pos] == "\n":
                self.line += 1
                self.column = 1
            else:
                self.column += 1
            self.pos += 1

    def tokens(self) -> list[_Token]:
        out: list[_Token] = []
        src = self.source
        while self.pos < len(src):
            ch = src[self.pos]
            if ch in " \t\r\n":
                self._advance()
                continue
            if ch == "#":
                while self.pos < len(src) and src[self.pos] != "\n":
                    self._advance()
                continue
            line, column = self.line, self.column
            if ch.isdigit():
                start = self.pos
                while self.pos < len(src) and src[self.pos].isdigit():
                    self._advance()
                if (
                    self.pos + 1 < len(src)
                    and src[self.pos] == "."
                    and src[self.pos + 1].isdigit()
                ):
                    self._advance()
                    while self.pos < len(src) and src[self.pos].isdigit():
                        self._advance()
                text = src[start : self.pos]
                out.append(_Token("number", text, Fraction(text), line, column))
                continue
            if ch.isalpha() or ch == "_":
                start = self.pos
                while self.pos < len(src) and (
                    src[self.pos].isalnum() or src[self.pos] == "_"
                ):
                    self._advance()
                text = src[start : self.pos]
                out.append(_Token("ident", text, None, line, column))
                continue
            if src.startswith("==", self.pos):
                self._advance(2)
                out.append(_Token("symbol", "==", None, line, column))
                continue
            if ch in "=;,()/<>-":
                self._advance()
                out.append(_Token("symbol", ch, None, line, column))
                continue
            self.error(f"unexpected character {ch!r}", line, column)
            self._advance()
        out.append(_Token("eof", "", None, self.line, self.column))
        return out


# -- vocabulary -----------------------------------------------------------------

# name -> arity of every callable; rule ids and aliases are appended below
_BUILTIN_ARITY: dict[str, int] = {
    "add": 2,
    "sub": 2,
    "mul": 2,
    "div": 2,
    "neg": 1,
    "sqrt": 1,
    "pi": 0,
    "point": 2,
    "segment": 2,
    "square": 2,
    "circle": 2,
    "center": 1,
    "midpoint": 1,
    "radius": 1,
    "xcoord": 1,
    "ycoord": 1,
    "divide": 2,
    "circumcircle": 1,
    "trisectors_vertical": 1,
    "trisectors_horizontal": 1,
    "intersect_vertical": 2,
    "intersect_horizontal": 2,
    "distance2": 2,
    "area": 1,
    "circumference": 1,
    "nth": 2,
    "count": 1,
    "claimed": 1,
    "actual": 1,
    "witness": 2,
    "hypotenuse": 2,
    "sqrt2_sulba": 0,
}

_RULE_NAMES = tuple(
    name
    for name in list(catalog.rule_ids()) + list(catalog._ALIASES)
    if name not in _BUILTIN_ARITY
)

ARITY: dict[str, int] = dict(_BUILTIN_ARITY)
ARITY.update({name: 1 for name in _RULE_NAMES})


# -- parser ---------------------------------------------------------------------


class _Parser:
    def __init__(self, tokens: list[_Token], diagnostics: list[Diagnostic]):
        self.tokens = tokens
        self.index = 0
        self.diagnostics = diagnostics
        self.defined: set[str] = set()

    def error(self, message: str, token: _Token) -> None:
        self.diagnostics.append(
            Diagnostic("error", message, token.line, token.column)
        )

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        token = self.current
        if token.kind != "eof":
            self.index += 1
        return token

    def match_symbol(self, text: str) -> Optional[_Token]:
        if self.current.kind == "symbol" and self.current.text == text:
            return self.advance()
        return None

    def expect_symbol(self, text: str) -> Optional[_Token]:
        token = self.match_symbol(text)
        if token is None:
            self.error(f"expected {text!r}", self.current)
        return token

    def recover_to_semicolon(self) -> None:
        while self.current.kind != "eof":
            if self.current.kind == "symbol" and self.current.text == ";":
                self.advance()
                return
            self.advance()

    def parse_program(self) -> Script:
        statements: list[Stmt] = []
        while self.current.kind != "eof":
            stmt = self.parse_statement()
            if stmt is not None:
                statements.append(stmt)
        return Script(statements)

    def parse_statement(self) -> Optional[Stmt]:
        token = self.current
        if token.kind != "ident" or token.text not in _KEYWORDS:
            self.error(
                "expected a statement ('let', 'assert' or 'emit')", token
            )
            self.recover_to_semicolon()
            return None
        self.advance()
        try:
            if token.text == "let":
                return self.parse_let(token)
            if token.text == "assert":
                return self.parse_assert(token)
            return self.parse_emit(token)
        except _SyntaxAbort:
            self.recover_to_semicolon()
            return None

    def parse_let(self, keyword: _Token) -> Let:
        name = self.current
        if name.kind != "ident":
            self.error("expected an identifier after 'let'", name)
            raise _SyntaxAbort
        if name.text in _KEYWORDS:
            self.error(f"{name.text!r} is a keyword", name)
            raise _SyntaxAbort
        self.advance()
        if name.text in self.defined:
            self.error(f"redefinition of {name.text!r}", name)
        if self.expect_symbol("=") is None:
            raise _SyntaxAbort
        expr = self.parse_expr()
        if self.expect_symbol(";") is None:
            raise _SyntaxAbort
        # record the binding even if the initializer had errors, so later
        # references do not cascade into spurious unresolved diagnostics
        self.defined.add(name.text)
        return Let(name.text, expr, keyword.line, keyword.column)

    def parse_assert(self, keyword: _Token) -> Assert:
        left = self.parse_expr()
        op_token = self.current
        if op_token.kind == "symbol" and op_token.text in ("==", "<", ">"):
            self.advance()
        else:
            self.error("expected '==', '<' or '>' in assertion", op_token)
            raise _SyntaxAbort
        right = self.parse_expr()
        if self.expect_symbol(";") is None:
            raise _SyntaxAbort
        return Assert(left, op_token.text, right, keyword.line, keyword.column)

    def parse_emit(self, keyword: _Token) -> Emit:
        names: list[Name] = []
        while True:
            token = self.current
            if token.kind != "ident":
                self.error("expected an identifier in 'emit'", token)
                raise _SyntaxAbort
            self.advance()
            name = Name(token.text, token.line, token.column)
            if token.text not in self.defined:
                self.error(f"unresolved reference {token.text!r}", token)
            names.append(name)
            if self.match_symbol(","):
                continue
            break
        if self.expect_symbol(";") is None:
            raise _SyntaxAbort
        return Emit(names, keyword.line, keyword.column)

    def parse_expr(self) -> Expr:
        token = self.current
        if token.kind == "symbol" and token.text == "-":
            self.advance()
            inner = self.parse_expr()
            if isinstance(inner, Literal):
                return Literal(-inner.value, token.line, token.column)
            return Call("neg", [inner], token.line, token.column)
        if token.kind == "number":
            return self.parse_literal()
        if token.kind == "ident":
            self.advance()
            if self.current.kind == "symbol" and self.current.text == "(":
                return self.parse_call(token)
            name = Name(token.text, token.line, token.column)
            if token.text not in self.defined:
                self.error(f"unresolved reference {token.text!r}", token)
            return name
        self.error("expected an expression", token)
        raise _SyntaxAbort

    def parse_literal(self) -> Literal:
        token = self.advance()
        assert token.value is not None
        value = token.value
        if self.current.kind == "symbol" and self.current.text == "/":
            self.advance()
            denom_token = self.current
            if denom_token.kind != "number":
                self.error("expected a denominator", denom_token)
                raise _SyntaxAbort
            self.advance()
            assert denom_token.value is not None
            denom = denom_token.value
            if denom.denominator != 1 or value.denominator != 1:
                self.error(
                    "rational literals take integer parts, like 17/12",
                    denom_token,
                )
                raise _SyntaxAbort
            if denom == 0:
                self.error("zero denominator in literal", denom_token)
                raise _SyntaxAbort
            value = value / denom
        return Literal(value, token.line, token.column)

    def parse_call(self, name_token: _Token) -> Call:
        self.expect_symbol("(")
        args: list[Expr] = []
        if not (self.current.kind == "symbol" and self.current.text == ")"):
            while True:
                args.append(self.parse_expr())
                if self.match_symbol(","):
                    continue
                break
        if self.expect_symbol(")") is None:
            raise _SyntaxAbort
        name = name_token.text
        arity = ARITY.get(name)
        if arity is None:
            self.error(f"unknown name {name!r}", name_token)
        elif arity != len(args):
            self.error(
                f"{name}() takes {arity} argument{'s' if arity != 1 else ''}, "
                f"got {len(args)}",
                name_token,
            )
        return Call(name, args, name_token.line, name_token.column)


class _SyntaxAbort(Exception):
    pass


def parse(source: str) -> ParseResult:
    """Parse and statically check a script, collecting all diagnostics."""
    lexer = _Lexer(source)
    tokens = lexer.tokens()
    diagnostics = list(lexer.diagnostics)
    parser = _Parser(tokens, diagnostics)
    script = parser.parse_program()
    if any(d.severity == "error" for d in diagnostics):
        return ParseResult(None, diagnostics)
    return ParseResult(script, diagnostics)


# -- canonical formatting ----------------------------------------------------------


def _format_expr(expr: Expr) -> str:
    if isinstance(expr, Literal):
        return str(expr.value)
    if isinstance(expr, Name):
        return expr.ident
    return f"{expr.name}({', '.join(_format_expr(a) for a in expr.args)})"


def format_script(script: Script) -> str:
    """Deterministic canonical rendering; reparsing gives an equal tree."""
    lines = []
    for stmt in script.statements:
        if isinstance(stmt, Let):
            lines.append(f"let {stmt.ident} = {_format_expr(stmt.expr)};")
        elif isinstance(stmt, Assert):
            lines.append(
                f"assert {_format_expr(stmt.left)} {stmt.op} "
                f"{_format_expr(stmt.right)};"
            )
        else:
            lines.append(f"emit {', '.join(n.ident for n in stmt.names)};")
    return "\n".join(lines) + ("\n" if lines else "")


# -- evaluation ----------------------------------------------------------------------


@dataclass(frozen=True)
class EvalResult:
    environment: dict[str, Value]
    emitted: list[tuple[str, Value]]
    diagnostics: list[Diagnostic]

    @property
    def ok(self) -> bool:
        return not any(d.severity == "error" for d in self.diagnostics)


class _EvalError(Exception):
    def __init__(self, message: str):
        self.message = message


def _need_number(value: Value, what: str) -> ConstructibleReal:
    if isinstance(value, ConstructibleReal):
        return value
    if isinstance(value, Quantity) and value.is_constant():
        return value.c0
    raise _EvalError(f"{what} must be a number, got {_kind_name(value)}")


def _need_quantityish(value: Value, what: str) -> Quantity:
    if isinstance(value, Quantity):
        return value
    if isinstance(value, ConstructibleReal):
        return Quantity(value, 0)
    raise _EvalError(f"{what} must be numeric, got {_kind_name(value)}")


def _need(value: Value, cls: type, what: str):
    if not isinstance(value, cls):
        raise _EvalError(
            f"{what} must be a {cls.__name__.lower()}, got {_kind_name(value)}"
        )
    return value


def _need_index(value: Value, what: str) -> int:
    number = _need_number(value, what)
    frac = number.as_fraction() if number.is_rational() else None
    if frac is None or frac.denominator != 1:
        raise _EvalError(f"{what} must be an integer")
    return int(frac)


def _kind_name(value: Value) -> str:
    if isinstance(value, ConstructibleReal):
        return "number"
    if isinstance(value, Quantity):
        return "quantity"
    if isinstance(value, list):
        return "list"
    return type(value).__name__.lower()


def _numeric_binop(op: str, a: Value, b: Value) -> Value:
    # quantities and numbers mix freely; pi**2 products are rejected by the
    # quantity layer itself
    qa = _need_quantityish(a, "operand")
    qb = _need_quantityish(b, "operand")
    if op == "add":
        result = qa + qb
    elif op == "sub":
        result = qa - qb
    elif op == "mul":
        result = qa * qb
    else:
        result = qa.scale(1 / _need_number(b, "divisor"))
    if result.is_constant():
        return result.c0
    return result


def _rule_input(rule: catalog.Rule, value: Value) -> tuple[ConstructibleReal, Point]:
    origin = Point(constructible(0), constructible(0))
    if isinstance(value, (ConstructibleReal, Quantity)):
        return _need_number(value, "rule input"), origin
    if isinstance(value, Square):
        if rule.kind in ("circle-from-square", "doubling"):
            return value.side, value.center
        raise _EvalError(f"{rule.id} takes a diameter or a circle")
    if isinstance(value, Circle):
        if rule.kind in ("circumference", "inscribed-square", "square-from-circle"):
            return value.radius * 2, value.center
        raise _EvalError(f"{rule.id} takes a side length or a square")
    raise _EvalError(f"{rule.id} takes a number or a figure")


def _translate_figure(figure: Figure, center: Point) -> Figure:
    if center.x.is_zero() and center.y.is_zero():
        return figure
    dx, dy = center.x, center.y
    if isinstance(figure, Point):
        return figure.translated(dx, dy)
    if isinstance(figure, Segment):
        return Segment(figure.a.translated(dx, dy), figure.b.translated(dx, dy))
    if isinstance(figure, Square):
        return Square(figure.center.translated(dx, dy), figure.half_side)
    return Circle(figure.center.translated(dx, dy), figure.radius)


def _call_rule(rule: catalog.Rule, value: Value) -> catalog.RuleOutput:
    size, center = _rule_input(rule, value)
    out = rule.run(size)
    if center.x.is_zero() and center.y.is_zero():
        return out
    return catalog.RuleOutput(
        figures=tuple(_translate_figure(f, center) for f in out.figures),
        claimed=out.claimed,
        actual=out.actual,
        witness_points=None
        if out.witness_points is None
        else tuple(p.translated(center.x, center.y) for p in out.witness_points),
    )


def _horizontal_intersections(y0: ConstructibleReal, circle: Circle) -> list[Point]:
    swapped = Circle(Point(circle.center.y, circle.center.x), circle.radius)
    return [
        Point(p.y, p.x) for p in vertical_line_circle_intersection(y0, swapped)
    ]


def _builtin(name: str, args: list[Value]) -> Value:
    if name == "add" or name == "sub" or name == "mul" or name == "div":
        return _numeric_binop(name, args[0], args[1])
    if name == "neg":
        q = _need_quantityish(args[0], "operand")
        return -q.c0 if q.is_constant() else -q
    if name == "sqrt":
        return sqrt(_need_number(args[0], "sqrt argument"))
    if name == "pi":
        return Quantity(0, 1)
    if name == "point":
        return Point(
            _need_number(args[0], "x coordinate"),
            _need_number(args[1], "y coordinate"),
        )
    if name == "segment":
        return Segment(
            _need(args[0], Point, "segment start"),
            _need(args[1], Point, "segment end"),
        )
    if name == "square":
        return Square(
            _need(args[0], Point, "square center"),
            _need_number(args[1], "half side"),
        )
    if name == "circle":
        return Circle(
            _need(args[0], Point, "circle center"),
            _need_number(args[1], "radius"),
        )
    if name == "center":
        figure = args[0]
        if isinstance(figure, (Square, Circle)):
            return figure.center
        raise _EvalError("center() takes a square or a circle")
    if name == "midpoint":
        return _need(args[0], Segment, "argument").midpoint()
    if name == "radius":
        return _need(args[0], Circle, "argument").radius
    if name == "xcoord":
        return _need(args[0], Point, "argument").x
    if name == "ycoord":
        return _need(args[0], Point, "argument").y
    if name == "divide":
        segment = _need(args[0], Segment, "argument")
        return divide_segment(segment, _need_index(args[1], "part count"))
    if name == "circumcircle":
        return circumscribed_circle(_need(args[0], Square, "argument"))
    if name == "trisectors_vertical":
        return list(trisector_lines(_need(args[0], Square, "argument"), "vertical"))
    if name == "trisectors_horizontal":
        return list(trisector_lines(_need(args[0], Square, "argument"), "horizontal"))
    if name == "intersect_vertical":
        return vertical_line_circle_intersection(
            _need_number(args[0], "line abscissa"),
            _need(args[1], Circle, "circle"),
        )
    if name == "intersect_horizontal":
        return _horizontal_intersections(
            _need_number(args[0], "line ordinate"),
            _need(args[1], Circle, "circle"),
        )
    if name == "distance2":
        return distance_squared(
            _need(args[0], Point, "first point"),
            _need(args[1], Point, "second point"),
        )
    if name == "area":
        figure = args[0]
        if isinstance(figure, Square):
            return square_area(figure)
        if isinstance(figure, Circle):
            return circle_area(figure)
        raise _EvalError("area() takes a square or a circle")
    if name == "circumference":
        return circle_circumference_true(_need(args[0], Circle, "argument"))
    if name == "nth":
        items = args[0]
        if not isinstance(items, list):
            raise _EvalError("nth() takes a list")
        index = _need_index(args[1], "index")
        if not 1 <= index <= len(items):
            raise _EvalError(
                f"index {index} out of range for a list of {len(items)}"
            )
        return items[index - 1]
    if name == "count":
        if not isinstance(args[0], list):
            raise _EvalError("count() takes a list")
        return constructible(len(args[0]))
    if name == "claimed":
        return _need(args[0], catalog.RuleOutput, "argument").claimed
    if name == "actual":
        return _need(args[0], catalog.RuleOutput, "argument").actual
    if name == "witness":
        out = _need(args[0], catalog.RuleOutput, "rule output")
        if out.witness_points is None:
            raise _EvalError("this rule output has no witness points")
        index = _need_index(args[1], "index")
        if not 1 <= index <= len(out.witness_points):
            raise _EvalError(
                f"index {index} out of range for {len(out.witness_points)} "
                "witness points"
            )
        return out.witness_points[index - 1]
    if name == "hypotenuse":
        return catalog.hypotenuse(
            _need_number(args[0], "length"), _need_number(args[1], "width")
        )
    if name == "sqrt2_sulba":
        return catalog.sqrt2_sulba_constant()
    rule = catalog.lookup(name)
    return _call_rule(rule, args[0])


class _Evaluator:
    def __init__(self) -> None:
        self.environment: dict[str, Value] = {}
        self.emitted: list[tuple[str, Value]] = []
        self.diagnostics: list[Diagnostic] = []

    def eval_expr(self, expr: Expr) -> Value:
        if isinstance(expr, Literal):
            return constructible(expr.value)
        if isinstance(expr, Name):
            return self.environment[expr.ident]
        args = [self.eval_expr(a) for a in expr.args]
        try:
            return _builtin(expr.name, args)
        except _EvalError as exc:
            raise _EvalAbort(
                Diagnostic("error", exc.message, expr.line, expr.column)
            ) from None
        except (DomainError, CapacityError, UnsupportedQuantityError) as exc:
            raise _EvalAbort(
                Diagnostic("error", f"{expr.name}(): {exc}", expr.line, expr.column)
            ) from None

    def run(self, script: Script) -> EvalResult:
        for stmt in script.statements:
            try:
                self.exec_stmt(stmt)
            except _EvalAbort as abort:
                self.diagnostics.append(abort.diagnostic)
                break
        return EvalResult(self.environment, self.emitted, self.diagnostics)

    def exec_stmt(self, stmt: Stmt) -> None:
        if isinstance(stmt, Let):
            self.environment[stmt.ident] = self.eval_expr(stmt.expr)
            return
        if isinstance(stmt, Emit):
            for name in stmt.names:
                self.emitted.append((name.ident, self.environment[name.ident]))
            return
        left = self.eval_expr(stmt.left)
        right = self.eval_expr(stmt.right)
        try:
            lq = _need_quantityish(left, "left side of assertion")
            rq = _need_quantityish(right, "right side of assertion")
        except _EvalError as exc:
            raise _EvalAbort(
                Diagnostic("error", exc.message, stmt.line, stmt.column)
            ) from None
        s = (lq - rq).sign()
        holds = {"==": s == 0, "<": s < 0, ">": s > 0}[stmt.op]
        if not holds:
            # assertion failures are reported but do not halt the run
            self.diagnostics.append(
                Diagnostic(
                    "error",
                    f"assertion failed: left {stmt.op} right is false; "
                    f"left in {lq.enclose(64)}, right in {rq.enclose(64)}",
                    stmt.line,
                    stmt.column,
                )
            )


class _EvalAbort(Exception):
    def __init__(self, diagnostic: Diagnostic):
        self.diagnostic = diagnostic


def evaluate(script: Script) -> EvalResult:
    """Execute statements in order with exact semantics; deterministic."""
    return _Evaluator().run(script)


# -- reports and figure extraction ----------------------------------------------------


def _render_value(value: Value, digits: int) -> str:
    if isinstance(value, ConstructibleReal):
        if value.is_rational():
            return to_decimal(value, digits)
        return f"{to_decimal(value, digits)} (= {value})"
    if isinstance(value, Quantity):
        if value.is_constant():
            return _render_value(value.c0, digits)
        return f"{to_decimal(value, digits)} (= {value})"
    if isinstance(value, Point):
        return (
            f"point({to_decimal(value.x, digits)}, {to_decimal(value.y, digits)})"
        )
    if isinstance(value, Segment):
        return (
            f"segment({_render_value(value.a, digits)}, "
            f"{_render_value(value.b, digits)})"
        )
    if isinstance(value, Square):
        return (
            f"square(center={_render_value(value.center, digits)}, "
            f"half_side={to_decimal(value.half_side, digits)})"
        )
    if isinstance(value, Circle):
        return (
            f"circle(center={_render_value(value.center, digits)}, "
            f"radius={to_decimal(value.radius, digits)})"
        )
    if isinstance(value, catalog.RuleOutput):
        witnesses = (
            0 if value.witness_points is None else len(value.witness_points)
        )
        return (
            f"rule output: claimed = {_render_value(value.claimed, digits)}, "
            f"actual = {_render_value(value.actual, digits)}, "
            f"figures = {len(value.figures)}, witness points = {witnesses}"
        )
    return "[" + ", ".join(_render_value(item, digits) for item in value) + "]"


def render_report(result: EvalResult, digits: int = 12) -> str:
    """Deterministic text report of the emitted values."""
    lines = [
        f"{name} = {_render_value(value, digits)}"
        for name, value in result.emitted
    ]
    return "\n".join(lines) + ("\n" if lines else "")


def extract_figures(result: EvalResult) -> list[Figure]:
    """All figures among the emitted values, in emission order."""
    figures: list[Figure] = []

    def collect(value: Value) -> None:
        if isinstance(value, (Point, Segment, Square, Circle)):
            figures.append(value)
        elif isinstance(value, catalog.RuleOutput):
            figures.extend(value.figures)
            if value.witness_points is not None:
                figures.extend(value.witness_points)
        elif isinstance(value, list):
            for item in value:
                collect(item)

    for _, value in result.emitted:
        collect(value)
    return figures
