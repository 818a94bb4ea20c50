"""A small expression language over words and their rational combinations.

Grammar, with '*' left-associative:

    expr    := '-'? term (('+' | '-') term)*
    term    := scalar? factor ('*' factor)*
    factor  := wordlit | 'A' '(' expr ')' | '(' expr ')'
    wordlit := atom atom*
    atom    := name | '[' name ']'
    scalar  := int ('/' posint)? '.'

Juxtaposed atoms form one word, so "x [y] z" is a single word literal.
Scalars attach with an explicit dot, as in "3/2 . x".  The name 'A' is
reserved for the involution; a generator that wants the letter can use A_.
Expressions built from words, 'A', and '*' alone stay inside the free
structure; '+', '-', and scalars move evaluation to the linear span.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .algebra import AlgebraElement, add, alpha_alg, diamond_alg, scale
from .words import Letter, Word, alpha_word, diamond


class ParseError(ValueError):
    """Rejected input, with the 1-based position of the offending token."""

    def __init__(self, line: int, col: int, message: str):
        super().__init__("line %d, column %d: %s" % (line, col, message))
        self.line = line
        self.col = col


class ModeError(ValueError):
    """An algebra-only construct appeared where a plain word is required."""


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


_SYMBOLS = set("+-*/.()[]")


def tokenize(text: str) -> List[Token]:
    toks: List[Token] = []
    line, col, i = 1, 1, 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line, col, i = line + 1, 1, i + 1
        elif ch in " \t\r":
            col, i = col + 1, i + 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(Token("INT", text[i:j], line, col))
            col, i = col + (j - i), j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(Token("NAME", text[i:j], line, col))
            col, i = col + (j - i), j
        elif ch in _SYMBOLS:
            toks.append(Token(ch, ch, line, col))
            col, i = col + 1, i + 1
        else:
            raise ParseError(line, col, "unexpected character %r" % ch)
    toks.append(Token("END", "", line, col))
    return toks


# ---------------------------------------------------------------- syntax tree

@dataclass(frozen=True)
class WordLit:
    word: Word


@dataclass(frozen=True)
class Alpha:
    expr: "Node"


@dataclass(frozen=True)
class Diamond:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Add:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Sub:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Neg:
    expr: "Node"


@dataclass(frozen=True)
class Scaled:
    coeff: Fraction
    expr: "Node"


Node = Union[WordLit, Alpha, Diamond, Add, Sub, Neg, Scaled]

_RESERVED = "'A' is reserved for the involution; name the generator A_ instead"


class _Parser:
    def __init__(self, toks: List[Token]):
        self.toks = toks
        self.pos = 0

    def peek(self) -> Token:
        return self.toks[self.pos]

    def take(self) -> Token:
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def fail(self, tok: Token, message: str):
        raise ParseError(tok.line, tok.col, message)

    def found(self, tok: Token) -> str:
        return "end of input" if tok.kind == "END" else repr(tok.text)

    def expect(self, kind: str, what: str) -> Token:
        tok = self.take()
        if tok.kind != kind:
            self.fail(tok, "expected %s, found %s" % (what, self.found(tok)))
        return tok

    def expression(self) -> Node:
        if self.peek().kind == "-":
            self.take()
            node: Node = Neg(self.term())
        else:
            node = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.take().kind
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self) -> Node:
        scal = self.try_scalar()
        node = self.factor()
        while self.peek().kind == "*":
            self.take()
            node = Diamond(node, self.factor())
        return node if scal is None else Scaled(scal, node)

    def try_scalar(self) -> Optional[Fraction]:
        if self.peek().kind != "INT":
            return None
        num = int(self.take().text)
        den = 1
        if self.peek().kind == "/":
            self.take()
            den_tok = self.expect("INT", "a denominator")
            den = int(den_tok.text)
            if den == 0:
                self.fail(den_tok, "zero denominator")
        dot = self.peek()
        if dot.kind != ".":
            self.fail(dot, "a scalar attaches with '.', as in 3/2 . x")
        self.take()
        return Fraction(num, den)

    def factor(self) -> Node:
        tok = self.peek()
        if tok.kind == "(":
            self.take()
            node = self.expression()
            self.expect(")", "')'")
            return node
        if tok.kind == "NAME" and tok.text == "A":
            self.take()
            if self.peek().kind != "(":
                self.fail(tok, _RESERVED)
            self.take()
            node = self.expression()
            self.expect(")", "')'")
            return Alpha(node)
        if tok.kind in ("NAME", "["):
            letters = [self.atom()]
            while self.peek().kind == "[" or (
                self.peek().kind == "NAME" and self.peek().text != "A"
            ):
                letters.append(self.atom())
            return WordLit(Word(tuple(letters)))
        self.fail(tok, "expected a word, '(', or 'A(', found %s" % self.found(tok))

    def atom(self) -> Letter:
        tok = self.take()
        if tok.kind == "[":
            name = self.expect("NAME", "a generator name")
            if name.text == "A":
                self.fail(name, _RESERVED)
            self.expect("]", "']'")
            return Letter(name.text, 1)
        if tok.kind == "NAME":
            if tok.text == "A":
                self.fail(tok, _RESERVED)
            return Letter(tok.text, 0)
        self.fail(tok, "expected a generator, found %s" % self.found(tok))


def parse_expression(text: str) -> Node:
    toks = tokenize(text)
    if toks[0].kind == "END":
        raise ParseError(toks[0].line, toks[0].col, "empty expression")
    p = _Parser(toks)
    node = p.expression()
    tail = p.peek()
    if tail.kind != "END":
        p.fail(tail, "unexpected %s after the expression" % p.found(tail))
    return node


# ---------------------------------------------------------------- evaluation

def word_value(node: Node) -> Word:
    if isinstance(node, WordLit):
        return node.word
    if isinstance(node, Alpha):
        return alpha_word(word_value(node.expr))
    if isinstance(node, Diamond):
        return diamond(word_value(node.left), word_value(node.right))
    raise ModeError(
        "sums, differences, and scalars build combinations, not a single word"
    )


def algebra_value(node: Node) -> AlgebraElement:
    if isinstance(node, WordLit):
        return AlgebraElement.from_word(node.word)
    if isinstance(node, Alpha):
        return alpha_alg(algebra_value(node.expr))
    if isinstance(node, Diamond):
        return diamond_alg(algebra_value(node.left), algebra_value(node.right))
    if isinstance(node, Add):
        return add(algebra_value(node.left), algebra_value(node.right))
    if isinstance(node, Sub):
        return add(algebra_value(node.left), scale(-1, algebra_value(node.right)))
    if isinstance(node, Neg):
        return scale(-1, algebra_value(node.expr))
    if isinstance(node, Scaled):
        return scale(node.coeff, algebra_value(node.expr))
    raise TypeError("not an expression node: %r" % (node,))


def eval_word(text: str) -> Word:
    """Evaluate an expression that stays inside the free structure."""
    return word_value(parse_expression(text))


def eval_algebra(text: str) -> AlgebraElement:
    """Evaluate any expression in the linear span."""
    return algebra_value(parse_expression(text))


# ---------------------------------------------------------------- rendering

def render_expr(node: Node) -> str:
    """Fully parenthesized text; parsing it back yields the same tree."""
    if isinstance(node, WordLit):
        text = str(node.word)
        return text if len(node.word.letters) == 1 else "(%s)" % text
    if isinstance(node, Alpha):
        return "A(%s)" % render_expr(node.expr)
    if isinstance(node, Diamond):
        return "(%s * %s)" % (render_expr(node.left), render_expr(node.right))
    if isinstance(node, Add):
        return "(%s + %s)" % (render_expr(node.left), render_expr(node.right))
    if isinstance(node, Sub):
        return "(%s - %s)" % (render_expr(node.left), render_expr(node.right))
    if isinstance(node, Neg):
        return "(-%s)" % render_expr(node.expr)
    if isinstance(node, Scaled):
        return "(%s . %s)" % (node.coeff, render_expr(node.expr))
    raise TypeError("not an expression node: %r" % (node,))


def generator_expression(w: Word) -> str:
    """Build a word from bare generators using only '*' and the involution.

    The twisted product with a single letter on the left is concatenation,
    so peeling letters off the front gives a right-nested product.
    """
    expr = ""
    for l in reversed(w.letters):
        part = "A(%s)" % l.name if l.bit else l.name
        if not expr:
            expr = part
        elif "*" in expr:
            expr = "%s * (%s)" % (part, expr)
        else:
            expr = "%s * %s" % (part, expr)
    return expr
