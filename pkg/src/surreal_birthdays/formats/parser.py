"""形式与表达式的文本语法

    expr    := term (('+' | '-') term)*
    term    := factor ('*' factor)*
    factor  := '-' factor | '(' expr ')' | literal
    literal := form | 'dali(' dyadic ')'
    form    := '{' setpart '|' setpart '}'
    setpart := 'phi' | member (',' member)*
    member  := form | 'dali(' dyadic ')'
    dyadic  := integer | integer '/' power-of-two | integer '/2^' integer

空白无关；'φ' 与 'phi' 等价，'×' 与 '*' 等价，空的 setpart 视为 phi。
花括号内不接受数字简写（如 {3|5}），只接受 phi、嵌套形式与 dali()。
"""

import re
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from ..config import EMPTY_SET_TOKEN
from ..core import FormId, FormStore, add, dali, mul, negate, sub
from ..core.dyadic import Dyadic
from ..core.errors import DepthExceeded, FormSyntaxError, NonDyadicDenominator

_TOKEN_RE = re.compile(r'''
    (?P<ws>\s+)
  | (?P<phi>phi\b|φ)
  | (?P<dali>dali\b)
  | (?P<number>\d+)
  | (?P<op>[{}|,()+\-*×/^])
''', re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


# ---- 表达式树 ----

@dataclass(frozen=True)
class FormLiteral:
    """{ left | right }"""
    left: Tuple['Expr', ...]
    right: Tuple['Expr', ...]


@dataclass(frozen=True)
class DaliLiteral:
    value: Dyadic


@dataclass(frozen=True)
class Negation:
    operand: 'Expr'


@dataclass(frozen=True)
class BinaryOp:
    op: str                 # '+', '-', '*'
    left: 'Expr'
    right: 'Expr'


Expr = Union[FormLiteral, DaliLiteral, Negation, BinaryOp]


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    position = 0
    while position < len(text):
        match = _TOKEN_RE.match(text, position)
        if match is None:
            raise FormSyntaxError(f"无法识别的字符 {text[position]!r}", position, text)
        kind = match.lastgroup
        if kind == 'op':
            value = '*' if match.group() == '×' else match.group()
            tokens.append(Token(value, value, position))
        elif kind != 'ws':
            tokens.append(Token(kind, match.group(), position))
        position = match.end()
    tokens.append(Token('end', '', len(text)))
    return tokens


class _Parser:
    """递归下降解析器"""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, kind: str) -> Token:
        token = self.current
        if token.kind != kind:
            found = token.text or '输入结尾'
            raise FormSyntaxError(f"期望 {kind!r}，实际为 {found!r}", token.position, self.text)
        return self.advance()

    def error(self, message: str, token: Optional[Token] = None) -> FormSyntaxError:
        token = token or self.current
        return FormSyntaxError(message, token.position, self.text)

    # expr := term (('+' | '-') term)*
    def expr(self) -> Expr:
        node = self.term()
        while self.current.kind in ('+', '-'):
            op = self.advance().kind
            node = BinaryOp(op, node, self.term())
        return node

    # term := factor ('*' factor)*
    def term(self) -> Expr:
        node = self.factor()
        while self.current.kind == '*':
            self.advance()
            node = BinaryOp('*', node, self.factor())
        return node

    def factor(self) -> Expr:
        token = self.current
        if token.kind == '-':
            self.advance()
            return Negation(self.factor())
        if token.kind == '(':
            self.advance()
            node = self.expr()
            self.expect(')')
            return node
        if token.kind == '{':
            return self.form()
        if token.kind == 'dali':
            return self.dali()
        if token.kind == 'number':
            raise self.error("数字不能直接作为操作数，请写成 dali(n)")
        if token.kind == 'end':
            raise self.error("表达式意外结束")
        raise self.error(f"意外的符号 {token.text!r}")

    def form(self) -> FormLiteral:
        self.expect('{')
        left = self.setpart('|')
        self.expect('|')
        right = self.setpart('}')
        self.expect('}')
        return FormLiteral(left, right)

    def setpart(self, terminator: str) -> Tuple[Expr, ...]:
        if self.current.kind == 'phi':
            self.advance()
            return ()
        if self.current.kind == terminator:
            return ()
        members = [self.member()]
        while self.current.kind == ',':
            self.advance()
            members.append(self.member())
        return tuple(members)

    def member(self) -> Expr:
        token = self.current
        if token.kind == '{':
            return self.form()
        if token.kind == 'dali':
            return self.dali()
        if token.kind in ('number', '-', '+'):
            raise self.error("花括号内不接受数字简写，请使用嵌套形式或 dali()")
        raise self.error(f"集合成员只能是形式、{EMPTY_SET_TOKEN} 或 dali()，实际为 {token.text or '输入结尾'!r}")

    def dali(self) -> DaliLiteral:
        self.expect('dali')
        self.expect('(')
        start = self.current.position
        while self.current.kind in ('number', '-', '+', '/', '^'):
            self.advance()
        end = self.current.position
        close = self.expect(')')
        argument = self.text[start:end]
        try:
            value = Dyadic.parse(argument)
        except NonDyadicDenominator:
            raise
        except ValueError:
            raise FormSyntaxError(f"dali() 的参数不是二进有理数: {argument!r}", start if argument else close.position,
                                  self.text) from None
        return DaliLiteral(value)

    def parse(self) -> Expr:
        node = self.expr()
        if self.current.kind != 'end':
            raise self.error(f"多余的输入 {self.current.text!r}")
        return node


def parse(text: str) -> Expr:
    """解析表达式文本

    Raises:
        FormSyntaxError: 语法错误，带出错位置
        NonDyadicDenominator: dali() 的分母不是 2 的幂
    """
    try:
        return _Parser(text).parse()
    except RecursionError:
        raise FormSyntaxError("表达式嵌套过深", 0, text) from None


def elaborate(store: FormStore, expr: Expr) -> FormId:
    """在 store 中求值表达式树

    Raises:
        NotANumber: 某个形式字面量违反数值条件
    """
    if isinstance(expr, FormLiteral):
        left = [elaborate(store, member) for member in expr.left]
        right = [elaborate(store, member) for member in expr.right]
        return store.make_form(left, right)
    if isinstance(expr, DaliLiteral):
        return dali(store, expr.value)
    if isinstance(expr, Negation):
        return negate(store, elaborate(store, expr.operand))
    if isinstance(expr, BinaryOp):
        x = elaborate(store, expr.left)
        y = elaborate(store, expr.right)
        if expr.op == '+':
            return add(store, x, y)
        if expr.op == '-':
            return sub(store, x, y)
        return mul(store, x, y)
    raise TypeError(f"未知的表达式节点: {expr!r}")


def evaluate(store: FormStore, text: str) -> FormId:
    """parse + elaborate"""
    expr = parse(text)
    try:
        return elaborate(store, expr)
    except DepthExceeded:
        raise
    except RecursionError:
        raise FormSyntaxError("表达式嵌套过深", 0, text) from None
