"""文本语法、φ 记号打印、DOT 导出与 JSON 快照"""

from .parser import Expr, parse, elaborate, evaluate, tokenize
from .printer import print_form, shorthand, strip_whitespace
from .dot_export import build_graph, to_dot, to_dot_many
from .json_snapshot import snapshot, to_json, from_json, load_snapshot

__all__ = [
    'Expr', 'parse', 'elaborate', 'evaluate', 'tokenize',
    'print_form', 'shorthand', 'strip_whitespace',
    'build_graph', 'to_dot', 'to_dot_many',
    'snapshot', 'to_json', 'from_json', 'load_snapshot',
]
