"""形式上的 Conway 算术：加、取负、减、乘

所有运算直接按定义作用在形式上，结果驻留；加法和乘法的定义在
集合并下对称，所以以无序 id 对为缓存键。乘法内部的加减乘全部
经过同一组全局缓存。递归在 evaluation.run 的显式栈上展开。
"""

from typing import TYPE_CHECKING, List

from .evaluation import Steps, operation, run

if TYPE_CHECKING:
    from .form_store import FormId, FormStore


def _pair(x: 'FormId', y: 'FormId'):
    return (x, y) if x <= y else (y, x)


def negate(store: 'FormStore', x: 'FormId') -> 'FormId':
    """−x = {−X_R | −X_L}"""
    return run(store, 'neg', x)


def add(store: 'FormStore', x: 'FormId', y: 'FormId') -> 'FormId':
    """x + y = {X_L + y ∪ x + Y_L | X_R + y ∪ x + Y_R}"""
    return run(store, 'add', x, y)


def sub(store: 'FormStore', x: 'FormId', y: 'FormId') -> 'FormId':
    """x − y = x + (−y)"""
    return add(store, x, negate(store, y))


def mul(store: 'FormStore', x: 'FormId', y: 'FormId') -> 'FormId':
    """xy = {X_L y + x Y_L − X_L Y_L ∪ X_R y + x Y_R − X_R Y_R |
             X_L y + x Y_R − X_L Y_R ∪ X_R y + x Y_L − X_R Y_L}

    每一项对 (x_i, y_j) 的全部组合分别求值。
    """
    return run(store, 'mul', x, y)


@operation('neg', lambda store, x: store.neg_cache.get(x))
def _negate_steps(store: 'FormStore', x: 'FormId') -> Steps:
    node = store.node(x)
    left = []
    for r in node.right:
        left.append((yield ('neg', r)))
    right = []
    for l in node.left:
        right.append((yield ('neg', l)))
    result = store.intern_result(left, right)
    store.neg_cache.put(x, result)
    store.neg_cache.put(result, x)
    return result


@operation('add', lambda store, x, y: store.add_cache.get(_pair(x, y)))
def _add_steps(store: 'FormStore', x: 'FormId', y: 'FormId') -> Steps:
    x_node, y_node = store.node(x), store.node(y)
    left, right = [], []
    for x_l in x_node.left:
        left.append((yield ('add', x_l, y)))
    for y_l in y_node.left:
        left.append((yield ('add', x, y_l)))
    for x_r in x_node.right:
        right.append((yield ('add', x_r, y)))
    for y_r in y_node.right:
        right.append((yield ('add', x, y_r)))
    result = store.intern_result(left, right)
    store.add_cache.put(_pair(x, y), result)
    return result


@operation('mul', lambda store, x, y: store.mul_cache.get(_pair(x, y)))
def _mul_steps(store: 'FormStore', x: 'FormId', y: 'FormId') -> Steps:
    x_node, y_node = store.node(x), store.node(y)
    left = yield from _terms(x, y, x_node.left, y_node.left)
    left += yield from _terms(x, y, x_node.right, y_node.right)
    right = yield from _terms(x, y, x_node.left, y_node.right)
    right += yield from _terms(x, y, x_node.right, y_node.left)
    result = store.intern_result(left, right)
    store.mul_cache.put(_pair(x, y), result)
    return result


def _terms(x: 'FormId', y: 'FormId', xs, ys) -> Steps:
    # x_i y + x y_j − x_i y_j，先做前两项的和再减第三项
    terms: List['FormId'] = []
    for x_i in xs:
        for y_j in ys:
            first = yield ('mul', x_i, y)
            second = yield ('mul', x, y_j)
            total = yield ('add', first, second)
            third = yield ('mul', x_i, y_j)
            minus_third = yield ('neg', third)
            terms.append((yield ('add', total, minus_third)))
    return terms
