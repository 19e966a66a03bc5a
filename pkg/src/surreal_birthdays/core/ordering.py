"""形式上的递归序关系

leq 是唯一的原语，其余比较都由它组合而来：
    x ≤ y  ⇔  不存在 x_l ∈ X_L 使 y ≤ x_l，且不存在 y_r ∈ Y_R 使 y_r ≤ x
结果按有序对 (x, y) 记忆化在 store.leq_cache 中，递归在显式栈上展开。
"""

from typing import TYPE_CHECKING, Optional

from .evaluation import Steps, operation, run

if TYPE_CHECKING:
    from .form_store import FormId, FormStore


def _leq_lookup(store: 'FormStore', x: 'FormId', y: 'FormId') -> Optional[bool]:
    if x == y:
        return True
    return store.leq_cache.get((x, y))


@operation('leq', _leq_lookup)
def _leq_steps(store: 'FormStore', x: 'FormId', y: 'FormId') -> Steps:
    x_node, y_node = store.node(x), store.node(y)
    result = True
    for x_l in x_node.left:
        if (yield ('leq', y, x_l)):
            result = False
            break
    if result:
        for y_r in y_node.right:
            if (yield ('leq', y_r, x)):
                result = False
                break
    store.leq_cache.put((x, y), result)
    return result


def leq(store: 'FormStore', x: 'FormId', y: 'FormId') -> bool:
    """x ≤ y"""
    return run(store, 'leq', x, y)


def geq(store: 'FormStore', x: 'FormId', y: 'FormId') -> bool:
    return leq(store, y, x)


def lt(store: 'FormStore', x: 'FormId', y: 'FormId') -> bool:
    return not leq(store, y, x)


def gt(store: 'FormStore', x: 'FormId', y: 'FormId') -> bool:
    return not leq(store, x, y)


def equiv(store: 'FormStore', x: 'FormId', y: 'FormId') -> bool:
    """x ≡ y：同值"""
    return leq(store, x, y) and leq(store, y, x)


def identical(store: 'FormStore', x: 'FormId', y: 'FormId') -> bool:
    """x == y：结构恒等，即驻留 id 相等"""
    store.node(x)
    store.node(y)
    return x == y


def compare(store: 'FormStore', x: 'FormId', y: 'FormId') -> int:
    """-1 / 0 / 1，按值比较"""
    if not leq(store, x, y):
        return 1
    return 0 if leq(store, y, x) else -1
