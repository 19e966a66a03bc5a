"""显式栈求值

leq / neg / add / mul / dali 的递归定义都写成生成器：需要子结果时
yield 一个请求 (运算名, 参数...)，由 run() 在堆上的显式栈里驱动，
子结果再 send 回等待它的生成器。解释器调用栈的深度因此与形式的
generation 无关；每个未命中缓存的活动帧仍经 store.enter()/leave()
计数，超过 max_depth 时抛出 DepthExceeded。
"""

from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, Callable, Dict, Generator, List, Optional, Tuple

if TYPE_CHECKING:
    from .form_store import FormStore

Request = Tuple[Any, ...]
Steps = Generator[Request, Any, Any]


@dataclass(frozen=True)
class Operation:
    """一种可在显式栈上求值的递归运算"""
    name: str
    lookup: Callable[..., Optional[Any]]     # (store, *args) -> 缓存结果或 None
    steps: Callable[..., Steps]              # (store, *args) -> 生成器


_OPERATIONS: Dict[str, Operation] = {}


def operation(name: str, lookup: Callable[..., Optional[Any]]):
    """注册运算：被装饰的生成器函数即其求值步骤"""
    def register(steps: Callable[..., Steps]) -> Callable[..., Steps]:
        _OPERATIONS[name] = Operation(name, lookup, steps)
        return steps
    return register


def run(store: 'FormStore', name: str, *args: Any) -> Any:
    """在显式栈上求值 name(*args)

    Raises:
        DepthExceeded: 同时活动的帧数超过 store.settings.max_depth
    """
    op = _OPERATIONS[name]
    cached = op.lookup(store, *args)
    if cached is not None:
        return cached

    stack: List[Steps] = []
    try:
        store.enter()
        stack.append(op.steps(store, *args))
        value: Any = None
        while stack:
            try:
                request = stack[-1].send(value)
            except StopIteration as done:
                stack.pop()
                store.leave()
                value = done.value
                continue
            sub = _OPERATIONS[request[0]]
            value = sub.lookup(store, *request[1:])
            if value is None:
                store.enter()
                stack.append(sub.steps(store, *request[1:]))
        return value
    finally:
        # 异常退出时逐帧关闭并归还深度计数
        while stack:
            stack.pop().close()
            store.leave()
