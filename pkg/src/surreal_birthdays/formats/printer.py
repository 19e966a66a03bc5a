"""φ 记号打印

完整展开时每个空集合都显式写成 phi，集合成员按 (值, id) 排序，
所以同一个形式总是得到同一个字符串。展开长度可能随 generation
指数增长；depth_limit 限定展开层数，更深的子形式写成 <值>。
"""

from typing import Dict, List, Optional, Sequence

from ..config import EMPTY_SET_TOKEN
from ..core import FormId, FormStore


def _ordered(store: FormStore, members: Sequence[FormId]) -> Sequence[FormId]:
    return sorted(members, key=lambda fid: (store.value(fid), fid))


def _render(store: FormStore, x: FormId, text: Dict[FormId, str]) -> str:
    node = store.node(x)
    left = ", ".join(text[m] for m in _ordered(store, node.left)) or EMPTY_SET_TOKEN
    right = ", ".join(text[m] for m in _ordered(store, node.right)) or EMPTY_SET_TOKEN
    return f"{{ {left} | {right} }}"


def print_form(store: FormStore, x: FormId, depth_limit: Optional[int] = None) -> str:
    """x 的 φ 记号

    Args:
        depth_limit: 展开的花括号层数；None 表示完全展开，0 表示只写 <值>
    """
    if depth_limit is None:
        text: Dict[FormId, str] = {}
        # id 升序即拓扑序
        for fid in store.reachable(x):
            text[fid] = _render(store, fid, text)
        return text[x]
    if depth_limit < 0:
        raise ValueError(f"depth_limit 不能为负: {depth_limit}")
    return _print_limited(store, x, depth_limit)


def _print_limited(store: FormStore, x: FormId, levels: int) -> str:
    # 第 d 层的节点还剩 levels − d 层可展开；自最深一层向上逐层拼接
    layers: List[List[FormId]] = [[x]]
    while len(layers) <= levels:
        members = sorted({m for fid in layers[-1] for m in store.parents(fid)})
        if not members:
            break
        layers.append(members)

    below: Dict[FormId, str] = {}
    for depth in range(len(layers) - 1, -1, -1):
        if depth == levels:
            below = {fid: shorthand(store, fid) for fid in layers[depth]}
        else:
            below = {fid: _render(store, fid, below) for fid in layers[depth]}
    return below[x]


def shorthand(store: FormStore, x: FormId) -> str:
    """<值>：只表示值，不表示结构"""
    return f"<{store.value(x)}>"


def strip_whitespace(text: str) -> str:
    return "".join(text.split())
