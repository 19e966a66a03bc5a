"""DOT 图导出

每个可达节点画成三格的 record 框：上格为值，下左为左集合，下右为右集合。
左父边为红色、右父边为蓝色；共享节点只画一次。节点按 id 升序编号为
n0, n1, ...，边按成员 (值, id) 顺序输出，同一形式两次导出逐字节相同。
"""

from typing import Dict, Iterable, List

from graphviz import Digraph

from ..config import EMPTY_SET_TOKEN
from ..core import FormId, FormStore

LEFT_EDGE_COLOR = 'red'
RIGHT_EDGE_COLOR = 'blue'


def _ordered(store: FormStore, members: Iterable[FormId]) -> List[FormId]:
    return sorted(members, key=lambda fid: (store.value(fid), fid))


def _members_label(store: FormStore, members: List[FormId]) -> str:
    if not members:
        return EMPTY_SET_TOKEN
    return ", ".join(str(store.value(m)) for m in members)


def build_graph(store: FormStore, roots: Iterable[FormId], name: str = 'form') -> Digraph:
    """roots 可达的全部节点组成的 Digraph"""
    reachable = sorted({fid for root in roots for fid in store.reachable(root)})
    names: Dict[FormId, str] = {fid: f"n{rank}" for rank, fid in enumerate(reachable)}

    dot = Digraph(name=name, node_attr={'shape': 'record'})
    for fid in reachable:
        node = store.node(fid)
        left, right = _ordered(store, node.left), _ordered(store, node.right)
        label = (f"{{{store.value(fid)}|{{<L> {_members_label(store, left)}"
                 f"|<R> {_members_label(store, right)}}}}}")
        dot.node(names[fid], label=label)
    for fid in reachable:
        node = store.node(fid)
        for member in _ordered(store, node.left):
            dot.edge(f"{names[fid]}:L", names[member], color=LEFT_EDGE_COLOR)
        for member in _ordered(store, node.right):
            dot.edge(f"{names[fid]}:R", names[member], color=RIGHT_EDGE_COLOR)
    return dot


def to_dot(store: FormStore, x: FormId) -> str:
    """x 的 DOT 文本"""
    return build_graph(store, [x]).source


def to_dot_many(store: FormStore, roots: Iterable[FormId], name: str = 'forms') -> str:
    """多个形式合成一张图，例如二进 DAG"""
    return build_graph(store, roots, name).source
