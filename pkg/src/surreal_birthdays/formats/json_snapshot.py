"""JSON DAG 快照

    {
      "root": 3,
      "nodes": [
        {"id": 0, "left": [], "right": [], "value": "0", "generation": 0},
        ...
      ]
    }

节点 id 为可达节点按驻留顺序重新编号的结果，因此是拓扑序：
left / right 只引用更小的 id。读入时逐个重新驻留并校验数值条件，
value 与 generation 字段若给出则必须与重新计算的结果一致。
"""

import json
from typing import Any, Dict, List

from ..core import FormId, FormStore
from ..core.dyadic import Dyadic
from ..core.errors import InvalidFormId, MalformedSnapshot, NotANumber


def snapshot(store: FormStore, x: FormId) -> Dict[str, Any]:
    reachable = store.reachable(x)
    rank = {fid: i for i, fid in enumerate(reachable)}
    nodes = []
    for fid in reachable:
        node = store.node(fid)
        nodes.append({
            'id': rank[fid],
            'left': sorted(rank[m] for m in node.left),
            'right': sorted(rank[m] for m in node.right),
            'value': str(store.value(fid)),
            'generation': store.generation(fid),
        })
    return {'root': rank[x], 'nodes': nodes}


def to_json(store: FormStore, x: FormId, indent: int = None) -> str:
    return json.dumps(snapshot(store, x), indent=indent, ensure_ascii=False)


def from_json(store: FormStore, text: str) -> FormId:
    """把快照重新驻留到 store，返回根节点

    Raises:
        MalformedSnapshot: 结构不合法、引用了未定义的节点或违反数值条件
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedSnapshot(f"快照不是合法的 JSON: {e}") from e
    return load_snapshot(store, data)


def load_snapshot(store: FormStore, data: Any) -> FormId:
    if not isinstance(data, dict) or not isinstance(data.get('nodes'), list):
        raise MalformedSnapshot("快照缺少 nodes 数组")
    root = data.get('root')
    if not _is_int(root):
        raise MalformedSnapshot(f"root 必须是整数: {root!r}")

    mapping: Dict[int, FormId] = {}
    for entry in data['nodes']:
        if not isinstance(entry, dict):
            raise MalformedSnapshot(f"节点必须是对象: {entry!r}")
        node_id = entry.get('id')
        if not _is_int(node_id):
            raise MalformedSnapshot(f"节点 id 必须是整数: {node_id!r}")
        if node_id in mapping:
            raise MalformedSnapshot(f"节点 id 重复: {node_id}")
        left = _resolve(entry.get('left'), mapping, node_id, 'left')
        right = _resolve(entry.get('right'), mapping, node_id, 'right')
        try:
            fid = store.make_form(left, right)
        except (NotANumber, InvalidFormId) as e:
            raise MalformedSnapshot(f"节点 {node_id} 不是数: {e}") from e
        _check_recorded(store, fid, entry)
        mapping[node_id] = fid

    if root not in mapping:
        raise MalformedSnapshot(f"root {root} 未定义")
    return mapping[root]


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _resolve(ids: Any, mapping: Dict[int, FormId], node_id: int, side: str) -> List[FormId]:
    if not isinstance(ids, list):
        raise MalformedSnapshot(f"节点 {node_id} 的 {side} 必须是数组")
    resolved = []
    for ref in ids:
        if not _is_int(ref) or ref not in mapping:
            raise MalformedSnapshot(f"节点 {node_id} 的 {side} 引用了未定义（或非拓扑序）的节点 {ref!r}")
        resolved.append(mapping[ref])
    return resolved


def _check_recorded(store: FormStore, fid: FormId, entry: Dict[str, Any]) -> None:
    if 'value' in entry:
        try:
            recorded = Dyadic.parse(str(entry['value']))
        except ValueError as e:
            raise MalformedSnapshot(f"节点 {entry['id']} 的 value 无法解析: {entry['value']!r}") from e
        if recorded != store.value(fid):
            raise MalformedSnapshot(
                f"节点 {entry['id']} 记录的 value={recorded} 与实际值 {store.value(fid)} 不符")
    if 'generation' in entry and entry['generation'] != store.generation(fid):
        raise MalformedSnapshot(
            f"节点 {entry['id']} 记录的 generation={entry['generation']} 与实际值 "
            f"{store.generation(fid)} 不符")
