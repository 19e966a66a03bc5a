"""超现实数形式 (form) 的驻留存储

每个形式 {X_L | X_R} 以 FormNode 保存在只增不删的表中，结构相同的形式
只驻留一次，因此 FormId 相等即结构恒等 (==)。节点创建时即计算
generation 与值，同时持有 leq / add / mul / neg 的记忆化缓存。
"""

import logging
import threading
from dataclasses import dataclass
from typing import Dict, Iterable, List, NewType, Optional, Tuple

from ..contracts import EngineSettings, NumericCheck
from . import ordering
from .canonical import simplest_between
from .dyadic import Dyadic
from .errors import ArithmeticInvariantError, DepthExceeded, InvalidFormId, NotANumber
from .memo import MemoCache

FormId = NewType('FormId', int)


@dataclass(frozen=True)
class FormNode:
    """一个形式：去重并按 id 升序的左右集合"""
    left: Tuple[FormId, ...]
    right: Tuple[FormId, ...]

    @property
    def parents(self) -> Tuple[FormId, ...]:
        return tuple(sorted(set(self.left) | set(self.right)))

    @property
    def is_empty(self) -> bool:
        return not self.left and not self.right


class FormStore:
    """驻留形式的只增存储

    单写者约定：驻留与缓存写入由内部 RLock 串行化；读取已存在节点无需加锁。
    驻留是幂等的，所以并发交错不影响结果。
    """

    def __init__(self, settings: Optional[EngineSettings] = None):
        self.settings = settings or EngineSettings()
        self.logger = logging.getLogger(self.__class__.__name__)

        self._nodes: List[FormNode] = []
        self._index: Dict[Tuple[Tuple[FormId, ...], Tuple[FormId, ...]], FormId] = {}
        self._generation: List[int] = []
        self._value: List[Dyadic] = []
        self._lock = threading.RLock()
        self._local = threading.local()

        cap, policy = self.settings.max_cache, self.settings.cache_policy
        self.leq_cache = MemoCache("leq", cap, policy)
        self.add_cache = MemoCache("add", cap, policy)
        self.mul_cache = MemoCache("mul", cap, policy)
        self.neg_cache = MemoCache("neg", cap, policy)
        self.dali_cache: Dict[Dyadic, FormId] = {}

        self.zero_id = self._intern((), (), NumericCheck.OFF)
        self.logger.debug(f"FormStore 初始化完成: max_depth={self.settings.max_depth}, "
                          f"max_cache={self.settings.max_cache}")

    # ---- 受控深度守卫（显式栈上的活动帧数） ----

    def enter(self) -> None:
        """进入一层受控递归；超过 max_depth 时抛出 DepthExceeded"""
        depth = getattr(self._local, 'depth', 0) + 1
        if depth > self.settings.max_depth:
            raise DepthExceeded(self.settings.max_depth)
        self._local.depth = depth

    def leave(self) -> None:
        self._local.depth -= 1

    @property
    def depth(self) -> int:
        return getattr(self._local, 'depth', 0)

    # ---- 驻留 ----

    def make_form(self, left: Iterable[FormId], right: Iterable[FormId]) -> FormId:
        """驻留 {left | right}，按 settings.numeric_check 校验数值条件

        Raises:
            InvalidFormId: 存在不属于本 store 的 id
            NotANumber: 某个 l ∈ left 满足 l ≥ r（r ∈ right）
        """
        return self._intern(left, right, self.settings.numeric_check)

    def intern_result(self, left: Iterable[FormId], right: Iterable[FormId]) -> FormId:
        """驻留算术结果；数值条件失败说明实现有缺陷，直接中止"""
        try:
            return self._intern(left, right, self.settings.arithmetic_check)
        except NotANumber as e:
            raise ArithmeticInvariantError(f"算术结果违反数值条件（实现缺陷）: {e}") from e

    def _intern(self, left: Iterable[FormId], right: Iterable[FormId], check: NumericCheck) -> FormId:
        left_ids = tuple(sorted(set(left)))
        right_ids = tuple(sorted(set(right)))
        key = (left_ids, right_ids)

        found = self._index.get(key)
        if found is not None:
            return found

        for fid in left_ids + right_ids:
            self._check_id(fid)

        with self._lock:
            found = self._index.get(key)
            if found is not None:
                return found

            self._check_numeric(left_ids, right_ids, check)

            lo = max((self._value[i] for i in left_ids), default=None)
            hi = min((self._value[i] for i in right_ids), default=None)
            if lo is not None and hi is not None and hi <= lo:
                # 不校验时也无法为非数形式定值
                raise NotANumber(f"左右集合的值区间 ({lo}, {hi}) 为空：该形式不是数")
            value = simplest_between(lo, hi)
            if left_ids or right_ids:
                generation = 1 + max(self._generation[i] for i in left_ids + right_ids)
            else:
                generation = 0

            fid = FormId(len(self._nodes))
            self._nodes.append(FormNode(left_ids, right_ids))
            self._generation.append(generation)
            self._value.append(value)
            self._index[key] = fid
            return fid

    def _check_numeric(self, left_ids: Tuple[FormId, ...], right_ids: Tuple[FormId, ...],
                       check: NumericCheck) -> None:
        if check is NumericCheck.OFF or not left_ids or not right_ids:
            return
        # 数值条件等价于 max(L) 与 min(R) 这一对不违反
        l_max = max(left_ids, key=self._value.__getitem__)
        r_min = min(right_ids, key=self._value.__getitem__)
        if check is NumericCheck.VALUE:
            violated = self._value[r_min] <= self._value[l_max]
        else:
            violated = ordering.leq(self, r_min, l_max)
        if violated:
            raise NotANumber(
                f"左集合成员 #{l_max} (值 {self._value[l_max]}) ≥ 右集合成员 #{r_min} "
                f"(值 {self._value[r_min]})：该形式不是数",
                left_id=l_max, right_id=r_min)

    def import_form(self, source: 'FormStore', x: FormId) -> FormId:
        """把另一个 store 中 x 可达的整张 DAG 重新驻留到本 store

        source 中 id 升序即拓扑序（父节点总是先于子节点驻留）。
        """
        if source is self:
            self._check_id(x)
            return x
        mapping: Dict[FormId, FormId] = {}
        for fid in source.reachable(x):
            node = source.node(fid)
            mapping[fid] = self._intern([mapping[i] for i in node.left],
                                        [mapping[i] for i in node.right],
                                        NumericCheck.OFF)
        return mapping[x]

    # ---- 读取 ----

    def _check_id(self, x: FormId) -> None:
        if not isinstance(x, int) or not 0 <= x < len(self._nodes):
            raise InvalidFormId(f"无效的 FormId: {x!r}")

    def node(self, x: FormId) -> FormNode:
        self._check_id(x)
        return self._nodes[x]

    def left(self, x: FormId) -> Tuple[FormId, ...]:
        return self.node(x).left

    def right(self, x: FormId) -> Tuple[FormId, ...]:
        return self.node(x).right

    def parents(self, x: FormId) -> Tuple[FormId, ...]:
        """X_L ∪ X_R"""
        return self.node(x).parents

    def generation(self, x: FormId) -> int:
        self._check_id(x)
        return self._generation[x]

    def value(self, x: FormId) -> Dyadic:
        self._check_id(x)
        return self._value[x]

    def zero(self) -> FormId:
        return self.zero_id

    def lookup(self, left: Iterable[FormId], right: Iterable[FormId]) -> Optional[FormId]:
        """已驻留则返回 id，否则 None（不创建）"""
        return self._index.get((tuple(sorted(set(left))), tuple(sorted(set(right)))))

    def reachable(self, x: FormId) -> List[FormId]:
        """x 可达的全部节点（含 x），按 id 升序"""
        self._check_id(x)
        seen = {x}
        stack = [x]
        while stack:
            node = self._nodes[stack.pop()]
            for parent in node.left + node.right:
                if parent not in seen:
                    seen.add(parent)
                    stack.append(parent)
        return sorted(seen)

    def __len__(self) -> int:
        return len(self._nodes)

    def __contains__(self, x) -> bool:
        return isinstance(x, int) and 0 <= x < len(self._nodes)

    def stats(self) -> Dict[str, object]:
        return {
            "nodes": len(self._nodes),
            "caches": {cache.name: cache.stats() for cache in
                       (self.leq_cache, self.add_cache, self.mul_cache, self.neg_cache)},
            "dali": len(self.dali_cache),
        }


def zero(store: FormStore) -> FormId:
    """0̄ = {φ | φ}"""
    return store.zero_id


def make_form(store: FormStore, left: Iterable[FormId], right: Iterable[FormId]) -> FormId:
    return store.make_form(left, right)


def parents(store: FormStore, x: FormId) -> Tuple[FormId, ...]:
    return store.parents(x)
