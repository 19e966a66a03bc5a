"""记忆化缓存

FormStore 中 leq / add / mul / neg 各持有一个 MemoCache。
默认不限容量；配置了 max_entries 时按策略处理溢出：
- EVICT_NONE: 不再写入新条目（已缓存条目保留），继续计算
- FAIL_FAST: 抛出 CacheLimitExceeded
"""

import logging
from typing import Any, Dict, Hashable, Optional

from ..contracts import CachePolicy
from .errors import CacheLimitExceeded

_MISSING = object()


class MemoCache:
    """带容量上限的字典缓存"""

    def __init__(self, name: str, max_entries: Optional[int] = None,
                 policy: CachePolicy = CachePolicy.EVICT_NONE):
        self.name = name
        self.max_entries = max_entries
        self.policy = policy
        self.hits = 0
        self.misses = 0
        self._data: Dict[Hashable, Any] = {}
        self._full_warned = False
        self.logger = logging.getLogger(__name__)

    def get(self, key: Hashable, default: Any = None) -> Any:
        value = self._data.get(key, _MISSING)
        if value is _MISSING:
            self.misses += 1
            return default
        self.hits += 1
        return value

    def put(self, key: Hashable, value: Any) -> None:
        if self.max_entries is not None and len(self._data) >= self.max_entries:
            if self.policy is CachePolicy.FAIL_FAST:
                raise CacheLimitExceeded(
                    f"缓存 {self.name} 已达上限 {self.max_entries} 条 (策略 fail-fast)")
            if not self._full_warned:
                self.logger.warning(f"缓存 {self.name} 已达上限 {self.max_entries} 条，后续结果不再缓存")
                self._full_warned = True
            return
        self._data[key] = value

    def clear(self) -> None:
        self._data.clear()
        self.hits = 0
        self.misses = 0
        self._full_warned = False

    def __len__(self) -> int:
        return len(self._data)

    def __contains__(self, key: Hashable) -> bool:
        return key in self._data

    def stats(self) -> Dict[str, Any]:
        return {
            "entries": len(self._data),
            "hits": self.hits,
            "misses": self.misses,
            "max_entries": self.max_entries,
            "policy": self.policy.value,
        }
