"""验证用操作数生成器

给定 generation 精确地生成规范形式与非规范形式，全部由带种子的
random.Random 驱动，同一种子得到同一串形式。非规范形式有两种构造：

- 结构构造：取一个 generation g−1 的锚点，再从更早的规范形式中抽取
  若干成员，按值分到锚点两侧，保证数值条件成立
- 零填充：x + (p − p)，其中 p 为规范形式，generation 增加 2·g(p)
"""

import logging
import random
from typing import List, Optional, Tuple

from ..core import FormId, FormStore, add, dali, dyadics_of_birthday, sub
from ..core.canonical import is_canonical

logger = logging.getLogger(__name__)

_MAX_ATTEMPTS = 32


class OperandFactory:
    """按 generation 生成操作数"""

    def __init__(self, store: FormStore, seed: int = 7):
        self.store = store
        self.seed = seed
        self.rng = random.Random(seed)
        self.logger = logging.getLogger(self.__class__.__name__)

    def reset(self, seed: Optional[int] = None) -> None:
        """重新播种；每个验证套件开始时调用，保证套件结果只取决于种子"""
        if seed is not None:
            self.seed = seed
        self.rng.seed(self.seed)

    def canonical(self, g: int) -> FormId:
        """随机一个第 g 天诞生的二进有理数的规范形式"""
        q = self.rng.choice(dyadics_of_birthday(g))
        return dali(self.store, q)

    def non_canonical(self, g: int) -> FormId:
        """generation 恰为 g 的非规范形式；g ≤ 1 时不存在

        Raises:
            ValueError: g < 2
        """
        if g < 2:
            raise ValueError(f"generation {g} 不存在非规范形式")
        if self.rng.random() < 0.5:
            return self.padded(g)
        for _ in range(_MAX_ATTEMPTS):
            fid = self._structural(g)
            if not is_canonical(self.store, fid):
                return fid
        self.logger.debug(f"结构构造 {_MAX_ATTEMPTS} 次均得到规范形式，改用零填充: g={g}")
        return self.padded(g)

    def padded(self, g: int, h: Optional[int] = None) -> FormId:
        """x + (p − p)，g(x) = g − 2h，g(p) = h"""
        if g < 2:
            raise ValueError(f"零填充至少增加 2 个 generation: g={g}")
        if h is None:
            h = self.rng.randint(1, g // 2)
        x = self.canonical(g - 2 * h)
        p = self.canonical(h)
        return add(self.store, x, sub(self.store, p, p))

    def form(self, g: int) -> FormId:
        """generation 为 g 的随机形式，规范与非规范各半"""
        if g < 2 or self.rng.random() < 0.5:
            return self.canonical(g)
        return self.non_canonical(g)

    def pair(self, max_generation: int) -> Tuple[FormId, FormId]:
        return (self.form(self.rng.randint(0, max_generation)),
                self.form(self.rng.randint(0, max_generation)))

    def _structural(self, g: int) -> FormId:
        store = self.store
        anchor = self.form(g - 1)
        anchor_value = store.value(anchor)

        pool: List[FormId] = [dali(store, q) for h in range(g - 1) for q in dyadics_of_birthday(h)]
        extra = self.rng.sample(pool, self.rng.randint(0, min(2, len(pool))))

        # 锚点放在左侧时，值更小的成员也进左侧；放在右侧时对称
        anchor_left = self.rng.random() < 0.5
        left, right = [], []
        (left if anchor_left else right).append(anchor)
        for member in extra:
            value = store.value(member)
            if value == anchor_value:
                continue
            if anchor_left:
                (left if value < anchor_value else right).append(member)
            else:
                (right if value > anchor_value else left).append(member)
        return store.make_form(left, right)

