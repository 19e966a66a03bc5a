"""规范形式、generation 与取值

- dali: 二进有理数 → 规范形式（按 Dali 函数逐分支构造）
- canonical_birthday: 规范形式生日的闭式 ⌈|q|⌉ + k
- simplest_between / value_of: 简单性规则，沿二进 DAG 自 0 出发按生日顺序搜索
"""

from typing import TYPE_CHECKING, List, Optional

from .dyadic import Dyadic, DyadicLike, ZERO
from .evaluation import Steps, operation, run

if TYPE_CHECKING:
    from .form_store import FormId, FormStore


def simplest_between(lo: Optional[Dyadic], hi: Optional[Dyadic]) -> Dyadic:
    """开区间 (lo, hi) 内生日最早的二进有理数；None 表示该侧无界

    先沿整数 0, ±1, ±2, ... 向区间方向前进，找不到再在相邻整数间二分，
    两段都严格按生日递增访问候选，所以第一个落入区间的候选即最老者。
    """
    if lo is not None and hi is not None and not lo < hi:
        raise ValueError(f"空区间: ({lo}, {hi})")

    if (lo is None or lo < 0) and (hi is None or hi > 0):
        return ZERO

    if lo is not None and lo >= 0:
        n = lo.floor() + 1                      # 严格大于 lo 的最小整数
        if hi is None or Dyadic(n) < hi:
            return Dyadic(n)
        a, b = Dyadic(n - 1), Dyadic(n)
    else:
        n = hi.ceil() - 1                       # 严格小于 hi 的最大整数
        if lo is None or Dyadic(n) > lo:
            return Dyadic(n)
        a, b = Dyadic(n), Dyadic(n + 1)

    while True:
        m = a.midpoint(b)
        if m <= lo:
            a = m
        elif m >= hi:
            b = m
        else:
            return m


def dali(store: 'FormStore', q: DyadicLike) -> 'FormId':
    """q 的规范形式

    0 → {φ|φ}；正整数 n → {d(n−1)|φ}；负整数 n → {φ|d(n+1)}；
    奇数 n、k > 0 → {d((n−1)/2^k) | d((n+1)/2^k)}
    """
    q = Dyadic.coerce(q)
    cached = store.dali_cache.get(q)
    if cached is not None:
        return cached
    if q.is_integer:
        return _dali_integer(store, q.n)
    return run(store, 'dali', q)


@operation('dali', lambda store, q: store.dali_cache.get(q))
def _dali_steps(store: 'FormStore', q: Dyadic) -> Steps:
    if q.is_integer:
        return _dali_integer(store, q.n)
    lower = yield ('dali', Dyadic.of(q.n - 1, q.k))
    upper = yield ('dali', Dyadic.of(q.n + 1, q.k))
    result = store.intern_result((lower,), (upper,))
    store.dali_cache[q] = result
    return result


def _dali_integer(store: 'FormStore', n: int) -> 'FormId':
    # 整数分支沿 0, ±1, ±2, ... 迭代构造，避免深递归
    step = 1 if n > 0 else -1
    fid = store.zero_id
    store.dali_cache.setdefault(ZERO, fid)
    for m in range(step, n + step, step):
        key = Dyadic(m)
        cached = store.dali_cache.get(key)
        if cached is None:
            cached = store.intern_result((fid,), ()) if step > 0 else store.intern_result((), (fid,))
            store.dali_cache[key] = cached
        fid = cached
    return fid


def generation(store: 'FormStore', x: 'FormId') -> int:
    """生日：{φ|φ} 为 0，否则为 1 + 最年轻父节点的 generation"""
    return store.generation(x)


def canonical_birthday(q: DyadicLike) -> int:
    """规范形式的生日 ⌈|q|⌉ + k"""
    q = Dyadic.coerce(q)
    return q.ceil_abs() + q.k


def value_of(store: 'FormStore', x: 'FormId') -> Dyadic:
    """形式的值（简单性规则，驻留时已计算）"""
    return store.value(x)


def is_canonical(store: 'FormStore', x: 'FormId') -> bool:
    return dali(store, value_of(store, x)) == x


def dyadics_of_birthday(g: int) -> List[Dyadic]:
    """第 g 天诞生的全部二进有理数，升序；g ≥ 1 时共 2^g 个"""
    if g < 0:
        raise ValueError(f"生日不能为负: {g}")
    if g == 0:
        return [ZERO]
    positives = [Dyadic(g)]
    for k in range(1, g):
        c = g - k
        positives.extend(Dyadic(n, k) for n in range((c - 1) * (1 << k) + 1, c * (1 << k), 2))
    positives.sort()
    return [-q for q in reversed(positives)] + positives


def dyadic_dag(store: 'FormStore', max_generation: int) -> List['FormId']:
    """生日不超过 max_generation 的全部规范形式，按生日、再按值排列"""
    return [dali(store, q) for g in range(max_generation + 1) for q in dyadics_of_birthday(g)]
