#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
生日演算命令行主入口
提供表达式求值、DOT 导出、表格复现、递推查询与验证套件的命令行接口

使用方法:
    python -m surreal_birthdays.cli.main <子命令> [选项]

支持的子命令:
    eval        - 求值表达式：值、generation、是否与规范形式恒等
    value       - 只输出表达式的值
    dot         - 输出 DOT 图（或 --dyadic-dag G 输出二进 DAG）
    table       - 复现加法 (add) / 乘法 (mul) 生日表
    recurrence  - 查询 f(n, m)、平方对角线与 g(2̄ⁿ)
    verify      - 运行验证套件 lemma1 | thm1 | thm2 | gonshor | laws | all
    config      - 生成示例 CLI 配置、查看生效配置或初始化 JSON 配置目录

退出码:
    0   成功
    1   一般错误（深度/缓存上限、递归过深等）
    2   表达式语法或求值错误
    3   验证套件发现反例
    4   时间预算用完，部分可行单元格只给出递推值
    130 用户中断
"""

import argparse
import json
import logging
import sys
from typing import Optional

import pandas as pd

from ..contracts import CheckStatus, EngineContract, ExitCode
from ..core import (
    FormStore, FormSyntaxError, NonDyadicDenominator, NotANumber, SurrealError, dyadic_dag,
    generation, is_canonical, value_of,
)
from ..core.config_manager import ConfigManager, get_config_manager
from ..calculus import (
    SUITES, VerificationHarness, addition_table, diagonal_ratio, f, f_table, multiplication_table,
    pow2_generation, square_diagonal,
)
from ..formats import evaluate, print_form, to_dot, to_dot_many, to_json
from .config import CLIConfig, save_sample_config

logger = logging.getLogger(__name__)


def setup_logging(verbose: bool = False):
    """设置日志配置"""
    level = logging.DEBUG if verbose else logging.INFO
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )


def build_contract(args) -> EngineContract:
    """内置默认值 < JSON 配置目录 < 环境变量 < --config 文件 < 命令行参数"""
    if getattr(args, 'config', None):
        CLIConfig(args.config).apply_defaults(args, getattr(args, 'profile', None))
    contract = EngineContract.from_config(get_config_manager())
    return contract.with_overrides(
        max_depth=getattr(args, 'max_depth', None),
        max_cache=getattr(args, 'max_cache', None),
        cache_policy=getattr(args, 'cache_policy', None),
        seed=getattr(args, 'seed', None),
        time_budget=getattr(args, 'time_budget', None),
        feasibility_ceiling=getattr(args, 'ceiling', None),
    )


def build_store(args) -> FormStore:
    store = FormStore(build_contract(args).engine)
    logger.debug(f"FormStore 已创建: {store.settings}")
    return store


def cmd_eval(args) -> int:
    """求值表达式"""
    store = build_store(args)
    x = evaluate(store, args.expr)
    value = value_of(store, x)

    print(f"value: {value}")
    print(f"generation: {generation(store, x)}")
    print(f"identical-to-canonical: {str(is_canonical(store, x)).lower()}")
    if args.expand is not None:
        depth = None if args.expand < 0 else args.expand
        print(f"form: {print_form(store, x, depth)}")
    if args.json:
        print(to_json(store, x))
    if args.stats:
        print(json.dumps(store.stats(), ensure_ascii=False, indent=2))
    return ExitCode.OK


def cmd_value(args) -> int:
    """只输出值"""
    store = build_store(args)
    print(value_of(store, evaluate(store, args.expr)))
    return ExitCode.OK


def cmd_dot(args) -> int:
    """输出 DOT 图"""
    store = build_store(args)
    if args.dyadic_dag is not None:
        print(to_dot_many(store, dyadic_dag(store, args.dyadic_dag), name='dyadic_dag'))
        return ExitCode.OK
    if not args.expr:
        print("dot 需要表达式或 --dyadic-dag", file=sys.stderr)
        return ExitCode.PARSE_ERROR
    print(to_dot(store, evaluate(store, args.expr)))
    return ExitCode.OK


def cmd_table(args) -> int:
    """复现生日表"""
    contract = build_contract(args)
    if args.kind == 'add':
        store = FormStore(contract.engine)
        print(addition_table(store).to_string())
        return ExitCode.OK

    max_generation = 6 if args.max_gen is None else args.max_gen
    if not args.products:
        print(f_table(max_generation).to_string())
        return ExitCode.OK

    store = FormStore(contract.engine)
    values, status = multiplication_table(max_generation, store, contract.harness.feasibility_ceiling)
    marks = {CheckStatus.PASS.value: '', CheckStatus.FAIL.value: '!',
             CheckStatus.RECURRENCE_ONLY.value: '*'}
    rendered = pd.DataFrame([[f"{values.loc[n, m]}{marks[status.loc[n, m]]}" for m in values.columns]
                             for n in values.index], index=values.index, columns=values.columns)
    print(rendered.to_string())
    print(f"\n无标记: 已用实际乘积验证 (f ≤ {contract.harness.feasibility_ceiling})；*: 仅递推值；!: 不符")
    return ExitCode.FAILURE if (status == CheckStatus.FAIL.value).any().any() else ExitCode.OK


def cmd_recurrence(args) -> int:
    """查询递推"""
    if args.table is not None:
        print(f_table(args.table).to_string())
    elif args.diagonal is not None:
        for n in range(args.diagonal + 1):
            ratio = f"  ratio {diagonal_ratio(n):.6f}" if n >= 2 else ""
            print(f"f({n},{n}) = {square_diagonal(n)}{ratio}")
    elif args.pow2 is not None:
        for n in range(1, args.pow2 + 1):
            print(f"g(2^{n}) = {pow2_generation(n)}")
    elif args.n is not None and args.m is not None:
        print(f(args.n, args.m))
    else:
        print("recurrence 需要 N M，或 --table / --diagonal / --pow2 之一", file=sys.stderr)
        return ExitCode.FAILURE
    return ExitCode.OK


def cmd_verify(args) -> int:
    """运行验证套件"""
    contract = build_contract(args)
    harness = VerificationHarness(contract, progress=args.verbose and sys.stderr.isatty())
    results = harness.run(args.suite)

    print(harness.format_report(results))
    for result in results:
        if result.status is CheckStatus.FAIL and result.details.get('witnesses'):
            print(f"\n[{result.check_id}] 反例:")
            for witness in result.details['witnesses']:
                print(f"  {witness}")

    if args.output:
        harness.save_report(args.output, results)
    if args.csv:
        harness.product_rows().to_csv(args.csv, index=False)
        logger.info(f"乘积明细已保存到: {args.csv}")
    return harness.exit_code(results)


def cmd_config(args) -> int:
    """配置文件的生成与查看"""
    if args.action in ('sample', 'init') and not args.path:
        print(f"config {args.action} 需要目标路径", file=sys.stderr)
        return ExitCode.FAILURE

    if args.action == 'sample':
        save_sample_config(args.path)
        print(f"示例 CLI 配置已保存到: {args.path}")
        return ExitCode.OK

    if args.action == 'show':
        data = get_config_manager().get_all_config() if args.raw else build_contract(args).to_dict()
        print(json.dumps(data, ensure_ascii=False, indent=2, default=str))
        return ExitCode.OK

    # init: 把当前生效的 engine / harness 配置写成 JSON 配置目录
    manager = ConfigManager(config_dir=args.path)
    contract = build_contract(args)
    for section, values in contract.to_dict().items():
        target = manager.config_dir / f"{section}.json"
        if target.exists() and not args.force:
            logger.warning(f"{target} 已存在，跳过（--force 覆盖）")
            continue
        manager.save_config(section, values)
    print(f"配置目录: {manager.config_dir}")
    return ExitCode.OK


def _add_engine_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--max-depth', type=int, help='受控递归的最大深度 (默认 2000)')
    parser.add_argument('--max-cache', type=int, help='每个记忆化缓存的条目上限 (默认不限)')
    parser.add_argument('--cache-policy', choices=['evict-none', 'fail-fast'],
                        help='缓存达到上限后的策略 (默认 evict-none)')


def _add_harness_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--seed', type=int, help='操作数生成器种子 (默认 7)')
    parser.add_argument('--time-budget', type=float, help='实际乘积的时间预算，秒 (默认 300)')
    parser.add_argument('--ceiling', type=int, help='实际乘积的预测 generation 上限 (默认 64)')


def create_parser():
    """创建命令行参数解析器"""
    parser = argparse.ArgumentParser(
        description='超现实数形式的生日演算工具',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
示例用法:
  python -m surreal_birthdays.cli.main eval "dali(2) + dali(2)"
  python -m surreal_birthdays.cli.main eval "dali(1) + dali(1/2)" --expand
  python -m surreal_birthdays.cli.main dot "dali(3/4) + dali(3/4)" > sum.dot
  python -m surreal_birthdays.cli.main table mul 6 --products
  python -m surreal_birthdays.cli.main recurrence 3 5
  python -m surreal_birthdays.cli.main verify thm1 --seed 7 --output report.json
  python -m surreal_birthdays.cli.main config sample cli.json
        """
    )

    parser.add_argument('-v', '--verbose', action='store_true', help='详细输出')
    parser.add_argument('--version', action='version', version='%(prog)s 1.0.0')
    parser.add_argument('--config', help='CLI 配置文件 (YAML 或 JSON)')
    parser.add_argument('--profile', help='配置文件中的预设名')

    subparsers = parser.add_subparsers(dest='command', help='可用命令')

    eval_parser = subparsers.add_parser('eval', help='求值表达式')
    eval_parser.add_argument('expr', help='表达式，如 "dali(2) * dali(3)"')
    eval_parser.add_argument('--expand', type=int, nargs='?', const=-1,
                             help='输出 φ 记号展开；可选参数为展开层数，缺省为完全展开')
    eval_parser.add_argument('--json', action='store_true', help='输出 JSON DAG 快照')
    eval_parser.add_argument('--stats', action='store_true', help='输出存储与缓存统计')
    _add_engine_flags(eval_parser)
    eval_parser.set_defaults(func=cmd_eval)

    value_parser = subparsers.add_parser('value', help='输出表达式的值')
    value_parser.add_argument('expr')
    _add_engine_flags(value_parser)
    value_parser.set_defaults(func=cmd_value)

    dot_parser = subparsers.add_parser('dot', help='输出 DOT 图')
    dot_parser.add_argument('expr', nargs='?')
    dot_parser.add_argument('--dyadic-dag', type=int, metavar='G',
                            help='输出 generation ≤ G 的全部规范形式组成的二进 DAG')
    _add_engine_flags(dot_parser)
    dot_parser.set_defaults(func=cmd_dot)

    table_parser = subparsers.add_parser('table', help='复现生日表')
    table_parser.add_argument('kind', choices=['add', 'mul'])
    table_parser.add_argument('max_gen', type=int, nargs='?', help='mul 表的最大 generation (默认 6)')
    table_parser.add_argument('--products', action='store_true',
                              help='对 f(n,m) ≤ ceiling 的单元格做实际乘积验证')
    _add_engine_flags(table_parser)
    _add_harness_flags(table_parser)
    table_parser.set_defaults(func=cmd_table)

    recurrence_parser = subparsers.add_parser('recurrence', help='查询 f(n, m)')
    recurrence_parser.add_argument('n', type=int, nargs='?')
    recurrence_parser.add_argument('m', type=int, nargs='?')
    recurrence_parser.add_argument('--table', type=int, metavar='N', help='输出 n, m ≤ N 的 f 表')
    recurrence_parser.add_argument('--diagonal', type=int, metavar='N', help='输出 f(k, k)，k ≤ N')
    recurrence_parser.add_argument('--pow2', type=int, metavar='N', help='输出 g(2̄ᵏ)，k ≤ N')
    recurrence_parser.set_defaults(func=cmd_recurrence)

    verify_parser = subparsers.add_parser('verify', help='运行验证套件')
    verify_parser.add_argument('suite', choices=list(SUITES) + ['all'])
    verify_parser.add_argument('--output', help='保存 JSON 报告')
    verify_parser.add_argument('--csv', help='保存乘积明细 CSV (n, m, f(n,m), measured, status)')
    _add_engine_flags(verify_parser)
    _add_harness_flags(verify_parser)
    verify_parser.set_defaults(func=cmd_verify)

    config_parser = subparsers.add_parser('config', help='生成或查看配置')
    config_parser.add_argument('action', choices=['sample', 'show', 'init'],
                               help='sample: 写示例 CLI 配置；show: 输出生效配置；init: 写 JSON 配置目录')
    config_parser.add_argument('path', nargs='?', help='sample 的目标文件 / init 的目标目录')
    config_parser.add_argument('--raw', action='store_true', help='show 时输出 JSON 配置目录的原始内容')
    config_parser.add_argument('--force', action='store_true', help='init 时覆盖已有的配置文件')
    _add_engine_flags(config_parser)
    _add_harness_flags(config_parser)
    config_parser.set_defaults(func=cmd_config)

    return parser


def main(argv: Optional[list] = None) -> int:
    """主入口函数"""
    parser = create_parser()
    args = parser.parse_args(argv)

    setup_logging(getattr(args, 'verbose', False))

    if not args.command:
        parser.print_help()
        return ExitCode.FAILURE

    try:
        return int(args.func(args))
    except KeyboardInterrupt:
        print("\n用户中断操作", file=sys.stderr)
        return ExitCode.INTERRUPTED
    except (FormSyntaxError, NotANumber, NonDyadicDenominator) as e:
        print(f"表达式错误: {e}", file=sys.stderr)
        if isinstance(e, FormSyntaxError) and e.text:
            print(f"  {e.text}\n  {' ' * e.position}^", file=sys.stderr)
        return ExitCode.PARSE_ERROR
    except (SurrealError, RecursionError, ValueError, KeyError, OSError) as e:
        print(f"执行出错: {e}", file=sys.stderr)
        if getattr(args, 'verbose', False):
            import traceback
            traceback.print_exc()
        return ExitCode.FAILURE


if __name__ == '__main__':
    sys.exit(main())
