#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
CLI配置管理模块
支持从配置文件 (YAML / JSON) 读取默认参数与预设
"""

import json
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

# 配置文件中可以给出默认值的 CLI 参数
OVERRIDABLE_KEYS = ('seed', 'max_cache', 'max_depth', 'cache_policy', 'time_budget', 'ceiling', 'output')


class CLIConfig:
    """CLI配置管理器"""

    def __init__(self, config_file: Optional[str] = None):
        self.config_file = config_file
        self.config_data: Dict[str, Any] = {}

        if config_file:
            self.load_config(config_file)

    def load_config(self, config_file: str) -> None:
        """加载配置文件"""
        config_path = Path(config_file)

        if not config_path.exists():
            raise FileNotFoundError(f"配置文件不存在: {config_file}")

        try:
            with open(config_path, 'r', encoding='utf-8') as f:
                if config_path.suffix.lower() in ['.yml', '.yaml']:
                    self.config_data = yaml.safe_load(f) or {}
                elif config_path.suffix.lower() == '.json':
                    self.config_data = json.load(f)
                else:
                    raise ValueError(f"不支持的配置文件格式: {config_path.suffix}")
        except (OSError, yaml.YAMLError, json.JSONDecodeError) as e:
            raise ValueError(f"加载配置文件失败: {e}") from e

    def get(self, key: str, default: Any = None) -> Any:
        """获取配置值，key 用点号分隔层级"""
        value = self.config_data
        for k in key.split('.'):
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default
        return value

    def get_defaults(self) -> Dict[str, Any]:
        return self.get('defaults', {}) or {}

    def get_profiles(self) -> Dict[str, Any]:
        """获取预设配置"""
        return self.get('profiles', {}) or {}

    def get_profile(self, profile_name: str) -> Dict[str, Any]:
        profiles = self.get_profiles()
        if profile_name not in profiles:
            raise KeyError(f"配置文件中没有预设: {profile_name}")
        return profiles[profile_name]

    def apply_defaults(self, args, profile: Optional[str] = None) -> None:
        """用 defaults（及指定预设）填充命令行中未显式给出的参数"""
        values = dict(self.get_defaults())
        if profile:
            values.update(self.get_profile(profile))
        for key in OVERRIDABLE_KEYS:
            if key in values and getattr(args, key, None) is None:
                setattr(args, key, values[key])


def create_sample_config() -> str:
    """创建示例配置文件内容"""
    sample_config = {
        "defaults": {
            "seed": 7,
            "time_budget": 300.0,
            "ceiling": 64,
        },
        "profiles": {
            "quick": {
                "description": "快速检查：较小的时间预算",
                "time_budget": 30.0,
            },
            "gate": {
                "description": "完整的 3̄×3̄ 性能检查",
                "time_budget": 300.0,
                "max_depth": 4000,
            },
        },
    }
    return json.dumps(sample_config, ensure_ascii=False, indent=2)


def save_sample_config(file_path: str) -> None:
    """保存示例配置文件"""
    with open(file_path, 'w', encoding='utf-8') as f:
        f.write(create_sample_config())
