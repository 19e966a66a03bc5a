#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
便捷的CLI启动脚本
可以直接运行此脚本来使用命令行工具
"""

import sys
from pathlib import Path

# 添加 src 目录到Python路径
src_dir = Path(__file__).resolve().parents[2]
sys.path.insert(0, str(src_dir))

if __name__ == '__main__':
    from surreal_birthdays.cli.main import main
    sys.exit(main())
