#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
生日演算命令行接口
提供表达式求值、DOT 导出、表格复现与验证套件的命令行工具
"""
