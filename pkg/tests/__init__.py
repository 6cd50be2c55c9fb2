# coding=utf-8
# Copyright 2020 George Mihaila.
"""Make the src layout importable when the tests run from a plain checkout."""

import os
import sys

src_path = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'src')
if os.path.isdir(src_path) and src_path not in sys.path:
    sys.path.insert(0, src_path)
