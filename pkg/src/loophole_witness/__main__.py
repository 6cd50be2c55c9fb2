# coding=utf-8
# Copyright 2020 George Mihaila.
"""python -m loophole_witness"""

import sys

from .cli import main

sys.exit(main())
