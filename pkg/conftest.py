"""Puts the repository root on sys.path so the top-level packages import under pytest."""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
