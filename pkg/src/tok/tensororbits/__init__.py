# -*- coding: utf-8 -*-
"""Orbit classification of tensors in F_q^2 ⊗ F_q^3 ⊗ F_q^3 over small finite fields."""
import pkgutil

__version__ = (pkgutil.get_data(__name__, "VERSION.txt") or b"").decode("utf-8").strip()
