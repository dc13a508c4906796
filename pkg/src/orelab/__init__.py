"""Ore sets, denominator sets and localizations of finite rings, plus an exact
toolkit for polynomial integro-differential operators."""

__version__ = "0.1.0"
