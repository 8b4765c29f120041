"""Typer front end: ``python -m surfcalc``."""

from surfcalc.cli.main import app

__all__ = ["app"]
