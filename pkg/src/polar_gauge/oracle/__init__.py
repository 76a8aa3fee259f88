# oracle/__init__.py

from .grid import GridResult, grid_minimize, grid_project

__all__ = [
    "GridResult",
    "grid_minimize",
    "grid_project",
]
