"""cclab: exact character-theory workbench for small finite classical groups."""

__version__ = "0.1.0"
