"""Resonance graphs of catacondensed benzenoid systems and daisy cubes."""

__version__ = "0.1.0"
