"""stmpulse: STM junction transport, transients, and pump-probe analysis."""

__version__ = "0.1.0"
