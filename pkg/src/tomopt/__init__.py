"""Tom optimizer, its baselines and the tools to check and compare them."""

__version__ = "0.1.0"
