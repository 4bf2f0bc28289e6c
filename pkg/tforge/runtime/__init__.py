"""Configuration, errors, logging and timing shared by every module."""

from tforge.runtime.config import ForgeConfig
from tforge.runtime.exceptions import ForgeError

__all__ = ["ForgeConfig", "ForgeError"]
