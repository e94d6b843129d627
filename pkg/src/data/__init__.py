"""Configuration and experiment plan loading."""

from .config_manager import DEFAULT_CONFIG, ConfigManager

__all__ = ['DEFAULT_CONFIG', 'ConfigManager']
