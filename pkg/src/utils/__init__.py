"""
Utilities Package
Configuration, logging setup and input helpers
"""

from .helpers import AppConfig, ConfigError, load_config, parse_point, read_expression, setup_logging

__all__ = ['AppConfig', 'ConfigError', 'load_config', 'parse_point', 'read_expression', 'setup_logging']
