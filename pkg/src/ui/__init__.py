"""
UI Package
Terminal rendering for the command-line frontend
"""

from .components import TextComponents

__all__ = ['TextComponents']
