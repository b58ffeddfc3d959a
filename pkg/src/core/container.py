#!/usr/bin/env python3
"""Evaluator container with auto-discovery"""
import importlib
import pkgutil
from typing import Optional

from src.core.base import BaseEvaluator
from src.core.config import Settings
from src.core.logger import get_logger


class Container:
    """Holds settings and discovers evaluators in src.evaluators"""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or Settings()
        self.logger = get_logger("container")
        self._failed_evaluators: dict[str, str] = {}
        self._evaluators = self._discover_evaluators()
        self._instances: dict[str, BaseEvaluator] = {}

    def _discover_evaluators(self) -> dict[str, type[BaseEvaluator]]:
        """Discover evaluator classes via pkgutil"""
        evaluators: dict[str, type[BaseEvaluator]] = {}

        import src.evaluators as pkg

        for _, modname, ispkg in pkgutil.iter_modules(pkg.__path__, prefix=pkg.__name__ + "."):
            if ispkg:
                continue

            try:
                module = importlib.import_module(modname)
            except ImportError as e:
                self.logger.error(f"Failed to import module {modname}: {e}")
                self._failed_evaluators[modname] = str(e)
                continue

            for item_name in dir(module):
                item = getattr(module, item_name)
                if (
                    isinstance(item, type)
                    and issubclass(item, BaseEvaluator)
                    and item is not BaseEvaluator
                    and item.__module__ == modname
                ):
                    evaluators[item.name] = item
                    self.logger.debug(f"Discovered evaluator: {item.name} ({item.description})")

        self.logger.debug(f"Total evaluators discovered: {len(evaluators)}")
        if self._failed_evaluators:
            self.logger.warning(f"Failed to load {len(self._failed_evaluators)} modules")

        return evaluators

    def get_evaluator(self, name: str) -> Optional[BaseEvaluator]:
        """Get evaluator instance by name"""
        if name in self._instances:
            return self._instances[name]

        if name in self._evaluators:
            instance = self._evaluators[name]()
            self._instances[name] = instance
            return instance

        self.logger.warning(f"Evaluator not found: {name}")
        return None

    def get_evaluator_names(self) -> list[str]:
        """Get list of evaluator names"""
        return sorted(self._evaluators)

    def get_failed_evaluators(self) -> dict[str, str]:
        """Get dictionary of failed modules and their errors"""
        return self._failed_evaluators
