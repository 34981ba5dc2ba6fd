"""Family registration and lookup."""

from __future__ import annotations

import logging
from typing import Dict, List, Optional, Union

from core.types import FamilyId
from families import MinusOneFamily, OddPeriodFamily, PlusOneFamily, QuarticFamily, ShiftFamily
from families.base_family import BaseFamily

logger = logging.getLogger(__name__)


class FamilyRegistry:
    """Registry for looking up families by id or alias."""

    def __init__(self):
        """Initialize an empty registry."""
        self.families: Dict[FamilyId, BaseFamily] = {}
        self.aliases: Dict[str, FamilyId] = {}

    def register_family(self, family: BaseFamily) -> None:
        """Register a family under its id and aliases.

        Args:
            family: Family to register

        Raises:
            ValueError: If an alias is already taken by another family
        """
        names = [family.family_id.value, *family.aliases]
        for name in names:
            owner = self.aliases.get(name.lower())
            if owner is not None and owner != family.family_id:
                raise ValueError(f"alias '{name}' already registered for {owner.value}")
        self.families[family.family_id] = family
        for name in names:
            self.aliases[name.lower()] = family.family_id
        logger.debug(f"Registered family: {family.family_id.value} with aliases: {list(family.aliases)}")

    def get_family(self, name: Union[str, FamilyId]) -> Optional[BaseFamily]:
        """Get a family by id or alias, case-insensitively.

        Returns:
            Family instance or None
        """
        key = name.value if isinstance(name, FamilyId) else name.strip()
        family_id = self.aliases.get(key.lower())
        if family_id is None:
            return None
        return self.families.get(family_id)

    def require(self, name: Union[str, FamilyId]) -> BaseFamily:
        """Like get_family but raise KeyError for unknown names."""
        family = self.get_family(name)
        if family is None:
            known = ", ".join(sorted(f.value for f in self.families))
            raise KeyError(f"unknown family '{name}' (known: {known})")
        return family

    def get_all_families(self) -> List[BaseFamily]:
        """Registered families ordered by id."""
        return [self.families[key] for key in sorted(self.families, key=lambda f: f.value)]

    def list_families(self) -> Dict[str, List[str]]:
        """Map each family id to its aliases."""
        return {family.family_id.value: list(family.aliases) for family in self.get_all_families()}

    def is_registered(self, name: Union[str, FamilyId]) -> bool:
        return self.get_family(name) is not None


def build_default_registry() -> FamilyRegistry:
    """Registry holding F1 ... F5."""
    registry = FamilyRegistry()
    for family in (ShiftFamily(), MinusOneFamily(), PlusOneFamily(), OddPeriodFamily(), QuarticFamily()):
        registry.register_family(family)
    return registry


_default: Optional[FamilyRegistry] = None


def default_registry() -> FamilyRegistry:
    """Process-wide registry, built on first use."""
    global _default
    if _default is None:
        _default = build_default_registry()
    return _default
