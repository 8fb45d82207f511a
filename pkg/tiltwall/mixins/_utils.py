from tiltwall.enums import FilterName
from tiltwall.exceptions import TiltWallUserError
from tiltwall.models.characters import Character, ChernCharacter, TruncatedCharacter
from tiltwall.models.kuznetsov import KuClass
from tiltwall.models.scan import FilterSet


def full_character(value: ChernCharacter | str) -> ChernCharacter:
    """accepts a ChernCharacter or its literal ``r,c1,c2,c3``"""
    if isinstance(value, str):
        return ChernCharacter.parse(value)
    if not isinstance(value, ChernCharacter):
        raise TiltWallUserError(f"Expected a full Chern character, got {value}.")
    return value


def any_character(value: Character | str) -> Character:
    """accepts either character kind, or a literal with three or four components"""
    if not isinstance(value, str):
        return value
    if value.count(",") == 3:
        return ChernCharacter.parse(value)
    return TruncatedCharacter.parse(value)


def ku_class(value: KuClass | str) -> KuClass:
    return KuClass.parse(value) if isinstance(value, str) else value


def prepare_filters(filters: FilterSet | None, disable: list[FilterName | str] | None) -> FilterSet:
    """
    Combines a filter set with names to switch off.

    :raises TiltWallUserError: for unknown filter names
    """
    return (filters or FilterSet()).disable(*(disable or []))
