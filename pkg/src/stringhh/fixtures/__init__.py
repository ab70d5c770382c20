"""Bundled example presentations."""
from importlib import resources

from ..presentation import Presentation, parse_presentation

NAMES = ("E5", "D3", "K2", "A2", "A3R", "SD3", "SD3M", "G4", "KT")


def text(name: str) -> str:
    if name not in NAMES:
        raise KeyError(f"no bundled fixture {name!r}; have {', '.join(NAMES)}")
    return resources.files(__name__).joinpath(f"{name}.quiver").read_text(encoding="utf-8")


def load(name: str) -> Presentation:
    return parse_presentation(text(name), name=name)
