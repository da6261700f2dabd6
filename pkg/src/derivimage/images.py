"""Shared result types for operator-image queries."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .poly import Polynomial


class ShapeKind(Enum):
    FULL_ALGEBRA = "full-algebra"
    PRINCIPAL_IDEAL = "principal-ideal"
    RADICAL_ZERO_CLAIMED = "radical-zero-claimed"
    UNCLASSIFIED = "unclassified"


@dataclass(frozen=True)
class ImageShape:
    """Closed-form description of an operator image, when one is known.

    PRINCIPAL_IDEAL carries a monic generator.  RADICAL_ZERO_CLAIMED means
    the image has trivial radical but no membership formula; membership
    stays with the deciding operation.
    """

    kind: ShapeKind
    generator: Optional[Polynomial] = None

    def __post_init__(self):
        if self.kind is ShapeKind.PRINCIPAL_IDEAL:
            if self.generator is None or self.generator.is_zero:
                raise ValueError("a principal-ideal shape needs a nonzero generator")
            if self.generator.leading_coefficient != 1:
                raise ValueError("principal-ideal generators are monic")
        elif self.generator is not None:
            raise ValueError("only principal-ideal shapes carry a generator")

    def to_json_dict(self) -> dict:
        out = {"kind": self.kind.value}
        if self.generator is not None:
            out["generator"] = self.generator.to_json_dict()
        return out


@dataclass(frozen=True)
class Membership:
    """Membership verdict with an optional (already re-verified) witness."""

    member: bool
    witness: Optional[Polynomial] = None

    def __bool__(self) -> bool:
        return self.member

    def to_json_dict(self) -> dict:
        out = {"verdict": self.member}
        if self.witness is not None:
            out["witness"] = self.witness.to_json_dict()
        return out
