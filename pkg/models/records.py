from pydantic import BaseModel, Field, computed_field
from typing import Dict, List, Optional


class CoefficientPrediction(BaseModel):
    """Top three Jones-point coefficients predicted from a checkerboard graph"""

    a_top: int = Field(..., description="Coefficient of t^(|V|-1)")
    a_top_minus_1: int = Field(..., description="Coefficient of t^(|V|-2)")
    a_top_minus_2: int = Field(..., description="Coefficient of t^(|V|-3)")
    top_degree: int = Field(..., description="Highest degree |V|-1 of T_G(-t,-1/t)")


class TwistProfile(BaseModel):
    """Jones coefficients and the higher twist numbers T_i = |a_(n+i)| + |a_(m-i)|"""

    min_exponent: int = Field(..., description="Lowest exponent n of the Jones polynomial")
    coeffs: List[int] = Field(..., description="Dense coefficients a_n..a_m, interior zeros included")
    twist_numbers: List[int] = Field(default_factory=list, description="T_1..T_k for k = floor(span/2)")
    span: int = Field(..., description="m - n")

    def twist(self, i: int) -> Optional[int]:
        """T_i, or None when i is outside 1..floor(span/2)."""
        if 1 <= i <= len(self.twist_numbers):
            return self.twist_numbers[i - 1]
        return None

    @property
    def second_lowest(self) -> int:
        """|a_(n+1)|"""
        return abs(self.coeffs[1]) if self.span >= 1 else 0

    @property
    def second_highest(self) -> int:
        """|a_(m-1)|"""
        return abs(self.coeffs[-2]) if self.span >= 1 else 0


class VolumeBounds(BaseModel):
    """Hyperbolic volume bounds derived from Jones coefficients"""

    lower: float = Field(..., description="2 v0 (max(|a_(m-1)|, |a_(n+1)|) - 1)")
    upper: float = Field(..., description="10 v0 (|a_(n+1)| + |a_(m-1)| - 1)")
    lackenby_lower: float = Field(..., description="v0 (T - 2)")
    lackenby_upper: float = Field(..., description="10 v0 (T - 1), strict")
    adams_upper: Optional[float] = Field(None, description="(4c - 16) v0 for crossing number c > 4")

    def brackets(self, volume: float, tolerance: float = 1e-9) -> bool:
        """Whether volume satisfies both the coefficient bounds and the twist-number bounds."""
        within = self.lower - tolerance <= volume <= self.upper + tolerance
        within_lackenby = self.lackenby_lower - tolerance <= volume < self.lackenby_upper + tolerance
        return within and within_lackenby


class AlternatingStructure(BaseModel):
    """Structural facts of the Jones polynomial of a reduced alternating diagram"""

    span: int
    crossings: int
    span_equals_crossings: bool
    signs_alternate: bool = Field(..., description="Nonzero a_(n+k) have sign (-1)^k times that of a_n")
    extreme_coefficients_unit: bool = Field(..., description="|a_n| = |a_m| = 1")

    @property
    def holds(self) -> bool:
        return self.span_equals_crossings and self.signs_alternate and self.extreme_coefficients_unit


class CensusRecord(BaseModel):
    """One knot of the census file; volume 0 means non-hyperbolic or unknown"""

    name: str
    crossings: int = Field(..., ge=0)
    alternating: bool
    prime: bool
    torus: bool
    pd: str = Field(..., description="PD code text")
    volume: float = Field(..., ge=0)

    @property
    def bound_checked(self) -> bool:
        return self.alternating and self.prime and not self.torus and self.volume > 0


class ScatterRow(BaseModel):
    """Per-knot scan result: twist numbers against volume"""

    name: str
    crossings: int
    alternating: bool
    jones: Optional[str] = Field(None, description="Rendered Jones polynomial")
    twist_numbers: List[int] = Field(default_factory=list)
    volume: float
    lower: Optional[float] = None
    upper: Optional[float] = None
    lackenby_lower: Optional[float] = None
    lackenby_upper: Optional[float] = None
    within_bounds: Optional[bool] = Field(None, description="None when the bound hypothesis does not apply")
    routes_agree: Optional[bool] = Field(None, description="None when only the bracket route ran")
    error: Optional[str] = Field(None, description="Error marker for rows that could not be computed")

    def twist(self, i: int) -> Optional[int]:
        if 1 <= i <= len(self.twist_numbers):
            return self.twist_numbers[i - 1]
        return None


class VerificationReport(BaseModel):
    """Outcome of the coefficient and twist-number identity checks on one diagram"""

    crossings: int
    alternating: bool
    jones: str = Field(..., description="Jones polynomial agreed on by both routes")
    twist_number: Optional[int] = Field(None, description="|E~| + |E~*| - |E| from the checkerboard graphs")
    jones_twist_number: Optional[int] = Field(None, description="|a_(n+1)| + |a_(m-1)| from the Jones polynomial")
    checks: Dict[str, bool] = Field(default_factory=dict, description="Named identity checks and whether each passed")

    @computed_field
    @property
    def passed(self) -> bool:
        return all(self.checks.values())
