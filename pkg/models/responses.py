from pydantic import BaseModel, Field
from typing import List, Optional

from models.records import TwistProfile, VolumeBounds


class HealthResponse(BaseModel):
    status: str
    message: str


class JonesResponse(BaseModel):
    """Jones polynomial of a knot diagram"""

    polynomial: str = Field(..., description="Rendered Laurent polynomial in t")
    coefficients: List[List[int]] = Field(..., description="Ascending [exponent, coefficient] pairs, interior zeros included")
    route: str = Field(..., description="Route that produced the result: tutte, bracket or both")
    writhe: int = Field(..., description="Sum of crossing signs")


class TutteResponse(BaseModel):
    """Tutte polynomial of a checkerboard graph"""

    polynomial: str = Field(..., description="Monomials in (xExp, yExp) descending order")
    graph: str = Field(..., description="Which checkerboard graph was used")
    vertex_count: int
    edge_count: int


class TwistResponse(BaseModel):
    """Twist numbers from the Jones polynomial and, for alternating diagrams, from the graphs"""

    profile: TwistProfile
    twist_from_graphs: Optional[int] = Field(None, description="|E~| + |E~*| - |E|, alternating diagrams only")


class BoundsResponse(BaseModel):
    """Volume bounds with the profile they were computed from"""

    profile: TwistProfile
    bounds: VolumeBounds
