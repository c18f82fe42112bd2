from pydantic import BaseModel, Field
from typing import List, Literal, Optional


class DiagramRequest(BaseModel):
    """Request carrying a knot diagram as PD text"""

    pd: str = Field(..., description="PD code, e.g. 'X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)', or 'O' for the unknot")


class JonesRequest(DiagramRequest):
    """Request model for the Jones polynomial"""

    route: Literal["tutte", "bracket", "both"] = Field("both", description="Computation route; 'both' fails if the routes disagree")


class TutteRequest(DiagramRequest):
    """Request model for the Tutte polynomial of a checkerboard graph"""

    graph: Literal["positive", "purple", "gold"] = Field("positive", description="Which checkerboard graph to use")


class BoundsRequest(BaseModel):
    """Request model for volume bounds, from a diagram or from published Jones coefficients"""

    pd: Optional[str] = Field(None, description="PD code of the knot")
    coeffs: Optional[List[int]] = Field(None, description="Jones coefficients a_n..a_m in ascending order")
    min_exp: int = Field(0, description="Exponent n of the first coefficient")
    crossings: Optional[int] = Field(None, ge=0, description="Crossing number, enables the Adams upper bound")
