from fastapi import FastAPI, HTTPException
import uvicorn
import logging
import os
import dotenv

from knots.diagram import checkerboard_graphs, is_alternating, parse_pd, positive_checkerboard, writhe
from knots.errors import KnotToolkitError, TooLarge
from knots.invariants import twist_number_from_graphs, twist_profile, verify_diagram, volume_bounds
from knots.jones import jones_by_route
from knots.tutte import tutte_deletion_contraction
from models.records import VerificationReport
from models.requests import BoundsRequest, DiagramRequest, JonesRequest, TutteRequest
from models.responses import BoundsResponse, HealthResponse, JonesResponse, TutteResponse, TwistResponse
from utils.request_utils import polynomial_from_coefficients

# Load environment variables
dotenv.load_dotenv()

# Configure logging
log_level = os.getenv("LOG_LEVEL", "ERROR").upper()
logging.basicConfig(
    level=getattr(logging, log_level, logging.INFO),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    datefmt='%Y-%m-%d %H:%M:%S'
)
logger = logging.getLogger(__name__)

# Create FastAPI app with custom metadata for Swagger
app = FastAPI(
    title="Knot Invariants",
    description="Jones polynomials of knots from PD codes via the Tutte and Kauffman bracket routes, twist numbers and hyperbolic volume bounds.",
    version="1.0.0",
    docs_url="/docs",  # Swagger UI at /docs
    redoc_url="/redoc",  # ReDoc at /redoc
)

logger.info(f"FastAPI application initialized with log level: {log_level}")


def _http_error(e: KnotToolkitError) -> HTTPException:
    status = 413 if isinstance(e, TooLarge) else 422
    logger.error(f"Request rejected with {status}: {type(e).__name__}: {e}")
    return HTTPException(status_code=status, detail=f"{type(e).__name__}: {e}")


@app.get("/", response_model=dict)
async def root():
    """
    Root endpoint - API information
    """
    logger.info("Root endpoint accessed")
    return {
        "message": "Welcome to the Knot Invariants API",
        "docs": "/docs",
        "health": "/health"
    }


@app.get("/health", response_model=HealthResponse)
async def health_check():
    """
    Health check endpoint
    """
    logger.info("Health check endpoint accessed")
    return HealthResponse(status="healthy", message="Knot Invariants API is running")


@app.post("/jones", response_model=JonesResponse)
def jones(request: JonesRequest):
    """
    Jones polynomial of a PD code by the requested route.
    """
    logger.info(f"Jones endpoint accessed with route={request.route}")
    try:
        diagram = parse_pd(request.pd)
        result = jones_by_route(diagram, request.route)
        return JonesResponse(
            polynomial=result.poly.render(),
            coefficients=[[e, c] for e, c in result.poly.coefficients()],
            route=request.route,
            writhe=writhe(diagram),
        )
    except KnotToolkitError as e:
        raise _http_error(e)
    except Exception as e:
        logger.error(f"Unexpected error in Jones endpoint: {e}")
        raise HTTPException(status_code=500, detail=f"An error occurred: {e}")


@app.post("/tutte", response_model=TutteResponse)
def tutte(request: TutteRequest):
    """
    Tutte polynomial of a checkerboard graph of the diagram.
    """
    logger.info(f"Tutte endpoint accessed for the {request.graph} graph")
    try:
        diagram = parse_pd(request.pd)
        if request.graph == "positive":
            graph = positive_checkerboard(diagram)
        else:
            purple, gold = checkerboard_graphs(diagram)
            graph = purple if request.graph == "purple" else gold
        return TutteResponse(
            polynomial=tutte_deletion_contraction(graph).render(),
            graph=request.graph,
            vertex_count=graph.vertex_count,
            edge_count=graph.edge_count,
        )
    except KnotToolkitError as e:
        raise _http_error(e)
    except Exception as e:
        logger.error(f"Unexpected error in Tutte endpoint: {e}")
        raise HTTPException(status_code=500, detail=f"An error occurred: {e}")


@app.post("/twist", response_model=TwistResponse)
def twist(request: DiagramRequest):
    """
    Twist numbers T_i from the Jones polynomial, and the graph-side twist number for alternating diagrams.
    """
    logger.info("Twist endpoint accessed")
    try:
        diagram = parse_pd(request.pd)
        profile = twist_profile(jones_by_route(diagram, "both"))
        from_graphs = twist_number_from_graphs(diagram) if is_alternating(diagram) else None
        return TwistResponse(profile=profile, twist_from_graphs=from_graphs)
    except KnotToolkitError as e:
        raise _http_error(e)
    except Exception as e:
        logger.error(f"Unexpected error in twist endpoint: {e}")
        raise HTTPException(status_code=500, detail=f"An error occurred: {e}")


@app.post("/bounds", response_model=BoundsResponse)
def bounds(request: BoundsRequest):
    """
    Volume bounds from a PD code or from a published coefficient list.
    """
    logger.info("Bounds endpoint accessed")
    if (request.pd is None) == (request.coeffs is None):
        raise HTTPException(status_code=422, detail="Provide exactly one of 'pd' or 'coeffs'")
    try:
        crossings = request.crossings
        if request.coeffs is not None:
            poly = polynomial_from_coefficients(request.coeffs, request.min_exp)
        else:
            diagram = parse_pd(request.pd)
            poly = jones_by_route(diagram, "both").poly
            crossings = crossings if crossings is not None else diagram.crossing_count
        profile = twist_profile(poly)
        return BoundsResponse(profile=profile, bounds=volume_bounds(profile, crossings))
    except KnotToolkitError as e:
        raise _http_error(e)
    except Exception as e:
        logger.error(f"Unexpected error in bounds endpoint: {e}")
        raise HTTPException(status_code=500, detail=f"An error occurred: {e}")


@app.post("/verify", response_model=VerificationReport)
def verify(request: DiagramRequest):
    """
    Run the coefficient and twist-number identity checks on one diagram.
    """
    logger.info("Verify endpoint accessed")
    try:
        report = verify_diagram(parse_pd(request.pd))
        logger.debug(f"Verification report: {report}")
        return report
    except KnotToolkitError as e:
        raise _http_error(e)
    except Exception as e:
        logger.error(f"Unexpected error in verify endpoint: {e}")
        raise HTTPException(status_code=500, detail=f"An error occurred: {e}")


def main():
    """
    Run the FastAPI application
    """
    logger.info("Starting FastAPI application")
    logger.debug("Running on host=0.0.0.0, port=8000, reload=True")

    uvicorn.run(
        "main:app",
        host="0.0.0.0",
        port=8000,
        reload=True
    )


if __name__ == "__main__":
    main()
