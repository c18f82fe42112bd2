import json
import logging
import os
import dotenv
import pandas as pd
from pathlib import Path
from typing import Any, Dict, List

from knots.diagram import PlanarDiagram, parse_pd
from knots.errors import BadArgument
from knots.polynomial import LaurentPoly

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

OUTPUT_FORMATS = ("text", "csv", "json-lines")


def resolve_pd_text(value: str) -> str:
    """
    Return PD text from either a file path or an inline PD string.

    Args:
        value: Path to a file holding a PD code, or the PD code itself

    Returns:
        The PD code text
    """
    candidate = Path(value)
    if "X(" not in value and candidate.is_file():
        logger.info(f"Reading PD code from file: {value}")
        try:
            return candidate.read_text()
        except OSError as e:
            logger.error(f"Cannot read PD file {value}: {e}")
            raise OSError(f"cannot read PD file {value}: {e}")
    logger.debug("Treating PD argument as inline text")
    return value


def load_diagram(value: str) -> PlanarDiagram:
    return parse_pd(resolve_pd_text(value))


def parse_coefficients(text: str) -> List[int]:
    """Parse a comma-separated coefficient list such as '1,-4,11'."""
    pieces = [p.strip() for p in text.split(",") if p.strip()]
    if not pieces:
        logger.error("Empty coefficient list")
        raise BadArgument("coefficient list is empty")
    try:
        coefficients = [int(p) for p in pieces]
    except ValueError as e:
        logger.error(f"Invalid coefficient list {text!r}: {e}")
        raise BadArgument(f"invalid coefficient list {text!r}")
    logger.debug(f"Parsed {len(coefficients)} coefficients")
    return coefficients


def polynomial_from_coefficients(coefficients: List[int], min_exponent: int = 0) -> LaurentPoly:
    poly = LaurentPoly.from_coefficients(coefficients, min_exponent)
    if poly.is_zero():
        logger.error("Coefficient list is all zeros")
        raise BadArgument("all coefficients are zero")
    return poly


def format_output(records: List[Dict[str, Any]], fmt: str = "text") -> str:
    """
    Render result records for stdout.

    Args:
        records: Flat dictionaries, one per result
        fmt: 'text' (key: value lines), 'csv' (header plus rows) or 'json-lines'

    Returns:
        The rendered text, newline-terminated
    """
    if fmt not in OUTPUT_FORMATS:
        logger.error(f"Unknown output format {fmt!r}")
        raise BadArgument(f"format must be one of {OUTPUT_FORMATS}, got {fmt!r}")
    if fmt == "csv":
        return pd.DataFrame(records).to_csv(index=False)
    if fmt == "json-lines":
        return "".join(json.dumps(r, sort_keys=True) + "\n" for r in records)
    blocks = ["\n".join(f"{key}: {value}" for key, value in r.items()) for r in records]
    return "\n\n".join(blocks) + "\n"

