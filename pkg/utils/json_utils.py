import json
import logging
import os
import dotenv
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Optional

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

REPO_ROOT = Path(__file__).resolve().parent.parent
DEFAULT_CONFIG_PATH = REPO_ROOT / "configs" / "config.json"


def load_json(file_path: str):
    """Load JSON data from a file"""
    logger.debug(f"Loading JSON file: {file_path}")

    try:
        with open(file_path, 'r') as f:
            data = json.load(f)
            logger.info(f"Successfully loaded JSON file: {file_path}")
            logger.debug(f"JSON data keys: {list(data.keys()) if isinstance(data, dict) else 'Non-dict data'}")
            return data
    except FileNotFoundError as e:
        logger.error(f"JSON file not found: {file_path}: {e}")
        raise FileNotFoundError(f"{file_path} not found: {e}")
    except json.JSONDecodeError as e:
        logger.error(f"Invalid JSON format in file {file_path}: {e}")
        raise json.JSONDecodeError(f"Invalid JSON in {file_path}: {e.msg}", e.doc, e.pos)


@lru_cache(maxsize=4)
def _load_config_cached(path: str) -> Dict[str, Any]:
    config = load_json(path)
    if "knots" not in config:
        logger.error(f"Config file {path} has no 'knots' section")
        raise KeyError(f"Config file {path} has no 'knots' section")
    return config["knots"]


def load_config(path: Optional[str] = None) -> Dict[str, Any]:
    """
    Load the 'knots' section of the pipeline configuration.

    The path defaults to KNOTS_CONFIG from the environment, then to
    configs/config.json in the repository. Parsed files are cached.
    """
    config_path = path or os.getenv("KNOTS_CONFIG") or str(DEFAULT_CONFIG_PATH)
    logger.debug(f"Resolving pipeline configuration from {config_path}")
    return _load_config_cached(config_path)


def config_value(section: str, key: str, default: Any = None) -> Any:
    """Look up one configuration value, falling back to default when absent."""
    value = load_config().get(section, {}).get(key, default)
    logger.debug(f"Config {section}.{key} = {value}")
    return value
