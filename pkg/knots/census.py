"""
Knot census ingestion and scan.

Census CSV schema (header required):
    name,crossings,alternating,prime,torus,pd,volume
Booleans are 0/1, pd is quoted, volume 0 marks a non-hyperbolic or unknown volume.
"""
import json
import logging
import math
import os
import dotenv
import pandas as pd
from joblib import Parallel, delayed
from pathlib import Path
from pydantic import ValidationError
from typing import Dict, Iterable, List, Optional, Sequence

from knots.diagram import is_alternating, parse_pd
from knots.errors import BadArgument, CsvError, KnotToolkitError, NotReduced
from knots.invariants import twist_profile, volume_bounds, within_bounds
from knots.jones import jones_via_bracket, jones_via_tutte
from models.records import CensusRecord, ScatterRow
from utils.json_utils import config_value

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

COLUMNS = ["name", "crossings", "alternating", "prime", "torus", "pd", "volume"]
FILTERS = ("alternating", "nonalternating")
MAX_DEFAULT_TI = 4


def _flag(value: str, column: str, line: int) -> bool:
    if value.strip() in ("0", "1"):
        return value.strip() == "1"
    logger.error(f"Census line {line}: bad {column} flag {value!r}")
    raise CsvError(line, f"{column} must be 0 or 1, got {value!r}")


def _record(row: Dict[str, str], line: int) -> CensusRecord:
    try:
        crossings = int(row["crossings"])
        volume = float(row["volume"])
    except ValueError as e:
        logger.error(f"Census line {line}: bad number: {e}")
        raise CsvError(line, f"bad number: {e}")
    if not math.isfinite(volume) or volume < 0:
        logger.error(f"Census line {line}: volume {volume} is not a finite non-negative number")
        raise CsvError(line, f"volume must be finite and non-negative, got {row['volume'].strip()!r}")
    try:
        diagram = parse_pd(row["pd"])
    except KnotToolkitError as e:
        logger.error(f"Census line {line}: PD code rejected: {e}")
        raise CsvError(line, f"{type(e).__name__}: {e}")
    if diagram.crossing_count != crossings:
        logger.error(f"Census line {line}: PD code has {diagram.crossing_count} crossings, column says {crossings}")
        raise CsvError(line, f"PD code has {diagram.crossing_count} crossings, crossings column says {crossings}")
    try:
        return CensusRecord(
            name=row["name"].strip(),
            crossings=crossings,
            alternating=_flag(row["alternating"], "alternating", line),
            prime=_flag(row["prime"], "prime", line),
            torus=_flag(row["torus"], "torus", line),
            pd=row["pd"].strip(),
            volume=volume,
        )
    except ValidationError as e:
        logger.error(f"Census line {line}: record failed validation: {e}")
        raise CsvError(line, f"invalid record: {e.errors()[0]['msg']}")


def load_census(path: str) -> List[CensusRecord]:
    """Read and validate a census CSV; line numbers in errors count the header as line 1."""
    logger.info(f"Loading census from {path}")
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False)
    except OSError as e:
        logger.error(f"Cannot read census file {path}: {e}")
        raise OSError(f"cannot read census file {path}: {e}")
    except pd.errors.ParserError as e:
        logger.error(f"Malformed census CSV {path}: {e}")
        raise CsvError(0, f"malformed CSV: {e}")
    except pd.errors.EmptyDataError:
        logger.error(f"Census file {path} is empty")
        raise CsvError(1, "missing header")

    missing = [c for c in COLUMNS if c not in frame.columns]
    if missing:
        logger.error(f"Census header lacks columns {missing}")
        raise CsvError(1, f"missing columns {missing}")

    records = []
    for index, row in enumerate(frame[COLUMNS].to_dict(orient="records")):
        line = index + 2
        records.append(_record(row, line))
    logger.info(f"Loaded {len(records)} census records")
    return records


def filter_records(records: Iterable[CensusRecord], which: Optional[str]) -> List[CensusRecord]:
    """Keep all records, or only the alternating or non-alternating ones."""
    if which is None:
        return list(records)
    if which not in FILTERS:
        logger.error(f"Unknown census filter {which!r}")
        raise BadArgument(f"filter must be one of {FILTERS}, got {which!r}")
    keep = which == "alternating"
    return [r for r in records if r.alternating == keep]


def scan_record(record: CensusRecord) -> ScatterRow:
    """Run both Jones routes, the twist profile and the bounds for one record."""
    row = dict(name=record.name, crossings=record.crossings, alternating=record.alternating, volume=record.volume)
    try:
        diagram = parse_pd(record.pd)
        bracket_limit = config_value("limits", "census_bracket_max_crossings", 20)
        if diagram.crossing_count > bracket_limit:
            return ScatterRow(**row, error=f"TooLarge: {diagram.crossing_count} crossings exceeds {bracket_limit}")
        jones = jones_via_bracket(diagram)

        routes_agree = None
        tutte_limit = config_value("limits", "census_tutte_max_crossings", 16)
        if is_alternating(diagram) and diagram.crossing_count <= tutte_limit:
            try:
                routes_agree = jones_via_tutte(diagram).poly == jones.poly
            except NotReduced:
                logger.warning(f"{record.name}: diagram not reduced, Tutte route skipped")
            if routes_agree is False:
                logger.error(f"{record.name}: Tutte and bracket routes disagree")

        profile = twist_profile(jones)
        bounds = volume_bounds(profile, record.crossings)
        checked = within_bounds(bounds, record.volume) if record.bound_checked else None
        if checked is False:
            logger.error(f"{record.name}: volume {record.volume} outside bounds {bounds}")
        return ScatterRow(
            **row,
            jones=jones.poly.render(),
            twist_numbers=profile.twist_numbers,
            lower=bounds.lower,
            upper=bounds.upper,
            lackenby_lower=bounds.lackenby_lower,
            lackenby_upper=bounds.lackenby_upper,
            within_bounds=checked,
            routes_agree=routes_agree,
        )
    except KnotToolkitError as e:
        logger.warning(f"{record.name}: {type(e).__name__}: {e}")
        return ScatterRow(**row, error=f"{type(e).__name__}: {e}")


def scan(records: Sequence[CensusRecord], n_jobs: Optional[int] = None) -> List[ScatterRow]:
    """Scan records in parallel threads; rows come back in input order."""
    n_jobs = n_jobs if n_jobs is not None else config_value("census", "n_jobs", 1)
    logger.info(f"Scanning {len(records)} census records with n_jobs={n_jobs}")
    rows = Parallel(n_jobs=n_jobs, prefer="threads")(delayed(scan_record)(r) for r in records)
    return list(rows)


def check_ti(i: int, allow_any: bool = False) -> None:
    """Reject twist indices outside 1..4 unless the override is set."""
    if i < 1 or (i > MAX_DEFAULT_TI and not allow_any):
        logger.error(f"Twist index {i} out of range")
        raise BadArgument(f"T_i index must be in 1..{MAX_DEFAULT_TI} (or >= 1 with the override), got {i}")


def emit_scatter(rows: Sequence[ScatterRow], i: int, path: str, allow_any: bool = False) -> Path:
    """Two-column CSV (T_i, volume) with one row per knot where T_i is defined."""
    check_ti(i, allow_any)
    column = f"T{i}"
    pairs = [(row.twist(i), row.volume) for row in rows if row.error is None and row.twist(i) is not None]
    frame = pd.DataFrame(pairs, columns=[column, "volume"])
    try:
        frame.to_csv(path, index=False)
    except OSError as e:
        logger.error(f"Cannot write scatter file {path}: {e}")
        raise OSError(f"cannot write scatter file {path}: {e}")
    logger.info(f"Wrote {len(frame)} ({column}, volume) pairs to {path}")
    return Path(path)


def summarize(rows: Sequence[ScatterRow]) -> Dict[str, int]:
    """Counts written to summary.json."""
    return {
        "rows": len(rows),
        "alternating": sum(1 for r in rows if r.alternating),
        "bound_checked": sum(1 for r in rows if r.within_bounds is not None),
        "bound_violations": sum(1 for r in rows if r.within_bounds is False),
        "route_comparisons": sum(1 for r in rows if r.routes_agree is not None),
        "route_mismatches": sum(1 for r in rows if r.routes_agree is False),
        "errors": sum(1 for r in rows if r.error is not None),
    }


def run_census(
    in_path: str,
    out_dir: str,
    ti: Optional[Sequence[int]] = None,
    which: Optional[str] = None,
    allow_any_ti: bool = False,
    n_jobs: Optional[int] = None,
) -> Dict[str, int]:
    """
    Load, scan and write scan.csv, scatter_T<i>.csv and summary.json into out_dir.
    """
    ti = list(ti) if ti else list(config_value("census", "default_ti", [1, 2, 3, 4]))
    for i in ti:
        check_ti(i, allow_any_ti)
    records = filter_records(load_census(in_path), which)
    rows = scan(records, n_jobs)

    out = Path(out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
        pd.DataFrame([r.model_dump() for r in rows], columns=list(ScatterRow.model_fields)).to_csv(out / "scan.csv", index=False)
    except OSError as e:
        logger.error(f"Cannot write census output to {out}: {e}")
        raise OSError(f"cannot write census output to {out}: {e}")
    for i in ti:
        emit_scatter(rows, i, str(out / f"scatter_T{i}.csv"), allow_any_ti)

    summary = summarize(rows)
    with open(out / "summary.json", "w") as f:
        json.dump(summary, f, indent=2, sort_keys=True)
    logger.info(f"Census scan summary: {summary}")
    return summary
