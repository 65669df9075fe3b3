"""Usage logger: command name, exit status and timing only, no inputs or results."""

import json
import os
from datetime import datetime, timezone
from pathlib import Path

_DATA_DIR = Path(os.environ.get("DATA_DIR", Path(__file__).parent))
LOG_DIR = _DATA_DIR / "usage_logs"

KEEP_MONTHS = 3


def logging_enabled():
    return os.environ.get("USAGE_LOG", "1") != "0"


def _month_key(moment):
    return moment.strftime("%Y-%m")


def _log_path(now=None):
    """Monthly log file: usage-2026-03.jsonl"""
    now = now or datetime.now(timezone.utc)
    LOG_DIR.mkdir(parents=True, exist_ok=True)
    return LOG_DIR / f"usage-{_month_key(now)}.jsonl"


def log_usage(command, status, duration_ms=0.0, now=None):
    """Append one run event. Model specs, paths and results are never written."""
    if not logging_enabled():
        return
    now = now or datetime.now(timezone.utc)
    entry = {
        "ts": now.isoformat(),
        "command": command,
        "status": status,
        "duration_ms": round(duration_ms, 3),
    }
    with open(_log_path(now), "a", encoding="utf-8") as f:
        f.write(json.dumps(entry) + "\n")


def read_usage(month=None):
    """Events logged in one month (default: the current one)."""
    path = LOG_DIR / f"usage-{month or _month_key(datetime.now(timezone.utc))}.jsonl"
    if not path.exists():
        return []
    with open(path, "r", encoding="utf-8") as f:
        return [json.loads(line) for line in f if line.strip()]


def cleanup_old_logs(keep_months=KEEP_MONTHS, now=None):
    """Delete monthly files more than keep_months calendar months old."""
    if not LOG_DIR.exists():
        return
    now = now or datetime.now(timezone.utc)
    current = now.year * 12 + now.month - 1
    for log_file in LOG_DIR.glob("usage-*.jsonl"):
        stamp = log_file.stem.removeprefix("usage-")
        try:
            logged = datetime.strptime(stamp, "%Y-%m")
        except ValueError:
            continue
        if current - (logged.year * 12 + logged.month - 1) >= keep_months:
            log_file.unlink()
