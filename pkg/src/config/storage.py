import os
import sys
from pathlib import Path

from errors import PreconditionError

APP_NAME = "hodge-levels"

PROJECT_ROOT = Path(__file__).resolve().parents[2]


def _platform_support_dir() -> Path:
    """Return a user-writable directory when the project tree is read-only."""
    home = Path.home()
    if sys.platform == "darwin":
        return home / "Library" / "Application Support" / APP_NAME
    if sys.platform.startswith("win"):
        return Path(os.environ.get("APPDATA", home / "AppData" / "Roaming")) / APP_NAME
    return Path(os.environ.get("XDG_DATA_HOME", home / ".local" / "share")) / APP_NAME


def _is_writable_dir(path: Path) -> bool:
    """Check whether the given directory is writable; create it if possible."""
    try:
        path.mkdir(parents=True, exist_ok=True)
        test_file = path / ".write_test"
        test_file.touch(exist_ok=True)
        test_file.unlink(missing_ok=True)
        return True
    except OSError:
        return False


def resolve_results_dir() -> Path:
    override = os.environ.get("HODGE_LEVELS_DATA_ROOT")
    if override:
        return Path(override).expanduser()

    candidate = PROJECT_ROOT / "results"
    if _is_writable_dir(candidate):
        return candidate
    return _platform_support_dir()


def ensure_writable(path: Path) -> Path:
    """Fail before a long run if `path` cannot be written."""
    path = Path(path).expanduser()
    if path.exists() and path.is_dir():
        raise PreconditionError(
            f"output path {path} is a directory", {"path": str(path)}
        )
    if not _is_writable_dir(path.parent):
        raise PreconditionError(
            f"output directory {path.parent} is not writable", {"path": str(path)}
        )
    if path.exists() and not os.access(path, os.W_OK):
        raise PreconditionError(
            f"output file {path} is not writable", {"path": str(path)}
        )
    return path
