#!/usr/bin/env python3

import logging
import os
import sys


# --- Enforce Python version ---
REQUIRED_MAJOR = 3
REQUIRED_MINOR = 10

if sys.version_info[:2] < (REQUIRED_MAJOR, REQUIRED_MINOR):
    sys.stderr.write(
        f"ERROR: twostep needs Python {REQUIRED_MAJOR}.{REQUIRED_MINOR} or newer, "
        f"but you are running Python {sys.version_info.major}.{sys.version_info.minor}\n"
    )
    sys.exit(1)


# --- Logger setup ---
logger = logging.getLogger("twostep.launcher")
logger.setLevel(logging.INFO)
if not logger.handlers:
    handler = logging.StreamHandler()
    formatter = logging.Formatter("%(asctime)s [%(levelname)s] %(message)s")
    handler.setFormatter(formatter)
    logger.addHandler(handler)


# --- Dependency check ---
def requirements_satisfied(req_file):
    from importlib import metadata

    from packaging.requirements import Requirement
    from packaging.version import Version

    missing = []
    try:
        with open(req_file, "r", encoding="utf-8") as f:
            lines = [l.strip() for l in f if l.strip() and not l.startswith("#")]
    except OSError:
        return True, []

    for line in lines:
        req = Requirement(line)
        if req.marker is not None and not req.marker.evaluate():
            continue
        try:
            installed_version = Version(metadata.version(req.name))
            if req.specifier and not req.specifier.contains(installed_version, prereleases=True):
                missing.append(f"{req} (installed: {installed_version})")
        except metadata.PackageNotFoundError:
            missing.append(str(req))

    return not missing, missing


def check_requirements():
    base_dir = os.path.join(os.path.dirname(os.path.abspath(__file__)), "twostep")
    for label, req_file in (("core", os.path.join(base_dir, "requirements.txt")),
                            ("soliton search", os.path.join(base_dir, "soliton", "requirements.txt"))):
        ok, missing = requirements_satisfied(req_file)
        if ok:
            continue
        logger.warning(f"{label}: missing {', '.join(missing)}")
        if label == "core":
            logger.error("Install the core requirements with: pip install -r twostep/requirements.txt")
            sys.exit(1)


# --- Main ---
if __name__ == "__main__":
    try:
        check_requirements()
    except ModuleNotFoundError:
        logger.info("packaging not installed; skipping the requirements check")

    from twostep.main import main
    main()
