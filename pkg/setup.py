from setuptools import setup, find_packages
from pathlib import Path

def read_requirements(path):
    """Read a requirements.txt file and return a list of dependencies."""
    req_path = Path(path)
    if not req_path.is_file():
        return []
    with open(req_path, "r", encoding="utf-8") as f:
        lines = [line.strip() for line in f if line.strip() and not line.startswith("#")]
    return lines

setup(
    name="twostep",
    version="0.1.0",
    description="Exact computations on 2-step nilpotent Lie algebras with almost complex structures",
    packages=find_packages(exclude=("examples", "examples.*")),
    python_requires=">=3.10",
    install_requires=read_requirements("twostep/requirements.txt"),  # core dependencies
    extras_require={
        "soliton": read_requirements("twostep/soliton/requirements.txt"),
        "tests": read_requirements("twostep/tests/requirements.txt"),
    },
    include_package_data=True,
    entry_points={
        "console_scripts": [
            "twostep=twostep.main:main",
        ],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
