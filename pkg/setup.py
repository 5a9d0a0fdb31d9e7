"""
Circuit Core - Package Setup
Makes circuit-core installable as a Python package
"""

from setuptools import setup, find_packages
from pathlib import Path

# Read the README file
this_directory = Path(__file__).parent
long_description = (this_directory / "README.md").read_text()

setup(
    name="circuit-core",
    version="1.0.0",
    description="Throughput scheduling for circuit switches with reconfiguration delay",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(include=['circuit_core', 'circuit_core.*']),
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: System :: Networking",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
    ],
    python_requires=">=3.9",
    install_requires=[
        "sqlalchemy>=2.0.0",
        "numpy>=1.22.0",
        "pydantic>=2.0.0",
    ],
    extras_require={
        "dev": [
            "pytest>=7.0.0",
            "pytest-cov>=4.0.0",
        ],
        "postgres": [
            "psycopg2-binary>=2.9.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "circuit-core=circuit_core.cli:main",
            "circuit-core-setup-db=circuit_core.database.setup_database:main",
        ],
    },
)
