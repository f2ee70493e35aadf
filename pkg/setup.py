"""
Setup configuration for the AC context detector.

Installs the layer packages and an ``ac-context`` console script.
"""

from setuptools import setup

from config import PROJECT_NAME, VERSION

DESCRIPTION = "Adult-Child context determination for two-party chat transcripts"

setup(
    name=PROJECT_NAME,
    version=VERSION,
    description=DESCRIPTION,
    packages=["data", "harness", "logic", "models"],
    py_modules=["config", "errors", "main"],
    python_requires=">=3.8",
    install_requires=[
        "beautifulsoup4>=4.9",
        "numpy>=1.20",
        "scipy>=1.10",
    ],
    extras_require={
        "pdf": ["reportlab>=4.0.0"],
    },
    entry_points={
        "console_scripts": ["ac-context=main:main"],
    },
)
