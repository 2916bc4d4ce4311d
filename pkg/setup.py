from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

with open("requirements.txt", "r", encoding="utf-8") as fh:
    requirements = [line.strip() for line in fh if line.strip() and not line.startswith("#")]

# runtime dependencies only; the test and lint tools live in the dev extra
runtime = [r for r in requirements if r.split("==")[0] in ("pydantic", "pydantic-settings", "numpy", "pandas")]

setup(
    name="deskcalc",
    version="1.0.0",
    author="deskcalc maintainers",
    description="Spreadsheet-style numerical toolkit: Goal Seek, Riemann sums, compound interest, "
                "Welch t-tests, ANOVA and box plots from the command line",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(include=["src", "src.*"]),
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Education",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Education",
    ],
    python_requires=">=3.9",
    install_requires=runtime,
    extras_require={
        "dev": [
            "pytest>=7.0.0",
            "pytest-cov>=4.0.0",
            "black>=23.0.0",
            "mypy>=1.0.0",
            "ruff>=0.1.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "deskcalc=src.cli.main:main",
        ],
    },
    include_package_data=True,
)
