from setuptools import setup, find_packages

setup(
    name="marc-rlnc",
    version="1.0.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    python_requires=">=3.10",
    install_requires=[
        "typer>=0.9.0",
        "rich>=13.0.0",
        "pydantic>=2.0.0",
        "pydantic-settings>=2.0.0",
        "python-dotenv>=1.0.0",
        "numpy>=1.26.0",
        "scipy>=1.11.0",
    ],
    entry_points={
        "console_scripts": ["marc=src.cli:app"],
    },
)
