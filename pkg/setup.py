from setuptools import setup, find_packages

setup(
    name="cyclorient",
    version="1.0.0",
    description="Recognize cyclically orientable graphs and build their orientations",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    install_requires=[
        "mcp>=0.1.0,<2",
        "python-dotenv>=1.0.0",
        "numpy>=1.24.0",
        "pandas>=2.0.0",
        "pydantic>=2.0.0",
    ],
    python_requires=">=3.9",
    entry_points={
        "console_scripts": [
            "cyclorient=src.cli:main",
            "cyclorient-server=src.server:run",
        ],
    },
)
