from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="schubert_derivations",
    version="0.1.0",
    author="Schubert Derivations",
    description="Exact Schubert calculus on Grassmannians through derivations on exterior algebras",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(include=["src", "src.*"]),
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.8",
    install_requires=[
        "python-dotenv",
        "prometheus-client",
    ],
    extras_require={
        "dev": [
            "pytest>=6.0",
            "pytest-cov>=4.1.0",
            "hypothesis>=6.0",
            "black>=23.7.0",
            "flake8>=6.1.0",
            "mypy>=1.5.1",
            "isort>=5.12.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "schubert-hs=src.app:main",
        ],
    },
)
