from setuptools import setup, find_packages
import os

setup(
    name="surgtorsion",
    version="0.1.0",
    packages=find_packages(include=["surgtorsion", "surgtorsion.*"]),
    include_package_data=True,
    install_requires=[
        "psutil>=5.9.0",
    ],
    extras_require={
        "test": ["pytest>=7.0", "sympy>=1.10"],
    },
    entry_points={
        "console_scripts": ["surgtorsion=surgtorsion.cli:main"],
    },
    description="Exact twisted Reidemeister torsion of knots, Dehn surgeries and Seifert fibered spaces",
    long_description=open("README.md", encoding="utf-8").read() if os.path.exists("README.md") else "",
    long_description_content_type="text/markdown",
    license="MIT",
    classifiers=[
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Programming Language :: Python :: 3.13",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.9",
    keywords="knot torsion dehn-surgery seifert topology exact-arithmetic",
    package_data={
        "surgtorsion": [
            "fixtures/*.json",
            "fixtures/*.group",
            "fixtures/*.params",
        ],
    },
)
