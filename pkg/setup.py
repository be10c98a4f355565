import setuptools
from PyHetSpec import __author__, __version__

with open("README.md", "r") as fh:
    long_description = fh.read()
setuptools.setup(
    name="PyHetSpec",
    version=__version__,
    author=__author__,
    description="Sensitivity limits of heterodyne optical spectrometers",
    packages=setuptools.find_packages(exclude=["tests", "validate"]),
    package_data={"PyHetSpec": ["scenarios/*.yaml"]},
    install_requires=[
        "autograd>=1.3",
        "numpy>=1.17",
        "pandas>=1.5",
        "xarray>=0.15",
        "scipy>=1.6",
        "pyyaml>=5.1",
        "pint>=0.17",
    ],
    entry_points={"console_scripts": ["pyhetspec=PyHetSpec.cli:main"]},
    python_requires=">=3.8",
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        "Development Status :: 4 - Beta",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "License :: OSI Approved :: GNU General Public License v3 (GPLv3)",
        "Operating System :: OS Independent",
        "Natural Language :: English",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Physics",
    ],
)
