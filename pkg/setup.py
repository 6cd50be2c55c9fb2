"""
Release check list.

1. Change the version in src/loophole_witness/__init__.py and setup.py.

2. Commit these changes with the message: "Release: VERSION"

3. Add a tag in git to mark the release: "git tag VERSION -m'Adds tag VERSION'"
   Push the tag to git: git push --tags origin master

4. Build both the sources and the wheel. Do not change anything in setup.py between
   creating the wheel and the source distribution.

   Usualy run: "python setup.py sdist bdist_wheel"

5. Run the tests from a clean virtualenv before uploading:
   python -m unittest discover tests
"""

from setuptools import setup, find_packages

extras = {}

setup(
    name="loophole_witness",
    version="0.1.0",
    author="George Mihaila",
    author_email="georgemihaila@my.unt.edu",
    description="Linear and nonlinear entanglement witnesses with detection loophole thresholds",
    long_description=open("README.md", "r", encoding="utf-8").read(),
    long_description_content_type="text/markdown",
    keywords="entanglement witness partial transpose bound entanglement detector efficiency numpy",
    license="Apache",
    package_dir={"": "src"},
    packages=find_packages("src"),
    install_requires=[
        "numpy",
        # progress bars in product state sweeps
        "tqdm >= 4.27",
    ],
    extras_require=extras,
    entry_points={"console_scripts": ["loophole-witness=loophole_witness.cli:main"]},
    python_requires=">=3.7.0",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.7",
        "Topic :: Scientific/Engineering :: Physics",
    ],
)
