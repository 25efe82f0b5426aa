"""
This setup.py file sets up our package to be installable on any computer,
so that folks can `import slamlearn` from within any directory.

Thanks to this file, you can...

...tell python to look for code in the current directory (which you
can continue to edit), by typing *one* of the following commands:

`pip install -e .`
or
`python setup.py develop`

...move a copy of this code to your site-packages directory, where python will
be able to find it (but you won't be able to keep editing it), by typing *one*
of the following commands:

`pip install .`
or
`python setup.py install`

...upload the entire package to the Python Package Index, so that other folks
will be able to install your package via the simple `pip install slam-learn`, by
running the following command:

`python setup.py release`
"""

# import our basic setup ingredients
from setuptools import setup, find_packages
import os, sys

# running `python setup.py release` from the command line will post to PyPI
if "release" in sys.argv[-1]:
    os.system("python setup.py sdist")
    os.system("twine upload dist/*")
    os.system("rm -rf dist/slam-learn*")
    sys.exit()

# a little kludge to get the version number from __version__
exec(open("slamlearn/version.py").read())

# run the setup function
setup(
    # the name folks can use to search for this with pip
    name="slam-learn",
    # what version of the code is this?
    version=__version__,
    # what's a short description of the package?
    description="Learning latent attribute patterns in structured latent attribute models.",
    # what's a more detailed description?
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    # this figures out what subdirectories to include
    packages=find_packages(),
    # are there data that should be accessible when installed?
    include_package_data=True,
    # are there scripts to be copied into your $PATH?
    entry_points={"console_scripts": ["slamlearn=slamlearn.cli:main"]},
    # some descriptions about this package (for searchability)
    classifiers=[
        "Intended Audience :: Education",
        "Intended Audience :: Science/Research",
        "Programming Language :: Python",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    # what other packages are needed? (must be pip-installable)
    install_requires=[
        "numpy",
        "scipy",
        "astropy>=4.0",
        "pandas",
        "tqdm",
        "networkx>=2.5",
        "joblib",
    ],
    # what version of Python is required?
    python_requires=">=3.8",
    # requirements in `key` will install with `pip install slam-learn[key]`
    extras_require={
        "develop": [
            "pytest",
            "black",
            "mkdocs",
            "mkdocs-material",
            "mkdocstrings",
            "mkdocstrings-python",
            "twine",
            "pre-commit",
        ],
    },
    # (I think just leave this set to False)
    zip_safe=False,
    # under what license is this code released?
    license="MIT",
)
