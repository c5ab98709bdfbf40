from setuptools import setup, find_packages

# README.md file
from os import path
this_directory = path.abspath(path.dirname(__file__))
with open(path.join(this_directory, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

#get version
with open(path.join(this_directory, 'VERSION'), encoding='utf-8') as f:
    version = f.read().strip()

setup(
    name='lockerutils',
    version=version,
    license='GPL-3.0-or-later',
    description="parcel locker location under the threshold Luce model: evaluation, exact solvers, model export and experiments",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=['docs']),
    python_requires='>=3.8',
    ## conda handles dependencies for the main distribution; these are for pip installs
    install_requires=['numpy >= 1.17.0', 'dask', 'networkx >= 2.4', 'pandas >= 1.0'],
    extras_require={'test': ['hypothesis >= 6.0']},
    entry_points={'console_scripts': ['locker-opt=lockerutils.locker_opt:main']},
)
