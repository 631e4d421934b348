#!/usr/bin/env python
# vim: set expandtab tabstop=4 shiftwidth=4:

import os
from setuptools import find_packages, setup
from tempeuler import __version__

with open(os.path.join(os.path.dirname(__file__), 'README.rst')) as readme:
    README = readme.read()

# allow setup.py to be run from any path
os.chdir(os.path.normpath(os.path.join(os.path.abspath(__file__), os.pardir)))

setup(
    name='django-tempeuler',
    version=__version__,
    packages=find_packages(exclude=['tempeuler_site']),
    include_package_data=True,
    package_data={
        'tempeuler': ['testdata/*'],
    },
    license='BSD License',
    description='Eulerian walks, trails and tours in temporal graphs, as a Django app.',
    long_description=README,
    install_requires=[
        'Django ~= 4.0',
        'django-dynamic-preferences ~= 1.11',
        'networkx ~= 3.0',
    ],
    extras_require={
        'test': [
            'hypothesis ~= 6.0',
        ],
    },
    # https://pypi.python.org/pypi?%3Aaction=list_classifiers
    classifiers=[
        'Development Status :: 4 - Beta',
        'Environment :: Console',
        'Framework :: Django',
        'Framework :: Django :: 4.0',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: BSD License',
        'Natural Language :: English',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3 :: Only',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
