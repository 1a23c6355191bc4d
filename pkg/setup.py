#!/usr/bin/env python
# -*- coding: utf-8 -*-

from setuptools import setup, find_packages

# get the requirements from the requirements.txt
requirements = [line.strip()
                for line in open('requirements.txt').readlines()
                if line.strip() and not line.startswith('#')]
# get the test requirements from the dev-requirements.txt
test_requirements = [line.strip()
                     for line in
                     open('dev-requirements.txt').readlines()
                     if line.strip() and not line.startswith('#')]

readme = open('README.rst').read()
history = open('HISTORY.rst').read().replace('.. :changelog:', '')
version = open('.VERSION').read().strip()


setup(
    name='''autocatlib''',
    version=version,
    description='''Stationary laws of open autocatalytic networks''',
    long_description=readme + '\n\n' + history,
    author='''autocatlib developers''',
    author_email='''autocatlib@users.noreply.github.com''',
    url='''https://github.com/autocatlib/autocatlib.git''',
    packages=find_packages(where='.', exclude=('tests', 'docs')),
    package_dir={'''autocatlib''':
                 '''autocatlib'''},
    package_data={'''autocatlib''': ['.VERSION']},
    include_package_data=True,
    install_requires=requirements,
    entry_points={
        'console_scripts': [
            'autocatlib = autocatlib.cli:main',
        ]
    },
    license='Apache Software License',
    zip_safe=False,
    keywords='''autocatlib autocatalytic stationary distribution gillespie master equation''',
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3.9',
        'Topic :: Scientific/Engineering :: Mathematics',
        ],
    test_suite='tests',
    tests_require=test_requirements
)
