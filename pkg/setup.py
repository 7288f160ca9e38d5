#!/usr/bin/env python

from setuptools import setup

setup(name='plane-draw',
      version='1.0.0',
      description='Straight-line drawings of plane graphs by edge contraction and vertex splitting',
      author='plane-draw developers',
      classifiers=['Programming Language :: Python :: 3 :: Only'],
      python_requires='>=3.9',
      install_requires=[
          # Logging, top-level exception handling, config loading and
          # schema-driven validation of graph files and reports.
          'singer-python==5.13.2',
          'backoff==1.10.0',
          'methodtools==0.4.2',
          # SVG rendering of drawings.
          'drawsvg==2.3.0',
      ],
      extras_require={
          'dev': [
              'ipdb',
              'pylint',
              'hypothesis',
          ]
      },
      entry_points='''
          [console_scripts]
          plane-draw=plane_draw:main
      ''',
      packages=['plane_draw'],
      package_data = {
          'plane_draw': [
              'schemas/*.json'
          ],
      },
      include_package_data=True,
)
