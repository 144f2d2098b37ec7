"""
Setup script for darts_mtsad package.
"""
from setuptools import setup, find_packages

setup(
    name='darts-mtsad',
    version='1.0.0',
    packages=find_packages(exclude=['tests', 'examples*']),
    python_requires='>=3.8',
    install_requires=[
        'numpy>=1.22',
        'pandas>=1.5',
    ],
    entry_points={
        'console_scripts': [
            'darts-mtsad=darts_mtsad.app.main:main',
        ],
    },
)
