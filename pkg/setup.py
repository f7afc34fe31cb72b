"""A setuptools based setup module.

See:
https://packaging.python.org/guides/distributing-packages-using-setuptools/
"""

from setuptools import setup, find_packages
from os import path
from io import open

here = path.abspath(path.dirname(__file__))

_RELEASE = "0.1.0"

# The README doubles as the PyPI page
with open(path.join(here, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()


setup(
    name='libkovalevskaya',  # Required
    version=_RELEASE,  # Required
    description='Liouville foliation of the Kovalevskaya case on the pencil so(4), e(3), '
                'so(3,1).',  # Optional
    long_description=long_description,  # Optional
    long_description_content_type='text/markdown',  # Optional
    author='libkovalevskaya developers',  # Optional

    classifiers=[  # Optional
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Scientific/Engineering :: Physics',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
    ],
    keywords='integrable systems kovalevskaya bifurcation diagram fomenko molecule',  # Optional

    packages=find_packages(exclude=['tests', 'examples']),  # Required
    python_requires='>=3.7, <4',

    # TensorFlow evaluates every field and gradient; scipy and networkx do the graph work on
    # samples and molecules; plotly, colorlover and kaleido draw figures
    install_requires=[
        'tensorflow>=2.0', 'tensorflow-probability[tf]>=0.8.0', "numpy", "scipy>=1.6", "networkx",
        "plotly", "colorlover", "kaleido", "matplotlib",
    ],
    extras_require={  # Optional
        'test': ['pytest'],
    },

    # Bundled molecule classes and admissible coordinate systems
    package_data={  # Optional
        'libkovalevskaya.molecule': ['data/*.json', 'data/*/*.json'],
    },

    entry_points={  # Optional
        'console_scripts': [
            'libkovalevskaya=libkovalevskaya.cli:main',
        ],
    },
)
