#! /usr/bin/env python
# -*- coding: UTF-8 -*-

import os
import re
import ast
import setuptools
from typing import Optional, List, Set
from setuptools.extension import Extension

version: str
_version_re: re.Pattern = re.compile(r'VERSION\s+=\s+(.*)')

extensions = [
    Extension(
        name='boxinterp.utils.linalg',
        sources=['boxinterp/utils/linalg.py']
    ),
    Extension(
        name='boxinterp.models.multi_poly',
        sources=['boxinterp/models/multi_poly.py']
    )
]

with open('boxinterp/version.py', 'rb') as f:
    match: Optional[re.Match] = _version_re.search(
        f.read().decode('utf-8'))
    if match:
        version = str(ast.literal_eval(match.group(1)))
    else:
        raise ImportError('Unable to import version from boxinterp.version')


def strip_comments(line: str) -> str:
    if line.startswith('-i '):
        return ''
    return line.split('#', 1)[0].strip()


def req(filename: str) -> List[str]:
    with open(os.path.join(os.getcwd(), filename)) as fp:
        requires: Set[str] = set([strip_comments(ln) for ln in fp.readlines()])
        requires -= set([''])
    return list(requires)


def ext_modules() -> List[Extension]:
    """Compile the hot modules only when BOXINTERP_BUILD_EXT=1"""
    if os.environ.get('BOXINTERP_BUILD_EXT') != '1':
        return []
    from Cython.Build import cythonize  # type: ignore
    return cythonize(
        extensions,
        compiler_directives={
            'language_level': '3',
            'profile': False,
            'linetrace': False
        }
    )


if __name__ == '__main__':
    setuptools.setup(
        name='box-interp',
        version=version,
        description=(
            'Exact box spline interpolation on the interior lattice points '
            'of zonotopes defined by totally unimodular lists.'
        ),
        packages=[
            'boxinterp', 'boxinterp/models',
            'boxinterp/parsers', 'boxinterp/processors',
            'boxinterp/utils'
        ],
        package_data={"boxinterp": ["py.typed", "data/*.json"]},
        install_requires=req('requirements.txt'),
        ext_modules=ext_modules(),
        entry_points={'console_scripts': [
            'boxinterp = boxinterp.entry:cli',
        ]},
        classifiers=[
            'Development Status :: 3 - Alpha',
            'Intended Audience :: Developers',
            'Intended Audience :: Science/Research',
            'License :: OSI Approved :: MIT License',
            'Operating System :: OS Independent',
            'Programming Language :: Python',
            'Programming Language :: Python :: 3.9',
            'Programming Language :: Python :: 3.10',
            'Programming Language :: Python :: 3.11',
            'Topic :: Scientific/Engineering :: Mathematics'],
        zip_safe=True)
