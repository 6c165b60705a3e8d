"""Build the optional compiled kernel.

The extension is marked optional: without Cython or a C compiler the
package installs with the pure-Python kernel only.
"""

from setuptools import setup
from setuptools.extension import Extension

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("perimod._kernel", ["src/perimod/_kernel.pyx"], optional=True)],
        compiler_directives={"language_level": "3"},
        quiet=True,
    )

setup(ext_modules=ext_modules)
