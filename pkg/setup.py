from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "srg216._kernels._core",
                ["src/srg216/_kernels/_core.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

# metadata duplicated from pyproject.toml so that older setuptools
# (without pyproject [project] support) still installs correctly
setup(
    name="srg216",
    version="0.1.0",
    python_requires=">=3.10",
    package_dir={"": "src"},
    packages=["srg216", "srg216._kernels"],
    install_requires=["numpy>=1.24"],
    entry_points={"console_scripts": ["srg216=srg216.cli:main"]},
    ext_modules=ext_modules,
)
