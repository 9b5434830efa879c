# setup.py

"""
对于包内测试，出现相对导入错误如
ModuleNotFoundError: No module named 'src.config'
在命令行中切换到当前目录(.../spectranorm)下运行
pip install -e .
来解决。
"""


from setuptools import setup, find_packages

setup(
    name="spectranorm",
    version="1.0.0",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    python_requires=">=3.9",
    install_requires=[
        "pydantic>=2.0",
        "pyyaml",
        "toml",
        "munch",
        "numpy",
        "sympy",
    ],
    extras_require={
        "tests": ["pytest", "hypothesis"],
    },
    entry_points={
        "console_scripts": [
            "spectranorm=src.cli.main:main",
        ],
    },
)
