# For running tests: python -m unittest discover -s tests
# For running the long acceptance experiments too: BANDITROUTE_SLOW=1 python -m unittest discover -s tests
# For building: python setup.py sdist bdist_wheel
# For formatting: autoflake --remove-all-unused-imports -r -i . | isort . | black --preview --line-length 120 .


import unittest

from setuptools import find_packages, setup

dependencies = [
    "networkx>=3.1",
    "numba>=0.58.1",
    "numpy>=1.26.2",
    "typing_extensions>=4.8.0",
]

description = (
    "BanditRoute: online expected-shortest-path learning on road networks with stochastic travel times. Implements "
    "RTDP with UCB exploration, greedy, epsilon-greedy and value-iteration baselines, an exact oracle, and a seeded "
    "benchmark harness with CSV outputs."
)

with open("README.md", "r") as fs:
    long_description = fs.read()


def run_tests():
    test_loader = unittest.TestLoader()
    test_suite = test_loader.discover("tests", pattern="test_*.py")
    return test_suite


version = "0.1.0"
setup(
    author="BanditRoute Developers",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Environment :: Console",
        "Intended Audience :: Developers",
        "Intended Audience :: Science/Research",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Artificial Intelligence",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Utilities",
    ],
    description=description,
    entry_points={"console_scripts": ["banditroute=banditroute.cli:run"]},
    install_requires=dependencies,
    keywords=[
        "stochastic shortest path",
        "reinforcement learning",
        "rtdp",
        "ucb",
        "multi-armed bandit",
        "regret",
        "value iteration",
        "route planning",
        "benchmark",
    ],
    long_description=long_description,
    long_description_content_type="text/markdown",
    name="BanditRoute",
    packages=find_packages(exclude=["tests", "examples", "examples.*"]),
    package_data={"banditroute.resources": ["*.json"]},
    python_requires=">=3.9",
    test_suite="setup.run_tests",
    version=version,
)
