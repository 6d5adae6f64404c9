# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.

from setuptools import find_packages, setup


def requirements(path="requirements.txt"):
    with open(path) as f:
        return [line.strip() for line in f
                if line.strip() and not line.startswith(("#", "-"))]


setup(
    name="order-ehrhart",
    version="0.1.0",
    description="Exact Ehrhart polynomials of order polytopes",
    license="MPL-2.0",
    package_dir={"": "src"},
    packages=find_packages("src"),
    package_data={"order_ehrhart": ["data/*.json"]},
    python_requires=">=3.8",
    install_requires=requirements(),
    extras_require={"test": ["pytest"]},
    entry_points={
        "console_scripts": ["order-ehrhart = order_ehrhart.cli:main"],
    },
)
