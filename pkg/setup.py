from pathlib import Path
from setuptools import find_packages, setup
from os import environ

cwd = Path(".")

README = (cwd / "README.md").read_text()
dependencies = (cwd / "requirements.txt").read_text().strip().split("\n")

# This should be set by the automated release workflow
VERSION = environ.get("SEMANTIC_VERSION", "0.1.0")

setup(
    name="matchex",
    version=VERSION,
    description="Exact, certificate-producing checks of matching extension properties and their binding-number and "
                "toughness conditions",
    long_description=README,
    long_description_content_type="text/markdown",
    packages=find_packages(include=["matchex", "matchex.*"]),
    package_data={"matchex": ["config/config.yml", "graphs/*", "graphs/ensembles/*"]},
    keywords="matching extendability factor-critical binding-number toughness graph-theory",
    include_package_data=True,
    install_requires=dependencies,
    entry_points={
        "console_scripts": [
            "matchex=matchex.__main__:run",
        ]
    },
)
