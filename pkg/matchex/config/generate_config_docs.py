#!/usr/bin/env python

# Run as `python -m matchex.config.generate_config_docs` from the repository root to refresh the wiki page

from pathlib import Path
from typing import List

from .primary_configuration import primary_config_file

documentation_file = Path(".", "wiki", "pages", "Configuration.md")


def _options(options) -> str:
    if isinstance(options, list):
        return ", ".join(f"``{option}``" for option in options)
    return options


def configuration_markdown() -> str:
    """
    Render the master configuration as a markdown page: one table per section, one row per setting.
    """
    lines: List[str] = [
        "Settings are read from ``config.yml`` in the working directory, or from the file named by the "
        "``MATCHEX_CONFIG`` environment variable.",
        "- **Note**: The file is created with the default values below if it does not exist. Settings missing "
        "from an existing file take their default value.",
        ""
    ]

    for section in primary_config_file:
        lines += [f"## {section['section']}", "", section["description"], ""]
        lines += ["| Setting | Description | Options | Default |", "|:-:|:--|:-:|:-:|"]
        for parameter in section["parameters"]:
            lines.append(f"| ``{parameter['parameter']}`` | **{parameter['parameter_title']}**. "
                         f"{parameter['description']} | {_options(parameter['options'])} | "
                         f"``{parameter['default_value']}`` |")
        lines.append("")

    return "\n".join(lines)


def generate_configuration_documentation(destination: Path = documentation_file):
    with destination.open("w") as f:
        f.write(configuration_markdown())


if __name__ == "__main__":
    generate_configuration_documentation()
