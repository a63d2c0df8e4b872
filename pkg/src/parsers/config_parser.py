import re
from pathlib import Path
from typing import Dict, Union
from src.exceptions import ConfigError

class ConfigFileParser:
    """Flat key=value files; '#' starts a comment, keys are normalised to snake_case"""

    def __init__(self):
        self.line_pattern = re.compile(r'^\s*([A-Za-z][A-Za-z0-9_\-]*)\s*=\s*(.*?)\s*$')

    def parse(self, path: Union[str, Path]) -> Dict[str, str]:
        path = Path(path)
        if not path.exists():
            raise ConfigError(f"Config file not found: {path}")

        values = {}
        for line_number, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue

            match = self.line_pattern.match(line)
            if not match:
                raise ConfigError(f"{path.name}:{line_number}: expected key=value, got '{raw.strip()}'")

            key = match.group(1).replace("-", "_").lower()
            if key in values:
                raise ConfigError(f"{path.name}:{line_number}: duplicate key '{key}'")
            values[key] = match.group(2)
        return values

def parse_config_file(path: Union[str, Path]) -> Dict[str, str]:
    return ConfigFileParser().parse(path)
