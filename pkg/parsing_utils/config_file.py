import logging
from pathlib import Path
from typing import Any, Dict

import yaml
from pydantic import ValidationError

from errors import ConfigError, InvalidGameError
from models import CycleConfig
from .game_file import load_game


logger = logging.getLogger(__name__)


def parse_config(data: Dict[str, Any], base_dir: Path = Path('.')) -> CycleConfig:
    """`rd_game_file` is resolved against `base_dir` and replaced by the parsed game"""
    if not isinstance(data, dict):
        raise ConfigError(f'config must be a mapping, got {type(data).__name__}')

    data = dict(data)
    if 'rd_game_file' in data:
        if 'rd_game' in data:
            raise ConfigError('set either rd_game or rd_game_file, not both')

        game_path = base_dir / data.pop('rd_game_file')
        try:
            data['rd_game'] = load_game(game_path)
        except InvalidGameError as e:
            raise ConfigError(str(e)) from e

    try:
        return CycleConfig.model_validate(data)
    except ValidationError as e:
        raise ConfigError(f'invalid simulation config: {e}') from e


def load_config(path: str | Path) -> CycleConfig:
    path = Path(path)
    try:
        data = yaml.safe_load(path.read_text(encoding='utf-8'))
    except (OSError, yaml.YAMLError) as e:
        raise ConfigError(f"can't read config {path}: {e}") from e

    logger.info(f'config loaded from {path}')
    return parse_config(data, base_dir=path.parent)
