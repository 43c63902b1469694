from .game_file import parse_game, load_game
from .config_file import parse_config, load_config
