from pathlib import Path
from typing import List, Tuple

from pydantic import ValidationError

from errors import InvalidGameError
from models import BimatrixGame


def _content_lines(text: str) -> List[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.split('#', 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def _to_pair(token: str, line_no: int) -> Tuple[float, float]:
    parts = token.split(',')
    if len(parts) != 2:
        raise InvalidGameError(f'payoff line {line_no}: expected "row,col" pairs, got {token!r}')
    try:
        return float(parts[0]), float(parts[1])
    except ValueError as e:
        raise InvalidGameError(f'payoff line {line_no}: {token!r} is not numeric') from e


def parse_game(text: str) -> BimatrixGame:
    """Line 1: row labels, line 2: column labels, then one line of "r,c" payoff pairs per row.
    Blank lines and everything after '#' are ignored"""
    lines = _content_lines(text)
    if len(lines) < 3:
        raise InvalidGameError('a game needs row labels, column labels and at least one payoff line')

    row_labels, col_labels, *payoff_lines = lines
    payoffs = [[_to_pair(token, idx + 1) for token in line.split()] for idx, line in enumerate(payoff_lines)]

    try:
        return BimatrixGame(row_strategies=row_labels.split(), col_strategies=col_labels.split(), payoffs=payoffs)
    except ValidationError as e:
        raise InvalidGameError(f'invalid game: {e}') from e


def load_game(path: str | Path) -> BimatrixGame:
    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as e:
        raise InvalidGameError(f"can't read game file {path}: {e}") from e

    return parse_game(text)

