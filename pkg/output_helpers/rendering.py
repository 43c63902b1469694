import json
from pathlib import Path
from typing import Any, Dict, List, Optional

import click
import pandas as pd
from tabulate import tabulate

from utils import CaseInsensitiveEnum, round_floats, SIGNIFICANT_DIGITS


FLOAT_FORMAT = f'%.{SIGNIFICANT_DIGITS}g'


class OutputFormat(CaseInsensitiveEnum):
    json = "json"
    csv = "csv"
    table = "table"


def to_frame(rows: List[Dict[str, Any]], columns: List[str]) -> pd.DataFrame:
    if not rows:
        return pd.DataFrame(columns=columns)
    return pd.DataFrame(round_floats(rows))[columns]


def to_json(document: Dict[str, Any]) -> str:
    return json.dumps(round_floats(document), sort_keys=True, indent=2) + '\n'


def to_csv(rows: List[Dict[str, Any]], columns: List[str]) -> str:
    return to_frame(rows, columns).to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator='\n')


def to_table(rows: List[Dict[str, Any]], columns: List[str]) -> str:
    frame = to_frame(rows, columns)
    return tabulate(frame, headers='keys', tablefmt='psql', showindex=False, floatfmt=f'.{SIGNIFICANT_DIGITS}g') + '\n'


class OutputEnvelope:
    """One rendered result: a JSON document, or rows in a fixed column order for csv/table"""

    def __init__(self, fmt: OutputFormat | str = OutputFormat.json, destination: Optional[str] = None):
        self.format = OutputFormat(fmt)
        self.destination = destination
        self.payload: str = ''

    def render(self, document: Dict[str, Any], rows: List[Dict[str, Any]], columns: List[str]) -> str:
        if self.format == OutputFormat.json:
            self.payload = to_json(document)
        elif self.format == OutputFormat.csv:
            self.payload = to_csv(rows, columns)
        else:
            self.payload = to_table(rows, columns)
        return self.payload

    def emit(self) -> None:
        if self.destination:
            Path(self.destination).write_text(self.payload, encoding='utf-8')
        else:
            click.echo(self.payload, nl=False)
