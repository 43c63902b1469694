import datetime
import logging
import os
import sys
from typing import Optional


base_message_format = "%(levelname)s|%(asctime)s|%(processName)s|%(name)s|> %(message)s"

_HANDLER_TAG = '_duopoly_handler'


class StderrHandler(logging.StreamHandler):
    """Looks up sys.stderr for every record, so a swapped stderr is honoured"""

    def __init__(self):
        super().__init__(sys.stderr)

    @property
    def stream(self):
        return sys.stderr

    @stream.setter
    def stream(self, value):
        pass


def _tag(handler: logging.Handler) -> logging.Handler:
    setattr(handler, _HANDLER_TAG, True)
    return handler


def setup_loggers(level: str = 'WARNING', log_dir: Optional[str] = None) -> logging.Logger:
    """Configure the root logger once. Repeated calls only update the level.
    Records go to stderr so stdout stays reserved for rendered results"""
    root = logging.getLogger()
    root.setLevel(level)

    if any(getattr(h, _HANDLER_TAG, False) for h in root.handlers):
        return root

    formatter = logging.Formatter(base_message_format)

    sh = _tag(StderrHandler())
    sh.setFormatter(formatter)
    root.addHandler(sh)

    if log_dir:
        os.makedirs(log_dir, exist_ok=True)
        current_time = datetime.datetime.now().strftime('%d-%m-%Y_%H:%M:%S')

        fh = _tag(logging.FileHandler(os.path.join(log_dir, f'duopoly_{current_time}.log'), mode='a'))
        fh.setFormatter(formatter)
        root.addHandler(fh)

    return root
