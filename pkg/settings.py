import os

from dotenv import load_dotenv


load_dotenv()

LOG_LEVEL = os.getenv('LOG_LEVEL', default='WARNING').upper()
LOG_DIR = os.getenv('LOG_DIR', default=None) or None
