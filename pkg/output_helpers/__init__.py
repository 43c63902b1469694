from .columns import COURNOT_COLUMNS, PRICES_COLUMNS, OUTCOME_COLUMNS, SWEEP_COLUMNS, COST_COLUMNS, \
    RDGAME_COLUMNS, TRAJECTORY_COLUMNS
from .rendering import OutputEnvelope, OutputFormat, to_json, to_csv, to_table, to_frame
