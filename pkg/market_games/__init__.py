from . import cournot, hotelling, techcost, rdgame, cyclesim
from .cournot import CournotMethod
from .hotelling import PriceMethod
