from .base import SynthesisResult, edges_even, live_groups
from .buchi import buchi_template
from .cobuchi import cobuchi_template
from .manager import synthesize
from .parity import det_parity_template, parity_template, parity_winning_set, reduce, zielonka_solve
from .reachability import reachability_template
from .safety import safety_template
