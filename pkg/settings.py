import logging
import os
from math import factorial
from dotenv import load_dotenv

load_dotenv()

''' BASIC CONFIG '''

SCHEMA = "tbl/1"

LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")

# Handlers write to stderr; stdout carries payloads only
logging.basicConfig(
    level=LOG_LEVEL,
    format="%(asctime)s - %(levelname)s - %(message)s",
)

logging.getLogger("matplotlib").setLevel(logging.WARNING)
logging.getLogger("numexpr").setLevel(logging.WARNING)

''' LIMITS '''

# Largest permutation image accepted when building a regular coset table
DEGREE_BOUND = int(os.getenv("DEGREE_BOUND", factorial(10)))

# Largest strand count the difference-complex audit will sweep
AUDIT_MAX_N = int(os.getenv("AUDIT_MAX_N", 6))

# Coefficient bound for the sum-multiplier search
RIGIDITY_BOUND = int(os.getenv("RIGIDITY_BOUND", 2))

SHOW_PROGRESS = os.getenv("SHOW_PROGRESS") == "True"

DEFAULT_SEED = 0

# Denominator used by the random torus point sampler
SAMPLE_DENOMINATOR = int(os.getenv("SAMPLE_DENOMINATOR", 12))
