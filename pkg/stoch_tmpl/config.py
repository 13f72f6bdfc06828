import os
from fractions import Fraction
from dotenv import load_dotenv

load_dotenv()

# --- LOGGING ---
LOG_LEVEL = os.getenv("STOCH_TMPL_LOG_LEVEL", "WARNING")

# --- ORACLE ---
# Brute force only makes sense at desk scale
ORACLE_MAX_VERTICES = int(os.getenv("ORACLE_MAX_VERTICES", "7"))
ORACLE_PROFILE_BUDGET = int(os.getenv("ORACLE_PROFILE_BUDGET", "1000000"))
ORACLE_WORKERS = int(os.getenv("ORACLE_WORKERS", "4"))

# --- LASSOS ---
LASSO_BUDGET = int(os.getenv("LASSO_BUDGET", "2000000"))
LASSO_BOUND_FACTOR = int(os.getenv("LASSO_BOUND_FACTOR", "2"))

# --- EXTRACTION ---
DEFAULT_ALPHA = Fraction(os.getenv("DEFAULT_ALPHA", "1/2"))
DEFAULT_BETA = Fraction(os.getenv("DEFAULT_BETA", "2"))
DEFAULT_SEED = int(os.getenv("DEFAULT_SEED", "0"))

# --- MONTE CARLO ---
MC_WORKERS = int(os.getenv("MC_WORKERS", "4"))
MC_DEFAULT_RUNS = int(os.getenv("MC_DEFAULT_RUNS", "1000"))
MC_HORIZON_FACTOR = int(os.getenv("MC_HORIZON_FACTOR", "10"))
