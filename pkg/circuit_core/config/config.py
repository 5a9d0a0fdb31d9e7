"""
Circuit Core - Configuration
Simple configuration file for solver defaults, oracle limits, benchmarks and storage
"""

# ============================================================================
# SOLVER DEFAULTS
# ============================================================================

SOLVER = {
    'greedy': {},
    'lp': {
        'repetitions': 8,           # Independent roundings of the best profile
        'max_pricing_rounds': 1000,  # Column generation guard per LP solve
        'exhaustive_max_side': 5,   # Largest side for the enumerate-all-matchings LP
    },
    'hybrid': {
        'default_epsilon': '1/5',
    },
}

# ============================================================================
# ORACLE SIZE GUARDS
# ============================================================================

ORACLE_LIMITS = {
    'max_cells': 9,                 # senders * receivers
    'max_window': 12,
    'online_max_horizon': 4,
    'online_max_edges_per_step': 3,
    'online_max_side': 3,
}

# ============================================================================
# ONLINE SIMULATION
# ============================================================================

ONLINE = {
    'default_k': 4,
    'default_delta': 1,
}

# ============================================================================
# BENCHMARK HARNESS
# ============================================================================

BENCHMARK = {
    'workers': 1,
    'schema_version': 1,
    'csv_columns': [
        'index',
        'instance_hash',
        'generator',
        'algorithm',
        'throughput',
        'oracle_throughput',
        'ratio',
    ],
    'timing_column': 'wall_ms',
}

# ============================================================================
# RESULTS DATABASE
# ============================================================================

DATABASE = {
    'url': 'sqlite:///circuit_core.db',
    'echo': False,
}

# ============================================================================
# LOGGING
# ============================================================================

LOGGING = {
    'level': 'INFO',
    'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
}

# ============================================================================
# HELPER FUNCTIONS
# ============================================================================

def get_solver_config(solver_name):
    """
    Get default parameters for a solver

    Args:
        solver_name: Name of solver (e.g., 'lp', 'hybrid')

    Returns:
        dict: Solver defaults (empty if the solver has none)
    """
    return dict(SOLVER.get(solver_name, {}))


def get_oracle_limit(limit_name):
    """
    Get an oracle size guard

    Args:
        limit_name: Key of ORACLE_LIMITS

    Returns:
        int: The limit
    """
    return ORACLE_LIMITS[limit_name]


def get_database_url():
    """Get the default results database URL"""
    return DATABASE['url']


def get_logging_config():
    """Get logging level and format"""
    return LOGGING.copy()
