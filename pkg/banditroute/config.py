import logging

# The default base seed used when no seed is provided on the command line
SEED = 1337

# The default encoding format to use in reading/writing to file.
ENCODING = "utf-8"

# Confidence radius assigned to unvisited edges; finite so that optimistic estimates stay ordinary floats
MAX_RADIUS = 1e9

# Default experiment protocol: 100 independent runs of 300 episodes each
DEFAULT_RUNS = 100
DEFAULT_EPISODES = 300

# Convergence threshold for the synchronous value-iteration sweeps
DEFAULT_THETA = 1e-3

# UCB exploration coefficient `c` in sqrt(c * log N(s) / n(e))
DEFAULT_EXPLORATION_COEFFICIENT = 2.0

# Constant exploration probability of the epsilon-greedy learner (no decay)
DEFAULT_EPSILON = 0.1

# Episodes are truncated after `L_MAX_FACTOR * |V|` steps unless a cap is given explicitly
L_MAX_FACTOR = 10

# Maximum number of synchronous sweeps before value iteration is declared non-convergent
VI_MAX_SWEEPS = 10_000

# Number of repair passes the network generator may attempt before giving up
GENERATION_ATTEMPTS = 100

# Default maximum number of simple paths the brute-force enumerator will produce
MAX_ENUMERATED_PATHS = 10_000

# Pen widths used when exporting sampled networks to DOT
PENWIDTH_MIN = 1.0
PENWIDTH_MAX = 8.0

# Number of decimals written for every float in CSV outputs
FLOAT_DECIMALS = 6

# Set the log settings
logging_level = logging.CRITICAL
logging.basicConfig(format="%(asctime)s - %(message)s", level=logging_level)
