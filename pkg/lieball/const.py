"""Constants for the lieball analysis tool."""

TOOL_VERSION = "0.3.0"

DEFAULT_SEED = 0
DEFAULT_BUDGET = 64  # singular-element attempts before a verdict is withheld
DEFAULT_D = 3  # radicand of the real quadratic field Q(sqrt D)
DEFAULT_MAX_DIM = 256  # closure budget for bracket_closure

EXHAUSTIVE_MAX_DIM = 8
MAX_BATTERY_N = 8
SAMPLE_COUNT = 100

# numeric root guesses are snapped to fractions with at most this denominator
RATIONAL_GUESS_DENOMINATOR = 10_000

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_VERDICT_WITHHELD = 2
EXIT_BATTERY_FAILED = 3

# the so(1,2) < so(2,3) and so(3) < so(5) matrices use sqrt(3)
APPENDIX_D = 3
