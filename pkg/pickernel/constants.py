import os
from pathlib import Path

__all__ = [
    "PROBLEMS",
    "PIC",
    "BCC",
    "BCD",
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_REJECTED",
    "EXIT_VERIFY_FAILED",
    "RULE_CC",
    "RULE_TWINS",
    "RULE_SUNFLOWER",
    "RULE_KJOIN",
    "RULE_1BRANCH",
    "RULE_REJECT_HOLE",
    "RULE_REJECT_2BRANCH",
    "RULE_2BRANCH",
    "RULE_SUNFLOWER_BCC",
    "RULE_SIMPLE_KJOIN",
    "DENSE_LIMIT",
    "CONFIG_ENV",
    "CONFIG_PATH",
    "GENERATOR_MODELS",
]

# Problem tags
PIC = "pic"
BCC = "bcc"
BCD = "bcd"
PROBLEMS = (PIC, BCC, BCD)

# Exit codes of the command line
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_REJECTED = 2
EXIT_VERIFY_FAILED = 3

# Rule ids, as they appear in the traces
RULE_CC = 1
RULE_TWINS = 2
RULE_SUNFLOWER = 3
RULE_KJOIN = 4
RULE_1BRANCH = 5
RULE_2BRANCH = 6
RULE_SUNFLOWER_BCC = 7
RULE_SIMPLE_KJOIN = 8
# Rejection checks are not numbered rules, they share the id of the rule they guard.
RULE_REJECT_HOLE = "6-hole"
RULE_REJECT_2BRANCH = "6-reject"

# Above this many vertices the dense numpy view is not built.
DENSE_LIMIT = 64

CONFIG_ENV = "PICKERNEL_CONFIG"
CONFIG_PATH = Path(os.environ.get(CONFIG_ENV, "pickernel.json"))

GENERATOR_MODELS = ("gnp", "planted-pic", "planted-bcc", "path", "cycle", "star")
