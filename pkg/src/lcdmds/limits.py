"""Default enumeration caps, overridable through LCDMDS_CAP_* variables."""

import os

DEFAULT_FIELD_CAP = 1 << 16      # largest field order field_new accepts
DEFAULT_SUBSET_CAP = 10**6       # column subsets tested by an MDS check
DEFAULT_CODEWORD_CAP = 10**7     # codewords enumerated by a distance scan
DEFAULT_CANDIDATE_CAP = 10**8    # systematic generators in a full search
DEFAULT_SEARCH_BUDGET = 10**7    # Gram evaluations in the self-dual search

_ENV = {
    "subsets": ("LCDMDS_CAP_SUBSETS", DEFAULT_SUBSET_CAP),
    "codewords": ("LCDMDS_CAP_CODEWORDS", DEFAULT_CODEWORD_CAP),
    "candidates": ("LCDMDS_CAP_CANDIDATES", DEFAULT_CANDIDATE_CAP),
    "budget": ("LCDMDS_CAP_BUDGET", DEFAULT_SEARCH_BUDGET),
    "field": ("LCDMDS_CAP_FIELD", DEFAULT_FIELD_CAP),
}


def cap(name: str) -> int:
    var, default = _ENV[name]
    raw = os.environ.get(var)
    return int(raw) if raw else default
