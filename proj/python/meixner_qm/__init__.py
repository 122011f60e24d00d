"""Meixner-polynomial quantum mechanics for confined systems."""

import json

from ._core import *  # noqa: F401,F403
from ._core import verify_json as _verify_json


def verify(scenario, terms=0):
    """Run the invariant checks on a preset or scenario file; returns the parsed report."""
    return json.loads(_verify_json(scenario, terms))
