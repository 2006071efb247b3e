"""
FILE: errors.py
LAST MODIFIED: 17-10-2026
DESCRIPTION: exception hierarchy shared by the cutpoly modules

===============================================================================
This file is part of GIAS3.

This Source Code Form is subject to the terms of the Mozilla Public
License, v. 2.0. If a copy of the MPL was not distributed with this
file, You can obtain one at http://mozilla.org/MPL/2.0/.
===============================================================================
"""
from typing import List, Optional, Sequence, Tuple


class CutpolyError(Exception):
    pass


class ValidationError(CutpolyError, ValueError):
    """Input that is malformed, mismatched or outside an operation's domain."""
    pass


class NonEdgeError(ValidationError):
    pass


class SignalingError(ValidationError):
    """A behavior whose marginals depend on the partner's setting."""

    def __init__(self, message: str, party: str, settings: Tuple[int, int, int]):
        super(SignalingError, self).__init__(message)
        self.party = party
        self.settings = settings


class DegenerateInputError(ValidationError):
    """A V-representation that does not span its ambient space.

    `equations` lists the affine hull as (coefficients, rhs) pairs.
    """

    def __init__(self, message: str, equations: Sequence):
        super(DegenerateInputError, self).__init__(message)
        self.equations: List = list(equations)


class UnboundedError(ValidationError):
    pass


class NumericalDegeneracyError(ValidationError):
    pass


class GuardError(CutpolyError, RuntimeError):
    """A size guard refused to run. Pass force=True to override."""

    def __init__(self, message: str, name: str, value: int, limit: int):
        super(GuardError, self).__init__(message)
        self.name = name
        self.value = value
        self.limit = limit


class SolverError(CutpolyError, RuntimeError):
    """The interior point method stopped before meeting its tolerances.

    `bracket` holds the (primal, dual) objective values of the last iterate.
    """

    def __init__(self, message: str, bracket: Tuple[float, float], iterations: int,
                 residuals: Optional[Tuple[float, float, float]] = None):
        super(SolverError, self).__init__(message)
        self.bracket = bracket
        self.iterations = iterations
        self.residuals = residuals
