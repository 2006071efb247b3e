"""
FILE: config.py
LAST MODIFIED: 17-10-2026
DESCRIPTION: default tolerances and size guards

Every constant here is a default. Operations take keyword arguments that
override them per call. The environment variable CUTPOLY_TOL replaces the
default SDP gap tolerance.

===============================================================================
This file is part of GIAS3.

This Source Code Form is subject to the terms of the Mozilla Public
License, v. 2.0. If a copy of the MPL was not distributed with this
file, You can obtain one at http://mozilla.org/MPL/2.0/.
===============================================================================
"""
import logging
import os

from gias3.cutpoly.errors import GuardError

log = logging.getLogger(__name__)
guard_log = logging.getLogger('gias3.cutpoly.guards')

TOL_ENV = 'CUTPOLY_TOL'

# enumeration and polyhedral guards
MAX_ENUM_NODES = 24
MAX_HULL_VERTICES = 5000
MAX_DD_DIM = 16
MAX_DD_INPUT = 64
MAX_CANONICAL_GROUP = 10 ** 7
MAX_ORBIT = 10 ** 6

# sdp
MAX_SDP_NODES = 64
SDP_GAP_TOL = 1e-7
SDP_FEAS_TOL = 1e-9
SDP_MAX_ITER = 200
SDP_STEP_FRACTION = 0.95
ACTIVE_SLACK_TOL = 1e-6
# diagonal shifts tried on the equilibrated normal equations
SDP_NORMAL_SHIFTS = (0.0, 1e-14, 1e-12, 1e-10)
# a broken-down iterate within this factor of the tolerances is accepted
SDP_STALL_FACTOR = 100.0

# membership and float checks
MEMBERSHIP_MARGIN = -1e-8
FLOAT_TOL = 1e-9
GRAM_NORM_TOL = 1e-9
GRAM_CLAMP_TOL = 1e-12
CUT_CONDITION_DENOMINATOR = 10 ** 12
SEPARATOR_DENOMINATOR = 10 ** 6


def _tol_from_env(default: float) -> float:
    raw = os.environ.get(TOL_ENV)
    if raw is None or raw.strip() == '':
        return default
    try:
        tol = float(raw)
    except ValueError:
        log.warning('ignoring %s=%r: not a number', TOL_ENV, raw)
        return default
    if not tol > 0:
        log.warning('ignoring %s=%r: not positive', TOL_ENV, raw)
        return default
    log.debug('sdp gap tolerance %g taken from %s', tol, TOL_ENV)
    return tol


SDP_GAP_TOL = _tol_from_env(SDP_GAP_TOL)


def guard(name: str, value: int, limit: int, force: bool = False, hint: str = 'force') -> None:
    """Refuse a computation whose size exceeds limit, unless forced.

    Forced overrides are logged at WARNING on the gias3.cutpoly.guards
    logger, which the CLI echoes into its provenance header.
    """
    if value <= limit:
        return
    message = '{} guard: {} exceeds limit {}'.format(name, value, limit)
    if force:
        guard_log.warning('%s (overridden)', message)
        return
    raise GuardError('{}; too large to run by default, rerun with {} to override'.format(message, hint),
                     name, value, limit)
