# Numba is optional. QAITCHISON_NUMBA=0 forces the pure-numpy kernels.

import logging
import os

logger = logging.getLogger(__name__)

_FLAG = os.environ.get("QAITCHISON_NUMBA", "1").strip().lower()

try:
    import numba

    njit = numba.njit
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba ships in the test environment
    HAVE_NUMBA = False

    def njit(pyfunc=None, **kwargs):
        """Null decorator used when numba is unavailable."""

        def wrap(func):
            return func

        return wrap if pyfunc is None else wrap(pyfunc)


USE_NUMBA = HAVE_NUMBA and _FLAG not in ("0", "false", "no", "off")

if HAVE_NUMBA and not USE_NUMBA:
    logger.debug("numba disabled by QAITCHISON_NUMBA=%s", _FLAG)
