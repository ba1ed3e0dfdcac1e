from ._core import *  # noqa: F401,F403
from ._core import Error, ParseError, UnsupportedRegimeError, UnsupportedSpecError, __doc__  # noqa: F401
