from ._eurhythm import *  # noqa: F401,F403
from ._eurhythm import __doc__  # noqa: F401
