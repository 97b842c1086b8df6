from ._gclm import *  # noqa: F401,F403
