from .engine import GradualEngine
from .errors import GradualError

__all__ = ["GradualEngine", "GradualError"]
