from .convert import router as convert_router
from .operators import router as operators_router
from .groups import router as groups_router
from .demo import router as demo_router

__all__ = ["convert_router", "operators_router", "groups_router", "demo_router"]
