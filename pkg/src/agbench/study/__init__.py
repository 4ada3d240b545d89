from .store import BLOCK_ORDER, StudyStore
from .service import create_app

__all__ = ["StudyStore", "BLOCK_ORDER", "create_app"]
