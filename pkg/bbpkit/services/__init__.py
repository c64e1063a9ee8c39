from .bbp_service import BBPService

__all__ = [
    "BBPService",
]
