from ._version import __version__
from .checks import certify
from .config import RunConfig
from .geometry import realize, realize_surface
from .main import main
from .models import CellSurface, EmbeddedMesh, EmbeddingCertificate, SurfaceReport
from .surface import analyze, validate_surface

__all__ = [
    "__version__",
    "CellSurface",
    "EmbeddedMesh",
    "EmbeddingCertificate",
    "RunConfig",
    "SurfaceReport",
    "analyze",
    "certify",
    "main",
    "realize",
    "realize_surface",
    "validate_surface",
]
