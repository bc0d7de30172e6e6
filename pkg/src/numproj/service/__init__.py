"""HTTP service exposing the core library.

``create_app()`` builds the FastAPI application; the CLI mounts it
in-process by default, so the same code path serves both local commands
and a deployed server.
"""
from .app import app, create_app

__all__ = ["app", "create_app"]
