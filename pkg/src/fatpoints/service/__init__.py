"""HTTP service exposing the fat point engine."""

from .app import create_app

__all__ = ["create_app"]
