"""
Driver function for the Flask application. The app exposes the kernel's
checks as JSON endpoints; the same configuration drives the command line.
"""

__version__ = "0.1.0"

from typing import Mapping, Optional

from flask import Flask

from .config import load_config


def create_app(config: Optional[Mapping] = None) -> Flask:
    """
    The Flask application factory function.

    Params
    ------
    config: Mapping = None
        Overrides applied after the defaults and SYMKERNEL_* variables.
    """
    from .routes import bp

    app = Flask(__name__, instance_relative_config=True)
    app.url_map.strict_slashes = False
    app.config.update(load_config(config, app.root_path))
    app.register_blueprint(bp)

    return app
