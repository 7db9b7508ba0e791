"""
This module contains the application factory for creating the supercount app,
registering its extensions, and defines a version for the application.
"""
import logging
import sys
import typing as t

from .config import Config
from .extensions import redis_client, rq_queue
from .quadratic import SqrtStrategy, strategy_from_name

__version__ = "0.1.0"


class SuperCountApp:
    """Configuration and logger shared by the commands of one invocation.

    Args:
        config (:obj:`~supercount.config.Config`): The loaded configuration.
    """

    def __init__(self, config: Config) -> None:
        self.config = config
        self.logger = logging.getLogger("supercount")

    @property
    def env(self) -> str:
        return self.config.CONFIG_TYPE

    def strategy(self, seed: t.Optional[int] = None) -> SqrtStrategy:
        """The configured square root strategy.

        Args:
            seed (:obj:`int`, optional): Overrides ``SUPERCOUNT_SEED``.

        Returns:
            :obj:`~supercount.quadratic.SqrtStrategy`: The strategy.
        """
        return strategy_from_name(
            self.config.SQRT_STRATEGY, self.config.SEED if seed is None else seed
        )


def create_app(
    config_type: t.Literal["production", "development", "testing"] = "production"
) -> SuperCountApp:
    """Application Factory for a supercount instance.

    Args:
        config_type (:obj:`str`): The configuration to use, which controls what
            environment variables to load into the app's config.

    Returns:
        :obj:`SuperCountApp`: The app.
    """
    app = SuperCountApp(Config(config_type))
    register_logging(app)
    register_extensions(app)
    return app


def register_logging(app: SuperCountApp) -> None:
    """Sends the supercount loggers to stderr at the configured level.

    Args:
        app (:obj:`SuperCountApp`): The supercount app.
    """
    app.logger.setLevel(app.config.LOG_LEVEL)
    if not any(
        isinstance(handler, logging.StreamHandler) for handler in app.logger.handlers
    ):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(
            logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s")
        )
        app.logger.addHandler(handler)


def register_extensions(app: SuperCountApp) -> None:
    """Configures Redis and RQ for a supercount app.

    Without ``REDIS_URL``, or in testing, the queue runs jobs in-process.

    Args:
        app (:obj:`SuperCountApp`): The supercount app.
    """
    test_mode = app.config.CONFIG_TYPE == "testing"
    redis_client.init_redis(app.config.REDIS_URL, test_mode)
    rq_queue.init_queue(
        redis_client.client, synchronous=test_mode or not app.config.REDIS_URL
    )
