"""
Configuration of supercount, based on .env.* files, which are then injected
into the app's config.
"""
# pylint: disable=invalid-name,too-few-public-methods,too-many-instance-attributes
import logging
import os
import typing as t

from dotenv import load_dotenv

#: Hard defaults for the work caps, keyed by their name in ``SUPERCOUNT_CAPS``.
DEFAULT_CAPS: t.Dict[str, int] = {
    "direct": 10 ** 6,
    "oracle": 10 ** 6,
    "power": 10 ** 7,
    "jacobian": 300,
    "cubic": 50,
    "batch": 10 ** 6,
}
DEFAULT_MATERIALIZE_LIMIT = 10 ** 4


def parse_caps(caps: t.Optional[str]) -> t.Dict[str, int]:
    """Parses a ``key=int(,key=int)*`` caps string on top of :obj:`DEFAULT_CAPS`.

    Args:
        caps (:obj:`str`, optional): The caps string, e.g. ``"direct=5000,oracle=100"``.

    Raises:
        :obj:`ValueError`: If an entry is malformed, names an unknown cap, or is not
            a positive integer.

    Returns:
        :obj:`dict`: Every cap name mapped to its value.
    """
    parsed = dict(DEFAULT_CAPS)
    if not caps:
        return parsed
    for entry in caps.split(","):
        entry = entry.strip()
        if not entry:
            continue
        key, sep, value = entry.partition("=")
        key = key.strip().lower()
        if not sep or key not in DEFAULT_CAPS:
            raise ValueError(
                f"SUPERCOUNT_CAPS entry {entry!r} must be one of "
                f"{', '.join(sorted(DEFAULT_CAPS))} followed by =<int>"
            )
        try:
            parsed[key] = int(value)
        except ValueError as error:
            raise ValueError(f"SUPERCOUNT_CAPS value for {key} is not an integer") from error
        if parsed[key] <= 0:
            raise ValueError(f"SUPERCOUNT_CAPS value for {key} must be positive")
    return parsed


class Config:
    """Object containing config values for a supercount app.

    Args:
        config_type (:obj:`str`, optional): Determines which environment variable
            file to load. Can be "production" which reads ".env.production",
            "development" which reads ".env.development", or "testing" which reads
            ".env.testing". Defaults to "development".

    Raises:
        :obj:`ValueError`: If ``SUPERCOUNT_CAPS`` is malformed.
        :obj:`ValueError`: If ``SUPERCOUNT_MATERIALIZE_LIMIT`` is not a positive
            integer.
        :obj:`ValueError`: If ``SUPERCOUNT_SQRT_STRATEGY`` is not sequential or
            probabilistic.
        :obj:`ValueError`: If ``SUPERCOUNT_LOG_LEVEL`` is not a logging level name.
    """

    def __init__(
        self,
        config_type: t.Literal["production", "development", "testing"] = "development",
    ) -> None:
        # Load the environment variables from .env.* file
        self.CONFIG_TYPE = config_type.lower()
        if self.CONFIG_TYPE == "production":
            load_dotenv(".env.production", override=True)
        elif self.CONFIG_TYPE == "development":
            load_dotenv(".env.development", override=True)
        elif self.CONFIG_TYPE == "testing":
            load_dotenv(".env.testing", override=True)

        # Work caps
        caps = parse_caps(os.environ.get("SUPERCOUNT_CAPS"))
        self.DIRECT_CAP = caps["direct"]
        self.ORACLE_CAP = caps["oracle"]
        self.POWER_CAP = caps["power"]
        self.JACOBIAN_ORACLE_CAP = caps["jacobian"]
        self.CUBIC_ORACLE_CAP = caps["cubic"]
        self.BATCH_CAP = caps["batch"]

        # Candidate lists
        try:
            self.MATERIALIZE_LIMIT = int(
                os.environ.get(
                    "SUPERCOUNT_MATERIALIZE_LIMIT", DEFAULT_MATERIALIZE_LIMIT
                )
            )
        except ValueError as error:
            raise ValueError("SUPERCOUNT_MATERIALIZE_LIMIT must be an integer") from error
        if self.MATERIALIZE_LIMIT <= 0:
            raise ValueError("SUPERCOUNT_MATERIALIZE_LIMIT must be positive")

        # Square roots
        self.SQRT_STRATEGY = os.environ.get(
            "SUPERCOUNT_SQRT_STRATEGY", "sequential"
        ).lower()
        if self.SQRT_STRATEGY not in ("sequential", "probabilistic"):
            raise ValueError(
                "SUPERCOUNT_SQRT_STRATEGY must be sequential or probabilistic"
            )
        try:
            self.SEED = int(os.environ.get("SUPERCOUNT_SEED", 0))
        except ValueError as error:
            raise ValueError("SUPERCOUNT_SEED must be an integer") from error

        # Redis Configuration
        self.REDIS_URL: t.Optional[str] = os.environ.get("REDIS_URL") or None

        # Logging
        self.LOG_LEVEL = os.environ.get("SUPERCOUNT_LOG_LEVEL", "WARNING").upper()
        if not isinstance(logging.getLevelName(self.LOG_LEVEL), int):
            raise ValueError(f"SUPERCOUNT_LOG_LEVEL {self.LOG_LEVEL} is not a level")
