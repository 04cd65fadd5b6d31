import json
import logging

from .constants import CONFIG_PATH

__all__ = ["Settings", "settings"]

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class Settings:
    """
    A singleton for all the settings that can be saved and loaded from the disk.

    Every attribute that is set in the __init__ will be saved and restored with :load: and :save:.
    Command line flags override them for one run, but are never written back.
    """

    _instance = None
    PATH = CONFIG_PATH

    def __new__(cls):
        if cls._instance:
            return cls._instance

        # first call: build the shared instance
        self = super(Settings, cls).__new__(cls)
        cls._instance = self
        # defaults, then whatever the config file overrides
        cls.__init__(self)
        self.load()
        # __init__ runs after every __new__, so later Settings() calls must not
        # touch the loaded values. The defaults move to reset instead.
        cls.reset = cls.__init__
        cls.__init__ = lambda self: None

        return self

    def __init__(self):
        self.jobs = 1
        self.seed = 0
        self.log_level = "WARNING"
        self.check_invariants = True
        self.trace_indent = 2
        self.oracle_cap = 4

    def load(self, path=None):
        """(re)load the settings from the file. Called automatically on the first instance of Settings."""

        path = path or self.PATH
        if path.exists():
            self.__dict__.update(json.loads(path.read_text()))
        self.validate()

    def save(self, path=None):
        """Save the settings to its file. This is not called automatically."""

        (path or self.PATH).write_text(json.dumps(self.__dict__, indent=2))

    def validate(self):
        if not isinstance(self.jobs, int) or self.jobs < 1:
            raise ValueError(f"jobs must be a positive integer, got {self.jobs!r}")
        if not isinstance(self.seed, int):
            raise ValueError(f"seed must be an integer, got {self.seed!r}")
        if str(self.log_level).upper() not in LOG_LEVELS:
            raise ValueError(f"log_level must be one of {LOG_LEVELS}, got {self.log_level!r}")
        if not isinstance(self.oracle_cap, int) or self.oracle_cap < 0:
            raise ValueError(f"oracle_cap must be a nonnegative integer, got {self.oracle_cap!r}")

    @property
    def logging_level(self) -> int:
        return getattr(logging, str(self.log_level).upper())

    def reset(self):
        """Reset the settings."""

        # Replaced by the original __init__ once the instance exists.


settings = Settings()
