import os
import sys
from functools import lru_cache
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


def _env_bool(name: str, default: str) -> bool:
    return os.getenv(name, default).lower() == "true"


class Config:
    """Configuration management for the cyclorient library, CLI and tool server"""

    # Package settings
    VERSION = "1.0.0"
    SERVER_NAME = "cyclorient"
    JSON_SCHEMA = "cyclorient/1"

    def __init__(self):
        # Logging
        self.LOG_LEVEL = os.getenv("CYCLORIENT_LOG_LEVEL", "INFO")
        self.LOG_FORMAT = os.getenv("CYCLORIENT_LOG_FORMAT", "json")

        # Parsing
        self.STRICT_EDGES = _env_bool("CYCLORIENT_STRICT_EDGES", "true")

        # Oracle size caps (both searches are exponential)
        self.CHORDLESS_CAP = int(os.getenv("CYCLORIENT_CHORDLESS_CAP", "16"))
        self.BRUTE_FORCE_EDGE_CAP = int(os.getenv("CYCLORIENT_BRUTE_FORCE_EDGE_CAP", "20"))

        # Generators and benchmark
        self.MAX_CYCLE_LEN = int(os.getenv("CYCLORIENT_MAX_CYCLE_LEN", "6"))
        self.BENCH_RUNS = int(os.getenv("CYCLORIENT_BENCH_RUNS", "5"))
        self.BENCH_NAIVE_MAX_N = int(os.getenv("CYCLORIENT_BENCH_NAIVE_MAX_N", "8000"))

        # Debug output
        if _env_bool("DEBUG_CYCLORIENT", "false"):
            print(f"Log level: {self.LOG_LEVEL} ({self.LOG_FORMAT})", file=sys.stderr)
            print(f"Oracle caps: {self.CHORDLESS_CAP} vertices, "
                  f"{self.BRUTE_FORCE_EDGE_CAP} edges", file=sys.stderr)

        if self.BENCH_RUNS < 1:
            print(f"Warning: CYCLORIENT_BENCH_RUNS={self.BENCH_RUNS} is invalid, using 1",
                  file=sys.stderr)
            self.BENCH_RUNS = 1


@lru_cache(maxsize=1)
def get_config() -> Config:
    """Shared configuration instance, read once per process"""
    return Config()
