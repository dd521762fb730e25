# -*- coding: utf-8 -*-
from typing import Optional
from pydantic import Field
from pydantic_settings import BaseSettings
from dotenv import load_dotenv

load_dotenv()

class Config(BaseSettings):
    """
    Application settings loaded from environment variables.
    """

    # Environment settings
    environment: str = "development"  # development, staging, production
    log_level: str = "INFO"
    app_name: str = "twinv"
    host: str = "127.0.0.1"
    port: int = 8000

    # Security settings (unset: heavy routes are open)
    api_key: Optional[str] = None

    # Modular specialization
    seed: int = 1729
    prime: int = 2**61 - 1
    specialization_retries: int = 3

    # Rank caps per command
    istar_rank_cap: int = 8
    expressions_rank_cap: int = 7
    verify_rank_cap: int = 5
    slow_rank_cap: int = 6
    exact_rank_cap: int = 3
    psigma_rank_cap: int = 5
    rsk_rank_cap: int = 8

    # Execution
    jobs: int = 1
    hecke_cache: bool = False

    # Optional settings with defaults
    debug: Optional[bool] = False
    no_color_env: Optional[str] = Field(default=None, validation_alias="NO_COLOR")

    @property
    def no_color(self) -> bool:
        """True when NO_COLOR is set to any non-empty value."""
        return bool(self.no_color_env)

    @property
    def environment_prefix(self) -> str:
        """
        Maps the current environment to its corresponding route prefix.
        Development and staging use prefixed paths, while production uses root level.

        Returns:
            str: Environment-specific prefix:
                - "dev/" for development environment
                - "staging/" for staging environment
                - "" (empty string) for production environment

        Raises:
            ValueError: If the environment is not one of the three above.
        """
        env_prefixes = {
            "development": "dev/",
            "staging": "staging/",
            "production": ""
        }
        env_key = self.environment.lower()
        if env_key not in env_prefixes:
            raise ValueError(f"Unknown environment {self.environment!r}, expected one of {sorted(env_prefixes)}")
        return env_prefixes[env_key]

    @property
    def api_prefix(self) -> str:
        """
        Builds the versioned API prefix for the current environment.

        Returns:
            str: "/api/v1" in production, "/api/<env>/v1" elsewhere.
        """
        env = self.environment_prefix.rstrip('/')
        return f"/api/{env}/v1" if env else "/api/v1"

    def rank_caps(self) -> dict:
        """Returns the per-command rank caps keyed by command name."""
        return {
            "involutions": self.istar_rank_cap,
            "rho": self.istar_rank_cap,
            "expressions": self.expressions_rank_cap,
            "braid-graph": self.expressions_rank_cap,
            "verify-braid": self.slow_rank_cap,
            "psigma": self.psigma_rank_cap,
            "theta": self.verify_rank_cap,
            "verify": self.verify_rank_cap,
            "verify --slow": self.slow_rank_cap,
            "verify --exact": self.exact_rank_cap,
            "rsk": self.rsk_rank_cap,
        }

# Global settings instance
config = Config()
