from __future__ import annotations

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    # Exact oracle
    oracle_max_vertices: int = 20

    # Real-valued bound comparisons against integer cover sizes
    bound_tolerance: float = 1e-9

    # Randomised solvers and generators
    default_seed: int = 0
    max_sweep_seeds: int = 10000
    prng_name: str = "PCG64"  # numpy bit generator behind every permutation

    # Logging (stderr)
    log_level: str = "INFO"

    model_config = {"env_file": ".env", "env_file_encoding": "utf-8"}


settings = Settings()
