"""Define the run configuration shared by the cli and the commands."""

from __future__ import annotations

from pydantic import BaseModel, Field, field_validator

from tardos_distributions.common import names as N


# DOC: One cli invocation: which command runs, with which arguments, and where its artifact goes. Seed and jobs live here so every command sees the same reproducibility contract.

class RunConfig(BaseModel):
    """Validated cli invocation"""
    subcommand: str
    command_args: dict = Field(default_factory=dict)
    output: None | str = None
    format: None | str = None
    seed: int = N.DEFAULT_SEED
    jobs: int = 1
    log_level: None | str = None

    @field_validator("jobs")
    @classmethod
    def positive_jobs(cls, jobs: int) -> int:
        if jobs < 1:
            raise ValueError(f"jobs must be at least 1, got {jobs}")
        return jobs

    @field_validator("seed")
    @classmethod
    def non_negative_seed(cls, seed: int) -> int:
        if seed < 0:
            raise ValueError(f"seed must be non-negative, got {seed}")
        return seed

    def as_command_args(self) -> dict:
        return {
            **self.command_args,
            "output": self.output,
            "format": self.format,
            "seed": self.seed,
            "jobs": self.jobs,
        }
