from dataclasses import dataclass


@dataclass(frozen=True)
class Settings:
    tol: float = 1e-9
    max_iter: int = 10_000
    max_basis: int = 12      # brute-force subring enumeration bound
    max_group_order: int = 24
    seed: int | None = None


DEFAULT = Settings()
