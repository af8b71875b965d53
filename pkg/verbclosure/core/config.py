from pydantic import BaseModel
from pydantic_settings import BaseSettings, SettingsConfigDict


class BoundsProfile(BaseModel):
    """Ball and sample sizes used by one selfcheck profile."""
    word_maxlen: int = 4
    g_lmax: int = 1
    g_kmax: int = 1
    k_lmax: int = 3
    k_kmax: int = 3
    oracle_lmax: int = 4
    oracle_kmax: int = 8
    squares_lmax: int = 6
    squares_kmax: int = 6
    sqrt_bound: int = 20
    involution_bound: int = 10
    injectivity_bound: int = 5
    commutator_bound: int = 10
    dihedral_kmax: int = 5
    random_samples: int = 10_000
    nielsen_max_arity: int = 4
    nielsen_max_length: int = 12


class Settings(BaseSettings):
    LOG_LEVEL: str = "WARNING"

    # Randomized suites draw from random.Random(SEED)
    SEED: int = 20190501

    # Default ball for `solve` and `run-corpus`
    SOLVE_LMAX: int = 2
    SOLVE_KMAX: int = 2

    QUICK: BoundsProfile = BoundsProfile(
        word_maxlen=2,
        oracle_lmax=3,
        oracle_kmax=4,
        squares_lmax=4,
        squares_kmax=4,
        sqrt_bound=6,
        involution_bound=10,
        commutator_bound=4,
        random_samples=1_000,
    )
    FULL: BoundsProfile = BoundsProfile()

    # No env_file: every run is reproducible from flags and the environment
    model_config = SettingsConfigDict(env_prefix="VERBCLOSURE_", extra="ignore")

    def profile(self, name: str) -> BoundsProfile:
        if name == "quick":
            return self.QUICK
        if name == "full":
            return self.FULL
        raise ValueError(f"Unknown bounds profile: {name}")


settings = Settings()
