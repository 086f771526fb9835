from src.config.logging import logger
from typing import Dict
from typing import Any
import yaml
import os


PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
DEFAULTS_CONFIG_PATH = os.path.join(PROJECT_ROOT, 'config', 'defaults.yml')
PRECISION_ENV = 'PADIC_PRECISION'


class _Config:
    """
    Singleton holding the library defaults read from ``config/defaults.yml``.

    Attributes:
    -----------
    PRECISION : int
        Default absolute precision N; ``PADIC_PRECISION`` overrides the file.
    ENUMERATION_CAP : int
        Largest coset quotient that may be enumerated.
    APARTMENT_LCM : int
        Every apartment coordinate denominator must divide this number.
    DEGENERACY_SEARCH_BOUND : int
        Digit levels explored by the bounded degeneracy search.
    SPLITTING_SEARCH_DEGREE : int
        Largest residue degree tried when looking for a splitting field.
    FUZZ_TRIALS, FUZZ_SEED, FUZZ_MAX_RESAMPLES : int
        Harness defaults.
    LOG_DIR : str
        Directory for log files.

    Methods:
    --------
    _load_config(config_path: str) -> Dict[str, Any]:
        Load the YAML configuration from the given path.
    _precision_from_env(default: int) -> int:
        Apply the environment override for the default precision.
    """

    _instance = None

    def __new__(cls, *args, **kwargs):
        """
        Ensure that only one instance of the _Config class is created (Singleton pattern).
        """
        if not cls._instance:
            cls._instance = super(_Config, cls).__new__(cls)
            cls._instance.__initialized = False
        return cls._instance

    def __init__(self):
        if self.__initialized:
            return
        self.__initialized = True

        self.__defaults = self._load_config(DEFAULTS_CONFIG_PATH)
        fuzz = self.__defaults.get('fuzz', {})

        self.FILE_PRECISION = int(self.__defaults['precision'])
        self.PRECISION = self._precision_from_env(self.FILE_PRECISION)
        self.ENUMERATION_CAP = int(self.__defaults['enumeration_cap'])
        self.APARTMENT_LCM = int(self.__defaults['apartment_lcm'])
        self.DEGENERACY_SEARCH_BOUND = int(self.__defaults['degeneracy_search_bound'])
        self.SPLITTING_SEARCH_DEGREE = int(self.__defaults['splitting_search_degree'])
        self.FUZZ_TRIALS = int(fuzz.get('trials', 1000))
        self.FUZZ_SEED = int(fuzz.get('seed', 0))
        self.FUZZ_MAX_RESAMPLES = int(fuzz.get('max_resamples', 16))
        self.LOG_DIR = self.__defaults.get('log_dir', 'logs')

    @staticmethod
    def _load_config(config_path: str) -> Dict[str, Any]:
        """
        Load the YAML configuration from the given path.

        Parameters:
        -----------
        config_path : str
            Path to the YAML configuration file.

        Returns:
        --------
        Dict[str, Any]
            Loaded configuration data.

        Raises:
        -------
        Exception
            If the configuration file fails to load, logs the error.
        """
        try:
            with open(config_path, 'r') as file:
                return yaml.safe_load(file)
        except Exception as e:
            logger.error(f"Failed to load the configuration file at {config_path}. Error: {e}")
            raise

    def default_precision(self) -> int:
        """
        The default precision as seen right now (re-reads the environment).
        """
        return self._precision_from_env(self.FILE_PRECISION)

    @staticmethod
    def _precision_from_env(default: int) -> int:
        """
        Read ``PADIC_PRECISION`` if set; it only ever changes the default precision.

        Parameters:
        -----------
        default : int
            Precision from the YAML file.

        Returns:
        --------
        int
            The effective default precision.
        """
        raw = os.environ.get(PRECISION_ENV)
        if raw is None or raw.strip() == '':
            return default
        try:
            value = int(raw)
        except ValueError:
            logger.error(f"Ignoring non-integer {PRECISION_ENV}={raw!r}")
            return default
        if value < 1:
            logger.error(f"Ignoring non-positive {PRECISION_ENV}={raw!r}")
            return default
        return value


# Create a single instance of the _Config class.
config = _Config()
