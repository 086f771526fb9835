import logging
import os


PROJECT_ROOT_NAME = "padic-constancy"
LOG_DIR_ENV = "PADIC_LOG_DIR"


def custom_path_filter(path: str) -> str:
    """
    Shortens a source path by cutting everything up to the project root.

    Parameters:
    -----------
    path : str
        The full file path recorded on the log record.

    Returns:
    --------
    str
        The path relative to the project root, or the input if the root is absent.
    """
    for marker in (PROJECT_ROOT_NAME, os.sep + "src" + os.sep):
        idx = path.find(marker)
        if idx != -1:
            if marker == PROJECT_ROOT_NAME:
                return path[idx + len(marker):]
            return path[idx:]
    return path


class CustomLogRecord(logging.LogRecord):
    """
    LogRecord whose ``pathname`` is shortened with :func:`custom_path_filter`.
    """
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.pathname = custom_path_filter(self.pathname)


def setup_logger(log_filename: str = "padic.log", log_dir: str = "logs") -> logging.Logger:
    """
    Configures the project logger with a stream handler (stderr) and a file handler.

    The CLI writes its JSON results to stdout, so nothing here may log there.

    Parameters:
    -----------
    log_filename : str, optional
        The name of the log file, by default "padic.log".
    log_dir : str, optional
        Directory for log files, by default "logs"; the ``PADIC_LOG_DIR``
        environment variable takes precedence.

    Returns:
    --------
    logging.Logger
        The configured ``padic`` logger.
    """
    log_dir = os.environ.get(LOG_DIR_ENV, log_dir)
    if not os.path.exists(log_dir):
        os.makedirs(log_dir, exist_ok=True)

    log_filepath = os.path.join(log_dir, log_filename)

    logging.setLogRecordFactory(CustomLogRecord)
    formatter = logging.Formatter(
        "%(asctime)s [%(levelname)s] [%(module)s] [%(pathname)s]: %(message)s"
    )

    project_logger = logging.getLogger("padic")
    if not project_logger.handlers:
        stream_handler = logging.StreamHandler()
        stream_handler.setFormatter(formatter)
        file_handler = logging.FileHandler(log_filepath)
        file_handler.setFormatter(formatter)
        project_logger.addHandler(stream_handler)
        project_logger.addHandler(file_handler)
    project_logger.setLevel(logging.INFO)
    project_logger.propagate = False
    return project_logger


# Initialize the logger with the custom configuration.
logger = setup_logger()
