"""Per-process file logging

Every process (the parent and each child) writes its own file in the workspace
log directory, so no synchronization is needed. All loggers hang below the
"lrpcdec" logger, which owns the single file handler of the process.
"""

from .workspace import Workspace

import logging

ROOT_LOGGER = "lrpcdec"
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def _attach_file_handler(ws: Workspace, process_id: int, level: int):
    logger = logging.getLogger(ROOT_LOGGER)
    # Re-initializing in the same process must not duplicate lines
    for handler in list(logger.handlers):
        if isinstance(handler, logging.FileHandler):
            logger.removeHandler(handler)
            handler.close()
    fh = logging.FileHandler(ws.get_log_file_path(process_id))
    fh.setFormatter(logging.Formatter(LOG_FORMAT))
    fh.setLevel(level)
    logger.setLevel(level)
    logger.addHandler(fh)


def init_lrpc_logger_parent(ws: Workspace, level: int = logging.INFO):
    """Open log/log_procParent.txt for the parent process

    Parameters
    ----------
    ws: Workspace
        The project Workspace
    level: int
        The logging level, INFO by default
    """
    _attach_file_handler(ws, -1, level)


def init_lrpc_logger_child(ws: Workspace, process_id: int, level: int = logging.INFO):
    """Open log/log_proc{process_id}.txt for a child process

    Called once at the start of each child, before any trial runs. Calling it
    again replaces the file handler.

    Parameters
    ----------
    ws: Workspace
        The project Workspace
    process_id: int
        The process id used to name the log file
    level: int
        The logging level, INFO by default
    """
    _attach_file_handler(ws, process_id, level)


def get_lrpc_logger(module: str) -> logging.Logger:
    """The logger for a module, placed below the lrpcdec logger

    Module names outside the package (main.py runs as `__main__`) are prefixed so
    their records still reach the process log file. Prefer one of the lrpc_* log
    functions.

    Parameters
    ----------
    module: str
        The module name, usually `__name__`

    Returns
    -------
    logging.Logger
        The Logger
    """
    if module != ROOT_LOGGER and not module.startswith(ROOT_LOGGER + "."):
        module = f"{ROOT_LOGGER}.{module}"
    return logging.getLogger(module)


def lrpc_error(module: str, message: str):
    get_lrpc_logger(module).error(message)


def lrpc_warn(module: str, message: str):
    get_lrpc_logger(module).warning(message)


def lrpc_info(module: str, message: str):
    get_lrpc_logger(module).info(message)


def lrpc_debug(module: str, message: str):
    get_lrpc_logger(module).debug(message)


def lrpc_except(module: str, exception: Exception):
    """Log an exception together with its traceback

    Use inside the except block, like

    ```python
    try:
        ...
    except LrpcError as e:
        lrpc_except(__name__, e)
    ```

    Parameters
    ----------
    module: str
        The module from which the logger was called
    exception: Exception
        The exception to be logged
    """
    get_lrpc_logger(module).error(
        f"{type(exception).__name__}: {exception}", exc_info=exception
    )
