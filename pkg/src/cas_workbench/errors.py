class WorkbenchError(Exception):
    """Base class for every error raised by the workbench."""
