from ..trial import TrialReport


class StatusMessage:
    """Message type for transmitting progress from the child process to the parent process

    Contains the experiment being run, the number of trials in the stack and the
    progress increment

    Attributes
    ----------
    experiment: str
        Name of the experiment being run
    total: int
        Number of progress increments expected for the stack
    progress: int
        How much progress has been made since the last message

    Methods
    -------
    StatusMessage(experiment: str, total: int, progress: int)
        Construct the message
    __str__() -> str:
        Construct a string describing the current task being computed on the child process
    """

    def __init__(self, experiment: str, total: int, progress: int):
        self.experiment = experiment
        self.total = total
        self.progress = progress

    def __str__(self) -> str:
        """Construct a string describing the current task being computed on the child process

        Returns
        -------
        str
            The message
        """
        return f"Experiment {self.experiment} | Task: Decoding |"


class TrialBatch:
    """The finished reports of a child process

    Attributes
    ----------
    process_id: int
        The child process that ran the trials
    reports: list[TrialReport]
        One report per trial of the stack
    """

    def __init__(self, process_id: int, reports: list[TrialReport]):
        self.process_id = process_id
        self.reports = reports


class WorkerFailure:
    """An exception that stopped a child process

    Attributes
    ----------
    process_id: int
        The child process that failed
    trial_index: int
        The trial being run when the exception was raised
    error: Exception
        The exception, re-raised by the parent
    """

    def __init__(self, process_id: int, trial_index: int, error: Exception):
        self.process_id = process_id
        self.trial_index = trial_index
        self.error = error
