from .config import WorkspaceParameters

from pathlib import Path


class Workspace:
    """The project workspace

    The Workspace class represents the disk location to which results and logs are
    written. The workspace creates its directories on construction. Note, that the
    workspace cannot access directories with restricted permissions.

    Attributes
    ----------
    workspace_path: Path
        Path to the workspace location
    results_path: Path
        Path to the results folder in the workspace
    log_path: Path
        Path to the log folder in the workspace

    Methods
    -------
    Workspace(params: WorkspaceParameters)
        Construct the workspace and make the directories
    get_summary_path(stem: str, output: str) -> Path
        Get the summary file path for an experiment
    get_trials_path(stem: str) -> Path
        Get the per-trial table path for an experiment
    get_log_file_path(process_id: int) -> Path
        Get the log file path given a process_id
    clear_log_path()
        Remove the log files of a previous experiment
    """

    def __init__(self, params: WorkspaceParameters):
        """Make the workspace, results and log directories if missing

        Child processes construct their own Workspace from the same parameters,
        so this has to tolerate directories that already exist.

        Parameters
        ----------
        params: WorkspaceParameters
            Configuration parameters defining the workspace
        """
        self.workspace_path = Path(params.workspace_path)
        self.results_path = self.workspace_path / "results"
        self.log_path = self.workspace_path / "log"
        for directory in (self.results_path, self.log_path):
            directory.mkdir(parents=True, exist_ok=True)

    def get_summary_path(self, stem: str, output: str) -> Path:
        """Get the path to an experiment summary

        Parameters
        ----------
        stem: str
            The experiment name
        output: str
            The summary format, json or csv

        Returns
        -------
        Path
            The summary file path
        """
        return self.results_path / f"{stem}_summary.{output}"

    def get_trials_path(self, stem: str) -> Path:
        """Get the path to the per-trial table of an experiment

        Parameters
        ----------
        stem: str
            The experiment name

        Returns
        -------
        Path
            The per-trial csv file path
        """
        return self.results_path / f"{stem}_trials.csv"

    def get_log_file_path(self, process_id: int) -> Path:
        """Get the log file path given a process id

        Parameters
        ----------
        process_id: int
            The process id. If -1, this is the parent process

        Returns
        -------
        Path
            The log file path
        """
        name = "Parent" if process_id == -1 else str(process_id)
        return self.log_path / f"log_proc{name}.txt"

    def clear_log_path(self):
        """Remove the log files of a previous experiment"""
        for item in self.log_path.glob("log_proc*.txt"):
            item.unlink()
