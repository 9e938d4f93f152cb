import sys

sys.path.append("..")
import cProfile
from dataclasses import replace
from lrpcdec.core.config import load_config
from lrpcdec.run_parallel import run_experiment
from pathlib import Path

CONFIG_PATH: Path = Path("../local_config.json")


def profile_lrpcdec():
    print("Running lrpcdec profiling session...")
    print("Results will be written to prof.out...")
    print("Please be patient...")
    cProfile.run("run_profile()", "prof.out")
    print("Finished.")


def run_profile():
    config = load_config(CONFIG_PATH)
    # Child processes are invisible to cProfile
    config = replace(config, run=replace(config.run, n_processes=1))
    run_experiment(config, no_progress=True)


if __name__ == "__main__":
    profile_lrpcdec()
