def create_trial_stacks(n_trials: int, n_stacks: int) -> list[list[int]]:
    """Create the set of trial indices to be run by each stack in n_stacks.

    Each stack is intended to be handed off to a single processor. Trials are dealt
    out by snaking through the stacks, depositing one trial in each stack in each
    pass and reversing direction at either end. Every trial owns its random
    stream, so the assignment never changes the results.

    Parameters
    ----------
    n_trials: int
        The number of trials
    n_stacks: int
        The number of stacks, should be equal to number of processors

    Returns
    -------
    list[list[int]]
        The stacks. Each stack is a list of trial indices for that stack to run.
        Empty stacks are removed.
    """
    stacks: list[list[int]] = [[] for _ in range(0, n_stacks)]

    stack_index = 0
    reverse = False
    for trial in range(0, n_trials):
        if stack_index == -1:
            stack_index = 0
            reverse = False
        elif stack_index == n_stacks:
            stack_index = n_stacks - 1
            reverse = True
        stacks[stack_index].append(trial)

        if reverse:
            stack_index -= 1
        else:
            stack_index += 1

    # Remove any unused processors
    return [s for s in stacks if len(s) != 0]
